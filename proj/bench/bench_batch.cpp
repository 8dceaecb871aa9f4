// Copyright 2026 The screwdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP batch kernels: wall time and agreement.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "CLI11.hpp"
#include "screwdyn/batch.hpp"
#include "screwdyn/model_io.hpp"

using namespace screwdyn;

namespace {

double median_ms(int repeats, const std::function<void()>& fn) {
  std::vector<double> ms(repeats);
  for (double& v : ms) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    v = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  std::nth_element(ms.begin(), ms.begin() + repeats / 2, ms.end());
  return ms[repeats / 2];
}

double max_dev(const std::vector<VectorXd>& a, const std::vector<VectorXd>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch kernel benchmark"};
  std::string model_path;
  int samples = 20000;
  int repeats = 5;
  unsigned seed = 7;
  app.add_option("--model", model_path, "Model file")->required();
  app.add_option("--samples", samples, "States per batch")->capture_default_str();
  app.add_option("--repeats", repeats, "Timed repetitions")->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  ChainModel m;
  try {
    m = load_model(model_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  const int n = m.n();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<JointState> states(samples);
  std::vector<VectorXd> qs(samples);
  for (int k = 0; k < samples; ++k) {
    JointState& s = states[k];
    s = JointState::zeros(n);
    for (int j = 0; j < n; ++j) {
      s.q[j] = 3.0 * u(rng);
      s.qd[j] = 2.0 * u(rng);
      s.qdd[j] = 5.0 * u(rng);
    }
    qs[k] = s.q;
  }

  std::printf("model %s, n=%d, samples=%d, threads=%d\n", m.name().c_str(), n, samples,
              batch_threads());
  std::printf("%-10s %-8s %12s %12s %8s %12s\n", "kernel", "rep", "serial_ms", "omp_ms",
              "speedup", "max_dev");
  for (Rep rep : {Rep::body, Rep::spatial, Rep::hybrid}) {
    std::vector<VectorXd> a, b;
    const double ts = median_ms(repeats, [&] { a = batch_idyn(m, states, rep, true, Exec::serial); });
    const double tp = median_ms(repeats, [&] { b = batch_idyn(m, states, rep, true, Exec::parallel); });
    std::printf("%-10s %-8s %12.3f %12.3f %8.2f %12.3e\n", "idyn", to_string(rep), ts, tp,
                ts / tp, max_dev(a, b));
  }
  {
    std::vector<MatrixXd> a, b;
    const double ts = median_ms(repeats, [&] { a = batch_jacobian(m, qs, Rep::spatial, Exec::serial); });
    const double tp = median_ms(repeats, [&] { b = batch_jacobian(m, qs, Rep::spatial, Exec::parallel); });
    double d = 0.0;
    for (int k = 0; k < samples; ++k) d = std::max(d, (a[k] - b[k]).cwiseAbs().maxCoeff());
    std::printf("%-10s %-8s %12.3f %12.3f %8.2f %12.3e\n", "jacobian", "spatial", ts, tp,
                ts / tp, d);
  }
  return 0;
}
