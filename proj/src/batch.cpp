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

#include "screwdyn/batch.hpp"

#include <cstdlib>
#include <exception>

#include <omp.h>

#include "screwdyn/dynamics.hpp"

namespace screwdyn {

namespace {

template <typename Out, typename Fn>
std::vector<Out> map_samples(int count, Exec exec, Fn fn) {
  std::vector<Out> out(count);
  if (exec == Exec::serial) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(static) num_threads(batch_threads())
  for (int i = 0; i < count; ++i) {
    try {
      out[i] = fn(i);
    } catch (...) {
#pragma omp critical(screwdyn_batch_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace

int batch_threads() {
  if (const char* env = std::getenv("SCREWDYN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

std::vector<std::vector<Pose>> batch_fk(const ChainModel& m,
                                        const std::vector<VectorXd>& q,
                                        Exec exec) {
  return map_samples<std::vector<Pose>>(
      static_cast<int>(q.size()), exec, [&](int i) { return fk(m, q[i]); });
}

std::vector<std::vector<Screw>> batch_twists(const ChainModel& m,
                                             const std::vector<JointState>& s,
                                             Rep rep, Exec exec) {
  return map_samples<std::vector<Screw>>(
      static_cast<int>(s.size()), exec,
      [&](int i) { return twists(m, s[i].q, s[i].qd, rep).twists; });
}

std::vector<MatrixXd> batch_jacobian(const ChainModel& m,
                                     const std::vector<VectorXd>& q, Rep rep,
                                     Exec exec) {
  return map_samples<MatrixXd>(static_cast<int>(q.size()), exec,
                               [&](int i) { return jacobian(m, q[i], rep).J; });
}

std::vector<VectorXd> batch_idyn(const ChainModel& m,
                                 const std::vector<JointState>& s, Rep rep,
                                 bool gravity, Exec exec) {
  IdynOptions opt;
  opt.gravity = gravity;
  return map_samples<VectorXd>(static_cast<int>(s.size()), exec,
                               [&](int i) { return idyn(m, s[i], rep, opt); });
}

}  // namespace screwdyn
