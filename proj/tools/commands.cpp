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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "screwdyn/batch.hpp"
#include "screwdyn/dynamics.hpp"
#include "screwdyn/eom.hpp"
#include "screwdyn/integrators.hpp"
#include "screwdyn/model_io.hpp"
#include "screwdyn/trajectory.hpp"

namespace screwdyn::cli {

namespace {

// stdout for "-", otherwise a file opened for writing.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::ios_base::failure("cannot write '" + path + "'");
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string col(const std::string& prefix, int i) {
  return prefix + std::to_string(i + 1);
}

VectorXd parse_vector(const std::string& text, int n, const char* what) {
  VectorXd v = VectorXd::Zero(n);
  if (text.empty()) return v;
  std::stringstream ss(text);
  std::string cell;
  int k = 0;
  while (std::getline(ss, cell, ',')) {
    if (k >= n) {
      ++k;
      break;
    }
    try {
      size_t used = 0;
      v[k] = std::stod(cell, &used);
      if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw DomainError(std::string(what) + ": malformed number '" + cell + "'");
    }
    ++k;
  }
  if (k != n) {
    throw DomainError(std::string(what) + ": expected " + std::to_string(n) + " values");
  }
  return v;
}

TrajectoryTable load_traj(const RunConfig& c, const ChainModel& m, int min_order) {
  if (c.traj.empty()) throw DomainError("--traj is required");
  TrajectoryTable tab = read_trajectory(c.traj, m.n());
  static const char* names[] = {"q", "qd", "qdd"};
  if (tab.order() < min_order) {
    throw DomainError("trajectory lacks " + std::string(names[min_order]) + " columns");
  }
  return tab;
}

// Piecewise-linear joint forces from a table with columns t, tau1..n; held
// constant outside the sampled range.
class TorqueTable {
 public:
  TorqueTable(const std::string& path, int n) : n_(n) {
    if (path.empty()) return;
    tab_ = read_trajectory(path, n);
    if (tab_.order() != 0) {
      throw DomainError("torque file must have columns t, tau1..tau" + std::to_string(n));
    }
  }
  VectorXd operator()(double t) const {
    if (tab_.samples() == 0) return VectorXd::Zero(n_);
    const auto& ts = tab_.t;
    if (t <= ts.front()) return tab_.q.row(0).transpose();
    if (t >= ts.back()) return tab_.q.row(tab_.samples() - 1).transpose();
    const int k = static_cast<int>(std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
    const double a = (t - ts[k - 1]) / (ts[k] - ts[k - 1]);
    return ((1.0 - a) * tab_.q.row(k - 1) + a * tab_.q.row(k)).transpose();
  }

 private:
  int n_;
  TrajectoryTable tab_;
};

std::vector<JointState> states_of(const TrajectoryTable& tab) {
  std::vector<JointState> s(tab.samples());
  for (int r = 0; r < tab.samples(); ++r) s[r] = tab.state(r);
  return s;
}

std::vector<VectorXd> positions_of(const TrajectoryTable& tab) {
  std::vector<VectorXd> q(tab.samples());
  for (int r = 0; r < tab.samples(); ++r) q[r] = tab.q.row(r).transpose();
  return q;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (!cell.empty()) out.push_back(cell);
  }
  return out;
}

// Serial chain used for operation counts and timings: revolute axes cycle
// through z, y, x with unit-free offsets between joints.
ChainModel benchmark_chain(int n) {
  std::vector<BodySpec> specs(n);
  const Vec3 axes[] = {Vec3::UnitZ(), Vec3::UnitY(), Vec3::UnitX()};
  for (int i = 0; i < n; ++i) {
    BodySpec& s = specs[i];
    s.parent = i - 1;
    s.body.mass = 1.0 + 0.1 * i;
    s.body.com = Vec3(0.15, 0.01, 0.02);
    s.body.inertia_com = Vec3(0.02, 0.03, 0.04).asDiagonal();
    s.body.ref_pose = Pose::from_translation(Vec3(0.3 * i, 0.0, 0.05 * i));
    s.joint.kind = JointKind::revolute;
    s.joint.axis = axes[i % 3];
    s.joint.point = s.body.ref_pose.trans;
  }
  return ChainModel::build("benchmark_" + std::to_string(n), Vec3(0, 0, -9.80665),
                           std::move(specs));
}

}  // namespace

int cmd_check(const RunConfig& c) {
  const ChainModel m = load_model(c.model);
  Sink out(c.out);
  out.os() << "model " << (m.name().empty() ? "(unnamed)" : m.name()) << ": ok\n"
           << "bodies " << m.n() << "\n"
           << "dof " << m.n() << "\n"
           << "total_mass " << format_double(m.total_mass()) << "\n"
           << "topology " << (m.is_serial() ? "serial" : "tree") << "\n";
  return kOk;
}

int cmd_fk(const RunConfig& c) {
  const ChainModel m = load_model(c.model);
  const int n = m.n();
  const TrajectoryTable tab = load_traj(c, m, c.twists ? 1 : 0);
  Sink sink(c.out);
  std::ostream& os = sink.os();
  std::vector<std::string> header{"t"};
  std::vector<double> row;

  if (c.twists) {
    const Rep rep = rep_from_string(c.rep);
    static const char* parts[] = {"wx", "wy", "wz", "vx", "vy", "vz"};
    for (int b = 0; b < n; ++b)
      for (const char* p : parts) header.push_back(col("b", b) + "_" + p);
    write_csv_header(os, header);
    const auto tw = batch_twists(m, states_of(tab), rep);
    for (int r = 0; r < tab.samples(); ++r) {
      row.assign(1, tab.t[r]);
      for (const Screw& v : tw[r])
        for (int k = 0; k < 6; ++k) row.push_back(v.vec()[k]);
      write_csv_row(os, row);
    }
    return kOk;
  }

  static const char* parts[] = {"R11", "R12", "R13", "R21", "R22", "R23",
                                "R31", "R32", "R33", "x", "y", "z"};
  for (int b = 0; b < n; ++b)
    for (const char* p : parts) header.push_back(col("b", b) + "_" + p);
  write_csv_header(os, header);
  const auto poses = batch_fk(m, positions_of(tab));
  for (int r = 0; r < tab.samples(); ++r) {
    row.assign(1, tab.t[r]);
    for (const Pose& p : poses[r]) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) row.push_back(p.R()(i, j));
      for (int i = 0; i < 3; ++i) row.push_back(p.trans[i]);
    }
    write_csv_row(os, row);
  }
  return kOk;
}

int cmd_jacobian(const RunConfig& c) {
  const ChainModel m = load_model(c.model);
  const int n = m.n();
  const Rep rep = rep_from_string(c.rep);
  const TrajectoryTable tab = load_traj(c, m, 0);
  Sink sink(c.out);
  std::ostream& os = sink.os();
  // Row-major over the 6n x n system Jacobian.
  std::vector<std::string> header{"t"};
  for (int r = 0; r < 6 * n; ++r)
    for (int j = 0; j < n; ++j) header.push_back("J" + std::to_string(r + 1) + "_" + std::to_string(j + 1));
  os << "# rep=" << to_string(rep) << "\n";
  write_csv_header(os, header);
  const auto js = batch_jacobian(m, positions_of(tab), rep);
  std::vector<double> row;
  for (int s = 0; s < tab.samples(); ++s) {
    row.assign(1, tab.t[s]);
    for (int r = 0; r < 6 * n; ++r)
      for (int j = 0; j < n; ++j) row.push_back(js[s](r, j));
    write_csv_row(os, row);
  }
  return kOk;
}

int cmd_idyn(const RunConfig& c) {
  const ChainModel m = load_model(c.model);
  const int n = m.n();
  const TrajectoryTable tab = load_traj(c, m, 2);
  const std::vector<JointState> states = states_of(tab);
  const bool gravity = !c.no_gravity;
  Sink sink(c.out);
  std::ostream& os = sink.os();
  std::vector<std::string> header{"t"};
  std::vector<double> row;

  if (c.rep == "all") {
    const Rep reps[] = {Rep::body, Rep::spatial, Rep::hybrid};
    std::vector<std::vector<VectorXd>> q;
    for (Rep r : reps) {
      q.push_back(batch_idyn(m, states, r, gravity));
      for (int j = 0; j < n; ++j) header.push_back(std::string(to_string(r)) + "_" + col("Q", j));
    }
    header.push_back("max_dev");
    write_csv_header(os, header);
    for (int s = 0; s < tab.samples(); ++s) {
      row.assign(1, tab.t[s]);
      double dev = 0.0;
      for (size_t r = 0; r < q.size(); ++r) {
        for (int j = 0; j < n; ++j) row.push_back(q[r][s][j]);
        dev = std::max(dev, (q[r][s] - q[0][s]).cwiseAbs().maxCoeff());
      }
      row.push_back(dev);
      write_csv_row(os, row);
    }
    return kOk;
  }

  const Rep rep = rep_from_string(c.rep);
  if (rep == Rep::mixed) os << "# rep=mixed evaluated through the hybrid recursion\n";
  for (int j = 0; j < n; ++j) header.push_back(col("Q", j));
  write_csv_header(os, header);
  const auto q = batch_idyn(m, states, rep, gravity);
  for (int s = 0; s < tab.samples(); ++s) {
    row.assign(1, tab.t[s]);
    for (int j = 0; j < n; ++j) row.push_back(q[s][j]);
    write_csv_row(os, row);
  }
  return kOk;
}

int cmd_fdyn(const RunConfig& c) {
  const ChainModel m = load_model(c.model);
  const int n = m.n();
  const TrajectoryTable tab = load_traj(c, m, 1);
  const TorqueTable tau(c.torques, n);
  Sink sink(c.out);
  std::ostream& os = sink.os();
  std::vector<std::string> header{"t"};
  for (int j = 0; j < n; ++j) header.push_back(col("qdd", j));
  write_csv_header(os, header);
  std::vector<double> row;
  for (int s = 0; s < tab.samples(); ++s) {
    const JointState st = tab.state(s);
    const VectorXd qdd = fdyn(m, st.q, st.qd, tau(tab.t[s]), {}, !c.no_gravity);
    row.assign(1, tab.t[s]);
    for (int j = 0; j < n; ++j) row.push_back(qdd[j]);
    write_csv_row(os, row);
  }
  return kOk;
}

int cmd_simulate(const RunConfig& c) {
  const ChainModel m = load_model(c.model);
  const int n = m.n();
  const VectorXd q0 = parse_vector(c.q0, n, "--q0");
  const VectorXd qd0 = parse_vector(c.qd0, n, "--qd0");
  const TorqueTable tau(c.torques, n);
  ChainSimOptions opt;
  opt.form = chain_form_from_string(c.form);
  opt.gravity = !c.no_gravity;
  const ChainTrajectory tr = chain_simulate(
      m, q0, qd0, [&](double t, const VectorXd&, const VectorXd&) { return tau(t); },
      c.T, c.h, opt);

  {
    Sink sink(c.out);
    std::ostream& os = sink.os();
    os << "# form=" << to_string(opt.form) << " h=" << format_double(c.h) << "\n";
    write_csv_header(os, trajectory_header(n, 2));
    std::vector<double> row;
    for (size_t s = 0; s < tr.t.size(); ++s) {
      row.assign(1, tr.t[s]);
      for (const VectorXd* v : {&tr.q[s], &tr.qd[s], &tr.qdd[s]})
        for (int j = 0; j < n; ++j) row.push_back((*v)[j]);
      write_csv_row(os, row);
    }
  }
  if (!c.report.empty()) {
    Sink sink(c.report);
    std::ostream& os = sink.os();
    write_csv_header(os, {"t", "energy", "energy_drift", "momentum_norm", "constraint_drift"});
    const double e0 = tr.reports.empty() ? 0.0 : tr.reports.front().energy;
    for (const StepReport& r : tr.reports) {
      write_csv_row(os, {r.t, r.energy, r.energy - e0, r.momentum_spatial.norm(),
                         r.constraint_drift});
    }
  }
  if (!tr.completed) {
    std::cerr << "simulate: " << tr.message << "\n";
    return kNumerical;
  }
  return kOk;
}

int cmd_christoffel(const RunConfig& c) {
  const ChainModel m = load_model(c.model);
  const int n = m.n();
  ChristoffelVariant variant;
  if (c.variant == "standard") {
    variant = ChristoffelVariant::standard;
  } else if (c.variant == "binet") {
    variant = ChristoffelVariant::binet;
  } else {
    throw DomainError("unknown variant '" + c.variant + "'");
  }
  std::vector<double> ts;
  std::vector<VectorXd> qs;
  if (!c.traj.empty()) {
    const TrajectoryTable tab = load_traj(c, m, 0);
    ts = tab.t;
    qs = positions_of(tab);
  } else {
    ts.push_back(0.0);
    qs.push_back(parse_vector(c.q, n, "--q"));
  }
  Sink sink(c.out);
  std::ostream& os = sink.os();
  os << "# variant=" << c.variant << "\n";
  write_csv_header(os, {"t", "i", "j", "k", "gamma"});
  double residual = 0.0;
  for (size_t s = 0; s < qs.size(); ++s) {
    const ChristoffelTensor g = christoffel(m, qs[s], variant);
    residual = std::max(residual, g.symmetry_residual());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          os << format_double(ts[s]) << ',' << i + 1 << ',' << j + 1 << ',' << k + 1
             << ',' << format_double(g(i, j, k)) << '\n';
        }
  }
  os << "# symmetry_residual=" << format_double(residual) << "\n";
  if (c.out != "-" && !c.out.empty()) {
    std::cout << "symmetry_residual " << format_double(residual) << "\n";
  }
  return kOk;
}

int cmd_benchmark(const RunConfig& c) {
  std::vector<Rep> reps;
  for (const std::string& r : split_list(c.reps)) reps.push_back(rep_from_string(r));
  std::vector<int> sizes;
  for (const std::string& s : split_list(c.sizes)) {
    const int v = std::stoi(s);
    if (v < 1) throw DomainError("chain size must be positive");
    sizes.push_back(v);
  }
  if (c.trials < 1) throw DomainError("--trials must be positive");

  Sink sink(c.out);
  std::ostream& os = sink.os();
  if (!kOpCountsEnabled) os << "# operation counters disabled in this build\n";
  write_csv_header(os, {"rep", "n",
                        "screw_transforms_pred", "screw_transforms_meas",
                        "screw_rotations_pred", "screw_rotations_meas",
                        "screw_translations_pred", "screw_translations_meas",
                        "tensor_transforms_pred", "tensor_transforms_meas",
                        "tensor_rotations_pred", "tensor_rotations_meas",
                        "lie_brackets_pred", "lie_brackets_meas",
                        "match", "median_us"});
  for (Rep rep : reps) {
    for (int n : sizes) {
      const ChainModel m = benchmark_chain(n);
      JointState s = JointState::zeros(n);
      for (int j = 0; j < n; ++j) {
        s.q[j] = 0.3 + 0.1 * j;
        s.qd[j] = 0.5 - 0.07 * j;
        s.qdd[j] = -0.2 + 0.05 * j;
      }
      OpCountReport meas;
      IdynOptions opt;
      opt.counts = &meas;
      opt.gravity = false;
      idyn(m, s, rep, opt);
      const OpCountReport pred = predicted_op_counts(rep, n);

      std::vector<double> us(c.trials);
      volatile double sink_value = 0.0;
      for (int k = 0; k < c.trials; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        sink_value = sink_value + idyn(m, s, rep)[0];
        const auto t1 = std::chrono::steady_clock::now();
        us[k] = std::chrono::duration<double, std::micro>(t1 - t0).count();
      }
      std::nth_element(us.begin(), us.begin() + c.trials / 2, us.end());

      os << to_string(rep) << ',' << n;
      const std::pair<std::int64_t, std::int64_t> cols[] = {
          {pred.screw_transforms, meas.screw_transforms},
          {pred.screw_rotations, meas.screw_rotations},
          {pred.screw_translations, meas.screw_translations},
          {pred.tensor_transforms, meas.tensor_transforms},
          {pred.tensor_rotations, meas.tensor_rotations},
          {pred.lie_brackets, meas.lie_brackets}};
      for (const auto& [p, q] : cols) os << ',' << p << ',' << q;
      os << ',' << (kOpCountsEnabled ? (pred == meas ? "yes" : "no") : "n/a") << ','
         << format_double(us[c.trials / 2]) << '\n';
    }
  }
  return kOk;
}

}  // namespace screwdyn::cli
