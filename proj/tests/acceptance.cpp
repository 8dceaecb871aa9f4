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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "random_model.hpp"
#include "screwdyn/dynamics.hpp"
#include "screwdyn/eom.hpp"
#include "screwdyn/integrators.hpp"
#include "screwdyn/jacobian_derivatives.hpp"
#include "screwdyn/model_io.hpp"

using namespace screwdyn;
using namespace screwdyn::testing;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Rep kAllReps[] = {Rep::body, Rep::spatial, Rep::hybrid, Rep::mixed};

// Worst observed value of each metric against its bound.
class Criterion {
 public:
  void check(const std::string& what, double value, double bound) {
    checks_.push_back({what, value, bound});
  }
  void require(const std::string& what, bool ok) { check(what, ok ? 0.0 : 1.0, 0.0); }

  bool report(int id, const char* title) const {
    int passed = 0;
    std::ostringstream detail;
    for (const Check& c : checks_) {
      const bool pass = c.value <= c.bound;
      passed += pass;
      // Exact (bound 0) checks are listed only when they fail.
      if (c.bound > 0.0 || !pass) {
        detail << (detail.tellp() > 0 ? "; " : "") << (pass ? "" : "FAILED ") << c.what << " " << c.value
               << " <= " << c.bound;
      }
    }
    const bool ok = passed == static_cast<int>(checks_.size());
    std::printf("criterion %d %s: %s [%d/%zu checks%s%s]\n", id, title, ok ? "PASS" : "FAIL", passed,
                checks_.size(), detail.tellp() > 0 ? "; " : "", detail.str().c_str());
    return ok;
  }

 private:
  struct Check {
    std::string what;
    double value, bound;
  };
  std::vector<Check> checks_;
};

double max_abs(const MatrixXd& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double dist(const Vec6& a, const Screw& b) { return (a - b.vec()).cwiseAbs().maxCoeff(); }
double pose_dist(const Pose& a, const Pose& b) { return log_se3(a.inverse() * b).norm(); }

const TorqueFn kNoTorque = [](double, const VectorXd& q, const VectorXd&) {
  return VectorXd::Zero(q.size()).eval();
};

bool op_counts() {
  Criterion c;
  if (!kOpCountsEnabled) {
    c.require("operation counters compiled in", false);
    return c.report(1, "operation counts");
  }
  Rng rng(1001);
  for (int n : {2, 4, 10}) {
    const ChainModel m = random_chain(rng, n);
    const JointState s = random_state(rng, n);
    const std::string tag = " n=" + std::to_string(n);
    OpCountReport b, sp, h;
    idyn(m, s, Rep::body, {.gravity = false, .counts = &b});
    idyn(m, s, Rep::spatial, {.gravity = false, .counts = &sp});
    idyn(m, s, Rep::hybrid, {.gravity = false, .counts = &h});
    c.require("body frame transforms == 3(n-1)" + tag, b.frame_transforms_screw() == 3 * (n - 1));
    c.require("body brackets == 2n-1" + tag, b.lie_brackets == 2 * n - 1);
    c.require("spatial screw transforms == n" + tag, sp.screw_transforms == n);
    c.require("spatial tensor transforms == n" + tag, sp.tensor_transforms == n);
    c.require("spatial brackets == 2n-1" + tag, sp.lie_brackets == 2 * n - 1);
    c.require("hybrid translations == 3n-3" + tag, h.screw_translations == 3 * n - 3);
    c.require("hybrid rotations == n" + tag, h.screw_rotations == n);
    c.require("hybrid tensor rotations == n" + tag, h.tensor_rotations == n);
    c.require("hybrid brackets == 3n-1" + tag, h.lie_brackets == 3 * n - 1);
  }
  return c.report(1, "operation counts");
}

bool cross_rep() {
  Criterion c;
  Rng rng(1002);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 8;
    const ChainModel m = random_chain(rng, n, {.tree = k % 2 == 1});
    const JointState s = random_state(rng, n, 2.0);
    const VectorXd qb = idyn(m, s, Rep::body);
    for (Rep r : {Rep::spatial, Rep::hybrid}) {
      const VectorXd qr = idyn(m, s, r);
      worst = std::max(worst, (qr - qb).norm() / std::max(1.0, qb.norm()));
    }
  }
  c.check("relative deviation, 200 samples", worst, 1e-9);
  return c.report(2, "cross-representation inverse dynamics");
}

bool closed_form() {
  Criterion c;
  Rng rng(1003);
  double eom = 0.0, proj = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 8;
    const ChainModel m = random_chain(rng, n, {.tree = k % 2 == 0});
    const JointState s = random_state(rng, n, 2.0);
    const MatrixXd mm = mass_matrix(m, s.q), cm = coriolis_matrix(m, s.q, s.qd);
    for (Rep r : {Rep::body, Rep::spatial, Rep::hybrid}) {
      eom = std::max(eom, max_abs(mm * s.qdd + cm * s.qd - idyn(m, s, r, {.gravity = false})));
    }
    const VectorXd tau = VectorXd::Random(n);
    JointState f = s;
    f.qdd = fdyn(m, s.q, s.qd, tau);
    proj = std::max(proj, max_abs(projection_eom(m, f, {}, tau)));
  }
  c.check("|M qdd + C qd - idyn|", eom, 1e-9);
  c.check("projection residual at consistent states", proj, 1e-9);
  return c.report(3, "closed-form and recursive equivalence");
}

auto column_fn(const ChainModel& m, Rep rep, int i, int j) {
  return [&m, rep, i, j](const VectorXd& q) -> Vec6 { return jacobian(m, q, rep).J.block<6, 1>(6 * i, j); };
}

bool derivatives() {
  Criterion c;
  Rng rng(1004);
  double first = 0.0, second = 0.0, third = 0.0, jdot = 0.0;
  for (int k = 0; k < 12; ++k) {
    const int n = 2 + k % 5;
    const ChainModel m = random_chain(rng, n, {.tree = k % 2 == 1});
    const VectorXd q = random_state(rng, n).q;
    const JacobianDerivatives d(m, q);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (Rep rep : {Rep::body, Rep::spatial, Rep::hybrid}) {
          const auto f = column_fn(m, rep, i, j);
          for (int a = 0; a < n; ++a) {
            first = std::max(first, dist(fd1(f, q, a, 1e-5), d.partial(rep, i, j, a)));
            for (int b = a; b < n && rep != Rep::hybrid; ++b) {
              const std::array<int, 2> idx{a, b};
              second = std::max(second, dist(fd2(f, q, a, b, 1e-4), d.partial_n(rep, i, j, idx)));
            }
          }
        }
      }
    }
    // Third order, body representation, outermost body.
    const int i = n - 1;
    const auto f = column_fn(m, Rep::body, i, 0);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int e = b; e < n; ++e) {
          const std::array<int, 3> idx{a, b, e};
          third = std::max(third, dist(fd3(f, q, a, b, e, 1e-3), d.partial_n(Rep::body, i, 0, idx)));
        }
  }
  // Spatial Jacobian rate along straight-line joint trajectories.
  for (int k = 0; k < 20; ++k) {
    const ChainModel m = random_chain(rng, 6, {.tree = k % 2 == 0});
    const JointState s = random_state(rng, 6, 2.0);
    const std::vector<Screw> jd = spatial_jacobian_dot(m, s.q, s.qd);
    const double h = 1e-5;
    for (int j = 0; j < 6; ++j) {
      const auto col = [&](double t) -> Vec6 { return jacobian(m, s.q + t * s.qd, Rep::spatial).J.block<6, 1>(6 * j, j); };
      jdot = std::max(jdot, dist((col(h) - col(-h)) * (0.5 / h), jd[j]));
    }
  }
  c.check("first partials vs FD", first, 1e-7);
  c.check("second partials vs FD", second, 1e-6);
  c.check("third partials (body) vs FD", third, 1e-4);
  c.check("spatial Jacobian rate vs FD", jdot, 1e-7);
  return c.report(4, "derivative oracles");
}

bool christoffel_symbols() {
  Criterion c;
  Rng rng(1005);
  double sym = 0.0, fd = 0.0, variants = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 6;
    const ChainModel m = random_chain(rng, n, {.tree = k % 2 == 0});
    const VectorXd q = random_state(rng, n).q;
    const ChristoffelTensor g = christoffel(m, q), gb = christoffel(m, q, ChristoffelVariant::binet);
    sym = std::max({sym, g.symmetry_residual(), gb.symmetry_residual()});
    std::vector<MatrixXd> dm(n);
    const auto mass = [&](const VectorXd& x) { return mass_matrix(m, x); };
    for (int a = 0; a < n; ++a) dm[a] = fd1(mass, q, a, 1e-5);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const double ref = 0.5 * (dm[j](i, l) + dm[l](i, j) - dm[i](j, l));
          fd = std::max(fd, std::abs(ref - g(i, j, l)));
          variants = std::max(variants, std::abs(g(i, j, l) - gb(i, j, l)));
        }
  }
  c.check("symmetry in the last two indices", sym, 1e-12);
  c.check("vs FD of the mass matrix", fd, 1e-6);
  c.check("standard vs Binet", variants, 1e-10);
  return c.report(5, "Christoffel symbols");
}

bool skew() {
  Criterion c;
  Rng rng(1006);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const SpatialInertia mb = spatial_inertia_body(random_body(rng));
    const Pose pose = random_pose(rng, 2.0);
    const Mat6 ms = mb.to_spatial(pose).matrix();
    const Screw vs = random_screw(rng, 2.0);
    const Mat6 p = spatial_inertia_rate(ms, vs) - 2.0 * spatial_coriolis(ms, vs);
    worst = std::max(worst, max_abs(p + p.transpose()));
  }
  c.check("|(Msdot - 2Cs) + transpose|", worst, 1e-11);
  return c.report(6, "skew-symmetry");
}

bool two_link() {
  Criterion c;
  const ChainModel m = load_model(models_dir() + "/planar_2r.json");
  const TwoLinkArm arm;
  Rng rng(1007);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    JointState s = JointState::zeros(2);
    s.q = Eigen::Vector2d(uniform(rng, -3.1, 3.1), uniform(rng, -3.1, 3.1));
    s.qd = Eigen::Vector2d(uniform(rng, -2, 2), uniform(rng, -2, 2));
    s.qdd = Eigen::Vector2d(uniform(rng, -2, 2), uniform(rng, -2, 2));
    const VectorXd ref = arm.torque(s.q, s.qd, s.qdd);
    for (Rep r : {Rep::body, Rep::spatial, Rep::hybrid, Rep::mixed}) {
      worst = std::max(worst, max_abs(idyn(m, s, r) - ref));
    }
  }
  c.check("absolute torque error, 100 samples", worst, 1e-9);
  return c.report(7, "planar 2R Lagrangian oracle");
}

bool integrators() {
  Criterion c;
  Rng rng(1008);

  double exact = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Pose c0 = random_pose(rng, 2.0);
    const Screw v = random_screw(rng, 2.0);
    const TwistField field = [&](double, const Pose&) { return v; };
    for (double h : {1e-3, 0.01, 0.05, 0.1}) {
      for (auto triv : {Trivialization::left, Trivialization::right}) {
        exact = std::max(exact, pose_dist(mk_step({c0, v, Rep::body}, field, 0.0, h, triv).pose, c0 * exp_se3(v * h)));
        exact = std::max(exact, pose_dist(mk_step({c0, v, Rep::spatial}, field, 0.0, h, triv).pose, exp_se3(v * h) * c0));
      }
    }
  }
  c.check("constant-twist pose error, h <= 0.1", exact, 1e-13);

  const TwistField field = [](double t, const Pose& p) {
    return Screw(Vec3(std::sin(t), std::cos(2 * t), 0.5 + 0.3 * p.trans.x()), Vec3(0.3, t, 0.1 - 0.2 * p.R()(0, 2)));
  };
  const Pose c0{exp_so3(Vec3(0.1, -0.2, 0.3)), Vec3(0.5, 0.2, -0.1)};
  const auto run = [&](int steps) {
    RigidBodyState s{c0, field(0.0, c0), Rep::body};
    const double h = 2.0 / steps;
    for (int k = 0; k < steps; ++k) s = mk_step(s, field, k * h, h);
    return s.pose;
  };
  const Pose a = run(20), b = run(40), cc = run(80);
  c.check("|order - 4|", std::abs(std::log2(pose_dist(a, b) / pose_dist(b, cc)) - 4.0), 0.1);

  BodyModel top;
  top.mass = 1.5;
  top.inertia_com = Vec3(0.4, 0.4, 0.7).asDiagonal();
  const double wz = 2.0, w1 = 0.8, w2 = -0.3, rate = (0.7 / 0.4 - 1.0) * wz;
  const FreeBodyTrajectory tr =
      free_body_simulate(top, {Pose(), Screw(Vec3(w1, w2, wz), Vec3::Zero()), Rep::body}, 10.0, 1e-3);
  double prec = 0.0, mom = 0.0;
  for (size_t k = 0; k < tr.states.size(); ++k) {
    const double t = tr.reports[k].t;
    const Vec3 ref(w1 * std::cos(rate * t) - w2 * std::sin(rate * t), w1 * std::sin(rate * t) + w2 * std::cos(rate * t), wz);
    prec = std::max(prec, (tr.states[k].twist.ang() - ref).cwiseAbs().maxCoeff());
    mom = std::max(mom, (tr.reports[k].momentum_spatial - tr.reports[0].momentum_spatial).norm());
  }
  const BodyModel gb = random_body(rng);
  const FreeBodyTrajectory gen = free_body_simulate(gb, {random_pose(rng), random_screw(rng, 2.0), Rep::spatial}, 2.0, 1e-3);
  for (const StepReport& r : gen.reports) mom = std::max(mom, (r.momentum_spatial - gen.reports[0].momentum_spatial).norm());
  c.check("symmetric top vs analytic precession, 10 s", prec, 1e-6);
  c.check("spatial momentum drift", mom, 1e-12);

  double drift = 0.0;
  for (int k = 0; k < 3; ++k) {
    const ChainModel m = random_chain(rng, 3, {.tree = k == 2});
    const JointState s = random_state(rng, 3, 1.5);
    for (ChainForm form : {ChainForm::state, ChainForm::momentum}) {
      const ChainTrajectory ct = chain_simulate(m, s.q, s.qd, kNoTorque, 1.0, 1e-3, {.form = form, .gravity = false});
      c.require("chain run completed", ct.completed);
      for (const StepReport& r : ct.reports) drift = std::max(drift, std::abs(r.energy - ct.reports[0].energy));
    }
  }
  c.check("unforced chain energy drift, 1 s", drift, 1e-8);
  return c.report(8, "integrators");
}

bool round_trips() {
  Criterion c;
  Rng rng(1009);
  double aik = 0.0, fi = 0.0, cyc = 0.0, el = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 8;
    const ChainModel m = random_chain(rng, n, {.tree = k % 2 == 0});
    const JointState s = random_state(rng, n, 2.0);
    const KinematicsCache b = accelerations(m, s, Rep::body);
    aik = std::max(aik, max_abs(accel_ik(m, s.q, b.twists, b.accels) - s.qdd));
    const VectorXd tau = VectorXd::Random(n);
    JointState f = s;
    f.qdd = fdyn(m, s.q, s.qd, tau);
    fi = std::max(fi, max_abs(idyn(m, f, Rep::body) - tau));
  }
  for (int k = 0; k < 1000; ++k) {
    const Screw x(random_unit(rng) * uniform(rng, 0, kPi - 0.01), random_vec3(rng, 3.0));
    el = std::max(el, (log_se3(exp_se3(x)) - x).norm());
    const Pose p = random_pose(rng, 3.0);
    for (Rep from : kAllReps) {
      Screw v = x;
      Rep r = from;
      for (int step = 0; step < 4; ++step) {
        const Rep next = kAllReps[(static_cast<int>(r) + 1) % 4];
        v = convert_screw(v, r, next, p);
        r = next;
      }
      cyc = std::max(cyc, (v - x).norm());
    }
  }
  bool identical = true;
  for (const char* name : {"pendulum_1r.json", "planar_2r.json", "puma_6r.json"}) {
    const ChainModel a = load_model(models_dir() + "/" + name);
    const ChainModel b = parse_model(serialize_model(a));
    identical = identical && serialize_model(a) == serialize_model(b) && a.n() == b.n();
    for (int i = 0; i < a.n() && identical; ++i) {
      identical = a.inertia(i).matrix() == b.inertia(i).matrix() && a.screw_body(i).vec() == b.screw_body(i).vec() &&
                  a.parent(i) == b.parent(i);
    }
  }
  c.check("accel_ik after accelerations", aik, 1e-10);
  c.check("idyn after fdyn", fi, 1e-9);
  c.check("log after exp on SE(3)", el, 1e-10);
  c.check("representation 4-cycle", cyc, 1e-13);
  c.require("parse after serialize is bit-identical", identical);
  return c.report(9, "round trips");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= op_counts();
  ok &= cross_rep();
  ok &= closed_form();
  ok &= derivatives();
  ok &= christoffel_symbols();
  ok &= skew();
  ok &= two_link();
  ok &= integrators();
  ok &= round_trips();
  std::printf("%s\n", ok ? "all criteria PASS" : "some criteria FAIL");
  return ok ? 0 : 1;
}
