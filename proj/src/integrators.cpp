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

#include "screwdyn/integrators.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "screwdyn/eom.hpp"

namespace screwdyn {

namespace {

constexpr int kPolishInterval = 1000;

void check_rb_rep(Rep r) {
  if (r != Rep::body && r != Rep::spatial) {
    throw DomainError("rigid-body state twist must be body or spatial");
  }
}

int step_count(double T, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("step size must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("horizon must be non-negative");
  return static_cast<int>(std::ceil(T / h - 1e-9));
}

double step_size(int k, int steps, double T, double h) {
  return k + 1 == steps ? T - k * h : h;
}

}  // namespace

RigidBodyState mk_step(const RigidBodyState& s, const TwistField& field,
                       double t, double h) {
  return mk_step(s, field, t, h,
                 s.rep == Rep::spatial ? Trivialization::right
                                       : Trivialization::left);
}

RigidBodyState mk_step(const RigidBodyState& s, const TwistField& field,
                       double t, double h, Trivialization triv) {
  check_rb_rep(s.rep);
  const bool right = triv == Trivialization::right;
  const Pose& c0 = s.pose;

  auto advance = [&](const Screw& x) {
    return right ? exp_se3(x) * c0 : c0 * exp_se3(x);
  };
  auto stage = [&](double ts, const Screw& x) {
    const Pose c = advance(x);
    Screw v = field(ts, c);
    if (right && s.rep == Rep::body) v = transform(c, v);
    if (!right && s.rep == Rep::spatial) v = inverse_transform(c, v);
    return Screw(Vec6(dexp_inv(x, triv) * v.vec()));
  };

  const Screw k1 = stage(t, Screw());
  const Screw k2 = stage(t + 0.5 * h, 0.5 * h * k1);
  const Screw k3 = stage(t + 0.5 * h, 0.5 * h * k2);
  const Screw k4 = stage(t + h, h * k3);
  const Screw x = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

  RigidBodyState out;
  out.rep = s.rep;
  out.pose = advance(x);
  out.twist = field(t + h, out.pose);
  return out;
}

FreeBodyTrajectory free_body_simulate(const BodyModel& body,
                                      const RigidBodyState& initial, double T,
                                      double h, Trivialization triv) {
  check_rb_rep(initial.rep);
  const int steps = step_count(T, h);
  const SpatialInertia mb = spatial_inertia_body(body);
  const Eigen::LLT<Mat6> llt(mb.matrix());
  if (llt.info() != Eigen::Success || !(body.mass > 0.0)) {
    throw DomainError("free body: spatial inertia is not positive definite");
  }

  const Pose& c0 = initial.pose;
  const Screw vb0 = initial.rep == Rep::body ? initial.twist
                                             : inverse_transform(c0, initial.twist);
  const Momentum pi = wrench_transform_inverse(c0, mb * vb0);

  auto body_twist = [&](const Pose& c) {
    return Screw(Vec6(llt.solve(wrench_transform(c, pi).vec())));
  };
  const TwistField field = [&](double, const Pose& c) {
    const Screw vb = body_twist(c);
    return initial.rep == Rep::body ? vb : transform(c, vb);
  };
  auto report = [&](double t, const RigidBodyState& s) {
    const Screw vb = s.rep == Rep::body ? s.twist : inverse_transform(s.pose, s.twist);
    const Wrench p = mb * vb;
    StepReport r;
    r.t = t;
    r.energy = 0.5 * p.pair(vb);
    r.momentum_spatial = wrench_transform_inverse(s.pose, p).vec();
    r.constraint_drift = s.pose.rot.orthonormality_error();
    return r;
  };

  FreeBodyTrajectory out;
  out.states.reserve(steps + 1);
  out.reports.reserve(steps + 1);
  RigidBodyState s{c0, field(0.0, c0), initial.rep};
  out.states.push_back(s);
  out.reports.push_back(report(0.0, s));
  double t = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double hk = step_size(k, steps, T, h);
    s = mk_step(s, field, t, hk, triv);
    t = k + 1 == steps ? T : (k + 1) * h;
    if ((k + 1) % kPolishInterval == 0) {
      s.pose.rot = s.pose.rot.orthonormalized();
      s.twist = field(t, s.pose);
    }
    out.states.push_back(s);
    out.reports.push_back(report(t, s));
  }
  return out;
}

const char* to_string(ChainForm f) {
  return f == ChainForm::state ? "state" : "momentum";
}

ChainForm chain_form_from_string(const std::string& s) {
  if (s == "state") return ChainForm::state;
  if (s == "momentum") return ChainForm::momentum;
  throw DomainError("unknown integration form '" + s + "'");
}

namespace {

using Rhs = std::function<VectorXd(double, const VectorXd&)>;

VectorXd rk4(const Rhs& f, double t, const VectorXd& y, double h) {
  const VectorXd k1 = f(t, y);
  const VectorXd k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
  const VectorXd k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
  const VectorXd k4 = f(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<Momentum> unpack(const VectorXd& y, int n) {
  std::vector<Momentum> pi(n);
  for (int l = 0; l < n; ++l) pi[l] = Momentum(Vec6(y.segment<6>(n + 6 * l)));
  return pi;
}

VectorXd joint_forces(const TorqueFn& torque, double t, const VectorXd& q,
                      const VectorXd& qd) {
  if (!torque) return VectorXd::Zero(q.size());
  VectorXd tau = torque(t, q, qd);
  if (tau.size() != q.size()) throw DomainError("torque function returned wrong length");
  return tau;
}

}  // namespace

ChainTrajectory chain_simulate(const ChainModel& m, const VectorXd& q0,
                               const VectorXd& qd0, const TorqueFn& torque,
                               double T, double h, const ChainSimOptions& opt) {
  const int n = m.n();
  if (q0.size() != n || qd0.size() != n) {
    throw DomainError("initial state length differs from the number of joints");
  }
  const int steps = step_count(T, h);
  const bool momentum = opt.form == ChainForm::momentum;

  Rhs f;
  if (momentum) {
    f = [&](double t, const VectorXd& y) {
      const VectorXd q = y.head(n);
      const std::vector<Momentum> pi = unpack(y, n);
      const VectorXd qd = joint_velocities_from_momenta(m, q, pi);
      const MomentumRhs r =
          momentum_rhs(m, q, pi, joint_forces(torque, t, q, qd), {}, opt.gravity);
      VectorXd dy(7 * n);
      dy.head(n) = r.qd;
      for (int l = 0; l < n; ++l) dy.segment<6>(n + 6 * l) = r.pi_dot[l].vec();
      return dy;
    };
  } else {
    f = [&](double t, const VectorXd& y) {
      const VectorXd q = y.head(n), qd = y.tail(n);
      VectorXd dy(2 * n);
      dy.head(n) = qd;
      dy.tail(n) = fdyn(m, q, qd, joint_forces(torque, t, q, qd), {}, opt.gravity);
      return dy;
    };
  }

  ChainTrajectory out;
  // Appends the sample for state y; throws on numerical failure.
  auto record = [&](double t, const VectorXd& y) {
    const VectorXd q = y.head(n);
    VectorXd qd;
    StepReport r;
    r.t = t;
    if (momentum) {
      const std::vector<Momentum> pi = unpack(y, n);
      qd = joint_velocities_from_momenta(m, q, pi);
      const std::vector<Momentum> consistent = spatial_momenta(m, q, qd);
      for (int l = 0; l < n; ++l) {
        r.momentum_spatial += pi[l].vec();
        r.constraint_drift =
            std::max(r.constraint_drift, (pi[l].vec() - consistent[l].vec()).norm());
      }
    } else {
      qd = y.tail(n);
      for (const Momentum& p : spatial_momenta(m, q, qd)) r.momentum_spatial += p.vec();
    }
    const VectorXd qdd =
        fdyn(m, q, qd, joint_forces(torque, t, q, qd), {}, opt.gravity);
    r.energy = kinetic_energy(m, q, qd) + (opt.gravity ? potential_energy(m, q) : 0.0);
    if (!qdd.allFinite() || !std::isfinite(r.energy)) {
      throw NumericalError("non-finite state");
    }
    out.t.push_back(t);
    out.q.push_back(q);
    out.qd.push_back(qd);
    out.qdd.push_back(qdd);
    out.reports.push_back(r);
  };

  VectorXd y(momentum ? 7 * n : 2 * n);
  y.head(n) = q0;
  if (momentum) {
    const std::vector<Momentum> pi = spatial_momenta(m, q0, qd0);
    for (int l = 0; l < n; ++l) y.segment<6>(n + 6 * l) = pi[l].vec();
  } else {
    y.tail(n) = qd0;
  }

  double t = 0.0;
  try {
    record(t, y);
    for (int k = 0; k < steps; ++k) {
      const VectorXd next = rk4(f, t, y, step_size(k, steps, T, h));
      if (!next.allFinite()) {
        throw NumericalError("non-finite state after step " + std::to_string(k + 1));
      }
      const double tn = k + 1 == steps ? T : (k + 1) * h;
      record(tn, next);
      y = next;
      t = tn;
    }
  } catch (const Error& e) {
    out.completed = false;
    out.message = "stopped at t = " + std::to_string(t) + ": " + e.what();
  }
  return out;
}

}  // namespace screwdyn
