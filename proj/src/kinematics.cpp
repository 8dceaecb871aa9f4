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

#include "screwdyn/kinematics.hpp"

#include <string>

#include "sweeps.hpp"

namespace screwdyn {

namespace {

Screw ang_screw(const Vec3& w) { return Screw(w, Vec3::Zero()); }
Screw lin_screw(const Vec3& v) { return Screw(Vec3::Zero(), v); }

// Representation used for the underlying recursion.
Rep base_rep(Rep r) { return r == Rep::mixed ? Rep::hybrid : r; }

void to_mixed(KinematicsCache& c) {
  c.rep = Rep::mixed;
  for (size_t i = 0; i < c.poses.size(); ++i) {
    const Pose& p = c.poses[i];
    c.twists[i] = convert_screw(c.twists[i], Rep::hybrid, Rep::mixed, p);
    if (!c.accels.empty()) {
      c.accels[i] = convert_screw(c.accels[i], Rep::hybrid, Rep::mixed, p);
    }
    if (!c.jerks.empty()) {
      c.jerks[i] = convert_screw(c.jerks[i], Rep::hybrid, Rep::mixed, p);
    }
  }
}

void put_block(MatrixXd& m, int bi, int bj, const Mat6& b) {
  m.block<6, 6>(6 * bi, 6 * bj) = b;
}

void put_col(MatrixXd& m, int bi, int j, const Screw& s) {
  m.block<6, 1>(6 * bi, j) = s.vec();
}

}  // namespace

const char* to_string(Rep r) {
  switch (r) {
    case Rep::body: return "body";
    case Rep::spatial: return "spatial";
    case Rep::hybrid: return "hybrid";
    case Rep::mixed: return "mixed";
  }
  return "?";
}

Rep rep_from_string(const std::string& s) {
  if (s == "body") return Rep::body;
  if (s == "spatial") return Rep::spatial;
  if (s == "hybrid") return Rep::hybrid;
  if (s == "mixed") return Rep::mixed;
  throw DomainError("unknown representation '" + s + "'");
}

JointState JointState::zeros(int n) {
  JointState s;
  s.q = s.qd = s.qdd = s.qddd = VectorXd::Zero(n);
  return s;
}

void JointState::check(int n, int order) const {
  const VectorXd* v[] = {&q, &qd, &qdd, &qddd};
  const char* names[] = {"q", "qd", "qdd", "qddd"};
  for (int k = 0; k <= order && k < 4; ++k) {
    if (v[k]->size() != n) {
      throw DomainError(std::string("joint state: ") + names[k] + " has length " +
                        std::to_string(v[k]->size()) + ", expected " +
                        std::to_string(n));
    }
  }
}

std::vector<Pose> relative_poses(const ChainModel& m, const VectorXd& q) {
  if (q.size() != m.n()) throw DomainError("q has wrong length");
  std::vector<Pose> out(m.n());
  for (int i = 0; i < m.n(); ++i) {
    out[i] = m.ref_relative(i) * exp_se3(m.screw_body(i) * q[i]);
  }
  return out;
}

std::vector<Pose> fk(const ChainModel& m, const VectorXd& q) {
  std::vector<Pose> c = relative_poses(m, q);
  for (int i = 0; i < m.n(); ++i) {
    const int p = m.parent(i);
    if (p != kGround) c[i] = c[p] * c[i];
  }
  return c;
}

std::vector<Pose> fk_spatial_poe(const ChainModel& m, const VectorXd& q) {
  if (q.size() != m.n()) throw DomainError("q has wrong length");
  std::vector<Pose> out(m.n());
  for (int i = 0; i < m.n(); ++i) {
    Pose p;
    for (int j : m.path(i)) p = p * exp_se3(m.screw_spatial(j) * q[j]);
    out[i] = p * m.ref_pose(i);
  }
  return out;
}

namespace detail {

Sweep forward_sweep(const ChainModel& m, const JointState& s, Rep rep,
                    int level, const CountedAlgebra& alg) {
  const int n = m.n();
  s.check(n, level);
  Sweep w;
  w.Crel = relative_poses(m, s.q);
  w.C = w.Crel;
  for (int i = 0; i < n; ++i) {
    const int p = m.parent(i);
    if (p != kGround) w.C[i] = w.C[p] * w.Crel[i];
  }
  w.S.resize(n);
  w.V.resize(n);
  if (level >= 2) w.Vd.resize(n);

  for (int i = 0; i < n; ++i) {
    const int p = m.parent(i);
    const bool root = p == kGround;
    const double qd = s.qd[i];
    const double qdd = level >= 2 ? s.qdd[i] : 0.0;
    const Screw& x = m.screw_body(i);
    switch (rep) {
      case Rep::body: {
        w.S[i] = x;
        w.V[i] = x * qd;
        if (!root) w.V[i] += alg.inverse_transform(w.Crel[i], w.V[p]);
        if (level >= 2) {
          w.Vd[i] = x * qdd;
          if (!root) {
            w.Vd[i] += alg.inverse_transform(w.Crel[i], w.Vd[p]) -
                       alg.bracket(x, w.V[i]) * qd;
          }
        }
        break;
      }
      case Rep::spatial: {
        w.S[i] = alg.transform(w.C[i], x);
        w.V[i] = w.S[i] * qd;
        if (!root) w.V[i] += w.V[p];
        if (level >= 2) {
          w.Vd[i] = w.S[i] * qdd;
          if (!root) w.Vd[i] += w.Vd[p] + alg.bracket(w.V[p], w.V[i]);
        }
        break;
      }
      case Rep::hybrid: {
        w.S[i] = alg.rotate(w.C[i].rot, x);
        const Vec3& ri = w.C[i].trans;
        w.V[i] = w.S[i] * qd;
        if (!root) w.V[i] += alg.translate(w.C[p].trans - ri, w.V[p]);
        if (level >= 2) {
          w.Vd[i] = w.S[i] * qdd +
                    alg.bracket(ang_screw(w.V[i].ang()), w.S[i]) * qd;
          if (!root) {
            w.Vd[i] += alg.translate(w.C[p].trans - ri, w.Vd[p]) +
                       alg.bracket(lin_screw(w.V[p].lin() - w.V[i].lin()),
                                   w.V[p]);
          }
        }
        break;
      }
      case Rep::mixed:
        throw DomainError("forward sweep: mixed is a derived representation");
    }
  }
  return w;
}

}  // namespace detail

SystemJacobian jacobian(const ChainModel& m, const VectorXd& q, Rep rep) {
  const int n = m.n();
  const std::vector<Pose> c = fk(m, q);
  SystemJacobian sj;
  sj.rep = rep;
  sj.n = n;
  sj.J = MatrixXd::Zero(6 * n, n);
  sj.A = MatrixXd::Zero(6 * n, 6 * n);
  sj.X = MatrixXd::Zero(6 * n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : m.path(i)) {
      switch (rep) {
        case Rep::body: {
          const Pose cij = c[i].inverse() * c[j];
          put_block(sj.A, i, j, adjoint(cij).matrix());
          put_col(sj.J, i, j, transform(cij, m.screw_body(j)));
          break;
        }
        case Rep::spatial: {
          const Pose g = c[j] * m.ref_pose(j).inverse();
          put_block(sj.A, i, j, adjoint(g).matrix());
          put_col(sj.J, i, j, transform(g, m.screw_spatial(j)));
          break;
        }
        case Rep::hybrid:
        case Rep::mixed: {
          const Vec3 rij = c[j].trans - c[i].trans;
          const Screw x0 = rotate(c[j].rot, m.screw_body(j));
          Mat6 a = adjoint_trans(rij).matrix();
          Screw col = translate(rij, x0);
          if (rep == Rep::mixed) {
            const Mat3 rt = c[i].R().transpose();
            a.topRows<3>() = rt * a.topRows<3>();
            col = convert_screw(col, Rep::hybrid, Rep::mixed, c[i]);
          }
          put_block(sj.A, i, j, a);
          put_col(sj.J, i, j, col);
          break;
        }
      }
    }
    switch (rep) {
      case Rep::body: put_col(sj.X, i, i, m.screw_body(i)); break;
      case Rep::spatial: put_col(sj.X, i, i, m.screw_spatial(i)); break;
      case Rep::hybrid:
      case Rep::mixed: put_col(sj.X, i, i, rotate(c[i].rot, m.screw_body(i))); break;
    }
  }
  return sj;
}

KinematicsCache twists(const ChainModel& m, const VectorXd& q,
                       const VectorXd& qd, Rep rep, OpCountReport* counts) {
  JointState s;
  s.q = q;
  s.qd = qd;
  detail::Sweep w =
      detail::forward_sweep(m, s, base_rep(rep), 1, CountedAlgebra(counts));
  KinematicsCache c;
  c.rep = base_rep(rep);
  c.poses = std::move(w.C);
  c.rel_poses = std::move(w.Crel);
  c.twists = std::move(w.V);
  if (rep == Rep::mixed) to_mixed(c);
  return c;
}

KinematicsCache accelerations(const ChainModel& m, const JointState& s,
                              Rep rep, OpCountReport* counts) {
  detail::Sweep w =
      detail::forward_sweep(m, s, base_rep(rep), 2, CountedAlgebra(counts));
  KinematicsCache c;
  c.rep = base_rep(rep);
  c.poses = std::move(w.C);
  c.rel_poses = std::move(w.Crel);
  c.twists = std::move(w.V);
  c.accels = std::move(w.Vd);
  if (rep == Rep::mixed) to_mixed(c);
  return c;
}

KinematicsCache jerks(const ChainModel& m, const JointState& s, Rep rep) {
  const int n = m.n();
  s.check(n, 3);
  const Rep br = base_rep(rep);
  KinematicsCache c = accelerations(m, s, br);
  c.jerks.assign(n, Screw());
  const SystemJacobian sj = jacobian(m, s.q, br);
  const VectorXd& qd = s.qd;
  const VectorXd& qdd = s.qdd;
  const VectorXd& qddd = s.qddd;

  for (int i = 0; i < n; ++i) {
    const std::vector<int>& path = m.path(i);
    const int len = static_cast<int>(path.size());
    Screw out;
    switch (br) {
      case Rep::body: {
        for (int a = 0; a < len; ++a) {
          const int j = path[a];
          const Screw ja = sj.column(i, j);
          out += ja * qddd[j];
          for (int b = a + 1; b < len; ++b) {
            const int k = path[b];
            const Screw jab = lie_bracket(ja, sj.column(i, k));
            out += jab * (2.0 * qdd[j] * qd[k] + qd[j] * qdd[k]);
            // Second partials summed over all (k, r) orderings: the diagonal
            // k = r appears once, off-diagonal pairs twice.
            for (int cc = b; cc < len; ++cc) {
              const int r = path[cc];
              const double coef = cc == b ? 1.0 : 2.0;
              out += lie_bracket(jab, sj.column(i, r)) *
                     (coef * qd[j] * qd[k] * qd[r]);
            }
          }
        }
        break;
      }
      case Rep::spatial: {
        for (int j : path) {
          const Screw jj = sj.column(i, j);
          const Screw& v = c.twists[j];
          const Screw vj = lie_bracket(v, jj);
          out += jj * qddd[j] + vj * (2.0 * qdd[j]) +
                 (lie_bracket(c.accels[j], jj) + lie_bracket(v, vj)) * qd[j];
        }
        break;
      }
      case Rep::hybrid: {
        const Vec3& ri = c.poses[i].trans;
        const Vec3 rdi = c.twists[i].lin();
        const Vec3 rddi = c.accels[i].lin();
        for (int j : path) {
          const Screw x0 = rotate(c.poses[j].rot, m.screw_body(j));
          const Vec3 rij = c.poses[j].trans - ri;
          const Vec3 rdij = c.twists[j].lin() - rdi;
          const Vec3 rddij = c.accels[j].lin() - rddi;
          const Screw w = ang_screw(c.twists[j].ang());
          const Screw wd = ang_screw(c.accels[j].ang());
          const Screw wx = lie_bracket(w, x0);
          const Screw jcol = translate(rij, x0);
          const Screw jdot = lie_bracket(lin_screw(rdij), x0) + translate(rij, wx);
          const Screw jddot = lie_bracket(lin_screw(rddij), x0) +
                              lie_bracket(lin_screw(rdij), wx) * 2.0 +
                              translate(rij, lie_bracket(wd, x0) + lie_bracket(w, wx));
          out += jcol * qddd[j] + jdot * (2.0 * qdd[j]) + jddot * qd[j];
        }
        break;
      }
      case Rep::mixed:
        break;
    }
    c.jerks[i] = out;
  }
  if (rep == Rep::mixed) to_mixed(c);
  return c;
}

VectorXd body_accel_matrix_form(const ChainModel& m, const JointState& s) {
  const int n = m.n();
  const SystemJacobian sj = jacobian(m, s.q, Rep::body);
  const KinematicsCache c = twists(m, s.q, s.qd, Rep::body);
  // a V with a = diag(q̇_i ad_{X_i})
  VectorXd av(6 * n);
  for (int i = 0; i < n; ++i) {
    av.segment<6>(6 * i) =
        (lie_bracket(m.screw_body(i), c.twists[i]) * s.qd[i]).vec();
  }
  return sj.J * s.qdd - sj.A * av;
}

VectorXd spatial_accel_matrix_form(const ChainModel& m, const JointState& s) {
  const int n = m.n();
  const SystemJacobian sj = jacobian(m, s.q, Rep::spatial);
  const KinematicsCache c = twists(m, s.q, s.qd, Rep::spatial);
  // b diag(J) q̇ with b = diag(ad_{V_j})
  VectorXd bj(6 * n);
  for (int j = 0; j < n; ++j) {
    bj.segment<6>(6 * j) =
        (lie_bracket(c.twists[j], sj.column(j, j)) * s.qd[j]).vec();
  }
  MatrixXd l = MatrixXd::Zero(6 * n, 6 * n);
  for (int i = 0; i < n; ++i) {
    for (int j : m.path(i)) l.block<6, 6>(6 * i, 6 * j).setIdentity();
  }
  return sj.J * s.qdd + l * bj;
}

VectorXd accel_ik(const ChainModel& m, const VectorXd& q,
                  const std::vector<Screw>& v, const std::vector<Screw>& vd) {
  const int n = m.n();
  if (static_cast<int>(v.size()) != n || static_cast<int>(vd.size()) != n) {
    throw DomainError("accel_ik: twist/acceleration count differs from n");
  }
  const std::vector<Pose> crel = relative_poses(m, q);
  VectorXd qdd(n);
  for (int i = 0; i < n; ++i) {
    const Screw& x = m.screw_body(i);
    const double xx = x.vec().squaredNorm();
    const int p = m.parent(i);
    Screw dv = v[i], da = vd[i];
    if (p != kGround) {
      dv -= inverse_transform(crel[i], v[p]);
      da -= inverse_transform(crel[i], vd[p]);
    }
    const double qd = x.vec().dot(dv.vec()) / xx;
    qdd[i] = x.vec().dot((da + lie_bracket(x, v[i]) * qd).vec()) / xx;
  }
  return qdd;
}

Screw convert_screw(const Screw& v, Rep from, Rep to, const Pose& pose) {
  if (from == to) return v;
  const Rotation3& r = pose.rot;
  Screw b;
  switch (from) {
    case Rep::body: b = v; break;
    case Rep::spatial: b = inverse_transform(pose, v); break;
    case Rep::hybrid: b = rotate(r.inverse(), v); break;
    case Rep::mixed: b = Screw(v.ang(), r.inverse() * v.lin()); break;
  }
  switch (to) {
    case Rep::body: return b;
    case Rep::spatial: return transform(pose, b);
    case Rep::hybrid: return rotate(r, b);
    case Rep::mixed: return Screw(b.ang(), r * b.lin());
  }
  return b;
}

Twist convert_twist(const Twist& t, Rep to, const Pose& pose) {
  return Twist{convert_screw(t.s, t.rep, to, pose), to, t.body_index};
}

}  // namespace screwdyn
