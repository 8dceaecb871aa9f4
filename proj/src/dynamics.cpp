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

#include "screwdyn/dynamics.hpp"

#include <string>

#include "sweeps.hpp"

namespace screwdyn {

namespace {

InertiaRep inertia_rep(Rep r) {
  switch (r) {
    case Rep::body: return InertiaRep::body;
    case Rep::spatial: return InertiaRep::spatial;
    case Rep::hybrid: return InertiaRep::hybrid;
    case Rep::mixed: break;
  }
  throw DomainError("no Newton-Euler form for the mixed representation");
}

}  // namespace

OpCountReport predicted_op_counts(Rep rep, int n) {
  OpCountReport r;
  switch (rep) {
    case Rep::body:
      r.screw_transforms = 3 * (n - 1);
      r.lie_brackets = 2 * n - 1;
      break;
    case Rep::spatial:
      r.screw_transforms = n;
      r.tensor_transforms = n;
      r.lie_brackets = 2 * n - 1;
      break;
    case Rep::hybrid:
    case Rep::mixed:
      r.screw_translations = 3 * n - 3;
      r.screw_rotations = n;
      r.tensor_rotations = n;
      r.lie_brackets = 3 * n - 1;
      break;
  }
  return r;
}

Wrench ne_wrench(const SpatialInertia& m, const Screw& v, const Screw& vd,
                 Rep rep) {
  if (m.rep() != inertia_rep(rep)) {
    throw DomainError("ne_wrench: inertia and twist representations differ");
  }
  if (rep == Rep::hybrid) {
    const Vec3 w = v.ang();
    const Wrench p = m * Screw(w, Vec3::Zero());
    return m * vd + Wrench(w.cross(p.torque()), w.cross(p.force()));
  }
  return m * vd - ad_transpose(v, m * v);
}

Wrench ne_wrench(const SpatialInertia& m, const Twist& v, const Twist& vd) {
  if (v.rep != vd.rep) {
    throw DomainError("ne_wrench: twist and acceleration representations differ");
  }
  return ne_wrench(m, v.s, vd.s, v.rep);
}

Wrench ne_wrench_com(Rep rep, double mass, const Mat3& theta, const Screw& v,
                     const Screw& vd) {
  const Vec3 w = v.ang();
  const Vec3 t = theta * vd.ang() + w.cross(theta * w);
  switch (rep) {
    case Rep::body: return Wrench(t, mass * (vd.lin() + w.cross(v.lin())));
    case Rep::hybrid: return Wrench(t, mass * vd.lin());
    default: break;
  }
  throw DomainError("ne_wrench_com: body or hybrid representation required");
}

Wrench ne_wrench_arbitrary(const ChainModel& m, const JointState& s, int i,
                           int j, int k) {
  const int n = m.n();
  auto bad = [n](int v, bool ground_ok) {
    return v >= n || (v < 0 && !(ground_ok && v == kGround));
  };
  if (bad(i, false) || bad(j, true) || bad(k, true)) {
    throw DomainError("ne_wrench_arbitrary: frame index out of range");
  }
  const KinematicsCache c = accelerations(m, s, Rep::spatial);
  const Vec3 rj = j == kGround ? Vec3::Zero() : c.poses[j].trans;
  const Vec3 rdj = j == kGround ? Vec3::Zero()
                                : Vec3(c.twists[j].lin() +
                                       c.twists[j].ang().cross(rj));
  const Rotation3 rk = k == kGround ? Rotation3() : c.poses[k].rot;
  const Vec3 wk = k == kGround ? Vec3::Zero() : Vec3(c.twists[k].ang());

  const Pose g{rk, rj};
  const Screw vg = inverse_transform(g, Screw(wk, rdj + rj.cross(wk)));
  const Screw kv = inverse_transform(g, c.twists[i]);
  const Screw kvd = inverse_transform(g, c.accels[i]) - lie_bracket(vg, kv);
  const Mat6 a = adjoint(c.poses[i].inverse() * g).matrix();
  const SpatialInertia km(a.transpose() * m.inertia(i).matrix() * a,
                          InertiaRep::spatial);
  return km * (kvd + lie_bracket(vg, kv)) - ad_transpose(kv, km * kv);
}

Wrench gravity_wrench(const ChainModel& m, int i, const Pose& c, Rep rep) {
  const BodyModel& b = m.body(i);
  const Vec3 f = b.mass * m.gravity();
  const Wrench wh((c.R() * b.com).cross(f), f);
  switch (rep) {
    case Rep::hybrid:
    case Rep::mixed:
      return wh;
    case Rep::body:
      return wrench_transform(Pose::from_rotation(c.rot), wh);
    case Rep::spatial:
      return wrench_transform_inverse(Pose::from_translation(c.trans), wh);
  }
  return wh;
}

IdynResult idyn_full(const ChainModel& m, const JointState& s, Rep rep,
                     const IdynOptions& opt) {
  const int n = m.n();
  const Rep r = rep == Rep::mixed ? Rep::hybrid : rep;
  if (!opt.applied.empty() && static_cast<int>(opt.applied.size()) != n) {
    throw DomainError("idyn: applied wrench count " +
                      std::to_string(opt.applied.size()) + " differs from n");
  }
  const CountedAlgebra alg(opt.counts);
  const detail::Sweep w = detail::forward_sweep(m, s, r, 2, alg);

  IdynResult out;
  out.Q.resize(n);
  out.joint_wrenches.assign(n, Wrench());
  std::vector<Wrench>& W = out.joint_wrenches;
  for (int i = n - 1; i >= 0; --i) {
    const SpatialInertia& mb = m.inertia(i);
    switch (r) {
      case Rep::body:
        W[i] += mb * w.Vd[i] - alg.bracket_transpose(w.V[i], mb * w.V[i]);
        break;
      case Rep::spatial: {
        const SpatialInertia ms = alg.tensor_transform(mb, w.C[i]);
        W[i] += ms * w.Vd[i] - alg.bracket_transpose(w.V[i], ms * w.V[i]);
        break;
      }
      case Rep::hybrid: {
        const SpatialInertia mh = alg.tensor_rotate(mb, w.C[i].rot);
        const Vec3 om = w.V[i].ang();
        W[i] += mh * w.Vd[i] + alg.spin(om, mh * Screw(om, Vec3::Zero()));
        break;
      }
      case Rep::mixed:
        break;
    }
    if (!opt.applied.empty()) W[i] -= opt.applied[i];
    if (opt.gravity) W[i] -= gravity_wrench(m, i, w.C[i], r);

    out.Q[i] = W[i].vec().dot(w.S[i].vec());
    const int p = m.parent(i);
    if (p == kGround) continue;
    switch (r) {
      case Rep::body:
        W[p] += alg.wrench_transform_inverse(w.Crel[i], W[i]);
        break;
      case Rep::spatial:
        W[p] += W[i];
        break;
      case Rep::hybrid:
        W[p] += alg.wrench_translate(w.C[p].trans - w.C[i].trans, W[i]);
        break;
      case Rep::mixed:
        break;
    }
  }
  return out;
}

VectorXd idyn(const ChainModel& m, const JointState& s, Rep rep,
              const IdynOptions& opt) {
  return idyn_full(m, s, rep, opt).Q;
}

}  // namespace screwdyn
