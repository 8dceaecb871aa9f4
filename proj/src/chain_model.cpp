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

#include "screwdyn/chain_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace screwdyn {

namespace {

constexpr double kUnitTol = 1e-9;

std::string body_path(int i) { return "bodies[" + std::to_string(i) + "]"; }

}  // namespace

const char* to_string(JointKind k) {
  switch (k) {
    case JointKind::revolute: return "revolute";
    case JointKind::prismatic: return "prismatic";
    case JointKind::helical: return "helical";
  }
  return "?";
}

Screw screw_from_axis(const Vec3& e, const Vec3& y, double pitch) {
  if (!e.allFinite() || std::abs(e.norm() - 1.0) > kUnitTol) {
    throw DomainError("joint axis is not a unit vector");
  }
  if (std::isinf(pitch)) return Screw(Vec3::Zero(), e);
  return Screw(e, y.cross(e) + pitch * e);
}

SpatialInertia SpatialInertia::to_spatial(const Pose& c) const {
  const Mat6 ai = adjoint(c.inverse()).matrix();
  return SpatialInertia(ai.transpose() * m_ * ai, InertiaRep::spatial);
}

SpatialInertia SpatialInertia::to_hybrid(const Rotation3& r) const {
  const Mat6 ai = adjoint_rot(r.inverse()).matrix();
  return SpatialInertia(ai.transpose() * m_ * ai, InertiaRep::hybrid);
}

SpatialInertia spatial_inertia_body(const BodyModel& b) {
  const Mat3 d = hat3(b.com);
  Mat6 m;
  m.topLeftCorner<3, 3>() = b.inertia_com - b.mass * d * d;
  m.topRightCorner<3, 3>() = b.mass * d;
  m.bottomLeftCorner<3, 3>() = -b.mass * d;
  m.bottomRightCorner<3, 3>() = b.mass * Mat3::Identity();
  return SpatialInertia(m, InertiaRep::body);
}

Mat3 binet_inertia(const Mat3& theta) {
  return 0.5 * theta.trace() * Mat3::Identity() - theta;
}

Mat4 pseudo_inertia_body(const BodyModel& b) {
  Mat4 p;
  p.topLeftCorner<3, 3>() =
      binet_inertia(b.inertia_com) + b.mass * b.com * b.com.transpose();
  p.topRightCorner<3, 1>() = b.mass * b.com;
  p.bottomLeftCorner<1, 3>() = b.mass * b.com.transpose();
  p(3, 3) = b.mass;
  return p;
}

void validate_body(const BodyModel& b, const std::string& prefix,
                   std::vector<Diagnostic>& out) {
  if (!std::isfinite(b.mass) || b.mass <= 0.0) {
    out.push_back({prefix + ".mass", "mass must be positive and finite"});
  }
  if (!b.com.allFinite()) {
    out.push_back({prefix + ".com", "non-finite entries"});
  }
  const Mat3& th = b.inertia_com;
  if (!th.allFinite()) {
    out.push_back({prefix + ".inertia_com", "non-finite entries"});
    return;
  }
  const double scale = std::max(1.0, th.cwiseAbs().maxCoeff());
  if ((th - th.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    out.push_back({prefix + ".inertia_com", "inertia tensor is not symmetric"});
    return;
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(th);
  const Vec3 lam = es.eigenvalues();
  if (lam.minCoeff() <= 0.0) {
    out.push_back(
        {prefix + ".inertia_com", "inertia tensor is not positive definite"});
    return;
  }
  const double tol = 1e-9 * lam.sum();
  for (int k = 0; k < 3; ++k) {
    if (lam[k] > lam[(k + 1) % 3] + lam[(k + 2) % 3] + tol) {
      out.push_back({prefix + ".inertia_com",
                     "principal moments violate the triangle inequality"});
      return;
    }
  }
}

ChainModel ChainModel::build(std::string name, const Vec3& gravity,
                             std::vector<BodySpec> bodies) {
  std::vector<Diagnostic> diags;
  if (!gravity.allFinite()) diags.push_back({"gravity", "non-finite entries"});
  if (bodies.empty()) diags.push_back({"bodies", "model has no bodies"});

  ChainModel m;
  m.name_ = std::move(name);
  m.gravity_ = gravity;
  const int n = static_cast<int>(bodies.size());

  for (int i = 0; i < n; ++i) {
    const std::string p = body_path(i);
    BodySpec& s = bodies[i];
    if (s.parent < kGround || s.parent >= i) {
      diags.push_back({p + ".parent", "bad parent index " +
                                          std::to_string(s.parent + 1) +
                                          " (must be 0 or an earlier body)"});
    }
    validate_body(s.body, p, diags);
    const Mat3& r = s.body.ref_pose.R();
    if (!r.allFinite() ||
        (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-9) {
      diags.push_back({p + ".ref_pose.rotation", "not orthonormal"});
    } else if (r.determinant() < 0.0) {
      diags.push_back({p + ".ref_pose.rotation", "not a proper rotation"});
    }
    if (!s.body.ref_pose.trans.allFinite()) {
      diags.push_back({p + ".ref_pose.translation", "non-finite entries"});
    }
    const JointSpec& j = s.joint;
    if (!j.axis.allFinite() || std::abs(j.axis.norm() - 1.0) > kUnitTol) {
      diags.push_back({p + ".joint.axis", "axis is not a unit vector"});
    }
    if (!j.point.allFinite()) {
      diags.push_back({p + ".joint.point", "non-finite entries"});
    }
    if (j.kind == JointKind::helical && !std::isfinite(j.pitch)) {
      diags.push_back({p + ".joint.pitch", "helical pitch must be finite"});
    }
    if (j.kind == JointKind::revolute && j.pitch != 0.0) {
      diags.push_back({p + ".joint.pitch", "revolute joints have zero pitch"});
    }
  }
  if (!diags.empty()) throw ModelError(std::move(diags));

  m.specs_ = std::move(bodies);
  m.ref_.resize(n);
  m.ref_rel_.resize(n);
  m.y_.resize(n);
  m.x_.resize(n);
  m.m_body_.resize(n);
  m.pseudo_.resize(n);
  m.paths_.resize(n);
  m.children_.resize(n);
  for (int i = 0; i < n; ++i) {
    const BodySpec& s = m.specs_[i];
    const Rotation3& r0 = s.body.ref_pose.rot;
    m.ref_[i] = Pose{r0.orthonormality_error() < 1e-15 ? r0 : r0.orthonormalized(),
                     s.body.ref_pose.trans};
    const Pose& a = m.ref_[i];
    const int par = s.parent;
    m.ref_rel_[i] = par == kGround ? a : m.ref_pose(par).inverse() * a;

    const JointSpec& j = s.joint;
    const Vec3 e = j.axis.normalized();
    const double pitch =
        j.kind == JointKind::prismatic ? std::numeric_limits<double>::infinity()
        : j.kind == JointKind::helical ? j.pitch
                                       : 0.0;
    const Screw z = screw_from_axis(e, j.point, pitch);
    if (j.frame == AxisFrame::spatial) {
      m.y_[i] = z;
      m.x_[i] = inverse_transform(a, z);
    } else {
      m.x_[i] = z;
      m.y_[i] = transform(a, z);
    }
    m.m_body_[i] = spatial_inertia_body(s.body);
    m.pseudo_[i] = pseudo_inertia_body(s.body);
    if (par != kGround) {
      m.paths_[i] = m.paths_[par];
      m.children_[par].push_back(i);
    }
    m.paths_[i].push_back(i);
  }
  return m;
}

Pose ChainModel::joint_frame(int i) const {
  const Screw& x = x_[i];
  Vec3 e = x.ang();
  Vec3 origin = Vec3::Zero();
  if (e.norm() < 1e-12) {
    e = x.lin();
  } else {
    // Foot of the perpendicular from the body origin onto the axis.
    origin = e.cross(x.lin());
  }
  // Any orthonormal frame with z = e.
  Vec3 t = std::abs(e.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 ex = (t - t.dot(e) * e).normalized();
  Mat3 r;
  r << ex, e.cross(ex), e;
  return Pose{Rotation3::unchecked(r), origin};
}

Screw ChainModel::joint_frame_screw(int i) const {
  return inverse_transform(joint_frame(i), x_[i]);
}

bool ChainModel::is_ancestor_or_self(int j, int i) const {
  if (j < 0 || i < 0 || j > i) return false;
  while (i > j) i = specs_[i].parent;
  return i == j;
}

double ChainModel::total_mass() const {
  double s = 0.0;
  for (const auto& b : specs_) s += b.body.mass;
  return s;
}

bool ChainModel::is_serial() const {
  for (int i = 0; i < n(); ++i) {
    if (specs_[i].parent != i - 1) return false;
  }
  return true;
}

}  // namespace screwdyn
