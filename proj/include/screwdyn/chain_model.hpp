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

// Tree-topology multibody model.
//
// Bodies are stored in topological order with 0-based indices; the parent of
// a root body is kGround. Body i carries the joint connecting it to its
// parent. A_i is the body pose at q = 0, Y_i the joint screw in inertial
// coordinates at q = 0, and X_i the same screw in body coordinates.

#ifndef SCREWDYN_CHAIN_MODEL_HPP_
#define SCREWDYN_CHAIN_MODEL_HPP_

#include <limits>
#include <string>
#include <vector>

#include "screwdyn/se3.hpp"

namespace screwdyn {

inline constexpr int kGround = -1;

enum class JointKind { revolute, prismatic, helical };
enum class AxisFrame { spatial, body };

const char* to_string(JointKind k);

// Authoring data for a 1-DOF lower pair. For prismatic joints only `axis` is
// used.
struct JointSpec {
  JointKind kind = JointKind::revolute;
  Vec3 axis = Vec3::UnitZ();
  Vec3 point = Vec3::Zero();
  double pitch = 0.0;
  AxisFrame frame = AxisFrame::spatial;
};

struct BodyModel {
  double mass = 1.0;
  Vec3 com = Vec3::Zero();                 // d_bc in body coordinates
  Mat3 inertia_com = Mat3::Identity();     // Θ_c, COM axes parallel to BFR
  Pose ref_pose;                           // A_i
};

struct BodySpec {
  int parent = kGround;
  BodyModel body;
  JointSpec joint;
};

// (e, y×e + pitch·e); an infinite pitch yields the prismatic screw (0, e).
// Throws DomainError unless |e| = 1 within 1e-9.
Screw screw_from_axis(const Vec3& e, const Vec3& y, double pitch);

enum class InertiaRep { body, spatial, hybrid };

class SpatialInertia {
 public:
  SpatialInertia() : m_(Mat6::Identity()), rep_(InertiaRep::body) {}
  SpatialInertia(const Mat6& m, InertiaRep rep) : m_(m), rep_(rep) {}

  const Mat6& matrix() const { return m_; }
  InertiaRep rep() const { return rep_; }
  Wrench operator*(const Screw& v) const { return Wrench(Vec6(m_ * v.vec())); }

  // Congruence Ad_C⁻ᵀ M Ad_C⁻¹ from body to spatial coordinates.
  SpatialInertia to_spatial(const Pose& c) const;
  // Ad_R⁻ᵀ M Ad_R⁻¹ from body to hybrid coordinates.
  SpatialInertia to_hybrid(const Rotation3& r) const;

 private:
  Mat6 m_;
  InertiaRep rep_;
};

// [[Θ_c - m d̃², m d̃], [-m d̃, m I]] in body coordinates.
SpatialInertia spatial_inertia_body(const BodyModel& b);
// ϑ = ½ tr(Θ) I - Θ
Mat3 binet_inertia(const Mat3& theta);
// 4x4 pseudo-inertia [[ϑ_b, m d], [m dᵀ, m]] in body coordinates, where ϑ_b is
// the Binet tensor about the body origin.
Mat4 pseudo_inertia_body(const BodyModel& b);

// Validation of a single body's inertial data. Appends diagnostics with the
// given path prefix.
void validate_body(const BodyModel& b, const std::string& prefix,
                   std::vector<Diagnostic>& out);

class ChainModel {
 public:
  // Validates and derives all joint screws. Throws ModelError.
  static ChainModel build(std::string name, const Vec3& gravity,
                          std::vector<BodySpec> bodies);

  const std::string& name() const { return name_; }
  int n() const { return static_cast<int>(specs_.size()); }
  const Vec3& gravity() const { return gravity_; }

  int parent(int i) const { return specs_[i].parent; }
  const BodySpec& spec(int i) const { return specs_[i]; }
  const BodyModel& body(int i) const { return specs_[i].body; }
  const JointSpec& joint(int i) const { return specs_[i].joint; }

  // A_i, projected onto SO(3) to round-off.
  const Pose& ref_pose(int i) const { return ref_[i]; }
  // B_i = A_{π(i)}⁻¹ A_i
  const Pose& ref_relative(int i) const { return ref_rel_[i]; }
  const Screw& screw_spatial(int i) const { return y_[i]; }  // Y_i
  const Screw& screw_body(int i) const { return x_[i]; }     // ^iX_i
  const SpatialInertia& inertia(int i) const { return m_body_[i]; }
  const Mat4& pseudo_inertia(int i) const { return pseudo_[i]; }

  // Canonical joint frame on body i: origin on the joint axis closest to the
  // body origin, z along the axis. Z is the joint screw in that frame, so
  // X_i = Ad_S Z. Such frames are not unique; this is one valid choice.
  Pose joint_frame(int i) const;
  Screw joint_frame_screw(int i) const;

  // True when j is i or an ancestor of i.
  bool is_ancestor_or_self(int j, int i) const;
  // Ancestors of i (root first) followed by i.
  const std::vector<int>& path(int i) const { return paths_[i]; }
  const std::vector<int>& children(int i) const { return children_[i]; }

  double total_mass() const;
  bool is_serial() const;

 private:
  std::string name_;
  Vec3 gravity_ = Vec3(0.0, 0.0, -9.80665);
  std::vector<BodySpec> specs_;
  std::vector<Pose> ref_, ref_rel_;
  std::vector<Screw> y_, x_;
  std::vector<SpatialInertia> m_body_;
  std::vector<Mat4> pseudo_;
  std::vector<std::vector<int>> paths_, children_;
};

}  // namespace screwdyn

#endif  // SCREWDYN_CHAIN_MODEL_HPP_
