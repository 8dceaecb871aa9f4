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

// SE(3) value types and screw algebra.
//
// Screws are ordered (angular; linear) and wrenches (torque; force)
// everywhere. Both are distinct types so that the pairing <W, V> is the only
// way to combine them.

#ifndef SCREWDYN_SE3_HPP_
#define SCREWDYN_SE3_HPP_

#include <Eigen/Dense>

#include "screwdyn/errors.hpp"

namespace screwdyn {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat4 = Eigen::Matrix4d;

Mat3 hat3(const Vec3& v);
// Throws DomainError if the symmetric part of m exceeds 1e-9 in norm.
Vec3 vee3(const Mat3& m);

class Rotation3 {
 public:
  Rotation3() : m_(Mat3::Identity()) {}

  // Validates orthonormality and det = +1 within tol.
  static Rotation3 from_matrix(const Mat3& m, double tol = 1e-9);
  // Caller guarantees m is a rotation.
  static Rotation3 unchecked(const Mat3& m) { return Rotation3(m); }

  const Mat3& matrix() const { return m_; }
  Rotation3 operator*(const Rotation3& o) const { return Rotation3(m_ * o.m_); }
  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  Rotation3 inverse() const { return Rotation3(m_.transpose()); }

  // Nearest rotation in the Frobenius norm (polar projection).
  Rotation3 orthonormalized() const;
  // max(|mᵀm - I|, |det m - 1|)
  double orthonormality_error() const;

 private:
  explicit Rotation3(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

struct Pose {
  Rotation3 rot;
  Vec3 trans = Vec3::Zero();

  static Pose identity() { return Pose{}; }
  static Pose from_rotation(const Rotation3& r) { return Pose{r, Vec3::Zero()}; }
  static Pose from_translation(const Vec3& t) { return Pose{Rotation3(), t}; }
  // Homogeneous 4x4 view, for I/O only.
  static Pose from_matrix4(const Mat4& m, double tol = 1e-9);
  Mat4 matrix4() const;

  const Mat3& R() const { return rot.matrix(); }
  Pose operator*(const Pose& o) const {
    return Pose{rot * o.rot, rot * o.trans + trans};
  }
  Pose inverse() const;
  Vec3 apply(const Vec3& p) const { return rot * p + trans; }
};

class Screw {
 public:
  Screw() : v_(Vec6::Zero()) {}
  Screw(const Vec3& ang, const Vec3& lin) { v_ << ang, lin; }
  explicit Screw(const Vec6& v) : v_(v) {}

  static Screw zero() { return Screw(); }

  Vec3 ang() const { return v_.head<3>(); }
  Vec3 lin() const { return v_.tail<3>(); }
  const Vec6& vec() const { return v_; }
  Screw angular_part() const { return Screw(ang(), Vec3::Zero()); }
  Screw linear_part() const { return Screw(Vec3::Zero(), lin()); }
  double norm() const { return v_.norm(); }

  Screw operator+(const Screw& o) const { return Screw(Vec6(v_ + o.v_)); }
  Screw operator-(const Screw& o) const { return Screw(Vec6(v_ - o.v_)); }
  Screw operator-() const { return Screw(Vec6(-v_)); }
  Screw operator*(double s) const { return Screw(Vec6(v_ * s)); }
  Screw& operator+=(const Screw& o) { v_ += o.v_; return *this; }
  Screw& operator-=(const Screw& o) { v_ -= o.v_; return *this; }

 private:
  Vec6 v_;
};
inline Screw operator*(double s, const Screw& x) { return x * s; }

class Wrench {
 public:
  Wrench() : v_(Vec6::Zero()) {}
  Wrench(const Vec3& torque, const Vec3& force) { v_ << torque, force; }
  explicit Wrench(const Vec6& v) : v_(v) {}

  Vec3 torque() const { return v_.head<3>(); }
  Vec3 force() const { return v_.tail<3>(); }
  const Vec6& vec() const { return v_; }
  double norm() const { return v_.norm(); }

  // Power <W, V> = torque·ang + force·lin.
  double pair(const Screw& v) const { return v_.dot(v.vec()); }
  // Same wrench as a screw (force; torque), so that reciprocal_product with a
  // twist equals the power.
  Screw as_screw() const { return Screw(force(), torque()); }

  Wrench operator+(const Wrench& o) const { return Wrench(Vec6(v_ + o.v_)); }
  Wrench operator-(const Wrench& o) const { return Wrench(Vec6(v_ - o.v_)); }
  Wrench operator-() const { return Wrench(Vec6(-v_)); }
  Wrench operator*(double s) const { return Wrench(Vec6(v_ * s)); }
  Wrench& operator+=(const Wrench& o) { v_ += o.v_; return *this; }
  Wrench& operator-=(const Wrench& o) { v_ -= o.v_; return *this; }

 private:
  Vec6 v_;
};

// Momentum co-screws (L; P) share the wrench layout.
using Momentum = Wrench;

// Ad_C = [[R, 0], [r̃R, R]].
class MotionAdjoint {
 public:
  MotionAdjoint() : m_(Mat6::Identity()) {}
  explicit MotionAdjoint(const Mat6& m) : m_(m) {}
  const Mat6& matrix() const { return m_; }
  Screw apply(const Screw& x) const { return Screw(Vec6(m_ * x.vec())); }
  // Adᵀ W
  Wrench apply_transpose(const Wrench& w) const {
    return Wrench(Vec6(m_.transpose() * w.vec()));
  }
  MotionAdjoint operator*(const MotionAdjoint& o) const {
    return MotionAdjoint(Mat6(m_ * o.m_));
  }

 private:
  Mat6 m_;
};

// ad_X = [[ξ̃, 0], [η̃, ξ̃]].
class ScrewCross {
 public:
  explicit ScrewCross(const Mat6& m) : m_(m) {}
  const Mat6& matrix() const { return m_; }
  Screw apply(const Screw& x) const { return Screw(Vec6(m_ * x.vec())); }

 private:
  Mat6 m_;
};

MotionAdjoint adjoint(const Pose& p);
MotionAdjoint adjoint_rot(const Rotation3& r);
MotionAdjoint adjoint_trans(const Vec3& r);

// Matrix-free Ad_C X and Ad_C⁻¹ X.
Screw transform(const Pose& p, const Screw& x);
Screw inverse_transform(const Pose& p, const Screw& x);
Screw rotate(const Rotation3& r, const Screw& x);
// Ad_r X = (ξ, η + r×ξ)
Screw translate(const Vec3& r, const Screw& x);

// Ad_pᵀ W. If p is the pose of frame B in frame A and W is given in A, the
// result is the same wrench in B, with <result, Ad_p⁻¹ V> = <W, V>.
Wrench wrench_transform(const Pose& p, const Wrench& w);
// Ad_p⁻ᵀ W, the inverse map (B coordinates back to A).
Wrench wrench_transform_inverse(const Pose& p, const Wrench& w);
// Ad_rᵀ W for a pure translation.
Wrench wrench_translate(const Vec3& r, const Wrench& w);

Screw lie_bracket(const Screw& x1, const Screw& x2);
ScrewCross ad_matrix(const Screw& x);
// ad_Xᵀ W
Wrench ad_transpose(const Screw& x, const Wrench& w);

double reciprocal_product(const Screw& x1, const Screw& x2);

Rotation3 exp_so3(const Vec3& w);
// Rotation vector with norm in [0, π].
Vec3 log_so3(const Rotation3& r);
// SO(3) left Jacobian, used as the translation factor of exp_se3.
Mat3 so3_left_jacobian(const Vec3& w);
Mat3 so3_left_jacobian_inverse(const Vec3& w);

Pose exp_se3(const Screw& x);
// Throws DomainError for rotation angles >= π - 1e-9.
Screw log_se3(const Pose& p);

enum class Trivialization { right, left };

// right: V^s = dexp_X Ẋ for C = exp(X)C₀. left: V^b = dexp_{-X} Ẋ for
// C = C₀exp(X).
Mat6 dexp(const Screw& x, Trivialization dir = Trivialization::right);
// Truncated series Σ ad^k/(k+1)!, reference for the closed form.
Mat6 dexp_series(const Screw& x, Trivialization dir = Trivialization::right);
// Throws DomainError for |ang| >= 2π - 1e-6.
Mat6 dexp_inv(const Screw& x, Trivialization dir = Trivialization::right);

}  // namespace screwdyn

#endif  // SCREWDYN_SE3_HPP_
