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

#include "screwdyn/se3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

namespace screwdyn {

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ":" << column << ": ";
  if (!path.empty()) os << path << ": ";
  os << message;
  return os.str();
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += "\n";
    s += d[i].to_string();
  }
  return s;
}

constexpr double kSmallAngle = 1e-4;
// Coefficients with θ³ or higher cancellation switch to series earlier.
constexpr double kSeriesAngle = 0.5;

// sin θ / θ
double c_sin(double th) {
  if (th < kSmallAngle) {
    const double t = th * th;
    return 1.0 - t / 6.0 + t * t / 120.0;
  }
  return std::sin(th) / th;
}

// (1 - cos θ) / θ², via 2 sin²(θ/2) to avoid cancellation.
double c_cos(double th) {
  if (th < kSmallAngle) {
    const double t = th * th;
    return 0.5 - t / 24.0 + t * t / 720.0;
  }
  const double s = std::sin(0.5 * th);
  return 2.0 * s * s / (th * th);
}

// (θ - sin θ) / θ³
double c_a(double th) {
  if (th < kSeriesAngle) {
    const double t = th * th;
    return 1.0 / 6.0 +
           t * (-1.0 / 120.0 +
                t * (1.0 / 5040.0 +
                     t * (-1.0 / 362880.0 +
                          t * (1.0 / 39916800.0 - t / 6227020800.0))));
  }
  return (th - std::sin(th)) / (th * th * th);
}

// (θ² + 2cos θ - 2) / (2θ⁴)
double c_b(double th) {
  if (th < kSeriesAngle) {
    const double t = th * th;
    return 1.0 / 24.0 +
           t * (-1.0 / 720.0 +
                t * (1.0 / 40320.0 +
                     t * (-1.0 / 3628800.0 +
                          t * (1.0 / 479001600.0 - t / 87178291200.0))));
  }
  const double s2 = 2.0 * std::sin(0.5 * th);
  return (th - s2) * (th + s2) / (2.0 * th * th * th * th);
}

// (2θ - 3 sin θ + θ cos θ) / (2θ⁵)
double c_c(double th) {
  if (th < kSeriesAngle) {
    const double t = th * th;
    return 1.0 / 120.0 +
           t * (-1.0 / 2520.0 +
                t * (1.0 / 120960.0 +
                     t * (-1.0 / 9979200.0 +
                          t * (1.0 / 1245404160.0 - t / 217945728000.0))));
  }
  const double t5 = th * th * th * th * th;
  return (2.0 * th - 3.0 * std::sin(th) + th * std::cos(th)) / (2.0 * t5);
}

// (1 - (θ/2) cot(θ/2)) / θ²
double c_cot(double th) {
  if (th < kSeriesAngle) {
    const double t = th * th;
    return 1.0 / 12.0 +
           t * (1.0 / 720.0 +
                t * (1.0 / 30240.0 +
                     t * (1.0 / 1209600.0 +
                          t * (1.0 / 47900160.0 +
                               t * 691.0 / 1307674368000.0))));
  }
  const double h = 0.5 * th;
  return (1.0 - h * std::cos(h) / std::sin(h)) / (th * th);
}

// Lower-left block of the SE(3) dexp, X = (w, u).
Mat3 dexp_coupling(const Vec3& w, const Vec3& u) {
  const double th = w.norm();
  const Mat3 W = hat3(w);
  const Mat3 U = hat3(u);
  const Mat3 WU = W * U;
  const Mat3 UW = U * W;
  const Mat3 WUW = WU * W;
  return 0.5 * U + c_a(th) * (WU + UW + WUW) +
         c_b(th) * (W * WU + UW * W - 3.0 * WUW) +
         c_c(th) * (WUW * W + W * WUW);
}

Mat6 dexp_closed(const Vec3& w, const Vec3& u) {
  const Mat3 A = so3_left_jacobian(w);
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>() = A;
  m.bottomRightCorner<3, 3>() = A;
  m.bottomLeftCorner<3, 3>() = dexp_coupling(w, u);
  return m;
}

Screw signed_arg(const Screw& x, Trivialization dir) {
  return dir == Trivialization::right ? x : -x;
}

}  // namespace

ModelError::ModelError(std::vector<Diagnostic> diags)
    : Error(join_diagnostics(diags)), diags_(std::move(diags)) {}

Mat3 hat3(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

Vec3 vee3(const Mat3& m) {
  if ((m + m.transpose()).norm() * 0.5 > 1e-9) {
    throw DomainError("vee3: matrix is not skew-symmetric");
  }
  return Vec3(0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)),
              0.5 * (m(1, 0) - m(0, 1)));
}

Rotation3 Rotation3::from_matrix(const Mat3& m, double tol) {
  if (!m.allFinite()) throw DomainError("rotation has non-finite entries");
  Rotation3 r(m);
  if ((m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw DomainError("not orthonormal");
  }
  if (m.determinant() < 0.0) throw DomainError("not a proper rotation");
  return r;
}

Rotation3 Rotation3::orthonormalized() const {
  Eigen::JacobiSVD<Mat3> svd(m_, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  const Mat3 v = svd.matrixV();
  if ((u * v.transpose()).determinant() < 0.0) u.col(2) *= -1.0;
  return Rotation3(u * v.transpose());
}

double Rotation3::orthonormality_error() const {
  const double e = (m_.transpose() * m_ - Mat3::Identity()).cwiseAbs().maxCoeff();
  return std::max(e, std::abs(m_.determinant() - 1.0));
}

Pose Pose::from_matrix4(const Mat4& m, double tol) {
  const Eigen::RowVector4d last(0, 0, 0, 1);
  if ((m.row(3) - last).cwiseAbs().maxCoeff() > tol) {
    throw DomainError("homogeneous matrix has invalid last row");
  }
  return Pose{Rotation3::from_matrix(m.topLeftCorner<3, 3>(), tol),
              m.topRightCorner<3, 1>()};
}

Mat4 Pose::matrix4() const {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rot.matrix();
  m.topRightCorner<3, 1>() = trans;
  return m;
}

Pose Pose::inverse() const {
  const Rotation3 rt = rot.inverse();
  return Pose{rt, -(rt * trans)};
}

MotionAdjoint adjoint(const Pose& p) {
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>() = p.R();
  m.bottomRightCorner<3, 3>() = p.R();
  m.bottomLeftCorner<3, 3>() = hat3(p.trans) * p.R();
  return MotionAdjoint(m);
}

MotionAdjoint adjoint_rot(const Rotation3& r) {
  return adjoint(Pose::from_rotation(r));
}

MotionAdjoint adjoint_trans(const Vec3& r) {
  return adjoint(Pose::from_translation(r));
}

Screw transform(const Pose& p, const Screw& x) {
  const Vec3 w = p.R() * x.ang();
  return Screw(w, p.trans.cross(w) + p.R() * x.lin());
}

Screw inverse_transform(const Pose& p, const Screw& x) {
  const Mat3 rt = p.R().transpose();
  return Screw(rt * x.ang(), rt * (x.lin() - p.trans.cross(x.ang())));
}

Screw rotate(const Rotation3& r, const Screw& x) {
  return Screw(r * x.ang(), r * x.lin());
}

Screw translate(const Vec3& r, const Screw& x) {
  return Screw(x.ang(), x.lin() + r.cross(x.ang()));
}

Wrench wrench_transform(const Pose& p, const Wrench& w) {
  const Mat3 rt = p.R().transpose();
  return Wrench(rt * (w.torque() - p.trans.cross(w.force())), rt * w.force());
}

Wrench wrench_transform_inverse(const Pose& p, const Wrench& w) {
  const Vec3 f = p.R() * w.force();
  return Wrench(p.R() * w.torque() + p.trans.cross(f), f);
}

Wrench wrench_translate(const Vec3& r, const Wrench& w) {
  return Wrench(w.torque() - r.cross(w.force()), w.force());
}

Screw lie_bracket(const Screw& x1, const Screw& x2) {
  const Vec3 w1 = x1.ang(), w2 = x2.ang();
  return Screw(w1.cross(w2), x1.lin().cross(w2) + w1.cross(x2.lin()));
}

ScrewCross ad_matrix(const Screw& x) {
  Mat6 m = Mat6::Zero();
  const Mat3 w = hat3(x.ang());
  m.topLeftCorner<3, 3>() = w;
  m.bottomRightCorner<3, 3>() = w;
  m.bottomLeftCorner<3, 3>() = hat3(x.lin());
  return ScrewCross(m);
}

Wrench ad_transpose(const Screw& x, const Wrench& w) {
  const Vec3 xi = x.ang(), eta = x.lin();
  const Vec3 t = w.torque(), f = w.force();
  return Wrench(-xi.cross(t) - eta.cross(f), -xi.cross(f));
}

double reciprocal_product(const Screw& x1, const Screw& x2) {
  return x1.ang().dot(x2.lin()) + x1.lin().dot(x2.ang());
}

Rotation3 exp_so3(const Vec3& w) {
  const double th = w.norm();
  const Mat3 W = hat3(w);
  return Rotation3::unchecked(Mat3::Identity() + c_sin(th) * W +
                              c_cos(th) * W * W);
}

Vec3 log_so3(const Rotation3& rot) {
  const Mat3& R = rot.matrix();
  const double cos_th = std::clamp(0.5 * (R.trace() - 1.0), -1.0, 1.0);
  const double th = std::acos(cos_th);
  const Vec3 s(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1));
  if (th < std::numbers::pi - 1e-3) {
    // s = 2 sin θ · axis
    return 0.5 * s / c_sin(th);
  }
  // Near π the antisymmetric part vanishes; read the axis from the
  // symmetric part (R + Rᵀ)/2 = cos θ I + (1 - cos θ) u uᵀ.
  const Mat3 uu = (0.5 * (R + R.transpose()) - cos_th * Mat3::Identity()) /
                  (1.0 - cos_th);
  int k = 0;
  uu.diagonal().maxCoeff(&k);
  Vec3 u = uu.col(k) / std::sqrt(std::max(uu(k, k), 0.0));
  u.normalize();
  if (s.norm() > 1e-14) {
    if (u.dot(s) < 0.0) u = -u;
  } else {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(u[i]) > 1e-12) {
        if (u[i] < 0.0) u = -u;
        break;
      }
    }
  }
  return th * u;
}

Mat3 so3_left_jacobian(const Vec3& w) {
  const double th = w.norm();
  const Mat3 W = hat3(w);
  return Mat3::Identity() + c_cos(th) * W + c_a(th) * W * W;
}

Mat3 so3_left_jacobian_inverse(const Vec3& w) {
  const double th = w.norm();
  const Mat3 W = hat3(w);
  return Mat3::Identity() - 0.5 * W + c_cot(th) * W * W;
}

Pose exp_se3(const Screw& x) {
  const Vec3 w = x.ang();
  return Pose{exp_so3(w), so3_left_jacobian(w) * x.lin()};
}

Screw log_se3(const Pose& p) {
  const Vec3 w = log_so3(p.rot);
  if (w.norm() >= std::numbers::pi - 1e-9) {
    throw DomainError("log_se3: rotation angle at or beyond the principal branch");
  }
  return Screw(w, so3_left_jacobian_inverse(w) * p.trans);
}

Mat6 dexp(const Screw& x, Trivialization dir) {
  const Screw y = signed_arg(x, dir);
  return dexp_closed(y.ang(), y.lin());
}

Mat6 dexp_series(const Screw& x, Trivialization dir) {
  const Mat6 ad = ad_matrix(signed_arg(x, dir)).matrix();
  Mat6 sum = Mat6::Identity();
  Mat6 term = Mat6::Identity();
  for (int k = 1; k < 30; ++k) {
    term = term * ad / static_cast<double>(k + 1);
    sum += term;
    if (term.norm() < 1e-16) break;
  }
  return sum;
}

Mat6 dexp_inv(const Screw& x, Trivialization dir) {
  const Screw y = signed_arg(x, dir);
  const Vec3 w = y.ang();
  if (w.norm() >= 2.0 * std::numbers::pi - 1e-6) {
    throw DomainError("dexp_inv: rotation magnitude too close to 2π");
  }
  const Mat3 Ai = so3_left_jacobian_inverse(w);
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>() = Ai;
  m.bottomRightCorner<3, 3>() = Ai;
  m.bottomLeftCorner<3, 3>() = -Ai * dexp_coupling(w, y.lin()) * Ai;
  return m;
}

}  // namespace screwdyn
