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

// Operation counting for the inverse dynamics recursions.
//
// A counter is owned by the caller and passed down by pointer, so concurrent
// invocations never share state. Building with SCREWDYN_OP_COUNTS=0 turns
// every increment into a no-op.

#ifndef SCREWDYN_OP_COUNTS_HPP_
#define SCREWDYN_OP_COUNTS_HPP_

#include <cstdint>

#include "screwdyn/chain_model.hpp"
#include "screwdyn/rep.hpp"
#include "screwdyn/se3.hpp"

namespace screwdyn {

struct OpCountReport {
  std::int64_t screw_transforms = 0;     // general Ad_C applied to a screw
  std::int64_t screw_rotations = 0;      // Ad_R
  std::int64_t screw_translations = 0;   // Ad_r
  std::int64_t tensor_transforms = 0;    // congruence with Ad_C
  std::int64_t tensor_rotations = 0;     // congruence with Ad_R
  std::int64_t lie_brackets = 0;         // ad_X Y or ad_Xᵀ W

  // All screw-coordinate frame changes.
  std::int64_t frame_transforms_screw() const {
    return screw_transforms + screw_rotations + screw_translations;
  }
  std::int64_t frame_transforms_tensor() const {
    return tensor_transforms + tensor_rotations;
  }
  bool operator==(const OpCountReport&) const = default;
};

inline constexpr bool kOpCountsEnabled =
#if defined(SCREWDYN_OP_COUNTS) && SCREWDYN_OP_COUNTS
    true;
#else
    false;
#endif

// Thin counting wrapper around the se3 kernels.
class CountedAlgebra {
 public:
  explicit CountedAlgebra(OpCountReport* c) : c_(kOpCountsEnabled ? c : nullptr) {}

  Screw transform(const Pose& p, const Screw& x) const {
    bump(&OpCountReport::screw_transforms);
    return screwdyn::transform(p, x);
  }
  Screw inverse_transform(const Pose& p, const Screw& x) const {
    bump(&OpCountReport::screw_transforms);
    return screwdyn::inverse_transform(p, x);
  }
  // Ad_pᵀ W
  Wrench wrench_transform(const Pose& p, const Wrench& w) const {
    bump(&OpCountReport::screw_transforms);
    return screwdyn::wrench_transform(p, w);
  }
  // Ad_p⁻ᵀ W
  Wrench wrench_transform_inverse(const Pose& p, const Wrench& w) const {
    bump(&OpCountReport::screw_transforms);
    return screwdyn::wrench_transform_inverse(p, w);
  }
  Screw rotate(const Rotation3& r, const Screw& x) const {
    bump(&OpCountReport::screw_rotations);
    return screwdyn::rotate(r, x);
  }
  Screw translate(const Vec3& r, const Screw& x) const {
    bump(&OpCountReport::screw_translations);
    return screwdyn::translate(r, x);
  }
  Wrench wrench_translate(const Vec3& r, const Wrench& w) const {
    bump(&OpCountReport::screw_translations);
    return screwdyn::wrench_translate(r, w);
  }
  SpatialInertia tensor_transform(const SpatialInertia& m, const Pose& c) const {
    bump(&OpCountReport::tensor_transforms);
    return m.to_spatial(c);
  }
  SpatialInertia tensor_rotate(const SpatialInertia& m, const Rotation3& r) const {
    bump(&OpCountReport::tensor_rotations);
    return m.to_hybrid(r);
  }
  Screw bracket(const Screw& x, const Screw& y) const {
    bump(&OpCountReport::lie_brackets);
    return lie_bracket(x, y);
  }
  Wrench bracket_transpose(const Screw& x, const Wrench& w) const {
    bump(&OpCountReport::lie_brackets);
    return ad_transpose(x, w);
  }
  // ad_{(w, 0)} applied blockwise to a co-screw: (w×t, w×f).
  Wrench spin(const Vec3& w, const Wrench& p) const {
    bump(&OpCountReport::lie_brackets);
    return Wrench(w.cross(p.torque()), w.cross(p.force()));
  }

 private:
  void bump(std::int64_t OpCountReport::*f) const {
    if constexpr (kOpCountsEnabled) {
      if (c_) ++(c_->*f);
    }
  }
  OpCountReport* c_;
};

// Counts predicted for inverse dynamics of a serial chain with n bodies,
// gravity off and no applied wrenches.
OpCountReport predicted_op_counts(Rep rep, int n);

}  // namespace screwdyn

#endif  // SCREWDYN_OP_COUNTS_HPP_
