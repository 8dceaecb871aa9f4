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

// Analytic partial derivatives of Jacobian columns J_{i,j} with respect to
// joint coordinates. All indices are 0-based body indices.
//
//   body     ∂J_ij/∂q_k = [J_ij, J_ik]               for j ≺ k ≼ i
//   spatial  ∂J_j/∂q_k  = [J_k, J_j]                 for k ≺ j
//   hybrid   ∂J_ij/∂q_k = [J^ω_ik, J_ij] + [J_ij, J_ik]·(j ≺ k)   for k ≼ i
//
// where ≺ is "strict ancestor of" and J^ω is the angular part. Higher orders
// nest brackets over the sorted index sequence.

#ifndef SCREWDYN_JACOBIAN_DERIVATIVES_HPP_
#define SCREWDYN_JACOBIAN_DERIVATIVES_HPP_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "screwdyn/kinematics.hpp"

namespace screwdyn {

// Evaluates derivatives at a fixed q; Jacobians are built on first use per
// representation. Not thread-safe; use one instance per thread.
class JacobianDerivatives {
 public:
  JacobianDerivatives(const ChainModel& m, VectorXd q);

  Screw column(Rep rep, int i, int j) const;
  // rep ∈ {body, spatial, hybrid}
  Screw partial(Rep rep, int i, int j, int k) const;
  // rep ∈ {body, spatial}, any order ν = |idx| ≥ 1.
  Screw partial_n(Rep rep, int i, int j, std::span<const int> idx) const;
  // ∂²J^h_ij/∂q_k∂q_r by the product rule on the first-order bracket form.
  Screw hybrid_partial2(int i, int j, int k, int r) const;

 private:
  const SystemJacobian& jac(Rep rep) const;
  void check_index(int v) const;
  Screw hybrid_d(int i, int j, const std::vector<int>& idx) const;

  const ChainModel& m_;
  VectorXd q_;
  mutable std::array<std::optional<SystemJacobian>, 3> cache_;
};

Screw jacobian_partial(const ChainModel& m, const VectorXd& q, Rep rep, int i,
                       int j, int k);
Screw jacobian_partial_n(const ChainModel& m, const VectorXd& q, Rep rep, int i,
                         int j, std::span<const int> idx);

// J̇^s_j = [V^s_j, J^s_j] for every joint j.
std::vector<Screw> spatial_jacobian_dot(const ChainModel& m, const VectorXd& q,
                                        const VectorXd& qd);

}  // namespace screwdyn

#endif  // SCREWDYN_JACOBIAN_DERIVATIVES_HPP_
