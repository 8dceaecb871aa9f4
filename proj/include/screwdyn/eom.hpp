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

// Closed-form equations of motion M(q)q̈ + C(q,q̇)q̇ = Q built from the
// body-fixed system Jacobian, plus forward dynamics and the spatial momentum
// formulation.

#ifndef SCREWDYN_EOM_HPP_
#define SCREWDYN_EOM_HPP_

#include <vector>

#include "screwdyn/chain_model.hpp"
#include "screwdyn/kinematics.hpp"

namespace screwdyn {

// M = Jᵀ 𝖬 J with 𝖬 = diag(M_i), body-fixed.
MatrixXd mass_matrix(const ChainModel& m, const VectorXd& q);
// C = -Jᵀ(𝖬 A a + bᵀ 𝖬)J, a = diag(q̇_i ad_{X_i}), b = diag(ad_{V_i}).
MatrixXd coriolis_matrix(const ChainModel& m, const VectorXd& q,
                         const VectorXd& qd);

enum class ChristoffelVariant { standard, binet };

// Christoffel symbols of the first kind, C_ij = Σ_k Γ_ijk q̇_k.
class ChristoffelTensor {
 public:
  explicit ChristoffelTensor(int n) : n_(n), g_(static_cast<size_t>(n) * n * n, 0.0) {}
  int n() const { return n_; }
  double& operator()(int i, int j, int k) { return g_[(i * n_ + j) * n_ + k]; }
  double operator()(int i, int j, int k) const { return g_[(i * n_ + j) * n_ + k]; }
  // max |Γ_ijk - Γ_ikj|
  double symmetry_residual() const;
  MatrixXd coriolis(const VectorXd& qd) const;

 private:
  int n_;
  std::vector<double> g_;
};

// standard: for j ≼ k,
//   Γ_ijk = ½ Σ_l (J_kᵀM_l[J_i,J_j] + J_jᵀM_l[J_i,J_k] + J_iᵀM_l[J_j,J_k])
// binet: Γ_ijk = Σ_l tr(Ĵ_j Ĵ_k P_l Ĵ_iᵀ) with j ≼ k and P_l the 4x4
// pseudo-inertia built from the Binet tensor.
// Columns are J^b_{l,·}; the sums run over bodies l with i, j, k all on the
// path to l. Γ_ikj = Γ_ijk by construction.
ChristoffelTensor christoffel(const ChainModel& m, const VectorXd& q,
                              ChristoffelVariant variant = ChristoffelVariant::standard);

struct EomMatrices {
  MatrixXd M, C;
  VectorXd Q_applied;  // Jᵀ(W_app + W_gravity), body-fixed wrenches
};

// applied: body-fixed wrenches per body, or empty.
VectorXd applied_generalized_forces(const ChainModel& m, const VectorXd& q,
                                    const std::vector<Wrench>& applied,
                                    bool gravity);
EomMatrices eom_matrices(const ChainModel& m, const VectorXd& q,
                         const VectorXd& qd,
                         const std::vector<Wrench>& applied = {},
                         bool gravity = true);

// Jᵀ stacked body-fixed Newton-Euler residuals minus the joint forces:
// M q̈ + C q̇ - Q_applied - Q_joint.
VectorXd projection_eom(const ChainModel& m, const JointState& s,
                        const std::vector<Wrench>& applied = {},
                        const VectorXd& q_joint = VectorXd(),
                        bool gravity = true);

// q̈ = M⁻¹(Q_joint + Q_applied - C q̇). Throws NumericalError if M is not
// positive definite.
VectorXd fdyn(const ChainModel& m, const VectorXd& q, const VectorXd& qd,
              const VectorXd& q_joint,
              const std::vector<Wrench>& applied = {}, bool gravity = true);

struct MomentumRhs {
  VectorXd qd;
  VectorXd qdd;
  std::vector<Momentum> pi_dot;  // spatial
};

// Spatial momenta Π_i = M^s_i V^s_i of every body.
std::vector<Momentum> spatial_momenta(const ChainModel& m, const VectorXd& q,
                                      const VectorXd& qd);
// Solves M q̇ = J^sᵀ Π for q̇.
VectorXd joint_velocities_from_momenta(const ChainModel& m, const VectorXd& q,
                                       const std::vector<Momentum>& pi);
// Solves JᵀM J q̇ = Jᵀ Π (spatial) for q̇, then Π̇_i = M^s_i V̇_i - ad_{V_i}ᵀ Π_i.
// applied_spatial: spatial wrenches per body, or empty.
MomentumRhs momentum_rhs(const ChainModel& m, const VectorXd& q,
                         const std::vector<Momentum>& pi,
                         const VectorXd& q_joint,
                         const std::vector<Wrench>& applied_spatial = {},
                         bool gravity = true);

double kinetic_energy(const ChainModel& m, const VectorXd& q,
                      const VectorXd& qd);
// -Σ m_i g·r_ci
double potential_energy(const ChainModel& m, const VectorXd& q);

// Rigid-body spatial inertia rate Ṁ^s = -ad_Vᵀ M - M ad_V and the matching
// Coriolis matrix C^s = -ad_Vᵀ M.
Mat6 spatial_inertia_rate(const Mat6& ms, const Screw& vs);
Mat6 spatial_coriolis(const Mat6& ms, const Screw& vs);

}  // namespace screwdyn

#endif  // SCREWDYN_EOM_HPP_
