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

// Time integration: Munthe-Kaas RK4 on SE(3) for a single rigid body and
// classical RK4 in joint space for chains.

#ifndef SCREWDYN_INTEGRATORS_HPP_
#define SCREWDYN_INTEGRATORS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "screwdyn/chain_model.hpp"
#include "screwdyn/kinematics.hpp"

namespace screwdyn {

// twist is body-fixed (rep == Rep::body) or spatial (rep == Rep::spatial).
struct RigidBodyState {
  Pose pose;
  Screw twist;
  Rep rep = Rep::body;
};

struct StepReport {
  double t = 0.0;
  double energy = 0.0;
  Vec6 momentum_spatial = Vec6::Zero();
  double constraint_drift = 0.0;
};

// Twist of the body at time t and pose C, in the representation of the state
// it drives.
using TwistField = std::function<Screw(double t, const Pose& c)>;

// One Munthe-Kaas RK4 step from t to t+h. The increment X starts at zero and
// obeys Ẋ = dexp⁻¹_X V^s with C = exp(X)C₀ (right) or Ẋ = dexp⁻¹_{-X} V^b
// with C = C₀exp(X) (left). Field values are converted to the twist the
// chosen trivialization needs. The default picks right for spatial states
// and left for body states. The returned twist is the field at t+h.
// Throws DomainError if a stage leaves the dexp⁻¹ domain.
RigidBodyState mk_step(const RigidBodyState& s, const TwistField& field,
                       double t, double h);
RigidBodyState mk_step(const RigidBodyState& s, const TwistField& field,
                       double t, double h, Trivialization triv);

struct FreeBodyTrajectory {
  std::vector<RigidBodyState> states;  // in the initial state's rep
  std::vector<StepReport> reports;
};

// Torque-free body in momentum form: Π^s is held at its initial value and the
// pose advances with V^s = (M^s)⁻¹Π^s. The pose is re-orthonormalized every
// 1000 steps. Throws DomainError for a degenerate inertia.
FreeBodyTrajectory free_body_simulate(const BodyModel& body,
                                      const RigidBodyState& initial, double T,
                                      double h,
                                      Trivialization triv = Trivialization::right);

enum class ChainForm { state, momentum };

const char* to_string(ChainForm f);
ChainForm chain_form_from_string(const std::string& s);

// Joint forces as a function of (t, q, q̇).
using TorqueFn =
    std::function<VectorXd(double t, const VectorXd& q, const VectorXd& qd)>;

struct ChainSimOptions {
  ChainForm form = ChainForm::state;
  bool gravity = true;
};

struct ChainTrajectory {
  std::vector<double> t;
  std::vector<VectorXd> q, qd, qdd;
  std::vector<StepReport> reports;
  // False when the run stopped early; the samples hold the last valid steps.
  bool completed = true;
  std::string message;
};

// Classical RK4 on (q, q̇) with fdyn (state form) or on (q, Π^s_1..Π^s_n) with
// momentum_rhs (momentum form). Steps of size h up to T; the final step is
// shortened to land on T. Reports carry total energy, the summed spatial
// momentum and, in momentum form, max_i ‖Π_i - M^s_i V^s_i‖.
ChainTrajectory chain_simulate(const ChainModel& m, const VectorXd& q0,
                               const VectorXd& qd0, const TorqueFn& torque,
                               double T, double h,
                               const ChainSimOptions& opt = {});

}  // namespace screwdyn

#endif  // SCREWDYN_INTEGRATORS_HPP_
