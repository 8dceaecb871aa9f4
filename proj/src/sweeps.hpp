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

// Forward kinematic sweep shared by the kinematics and dynamics modules.

#ifndef SCREWDYN_SRC_SWEEPS_HPP_
#define SCREWDYN_SRC_SWEEPS_HPP_

#include <vector>

#include "screwdyn/kinematics.hpp"
#include "screwdyn/op_counts.hpp"

namespace screwdyn::detail {

struct Sweep {
  std::vector<Pose> C;     // absolute poses
  std::vector<Pose> Crel;  // C_{π(i),i}
  // Instantaneous joint screw in the sweep's representation:
  // body X_i, spatial J^s_i, hybrid Ad_{R_i} X_i.
  std::vector<Screw> S;
  std::vector<Screw> V, Vd;
};

// level 1: twists, level 2: twists and accelerations. rep must be body,
// spatial or hybrid. Joint rates are read only up to the requested level.
Sweep forward_sweep(const ChainModel& m, const JointState& s, Rep rep,
                    int level, const CountedAlgebra& alg);

}  // namespace screwdyn::detail

#endif  // SCREWDYN_SRC_SWEEPS_HPP_
