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

// Per-sample kernels over many independent states sharing one model.
// Results are in input order for both execution modes; the parallel mode
// splits samples across OpenMP threads.

#ifndef SCREWDYN_BATCH_HPP_
#define SCREWDYN_BATCH_HPP_

#include <vector>

#include "screwdyn/chain_model.hpp"
#include "screwdyn/kinematics.hpp"

namespace screwdyn {

enum class Exec { serial, parallel };

// SCREWDYN_THREADS if set to a positive integer, else the OpenMP default.
int batch_threads();

std::vector<std::vector<Pose>> batch_fk(const ChainModel& m,
                                        const std::vector<VectorXd>& q,
                                        Exec exec = Exec::parallel);
std::vector<std::vector<Screw>> batch_twists(const ChainModel& m,
                                             const std::vector<JointState>& s,
                                             Rep rep, Exec exec = Exec::parallel);
std::vector<MatrixXd> batch_jacobian(const ChainModel& m,
                                     const std::vector<VectorXd>& q, Rep rep,
                                     Exec exec = Exec::parallel);
// rep ∈ {body, spatial, hybrid, mixed}, see idyn.
std::vector<VectorXd> batch_idyn(const ChainModel& m,
                                 const std::vector<JointState>& s, Rep rep,
                                 bool gravity = true,
                                 Exec exec = Exec::parallel);

}  // namespace screwdyn

#endif  // SCREWDYN_BATCH_HPP_
