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

#ifndef SCREWDYN_TOOLS_COMMANDS_HPP_
#define SCREWDYN_TOOLS_COMMANDS_HPP_

#include <string>
#include <vector>

namespace screwdyn::cli {

enum ExitCode { kOk = 0, kIo = 1, kValidation = 2, kNumerical = 3 };

struct RunConfig {
  std::string model;
  std::string traj;
  std::string rep = "body";
  std::string out = "-";
  std::string report;
  std::string torques;
  std::string form = "state";
  std::string variant = "standard";
  std::string q;    // comma-separated joint values
  std::string q0, qd0;
  std::string reps = "body,spatial,hybrid";
  std::string sizes = "2,4,10";
  double h = 1e-3;
  double T = 1.0;
  int trials = 200;
  bool twists = false;
  bool no_gravity = false;
};

int cmd_check(const RunConfig& c);
int cmd_fk(const RunConfig& c);
int cmd_jacobian(const RunConfig& c);
int cmd_idyn(const RunConfig& c);
int cmd_fdyn(const RunConfig& c);
int cmd_simulate(const RunConfig& c);
int cmd_christoffel(const RunConfig& c);
int cmd_benchmark(const RunConfig& c);

}  // namespace screwdyn::cli

#endif  // SCREWDYN_TOOLS_COMMANDS_HPP_
