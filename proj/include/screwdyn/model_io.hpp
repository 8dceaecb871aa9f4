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

// JSON model files.
//
//   {
//     "name": "pendulum",
//     "gravity": [0, 0, -9.80665],
//     "bodies": [
//       { "parent": 0, "mass": 1.0, "com": [0, 0, -1],
//         "inertia_com": [[0.1, 0, 0], [0, 0.1, 0], [0, 0, 0.01]],
//         "ref_pose": { "rotation": [[1,0,0],[0,1,0],[0,0,1]],
//                       "translation": [0, 0, 0] },
//         "joint": { "type": "revolute", "axis": [0, 1, 0],
//                    "point": [0, 0, 0], "frame": "spatial" } }
//     ]
//   }
//
// Body ids are 1-based by position and parent 0 is the ground. `ref_pose`,
// `point`, `frame` ("spatial" by default), `gravity` and `name` are optional;
// `pitch` is required for helical joints. A joint may additionally list
// `screw_spatial` and/or `screw_body` (6 numbers, angular first) which are
// cross-checked against the screws derived from axis and point.

#ifndef SCREWDYN_MODEL_IO_HPP_
#define SCREWDYN_MODEL_IO_HPP_

#include <string>
#include <string_view>

#include "screwdyn/chain_model.hpp"

namespace screwdyn {

// Throws ModelError carrying every diagnostic found.
ChainModel parse_model(std::string_view text);
// Throws std::ios_base::failure if the file cannot be read.
ChainModel load_model(const std::string& path);

std::string serialize_model(const ChainModel& model);

}  // namespace screwdyn

#endif  // SCREWDYN_MODEL_IO_HPP_
