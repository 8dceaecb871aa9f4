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

#ifndef SCREWDYN_REP_HPP_
#define SCREWDYN_REP_HPP_

#include <string>

namespace screwdyn {

// Twist representations:
//   body     measured at and resolved in the body frame
//   spatial  measured at the inertial origin, resolved in the inertial frame
//   hybrid   measured at the body origin, resolved in the inertial frame
//   mixed    body-frame angular part, hybrid linear part
enum class Rep { body, spatial, hybrid, mixed };

const char* to_string(Rep r);
// Throws DomainError for unknown names.
Rep rep_from_string(const std::string& s);

}  // namespace screwdyn

#endif  // SCREWDYN_REP_HPP_
