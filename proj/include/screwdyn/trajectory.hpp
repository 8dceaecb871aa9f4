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

// Trajectory tables and CSV helpers.

#ifndef SCREWDYN_TRAJECTORY_HPP_
#define SCREWDYN_TRAJECTORY_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "screwdyn/kinematics.hpp"

namespace screwdyn {

// Rows are samples. qd and qdd have zero rows when absent.
struct TrajectoryTable {
  int n = 0;
  std::vector<double> t;
  MatrixXd q, qd, qdd;

  int samples() const { return static_cast<int>(t.size()); }
  // Derivative columns present: 0 (q only), 1 (q, qd) or 2 (q, qd, qdd).
  int order() const;
  JointState state(int row) const;
};

// Columns t, q1..qn[, qd1..qdn[, qdd1..qdn]]. Lines starting with '#' and
// blank lines are skipped; a first row that is not numeric is the header.
// Throws DomainError on a column count other than 1 + n·k (k = 1..3),
// malformed numbers or times that are not strictly increasing.
TrajectoryTable parse_trajectory(std::istream& in, int n);
// Throws std::ios_base::failure if the file cannot be opened.
TrajectoryTable read_trajectory(const std::string& path, int n);

std::vector<std::string> trajectory_header(int n, int order);
void write_trajectory(std::ostream& out, const TrajectoryTable& tab);

// 17 significant digits, round-trip exact for doubles.
std::string format_double(double v);
void write_csv_row(std::ostream& out, const std::vector<double>& row);
void write_csv_header(std::ostream& out, const std::vector<std::string>& cols);

}  // namespace screwdyn

#endif  // SCREWDYN_TRAJECTORY_HPP_
