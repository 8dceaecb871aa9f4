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

#include "screwdyn/trajectory.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace screwdyn {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_number(const std::string& s, double& v) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = b + s.size();
  if (*b == '+') ++b;
  const auto r = std::from_chars(b, e, v);
  return r.ec == std::errc() && r.ptr == e;
}

}  // namespace

int TrajectoryTable::order() const {
  if (qdd.rows() > 0) return 2;
  if (qd.rows() > 0) return 1;
  return 0;
}

JointState TrajectoryTable::state(int row) const {
  JointState s = JointState::zeros(n);
  s.q = q.row(row).transpose();
  if (qd.rows() > 0) s.qd = qd.row(row).transpose();
  if (qdd.rows() > 0) s.qdd = qdd.row(row).transpose();
  return s;
}

TrajectoryTable parse_trajectory(std::istream& in, int n) {
  TrajectoryTable tab;
  tab.n = n;
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  int width = -1;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const std::vector<std::string> cells = split(s);
    std::vector<double> row(cells.size());
    bool numeric = true;
    for (size_t c = 0; c < cells.size() && numeric; ++c) {
      numeric = parse_number(cells[c], row[c]);
    }
    const bool header = first && !numeric;
    first = false;
    const int w = static_cast<int>(cells.size());
    if (width < 0) {
      width = w;
      const int k = n > 0 ? (w - 1) / n : 0;
      if (n <= 0 || (w - 1) % n != 0 || k < 1 || k > 3) {
        throw DomainError("trajectory line " + std::to_string(lineno) + ": " +
                          std::to_string(w) + " columns do not match 1 + n·k for n = " +
                          std::to_string(n));
      }
    } else if (w != width) {
      throw DomainError("trajectory line " + std::to_string(lineno) + ": expected " +
                        std::to_string(width) + " columns, found " + std::to_string(w));
    }
    if (header) continue;
    if (!numeric) {
      throw DomainError("trajectory line " + std::to_string(lineno) + ": malformed number");
    }
    if (!rows.empty() && !(row[0] > rows.back()[0])) {
      throw DomainError("trajectory line " + std::to_string(lineno) +
                        ": times must be strictly increasing");
    }
    rows.push_back(std::move(row));
  }
  if (width < 0) throw DomainError("trajectory is empty");
  const int k = (width - 1) / n;
  const int m = static_cast<int>(rows.size());
  tab.t.resize(m);
  tab.q.resize(m, n);
  if (k >= 2) tab.qd.resize(m, n);
  if (k >= 3) tab.qdd.resize(m, n);
  for (int r = 0; r < m; ++r) {
    tab.t[r] = rows[r][0];
    for (int j = 0; j < n; ++j) {
      tab.q(r, j) = rows[r][1 + j];
      if (k >= 2) tab.qd(r, j) = rows[r][1 + n + j];
      if (k >= 3) tab.qdd(r, j) = rows[r][1 + 2 * n + j];
    }
  }
  return tab;
}

TrajectoryTable read_trajectory(const std::string& path, int n) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open '" + path + "'");
  return parse_trajectory(f, n);
}

std::vector<std::string> trajectory_header(int n, int order) {
  std::vector<std::string> h{"t"};
  const char* names[] = {"q", "qd", "qdd"};
  for (int k = 0; k <= order; ++k)
    for (int j = 1; j <= n; ++j) h.push_back(names[k] + std::to_string(j));
  return h;
}

void write_trajectory(std::ostream& out, const TrajectoryTable& tab) {
  const int ord = tab.order();
  write_csv_header(out, trajectory_header(tab.n, ord));
  std::vector<double> row;
  for (int r = 0; r < tab.samples(); ++r) {
    row.assign(1, tab.t[r]);
    for (int j = 0; j < tab.n; ++j) row.push_back(tab.q(r, j));
    if (ord >= 1) for (int j = 0; j < tab.n; ++j) row.push_back(tab.qd(r, j));
    if (ord >= 2) for (int j = 0; j < tab.n; ++j) row.push_back(tab.qdd(r, j));
    write_csv_row(out, row);
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv_row(std::ostream& out, const std::vector<double>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << format_double(row[i]);
  }
  out << '\n';
}

void write_csv_header(std::ostream& out, const std::vector<std::string>& cols) {
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) out << ',';
    out << cols[i];
  }
  out << '\n';
}

}  // namespace screwdyn
