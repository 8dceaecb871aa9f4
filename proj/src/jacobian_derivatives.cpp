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

#include "screwdyn/jacobian_derivatives.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace screwdyn {

namespace {

int slot(Rep rep) {
  switch (rep) {
    case Rep::body: return 0;
    case Rep::spatial: return 1;
    case Rep::hybrid: return 2;
    case Rep::mixed: break;
  }
  throw DomainError("Jacobian derivatives are not defined for the mixed representation");
}

bool strict_ancestor(const ChainModel& m, int a, int b) {
  return a != b && m.is_ancestor_or_self(a, b);
}

}  // namespace

JacobianDerivatives::JacobianDerivatives(const ChainModel& m, VectorXd q)
    : m_(m), q_(std::move(q)) {
  if (q_.size() != m.n()) throw DomainError("q has wrong length");
}

const SystemJacobian& JacobianDerivatives::jac(Rep rep) const {
  auto& c = cache_[slot(rep)];
  if (!c) c = jacobian(m_, q_, rep);
  return *c;
}

void JacobianDerivatives::check_index(int v) const {
  if (v < 0 || v >= m_.n()) {
    throw DomainError("index " + std::to_string(v) + " out of range [0, " +
                      std::to_string(m_.n()) + ")");
  }
}

Screw JacobianDerivatives::column(Rep rep, int i, int j) const {
  check_index(i);
  check_index(j);
  return jac(rep).column(i, j);
}

Screw JacobianDerivatives::partial(Rep rep, int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  slot(rep);
  if (!m_.is_ancestor_or_self(j, i)) return Screw();
  const SystemJacobian& J = jac(rep);
  switch (rep) {
    case Rep::body:
      if (strict_ancestor(m_, j, k) && m_.is_ancestor_or_self(k, i)) {
        return lie_bracket(J.column(i, j), J.column(i, k));
      }
      return Screw();
    case Rep::spatial:
      if (strict_ancestor(m_, k, j)) {
        return lie_bracket(J.column(k, k), J.column(j, j));
      }
      return Screw();
    case Rep::hybrid:
      return hybrid_d(i, j, {k});
    case Rep::mixed:
      break;
  }
  return Screw();
}

Screw JacobianDerivatives::partial_n(Rep rep, int i, int j,
                                     std::span<const int> idx) const {
  check_index(i);
  check_index(j);
  for (int k : idx) check_index(k);
  if (rep != Rep::body && rep != Rep::spatial) {
    throw DomainError("higher-order Jacobian partials need the body or spatial representation");
  }
  if (!m_.is_ancestor_or_self(j, i)) return Screw();
  const SystemJacobian& J = jac(rep);
  std::vector<int> beta(idx.begin(), idx.end());
  if (rep == Rep::body) {
    // j ≺ β₁ ≼ … ≼ β_ν ≼ i
    std::sort(beta.begin(), beta.end());
    for (int b : beta) {
      if (!strict_ancestor(m_, j, b) || !m_.is_ancestor_or_self(b, i)) {
        return Screw();
      }
    }
    Screw x = J.column(i, j);
    for (int b : beta) x = lie_bracket(x, J.column(i, b));
    return x;
  }
  // Spatial: β_ν ≼ … ≼ β₁ ≺ j, innermost bracket with the largest index.
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  for (int b : beta) {
    if (!strict_ancestor(m_, b, j)) return Screw();
  }
  Screw x = J.column(j, j);
  for (int b : beta) x = lie_bracket(J.column(b, b), x);
  return x;
}

// Leibniz expansion of ∂_{k,S} J_ij where ∂_k J_ij = L(J_ik, J_ij) with the
// bilinear, configuration-independent L(x, y) = [x^ω, y] + [y, x]·(j ≺ k).
Screw JacobianDerivatives::hybrid_d(int i, int j,
                                    const std::vector<int>& idx) const {
  if (!m_.is_ancestor_or_self(j, i)) return Screw();
  const SystemJacobian& J = jac(Rep::hybrid);
  if (idx.empty()) return J.column(i, j);
  const int k = idx.front();
  if (!m_.is_ancestor_or_self(k, i)) return Screw();
  const bool convective = strict_ancestor(m_, j, k);
  const std::vector<int> rest(idx.begin() + 1, idx.end());
  const int nr = static_cast<int>(rest.size());
  Screw out;
  for (unsigned mask = 0; mask < (1u << nr); ++mask) {
    std::vector<int> a, b;
    for (int t = 0; t < nr; ++t) ((mask >> t) & 1u ? a : b).push_back(rest[t]);
    const Screw x = hybrid_d(i, k, a);
    const Screw y = hybrid_d(i, j, b);
    out += lie_bracket(x.angular_part(), y);
    if (convective) out += lie_bracket(y, x);
  }
  return out;
}

Screw JacobianDerivatives::hybrid_partial2(int i, int j, int k, int r) const {
  check_index(i);
  check_index(j);
  check_index(k);
  check_index(r);
  return hybrid_d(i, j, {k, r});
}

Screw jacobian_partial(const ChainModel& m, const VectorXd& q, Rep rep, int i,
                       int j, int k) {
  return JacobianDerivatives(m, q).partial(rep, i, j, k);
}

Screw jacobian_partial_n(const ChainModel& m, const VectorXd& q, Rep rep, int i,
                         int j, std::span<const int> idx) {
  return JacobianDerivatives(m, q).partial_n(rep, i, j, idx);
}

std::vector<Screw> spatial_jacobian_dot(const ChainModel& m, const VectorXd& q,
                                        const VectorXd& qd) {
  const KinematicsCache c = twists(m, q, qd, Rep::spatial);
  const SystemJacobian J = jacobian(m, q, Rep::spatial);
  std::vector<Screw> out(m.n());
  for (int j = 0; j < m.n(); ++j) out[j] = lie_bracket(c.twists[j], J.column(j, j));
  return out;
}

}  // namespace screwdyn
