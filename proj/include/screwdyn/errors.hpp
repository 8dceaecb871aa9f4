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

#ifndef SCREWDYN_ERRORS_HPP_
#define SCREWDYN_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace screwdyn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a kernel (log at π, dexp⁻¹ singularity,
// bad index, representation mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Factorization failure or non-finite state.
class NumericalError : public Error {
 public:
  using Error::Error;
};

struct Diagnostic {
  std::string path;  // e.g. "bodies[2].joint.axis"
  std::string message;
  int line = 0;      // 1-based, 0 when unknown
  int column = 0;

  std::string to_string() const;
};

class ModelError : public Error {
 public:
  explicit ModelError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

}  // namespace screwdyn

#endif  // SCREWDYN_ERRORS_HPP_
