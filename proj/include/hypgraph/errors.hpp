// Copyright 2026 The hypgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPGRAPH_ERRORS_HPP
#define HYPGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypgraph {

// Invalid parameters, malformed files, bad configs. CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph or config files; carries the offending line number.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Quadruple evaluation across different connected components.
class CrossComponentError : public InputError {
 public:
  using InputError::InputError;
};

// Problem size exceeds a configured limit (matrix bytes, distance cell
// range, naive vertex cap). CLI exit code 2.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal invariant, e.g. a failed diameter bound check.
// CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hypgraph

#endif  // HYPGRAPH_ERRORS_HPP
