// Copyright 2026 The hkstar Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hkstar {

/// Malformed tree or forest text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A caller broke an operation's input contract (bad arity, set outside the
/// map's domain, ...). `condition()` names the violated requirement.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string condition, const std::string& what)
      : std::invalid_argument(condition + ": " + what), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// An iteration-boundary monitor tripped inside one of the maps. This is a
/// finding, never an input problem.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string condition, const std::string& what)
      : std::logic_error(condition + ": " + what), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

}  // namespace hkstar
