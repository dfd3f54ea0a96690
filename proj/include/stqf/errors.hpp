// Copyright 2026 The stqf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stqf {

// Malformed textual or JSON input. `where` names the offending position
// (a character offset or a JSON pointer such as "/diag/1").
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// Operands whose shapes do not fit together (dimension mismatch, mixed
// semifields, out-of-range indices).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An algebraic precondition failed: the input is well-formed but the
// requested operation is not defined for it. `rule` names the violated
// result, e.g. "unique-base theorem" or "companion condition".
class PreconditionError : public std::logic_error {
 public:
  PreconditionError(std::string rule, const std::string& what)
      : std::logic_error(what), rule_(std::move(rule)) {}
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

}  // namespace stqf
