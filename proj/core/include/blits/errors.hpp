// Copyright 2026 The Authors.
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

#ifndef BLITS_ERRORS_HPP_
#define BLITS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace blits {

// Bad arguments, malformed configs, and out-of-range ids. The command line
// front end maps this family to its "spec error" exit code.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

// An objective broke its contract (negative value, non-finite entry, ...).
class ContractViolationError : public std::runtime_error {
 public:
  explicit ContractViolationError(const std::string& what)
      : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed its operation-count ceiling.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what)
      : std::runtime_error(what) {}
};

// A sampler was asked for more elements than the population holds.
class InfeasibleSampleError : public std::runtime_error {
 public:
  explicit InfeasibleSampleError(const std::string& what)
      : std::runtime_error(what) {}
};

// Every singleton value is zero, so no value scale can be established.
class DegenerateObjectiveError : public std::runtime_error {
 public:
  explicit DegenerateObjectiveError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed input file. Messages carry the offending line number.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blits

#endif  // BLITS_ERRORS_HPP_
