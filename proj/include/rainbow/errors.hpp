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

#ifndef RAINBOW_ERRORS_HPP_
#define RAINBOW_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rainbow {

// A matroid or instance description that cannot be built. `field` names the
// offending part of the description.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)), message_(what) {}

  const std::string& field() const noexcept { return field_; }
  /// The description without the field prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string field_;
  std::string message_;
};

// An operation was called with arguments that violate its premise
// (for example a dependent set passed where an independent one is required).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An element id outside the ground set.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A trail that is not even a well-formed candidate (reused source set,
// added element already in R, ...). Distinct from a trail that is well formed
// but fails the exchange properties.
class TrailStructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when the solver fails on an instance where success is guaranteed.
// Seeing this means a bug, never a property of the input.
class GuaranteeViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rainbow

#endif  // RAINBOW_ERRORS_HPP_
