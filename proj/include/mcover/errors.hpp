// Copyright 2026 The mcover Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcover {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `position()` is a byte offset for
/// graph6 input and a 1-based line number for line-oriented input.
class ParseError : public Error {
 public:
  enum class Unit { kByte, kLine };

  ParseError(const std::string& what, std::size_t position, Unit unit)
      : Error(what + (unit == Unit::kByte ? " (at byte offset " : " (at line ") +
              std::to_string(position) + ")"),
        position_(position),
        unit_(unit) {}

  std::size_t position() const noexcept { return position_; }
  Unit unit() const noexcept { return unit_; }

 private:
  std::size_t position_;
  Unit unit_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exponential routine was asked to run past its desk-scale guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical claim failed on a concrete graph. Carries the property name
/// and the offending graph in graph6 form.
class Refutation : public Error {
 public:
  Refutation(std::string property, std::string graph6, const std::string& detail)
      : Error("refutation of " + property + " on graph " + graph6 + ": " + detail),
        property_(std::move(property)),
        graph6_(std::move(graph6)) {}

  const std::string& property() const noexcept { return property_; }
  const std::string& graph6() const noexcept { return graph6_; }

 private:
  std::string property_;
  std::string graph6_;
};

/// Broken internal invariant (a bug, not a property of the input).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcover
