// Copyright 2026 The glad Authors
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

#ifndef GLAD_ERRORS_HPP
#define GLAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glad {

/// Base class for all errors raised by the planning stack.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Scenario ingestion.
class ParseError : public Error {
 public:
  using Error::Error;
};
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Map queries.
class UnknownLane : public Error {
 public:
  using Error::Error;
};
class StationOutOfRange : public Error {
 public:
  using Error::Error;
};

// Behavior planning.
class InapplicableBehavior : public Error {
 public:
  using Error::Error;
};

// Motion planning.
class InconsistentPlan : public Error {
 public:
  using Error::Error;
};
class MergeBeyondLaneEnd : public Error {
 public:
  using Error::Error;
};
class PoiBehindVehicle : public Error {
 public:
  using Error::Error;
};

// Service layer.
class EmptyRequest : public Error {
 public:
  using Error::Error;
};

// Optimization and execution.
class InfeasibleRequest : public Error {
 public:
  using Error::Error;
};
class PoseMismatch : public Error {
 public:
  using Error::Error;
};
class NonTermination : public Error {
 public:
  using Error::Error;
};

// Safety estimation.
class OutOfRange : public Error {
 public:
  using Error::Error;
};
class DegenerateBaseRate : public Error {
 public:
  using Error::Error;
};

// Reporting.
class EmptyResults : public Error {
 public:
  using Error::Error;
};

}  // namespace glad

#endif  // GLAD_ERRORS_HPP
