// Copyright 2026 The nsgroup Authors
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

#ifndef NSGROUP_ERRORS_HPP_
#define NSGROUP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nsgroup {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A table failed one of the group axioms. The message names the axiom and a
// witnessing element tuple.
class NotAGroup : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

// Raised by the isomorphism search when an input exceeds the iso-test cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

// An ElementSet was combined with a set or group it does not belong to.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A property that the underlying mathematics guarantees did not hold. This
// always indicates a bug in the library, never bad input.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nsgroup

#endif  // NSGROUP_ERRORS_HPP_
