// Copyright 2026 The spinde Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace spinde {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Array or matrix dimensions that do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed input values (non-finite numbers, bad spins, schema violations).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A valid request the implementation deliberately does not support, e.g. a
// third-order derivative of a radial basis or too many spins to enumerate.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A solver backend failed to produce a result.
class BackendError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinde
