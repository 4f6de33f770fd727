// Copyright 2026 The sublocal Authors
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

namespace sublocal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a mathematical precondition (not Hermitian, not a
/// channel, parameter bound exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A construction that should succeed by theory failed numerically.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sublocal
