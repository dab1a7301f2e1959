// Copyright 2026 The qscocycle Authors
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

namespace qsc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or vector lengths are inconsistent.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (negative time, bad rate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The computation cannot be carried out reliably (overflow, singular
/// resolvent, degenerate Gram matrix, non-finite result).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit would be exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed persisted input (JSON syntax, missing or mistyped field).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsc
