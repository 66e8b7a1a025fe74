// Copyright 2026 The espwalk Authors
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

namespace espwalk {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation (n < 1, non-prime p, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested parameter has no built-in configuration (e.g. no stored
/// irreducible polynomial for that degree).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Structured input (connection set, spread) failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A textual or JSON input could not be parsed. `where()` names the location.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A precondition of the called operation does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree do not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace espwalk
