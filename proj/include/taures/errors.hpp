// Copyright 2026 The taures Authors.
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

#ifndef TAURES_ERRORS_HPP
#define TAURES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace taures {

/// Error categories. Each maps to a stable diagnostic prefix and CLI exit code.
enum class ErrorKind {
  kArithmetic,   // division by zero, non-invertible scalar
  kDimension,    // shape mismatch
  kDomain,       // argument outside the supported domain
  kParse,        // manifest / expression syntax or semantics
  kValidation,   // Anderson module axioms violated
  kConvergence,  // k1 search exhausted its cap
  kPrecision,    // precision escalation exhausted or coefficient below floor
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ArithmeticError : public Error {
 public:
  explicit ArithmeticError(const std::string& what)
      : Error(ErrorKind::kArithmetic, what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::kDimension, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::kConvergence, what) {}
};

/// Raised when a coefficient below a series' precision floor is requested,
/// or when adaptive precision escalation gives up.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what)
      : Error(ErrorKind::kPrecision, what) {}
};

/// Syntax or semantic error in textual input, with a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::kParse, what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Stable machine-readable prefix, e.g. "error[parse]".
std::string error_prefix(ErrorKind kind);

}  // namespace taures

#endif  // TAURES_ERRORS_HPP
