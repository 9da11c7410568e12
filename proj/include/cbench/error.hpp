// Copyright 2026 The corruption-bench Authors
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

namespace cbench {

/// Base of every error thrown by the toolkit. The CLI maps subclasses onto
/// its exit codes (see exit_code()).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument value, unknown kind, violated precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// File readable but not in a supported encoding.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Inputs are well formed but inconsistent (missing predictions, tampered
/// outputs, incomplete tables).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A ratio whose baseline denominator is zero or negative.
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

/// Malformed line in a line-oriented input.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// CLI exit status: 1 validation failure, 2 I/O or format failure, 3
/// parameter error (including undefined measures). Anything else is 3.
inline int exit_code(const std::exception& e) noexcept {
  if (dynamic_cast<const ValidationError*>(&e)) return 1;
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const FormatError*>(&e)) return 2;
  return 3;
}

}  // namespace cbench
