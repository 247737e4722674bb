// Copyright 2026 The treeshift Authors
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

namespace treeshift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed user input; the CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : InputError(what + " (row " + std::to_string(row + 1) + ", column " +
                   std::to_string(column + 1) + ")"),
        row_(row),
        column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

class BadChar : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonSquare : public InputError {
 public:
  using InputError::InputError;
};

class RowOrColumnZero : public InputError {
 public:
  using InputError::InputError;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class UndefinedForReducible : public Error {
 public:
  using Error::Error;
};

class EmptySuccessorSet : public Error {
 public:
  using Error::Error;
};

class TooLarge : public InputError {
 public:
  using InputError::InputError;
};

class DepthExceeded : public InputError {
 public:
  using InputError::InputError;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class ComplexityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace treeshift
