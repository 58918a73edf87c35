// Copyright 2026 The Emolex Authors.
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

#ifndef EMOLEX_ERROR_HPP_
#define EMOLEX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emolex {

/// Base class for every error raised because of bad user input. The CLI maps
/// these to exit code 1; anything else escaping is an internal error.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition (negative weight, value out of
/// range, wrong scale, empty string where one is required).
class InvalidInput : public InputError {
 public:
  using InputError::InputError;
};

/// A malformed line in a lexicon or corpus file.
class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// A statistic cannot be computed from the data given (too few samples,
/// zero variance everywhere).
class InsufficientData : public InputError {
 public:
  using InputError::InputError;
};

/// Non-fatal diagnostic collected while reading a file.
struct Warning {
  std::size_t line = 0;
  std::string message;
};

}  // namespace emolex

#endif  // EMOLEX_ERROR_HPP_
