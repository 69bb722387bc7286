// Copyright 2026 The prefcomp Authors
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

#ifndef PREFCOMP_ERROR_HPP
#define PREFCOMP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefcomp {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value outside the carrier of a semiring.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation was called on input that violates its contract
// (improper CP-net, cyclic graph, incomplete assignment, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Ill-formed model data (unknown feature, duplicate value, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace prefcomp

#endif  // PREFCOMP_ERROR_HPP
