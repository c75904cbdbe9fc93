// Copyright 2026 The hbound Authors.
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

#ifndef HBOUND_ERROR_HPP_
#define HBOUND_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbound {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed sparse-monomial text. line() is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Argument of the wrong length or outside the documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed its configured evaluation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Cholesky of the Gram matrix failed; the pencil is numerically indefinite.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

}  // namespace hbound

#endif  // HBOUND_ERROR_HPP_
