// Copyright 2026 The hadamard-toolkit Authors
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

#ifndef HADAMARD_ERRORS_HPP
#define HADAMARD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hadamard {

/// Root of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (grammar, names, shapes, rings).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// The chosen prime divides a denominator; the caller must pick another prime.
class BadPrime : public Error {
 public:
  explicit BadPrime(unsigned long long p)
      : Error("bad prime " + std::to_string(p)), prime_(p) {}
  unsigned long long prime() const noexcept { return prime_; }

 private:
  unsigned long long prime_;
};

/// A configured resource cap was hit. Never accompanied by a partial answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised by complete_to_invertible when the input lacks full column rank.
class CannotComplete : public Error {
 public:
  using Error::Error;
};

class UndefinedProduct : public Error {
 public:
  using Error::Error;
};

class DegeneratePresentation : public Error {
 public:
  using Error::Error;
};

}  // namespace hadamard

#endif  // HADAMARD_ERRORS_HPP
