// Copyright 2026 The orekit Authors.
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

#ifndef OREKIT_ERROR_HPP
#define OREKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orekit {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different coefficient rings or contexts.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search or term expansion would exceed its configured ceiling.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction data: reducible modulus, non-homomorphism, schema violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position()` is a 0-based offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace orekit

#endif  // OREKIT_ERROR_HPP
