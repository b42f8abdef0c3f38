// Copyright 2026 The mwkc Authors
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

#ifndef MWKC_ERRORS_HPP
#define MWKC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mwkc {

//! Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Malformed schedule input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

//! A slot or vertex reference that does not exist in the input.
class UnknownReference : public Error {
 public:
  using Error::Error;
};

//! The solver was handed an instance without vertices.
class EmptyInstance : public Error {
 public:
  EmptyInstance() : Error("instance has no intervals") {}
};

//! The brute-force oracle refuses instances above its size guard.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

//! A proven structural property failed to hold; always a bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mwkc

#endif  // MWKC_ERRORS_HPP
