// Copyright 2026 The zerosum Authors
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

#ifndef ZEROSUM_CORE_ERROR_HPP_
#define ZEROSUM_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace zerosum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group or sequence text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arity mismatch, group mismatch, invalid modulus and similar misuse.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured size cap (group order, length, budget) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain, e.g. E(S) for |S| < D(G) - 1.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A postcondition the library itself guarantees did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zerosum

#endif  // ZEROSUM_CORE_ERROR_HPP_
