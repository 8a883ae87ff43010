// Copyright 2026 The detrec Authors.
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

#ifndef DETREC_ERRORS_HPP
#define DETREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detrec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size parameter exceeds the enumeration or evaluation cap of an operation.
class TooLarge : public Error {
 public:
  TooLarge(const std::string& what, long long value, long long cap)
      : Error(what + " = " + std::to_string(value) + " exceeds cap " +
              std::to_string(cap)),
        value_(value),
        cap_(cap) {}

  long long value() const noexcept { return value_; }
  long long cap() const noexcept { return cap_; }

 private:
  long long value_;
  long long cap_;
};

/// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionTooSmall : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidCycleType : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnassignedVariable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DiscriminantMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Polynomial division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A division inside fraction-free elimination was not exact. Never raised on
/// valid input; seeing it means a bug.
class ExactDivisionFailure : public Error {
 public:
  using Error::Error;
};

/// Throws TooLarge when value > cap.
inline void check_cap(const char* what, long long value, long long cap) {
  if (value > cap) throw TooLarge(what, value, cap);
}

}  // namespace detrec

#endif  // DETREC_ERRORS_HPP
