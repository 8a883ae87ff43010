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

#include "detrec/quadext.hpp"

#include "detrec/errors.hpp"

namespace detrec {
namespace {

bool is_square_free(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

QuadExt::QuadExt(const Rational& rational_part, const Rational& radical_part,
                 long discriminant)
    : rational_(rational_part), radical_(radical_part), d_(discriminant) {
  if (d_ < 2 || !is_square_free(d_)) {
    throw InvalidArgument("QuadExt: discriminant " + std::to_string(d_) +
                          " is not a square-free integer > 1");
  }
  rational_.canonicalize();
  radical_.canonicalize();
}

QuadExt QuadExt::phi() { return QuadExt(Rational(1, 2), Rational(1, 2), 5); }

QuadExt QuadExt::psi() { return QuadExt(Rational(1, 2), Rational(-1, 2), 5); }

QuadExt QuadExt::sqrt_of(long discriminant) {
  return QuadExt(Rational(0), Rational(1), discriminant);
}

bool QuadExt::is_integer() const noexcept {
  return is_rational() && rational_.get_den() == 1;
}

Rational QuadExt::norm() const {
  return rational_ * rational_ - Rational(d_) * radical_ * radical_;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw InvalidArgument("QuadExt: inverse of zero");
  // d square-free and > 1 makes the norm vanish only at zero.
  const Rational n = norm();
  return QuadExt(rational_ / n, -radical_ / n, d_);
}

void QuadExt::join_field(const QuadExt& other) {
  if (d_ == other.d_ || other.is_rational()) return;
  if (is_rational()) {
    d_ = other.d_;
  } else {
    throw DiscriminantMismatch("QuadExt: sqrt(" + std::to_string(d_) +
                               ") mixed with sqrt(" +
                               std::to_string(other.d_) + ")");
  }
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  join_field(rhs);
  rational_ += rhs.rational_;
  radical_ += rhs.radical_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  join_field(rhs);
  rational_ -= rhs.rational_;
  radical_ -= rhs.radical_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  join_field(rhs);
  Rational p = rational_ * rhs.rational_ + Rational(d_) * radical_ * rhs.radical_;
  Rational q = rational_ * rhs.radical_ + radical_ * rhs.rational_;
  rational_ = std::move(p);
  radical_ = std::move(q);
  return *this;
}

std::string QuadExt::to_string() const {
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (is_rational()) return rational_.get_str();
  std::string out;
  if (sgn(rational_) != 0) out = rational_.get_str();
  const bool negative = sgn(radical_) < 0;
  const Rational magnitude = abs(radical_);
  if (out.empty()) {
    if (negative) out = "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (magnitude != 1) out += magnitude.get_str() + "*";
  return out + root;
}

QuadExt quad_pow(const QuadExt& z, unsigned n) {
  QuadExt result(Rational(1), Rational(0), z.discriminant());
  QuadExt square = z;
  while (n > 0) {
    if (n & 1U) result *= square;
    n >>= 1U;
    if (n > 0) square *= square;
  }
  return result;
}

}  // namespace detrec
