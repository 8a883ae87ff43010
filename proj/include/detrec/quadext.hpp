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

#ifndef DETREC_QUADEXT_HPP
#define DETREC_QUADEXT_HPP

#include <string>

#include "detrec/poly.hpp"

namespace detrec {

/// Exact element p + q*sqrt(d) of the real quadratic field Q(sqrt d), d
/// square-free and > 1. Irrational operands of a binary operation must share
/// d; a rational operand combines with any field.
class QuadExt {
 public:
  static constexpr long kDefaultDiscriminant = 5;

  QuadExt() : QuadExt(Rational(0)) {}
  QuadExt(const Rational& rational_part,  // NOLINT: rationals embed
          const Rational& radical_part = Rational(0),
          long discriminant = kDefaultDiscriminant);
  QuadExt(long value) : QuadExt(Rational(value)) {}  // NOLINT

  /// (1 + sqrt 5) / 2
  static QuadExt phi();
  /// (1 - sqrt 5) / 2
  static QuadExt psi();
  /// sqrt(d)
  static QuadExt sqrt_of(long discriminant);

  const Rational& rational_part() const noexcept { return rational_; }
  const Rational& radical_part() const noexcept { return radical_; }
  long discriminant() const noexcept { return d_; }

  bool is_zero() const noexcept { return sgn(rational_) == 0 && sgn(radical_) == 0; }
  bool is_rational() const noexcept { return sgn(radical_) == 0; }
  /// Rational and with denominator 1.
  bool is_integer() const noexcept;

  /// p - q*sqrt(d)
  QuadExt conjugate() const { return QuadExt(rational_, -radical_, d_); }
  /// p^2 - d*q^2
  Rational norm() const;
  /// Throws InvalidArgument on zero.
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs) { return *this *= rhs.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(const QuadExt& a) {
    return QuadExt(-a.rational_, -a.radical_, a.d_);
  }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.rational_ == b.rational_ && a.radical_ == b.radical_ &&
           (a.d_ == b.d_ || a.is_rational());
  }

  /// "3/2 + 1/2*sqrt(5)"; a rational value prints without the radical term.
  std::string to_string() const;

 private:
  /// Rationals belong to every field; two irrational values must share d.
  void join_field(const QuadExt& other);

  Rational rational_;
  Rational radical_;
  long d_;
};

QuadExt quad_pow(const QuadExt& z, unsigned n);

}  // namespace detrec

#endif  // DETREC_QUADEXT_HPP
