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

#ifndef DETREC_SCALAR_HPP
#define DETREC_SCALAR_HPP

#include <concepts>
#include <string>

#include "detrec/errors.hpp"
#include "detrec/poly.hpp"
#include "detrec/quadext.hpp"

namespace detrec {

// The commutative rings determinant and recurrence code is written against:
// Integer, MultiPoly and QuadExt. ScalarTraits supplies what the operators do
// not: the constants, a zero test, exact division and printing.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static Integer exact_divide(const Integer& num, const Integer& den) {
    if (sgn(den) == 0 ||
        !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
      throw ExactDivisionFailure("integer division " + num.get_str() + " / " +
                                 den.get_str() + " is not exact");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  }
  static std::string to_string(const Integer& x, const VariableNames& = {}) {
    return x.get_str();
  }
};

template <>
struct ScalarTraits<MultiPoly> {
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return MultiPoly(1); }
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
    try {
      return detrec::exact_divide(num, den);
    } catch (const NotDivisible& e) {
      throw ExactDivisionFailure(e.what());
    }
  }
  static std::string to_string(const MultiPoly& x,
                               const VariableNames& names = {}) {
    return x.to_string(names);
  }
};

template <>
struct ScalarTraits<QuadExt> {
  static QuadExt zero() { return QuadExt(0); }
  static QuadExt one() { return QuadExt(1); }
  static bool is_zero(const QuadExt& x) { return x.is_zero(); }
  static QuadExt exact_divide(const QuadExt& num, const QuadExt& den) {
    if (den.is_zero()) throw ExactDivisionFailure("QuadExt division by zero");
    return num / den;
  }
  static std::string to_string(const QuadExt& x, const VariableNames& = {}) {
    return x.to_string();
  }
};

template <class S>
concept Scalar = std::copyable<S> && requires(const S& a, const S& b) {
  { S(a + b) };
  { S(a - b) };
  { S(a * b) };
  { S(-a) };
  { a == b } -> std::convertible_to<bool>;
  { ScalarTraits<S>::zero() } -> std::same_as<S>;
  { ScalarTraits<S>::one() } -> std::same_as<S>;
  { ScalarTraits<S>::is_zero(a) } -> std::same_as<bool>;
  { ScalarTraits<S>::exact_divide(a, b) } -> std::same_as<S>;
};

template <Scalar S>
std::string scalar_to_string(const S& x, const VariableNames& names = {}) {
  return ScalarTraits<S>::to_string(x, names);
}

}  // namespace detrec

#endif  // DETREC_SCALAR_HPP
