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

#ifndef DETREC_POLY_HPP
#define DETREC_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace detrec {

using Integer = mpz_class;
using Rational = mpq_class;

/*
  Sparse multivariate polynomials with arbitrary-precision integer
  coefficients.

  A Monomial stores (variable, exponent) pairs sorted by variable with every
  exponent positive; the constant monomial is the empty list. Monomials are
  ordered graded-lexicographically: total degree first, then the exponent of
  x0, then x1, and so on. A MultiPoly keeps its terms in a map sorted by that
  order, descending, so the leading term is always the first entry and the
  canonical text form falls out of iteration order.
*/

class Monomial {
 public:
  using Variable = std::uint32_t;
  using Exponent = std::uint32_t;
  using Entry = std::pair<Variable, Exponent>;

  Monomial() = default;

  /// Builds from arbitrary (variable, exponent) pairs; zero exponents are
  /// dropped and repeated variables are merged.
  explicit Monomial(std::vector<Entry> entries);

  static Monomial variable(Variable var, Exponent exp = 1);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_constant() const noexcept { return entries_.empty(); }
  std::uint64_t degree() const noexcept;
  Exponent exponent(Variable var) const noexcept;

  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& rhs) const;
  /// rhs must divide *this.
  Monomial operator/(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) noexcept;

 private:
  std::vector<Entry> entries_;
};

/// Maps variable indices to printable names.
class VariableNames {
 public:
  /// x0, x1, x2, ...
  VariableNames() = default;
  explicit VariableNames(std::vector<std::string> names,
                         std::string fallback_prefix = "x")
      : names_(std::move(names)), prefix_(std::move(fallback_prefix)) {}

  /// a, b: the naming used for the S and A matrix families.
  static VariableNames ab() { return VariableNames({"a", "b"}); }

  std::string operator()(std::size_t var) const;

 private:
  std::vector<std::string> names_;
  std::string prefix_ = "x";
};

class QuadExt;

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Integer, std::greater<Monomial>>;

  MultiPoly() = default;
  MultiPoly(const Integer& c);  // NOLINT: integers embed into the ring
  MultiPoly(long c) : MultiPoly(Integer(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(Integer(c)) {}  // NOLINT
  MultiPoly(const Monomial& m, const Integer& c);
  MultiPoly(std::initializer_list<std::pair<Monomial, Integer>> terms);

  static MultiPoly variable(Monomial::Variable var) {
    return MultiPoly(Monomial::variable(var), Integer(1));
  }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of m, zero when absent.
  Integer coefficient(const Monomial& m) const;
  /// First term in graded-lex descending order. Requires !is_zero().
  const TermMap::value_type& leading_term() const;
  std::uint64_t total_degree() const noexcept;
  /// Number of variable slots touched: 1 + largest variable index, or 0.
  std::size_t variable_count() const noexcept;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(MultiPoly a);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Canonical text form, e.g. "x0^2 + 2*x0*x1 - x1^2".
  std::string to_string(const VariableNames& names = {}) const;

 private:
  void add_term(const Monomial& m, const Integer& c);

  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Returns q with q * den == num. Throws NotDivisible when no such polynomial
/// exists and InvalidArgument when den is zero.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

/// Evaluates p exactly in Q(sqrt d). Throws UnassignedVariable when a variable
/// of p has no value.
QuadExt substitute(const MultiPoly& p,
                   const std::map<Monomial::Variable, QuadExt>& assignment);

std::string to_string(const Integer& value);

}  // namespace detrec

#endif  // DETREC_POLY_HPP
