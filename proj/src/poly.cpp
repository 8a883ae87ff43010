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

#include "detrec/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "detrec/errors.hpp"
#include "detrec/quadext.hpp"

namespace detrec {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [var, exp] : entries) {
    if (exp == 0) continue;
    if (!entries_.empty() && entries_.back().first == var) {
      entries_.back().second += exp;
    } else {
      entries_.emplace_back(var, exp);
    }
  }
}

Monomial Monomial::variable(Variable var, Exponent exp) {
  return Monomial({{var, exp}});
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

Monomial::Exponent Monomial::exponent(Variable var) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  return (it != entries_.end() && it->first == var) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (const auto& [var, exp] : entries_) {
    if (other.exponent(var) < exp) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + rhs.entries_.size());
  auto a = entries_.begin();
  auto b = rhs.entries_.begin();
  while (a != entries_.end() || b != rhs.entries_.end()) {
    if (b == rhs.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  assert(rhs.divides(*this));
  Monomial out;
  for (const auto& [var, exp] : entries_) {
    Exponent left = exp - rhs.exponent(var);
    if (left > 0) out.entries_.emplace_back(var, left);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    // The smaller variable index carries the larger weight in lex order.
    if (i->first != j->first) {
      return i->first < j->first ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != a.entries_.end()) return std::strong_ordering::greater;
  if (j != b.entries_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ----------------------------------------------------------- VariableNames

std::string VariableNames::operator()(std::size_t var) const {
  if (var < names_.size()) return names_[var];
  return prefix_ + std::to_string(var);
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Integer& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Integer& c) {
  if (sgn(c) != 0) terms_.emplace(m, c);
}

MultiPoly::MultiPoly(std::initializer_list<std::pair<Monomial, Integer>> terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
  assert(!terms_.empty());
  return *terms_.begin();
}

std::uint64_t MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::size_t MultiPoly::variable_count() const noexcept {
  std::size_t count = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.is_constant()) {
      count = std::max<std::size_t>(count, m.entries().back().first + 1);
    }
  }
  return count;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::string MultiPoly::to_string(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Integer magnitude = abs(c);
    if (m.is_constant()) {
      out << magnitude.get_str();
      continue;
    }
    bool need_star = false;
    if (magnitude != 1) {
      out << magnitude.get_str();
      need_star = true;
    }
    for (const auto& [var, exp] : m.entries()) {
      if (need_star) out << '*';
      out << names(var);
      if (exp != 1) out << '^' << exp;
      need_star = true;
    }
  }
  return out.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1);
  MultiPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw InvalidArgument("exact_divide: division by zero");
  const auto& [den_mono, den_coef] = den.leading_term();
  MultiPoly quotient;
  MultiPoly remainder = num;
  while (!remainder.is_zero()) {
    const auto& [rem_mono, rem_coef] = remainder.leading_term();
    if (!den_mono.divides(rem_mono) || !mpz_divisible_p(rem_coef.get_mpz_t(),
                                                       den_coef.get_mpz_t())) {
      throw NotDivisible("exact_divide: " + num.to_string() +
                         " is not divisible by " + den.to_string());
    }
    Integer coef;
    mpz_divexact(coef.get_mpz_t(), rem_coef.get_mpz_t(), den_coef.get_mpz_t());
    const MultiPoly step(rem_mono / den_mono, coef);
    quotient += step;
    remainder -= step * den;
  }
  return quotient;
}

QuadExt substitute(const MultiPoly& p,
                   const std::map<Monomial::Variable, QuadExt>& assignment) {
  long d = QuadExt::kDefaultDiscriminant;
  if (!assignment.empty()) d = assignment.begin()->second.discriminant();
  QuadExt total(Rational(0), Rational(0), d);
  for (const auto& [m, c] : p.terms()) {
    QuadExt term(Rational(c), Rational(0), d);
    for (const auto& [var, exp] : m.entries()) {
      auto it = assignment.find(var);
      if (it == assignment.end()) {
        throw UnassignedVariable("substitute: variable x" + std::to_string(var) +
                                 " has no value");
      }
      term *= quad_pow(it->second, exp);
    }
    total += term;
  }
  return total;
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace detrec
