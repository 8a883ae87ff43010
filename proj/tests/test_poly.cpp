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

#include "doctest.h"

#include "detrec/poly.hpp"
#include "detrec/quadext.hpp"
#include "oracles.hpp"

using namespace detrec;

namespace {

MultiPoly x(Monomial::Variable v) { return MultiPoly::variable(v); }

}  // namespace

TEST_CASE("canonical text form") {
  CHECK(MultiPoly().to_string() == "0");
  CHECK(MultiPoly(-7).to_string() == "-7");
  CHECK(pow(x(0) + x(1), 2).to_string() == "x0^2 + 2*x0*x1 + x1^2");
  CHECK(((x(0) + x(1)) * (x(0) - x(1))).to_string() == "x0^2 - x1^2");
  CHECK((-x(0) + MultiPoly(3)).to_string() == "-x0 + 3");
  CHECK((x(0) * x(0) * x(2) - MultiPoly(2) * x(1)).to_string() == "x0^2*x2 - 2*x1");
  CHECK(pow(x(0) + x(1), 2).to_string(VariableNames::ab()) == "a^2 + 2*a*b + b^2");
}

TEST_CASE("graded lex order puts higher degree first, then larger early exponents") {
  const MultiPoly p = x(1) * x(1) + x(0) + x(0) * x(1) + x(0) * x(0) + MultiPoly(1);
  CHECK(p.to_string() == "x0^2 + x0*x1 + x1^2 + x0 + 1");
  CHECK(p.leading_term().first == Monomial::variable(0, 2));
  CHECK(p.total_degree() == 2);
  CHECK(p.variable_count() == 2);
}

TEST_CASE("annihilator and zero handling") {
  const MultiPoly p = pow(x(0) - x(3), 3);
  CHECK((p * MultiPoly(0)).is_zero());
  CHECK((p - p).is_zero());
  CHECK(pow(p, 0) == MultiPoly(1));
  CHECK(MultiPoly(Monomial::variable(2), Integer(0)).is_zero());
}

TEST_CASE("exact division") {
  CHECK(exact_divide(x(0) * x(0) - x(1) * x(1), x(0) - x(1)).to_string() == "x0 + x1");
  CHECK(exact_divide(pow(x(0), 3) - pow(x(1), 3), x(0) - x(1)).to_string() ==
        "x0^2 + x0*x1 + x1^2");
  CHECK_THROWS_AS(exact_divide(x(0) + MultiPoly(1), x(0)), NotDivisible);
  CHECK_THROWS_AS(exact_divide(x(0), MultiPoly()), InvalidArgument);
  CHECK(exact_divide(MultiPoly(), x(0)).is_zero());
}

TEST_CASE("monomial arithmetic") {
  const Monomial a({{0, 2}, {3, 1}});
  const Monomial b({{3, 1}});
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a / b == Monomial::variable(0, 2));
  CHECK(a * b == Monomial({{0, 2}, {3, 2}}));
  CHECK(Monomial({{1, 0}}).is_constant());
  CHECK(Monomial({{1, 1}, {1, 2}}) == Monomial::variable(1, 3));
}

TEST_CASE("substitution at the golden ratio") {
  const std::map<Monomial::Variable, QuadExt> golden{{0, QuadExt::phi()}, {1, QuadExt::psi()}};
  CHECK(substitute(x(0) * x(1), golden) == QuadExt(-1));
  CHECK(substitute(x(0) + x(1), golden) == QuadExt(1));
  CHECK(substitute(x(0) * x(0) + x(0), golden) == QuadExt(2, 1));
  CHECK_THROWS_AS(substitute(x(2), golden), UnassignedVariable);
}

TEST_CASE("property: ring axioms on random polynomials") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = rng.poly(4, 5, 5, 9);
    const MultiPoly b = rng.poly(4, 5, 5, 9);
    const MultiPoly c = rng.poly(4, 5, 5, 9);
    CHECK((a + b).to_string() == (b + a).to_string());
    CHECK((a * b).to_string() == (b * a).to_string());
    CHECK(((a + b) + c).to_string() == (a + (b + c)).to_string());
    CHECK(((a * b) * c).to_string() == (a * (b * c)).to_string());
    CHECK((a * (b + c)).to_string() == (a * b + a * c).to_string());
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("property: multiplication agrees with the dense oracle") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = rng.poly(4, 5, 6, 9);
    const MultiPoly b = rng.poly(4, 5, 6, 9);
    CHECK(oracle::to_dense(a * b, 4) ==
          oracle::dense_mul(oracle::to_dense(a, 4), oracle::to_dense(b, 4)));
    CHECK(oracle::to_dense(a - b, 4) ==
          oracle::dense_add(oracle::to_dense(a, 4), oracle::to_dense(b, 4), -1));
  }
}

TEST_CASE("property: exact_divide(a * b, b) == a") {
  oracle::Rng rng(13);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const MultiPoly a = rng.poly(4, 4, 5, 9);
    const MultiPoly b = rng.poly(4, 4, 5, 9);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("property: substitution is a ring homomorphism") {
  oracle::Rng rng(14);
  const std::map<Monomial::Variable, QuadExt> point{{0, QuadExt::phi()},
                                                    {1, QuadExt(Rational(-3, 2))},
                                                    {2, QuadExt(Rational(1), Rational(2))},
                                                    {3, QuadExt(7)}};
  for (int trial = 0; trial < 150; ++trial) {
    const MultiPoly p = rng.poly(4, 5, 5, 9);
    const MultiPoly q = rng.poly(4, 5, 5, 9);
    CHECK(substitute(p * q, point) == substitute(p, point) * substitute(q, point));
    CHECK(substitute(p + q, point) == substitute(p, point) + substitute(q, point));
  }
}

TEST_CASE("property: integer evaluation matches the term-by-term oracle") {
  oracle::Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly p = rng.poly(3, 5, 6, 9);
    std::map<Monomial::Variable, QuadExt> point;
    std::vector<Integer> values;
    for (Monomial::Variable v = 0; v < 3; ++v) {
      values.emplace_back(rng.uniform(-4, 4));
      point.emplace(v, QuadExt(Rational(values.back())));
    }
    CHECK(substitute(p, point) == QuadExt(Rational(oracle::evaluate(p, values))));
  }
}
