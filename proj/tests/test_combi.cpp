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

#include <set>

#include "detrec/combi.hpp"
#include "detrec/recurrence.hpp"
#include "detrec/symfunc.hpp"
#include "oracles.hpp"

using namespace detrec;

namespace {

MultiPoly x(Monomial::Variable v) { return MultiPoly::variable(v); }

const MultiPoly a = MultiPoly::variable(0);
const MultiPoly b = MultiPoly::variable(1);

}  // namespace

TEST_CASE("linear tilings") {
  const auto t = enumerate_tilings(4, 2);
  REQUIRE(t.size() == 5);
  CHECK(t[0].parts == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(t[1].parts == std::vector<std::size_t>{1, 1, 2});
  CHECK(t[2].parts == std::vector<std::size_t>{1, 2, 1});
  CHECK(t[3].parts == std::vector<std::size_t>{2, 1, 1});
  CHECK(t[4].parts == std::vector<std::size_t>{2, 2});
  const auto empty = enumerate_tilings(0, 3);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].parts.empty());
  CHECK(enumerate_tilings(3, 3).size() == 4);
  CHECK_THROWS_AS(enumerate_tilings(21, 2), TooLarge);
}

TEST_CASE("tiling weights") {
  const auto coeffs = symbolic_recurrence(3).coefficients;
  const std::span<const MultiPoly> c(coeffs);
  CHECK(tiling_weight(Tiling{{2, 3}}, c) == x(1) * x(2));
  const std::vector<Integer> ones{Integer(1)};
  CHECK(tiling_weight(Tiling{{1, 1, 1, 1}}, std::span<const Integer>(ones)) == 1);
  CHECK(tiling_weight(Tiling{}, c) == MultiPoly(1));
  CHECK_THROWS_AS(tiling_weight(Tiling{{4}}, c), InvalidArgument);
  MultiPoly total;
  const auto two = symbolic_recurrence(2).coefficients;
  for (const auto& t : enumerate_tilings(4, 2)) {
    total += tiling_weight(t, std::span<const MultiPoly>(two));
  }
  CHECK(total.to_string() == "x0^4 + 3*x0^2*x1 + x1^2");
}

TEST_CASE("tiling to LSD") {
  const auto coeffs = symbolic_recurrence(3).coefficients;
  const auto lsd = tiling_to_lsd(Tiling{{2, 3}}, std::span<const MultiPoly>(coeffs));
  CHECK(lsd.cycles == std::vector<Cycle>{{1, 2}, {3, 5, 4}});
  CHECK(lsd.signed_weight() == x(1) * x(2));
  CHECK(tiling_cycles(Tiling{{1, 1, 1, 1}}) == std::vector<Cycle>{{1}, {2}, {3}, {4}});

  const auto f4 = enumerate_lsds(from_matrix(build_F(4)));
  std::set<std::vector<Cycle>> images;
  for (const auto& t : enumerate_tilings(4, 2)) {
    const auto l = tiling_to_lsd(t, from_matrix(build_F(4)));
    CHECK(l.signed_weight() == 1);
    images.insert(l.cycles);
  }
  std::set<std::vector<Cycle>> all;
  for (const auto& l : f4) all.insert(l.cycles);
  CHECK(images == all);
}

TEST_CASE("circular tilings") {
  const auto three = enumerate_circular_tilings(3);
  CHECK(three.size() == 4);
  CHECK(enumerate_circular_tilings(4).size() == 7);
  CHECK(enumerate_circular_tilings(5).size() == 11);
  CHECK_THROWS_AS(enumerate_circular_tilings(2), DimensionTooSmall);
  for (const auto& t : three) {
    std::size_t covered = 0;
    for (const auto& tile : t.tiles) covered += tile.length;
    CHECK(covered == 3);
  }
}

TEST_CASE("increasing words") {
  const auto w = enumerate_increasing_words(2, 2);
  REQUIRE(w.size() == 3);
  CHECK(w[0].letters == std::vector<std::size_t>{1, 1});
  CHECK(w[1].letters == std::vector<std::size_t>{1, 2});
  CHECK(w[2].letters == std::vector<std::size_t>{2, 2});
  const auto empty = enumerate_increasing_words(0, 3);
  REQUIRE(empty.size() == 1);
  CHECK(word_weight(empty[0]) == MultiPoly(1));
  CHECK(has_descent(Word{{1, 3, 2}}));
  CHECK_FALSE(has_descent(Word{{1, 1, 2}}));
}

TEST_CASE("linear inclusion-exclusion") {
  CHECK(pie_linear_sum(2, 2) == pow(x(0) + x(1), 2) - x(1) * x(0));
  CHECK(pie_linear_sum(1, 4) == elementary(1, 4));
  CHECK(pie_linear_sum(5, 3) == homogeneous(5, 3));
}

TEST_CASE("cyclic words") {
  CHECK(enumerate_cyclic_words(3).size() == 8);
  const auto four = enumerate_cyclic_words(4);
  CHECK(four.size() == 16);
  std::vector<std::string> avoiding;
  for (const auto& w : four) {
    if (!contains_cyclic(w, "ab")) avoiding.push_back(w.letters);
  }
  CHECK(avoiding == std::vector<std::string>{"aaaa", "bbbb"});
  CHECK(contains_cyclic(CyclicWord{"baaa"}, "ab"));
  CHECK(cyclic_word_weight(CyclicWord{"abba"}) == a * a * b * b);
  CHECK_THROWS_AS(enumerate_cyclic_words(2), DimensionTooSmall);
}

TEST_CASE("cyclic avoiding weights and inclusion-exclusion") {
  CHECK(cyclic_avoiding_weight(4) == pow(a, 4) + pow(b, 4));
  CHECK(cyclic_avoiding_weight(3) == pow(a, 3) + pow(b, 3));
  CHECK(cyclic_avoiding_weight(5) == pow(a, 5) + pow(b, 5));
  const auto terms = pie_cyclic_terms(4);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0] == pow(a + b, 4));
  CHECK(terms[1] == MultiPoly(4) * a * b * pow(a + b, 2));
  CHECK(terms[2] == MultiPoly(2) * pow(a * b, 2));
  CHECK(pie_cyclic_sum(4) == pow(a, 4) + pow(b, 4));
  CHECK(pie_cyclic_sum(3) == pow(a + b, 3) - MultiPoly(3) * a * b * (a + b));
  CHECK(pie_cyclic_sum(5) == cyclic_avoiding_weight(5));
  const auto formal = pie_cyclic_formal(4);
  REQUIRE(formal.size() == 2);
  CHECK(formal.at(CyclicWord{"aaaa"}) == 1);
  CHECK(formal.at(CyclicWord{"bbbb"}) == 1);
}

TEST_CASE("excluded LSD pair") {
  for (unsigned n = 3; n <= 4; ++n) {
    const auto [l1, l2] = lsd_excluded_pair(n);
    CHECK(l1.signed_weight() == pow(a, n));
    CHECK(l2.signed_weight() == pow(b, n));
    CHECK(det_bareiss(build_S_symbolic(n)) - l1.signed_weight() - l2.signed_weight() ==
          pie_cyclic_sum(n));
  }
  CHECK_THROWS_AS(lsd_excluded_pair(2), DimensionTooSmall);
}

TEST_CASE("property: tiling bijection is total, injective, sign and weight preserving") {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto coeffs = symbolic_recurrence(r).coefficients;
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto g = from_matrix(build_C(coeffs, n));
      std::set<std::vector<Cycle>> images;
      MultiPoly total;
      for (const auto& t : enumerate_tilings(n, r)) {
        const auto l = tiling_to_lsd(t, g);
        CHECK(l.signed_weight() == tiling_weight(t, std::span<const MultiPoly>(coeffs)));
        images.insert(l.cycles);
        total += l.signed_weight();
      }
      const auto lsds = enumerate_lsds(g);
      std::set<std::vector<Cycle>> all;
      for (const auto& l : lsds) all.insert(l.cycles);
      CHECK(images.size() == enumerate_tilings(n, r).size());
      CHECK(images == all);
      if (n <= 7) CHECK(total == oracle::leibniz_det(build_C(coeffs, n)));
    }
  }
}

TEST_CASE("property: increasing words, inclusion-exclusion and h_m agree") {
  for (std::size_t v = 1; v <= 3; ++v) {
    for (std::size_t m = 0; m <= 8; ++m) {
      oracle::Dense brute;
      for (const auto& w : oracle::all_words(m, static_cast<unsigned>(v))) {
        if (std::is_sorted(w.begin(), w.end())) {
          oracle::ExpVec e(v, 0);
          for (unsigned letter : w) ++e[letter];
          brute[e] += 1;
        }
      }
      MultiPoly listed;
      for (const auto& w : enumerate_increasing_words(m, v)) listed += word_weight(w);
      CHECK(oracle::to_dense(listed, v) == brute);
      CHECK(listed == homogeneous(static_cast<unsigned>(m), v));
      CHECK(pie_linear_sum(m, v) == listed);
    }
  }
}

TEST_CASE("property: cyclic inclusion-exclusion matches direct filtering") {
  for (unsigned n = 3; n <= 10; ++n) {
    MultiPoly brute;
    for (const auto& letters : oracle::all_words(n, 2)) {
      std::string w;
      for (unsigned l : letters) w += l == 0 ? 'a' : 'b';
      if (!oracle::has_cyclic_ab(w)) brute += cyclic_word_weight(CyclicWord{w});
    }
    CHECK(brute == pow(a, n) + pow(b, n));
    CHECK(cyclic_avoiding_weight(n) == brute);
    CHECK(pie_cyclic_sum(n) == brute);
  }
}

TEST_CASE("property: circular tilings are counted by Lucas numbers") {
  for (std::size_t n = 3; n <= 15; ++n) {
    CHECK(Integer(static_cast<unsigned long>(enumerate_circular_tilings(n).size())) ==
          oracle::lucas(n));
  }
}

TEST_CASE("property: det S decomposes into the cyclic sum and the excluded pair") {
  for (unsigned n = 3; n <= 8; ++n) {
    const auto [l1, l2] = lsd_excluded_pair(n);
    const MultiPoly det = det_bareiss(build_S_symbolic(n));
    CHECK(det == pie_cyclic_sum(n) + l1.signed_weight() + l2.signed_weight());
    CHECK(det == MultiPoly(2) * (pow(a, n) + pow(b, n)));
  }
}
