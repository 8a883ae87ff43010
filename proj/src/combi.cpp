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

#include "detrec/combi.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace detrec {
namespace {

void require_cyclic_length(const char* what, std::size_t n, std::size_t cap) {
  if (n < 3) {
    throw DimensionTooSmall(std::string(what) + ": n = " + std::to_string(n) +
                            " but cyclic words need n >= 3");
  }
  check_cap(what, static_cast<long long>(n), static_cast<long long>(cap));
}

// Compositions of n with parts <= r, smallest first part first.
void compositions(std::size_t n, std::size_t r, std::vector<std::size_t>& prefix,
                  std::vector<Tiling>& out) {
  if (n == 0) {
    out.push_back(Tiling{prefix});
    return;
  }
  for (std::size_t part = 1; part <= std::min(n, r); ++part) {
    prefix.push_back(part);
    compositions(n - part, r, prefix, out);
    prefix.pop_back();
  }
}

std::vector<CircularTiling::Tile> place(const Tiling& t, std::size_t first_cell) {
  std::vector<CircularTiling::Tile> tiles;
  std::size_t cell = first_cell;
  for (std::size_t part : t.parts) {
    tiles.push_back({cell, part});
    cell += part;
  }
  return tiles;
}

const MultiPoly& letter_a() {
  static const MultiPoly a = MultiPoly::variable(0);
  return a;
}

const MultiPoly& letter_b() {
  static const MultiPoly b = MultiPoly::variable(1);
  return b;
}

// Bit i set means a marked "ab" at cyclic positions (i, i+1 mod n).
bool marks_disjoint(std::uint32_t mask, std::size_t n) {
  const std::uint32_t rotated = (mask >> 1) | ((mask & 1U) << (n - 1));
  return (mask & rotated) == 0;
}

}  // namespace

// ----------------------------------------------------------------- tilings

std::size_t Tiling::length() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::vector<Tiling> enumerate_tilings(std::size_t n, std::size_t r) {
  if (r == 0) throw InvalidArgument("enumerate_tilings: need r >= 1");
  check_cap("enumerate_tilings: n", static_cast<long long>(n), kTilingCap);
  std::vector<Tiling> out;
  std::vector<std::size_t> prefix;
  compositions(n, r, prefix, out);
  return out;
}

std::vector<Cycle> tiling_cycles(const Tiling& t) {
  std::vector<Cycle> cycles;
  Vertex k = 1;
  for (std::size_t i : t.parts) {
    Cycle c{k};
    for (std::size_t step = i - 1; step >= 1; --step) c.push_back(k + step);
    cycles.push_back(std::move(c));
    k += i;
  }
  return cycles;
}

std::vector<CircularTiling> enumerate_circular_tilings(std::size_t n) {
  if (n < 3) {
    throw DimensionTooSmall("enumerate_circular_tilings: n = " + std::to_string(n) +
                            " but the circular model needs n >= 3");
  }
  check_cap("enumerate_circular_tilings: n", static_cast<long long>(n), kTilingCap);
  std::vector<CircularTiling> out;
  for (const auto& t : enumerate_tilings(n, 2)) out.push_back({n, place(t, 1)});
  // A 2-tile on cells n and 1; cells 2..n-1 form a linear board.
  for (const auto& t : enumerate_tilings(n - 2, 2)) {
    auto tiles = place(t, 2);
    tiles.push_back({n, 2});
    out.push_back({n, std::move(tiles)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ linear words

MultiPoly word_weight(const Word& w) {
  std::vector<Monomial::Entry> entries;
  entries.reserve(w.letters.size());
  for (std::size_t letter : w.letters) {
    if (letter == 0) throw InvalidArgument("Word: letters are 1-based");
    entries.emplace_back(static_cast<Monomial::Variable>(letter - 1), 1);
  }
  return MultiPoly(Monomial(std::move(entries)), Integer(1));
}

bool has_descent(const Word& w) {
  return std::adjacent_find(w.letters.begin(), w.letters.end(),
                            std::greater<>()) != w.letters.end();
}

std::vector<Word> enumerate_increasing_words(std::size_t m, std::size_t n_vars) {
  if (n_vars == 0) throw InvalidArgument("enumerate_increasing_words: need n_vars >= 1");
  check_cap("enumerate_increasing_words: m", static_cast<long long>(m),
            kIncreasingWordCap);
  std::vector<Word> out;
  Word current;
  auto recurse = [&](auto&& self, std::size_t lo) -> void {
    if (current.letters.size() == m) {
      out.push_back(current);
      return;
    }
    for (std::size_t letter = lo; letter <= n_vars; ++letter) {
      current.letters.push_back(letter);
      self(self, letter);
      current.letters.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

MultiPoly pie_linear_sum(std::size_t m, std::size_t n_vars) {
  if (n_vars == 0) throw InvalidArgument("pie_linear_sum: need n_vars >= 1");
  check_cap("pie_linear_sum: m", static_cast<long long>(m), kPieLinearCap);

  // block[L]: signed sum over the words a block of length L stands for. A free
  // position is any single letter; a marked run is any strictly decreasing
  // sequence of L letters.
  std::vector<MultiPoly> block(m + 1);
  for (std::size_t len = 1; len <= m; ++len) {
    MultiPoly sum;
    Word run;
    auto runs = [&](auto&& self, std::size_t below) -> void {
      if (run.letters.size() == len) {
        sum += word_weight(run);
        return;
      }
      for (std::size_t letter = below - 1; letter >= 1; --letter) {
        run.letters.push_back(letter);
        self(self, letter);
        run.letters.pop_back();
      }
    };
    if (len == 1) {
      for (std::size_t letter = 1; letter <= n_vars; ++letter) {
        sum += word_weight(Word{{letter}});
      }
    } else {
      runs(runs, n_vars + 1);
    }
    block[len] = len % 2 == 1 ? sum : -sum;
  }

  // Walk every composition of m into blocks, multiplying left to right.
  MultiPoly total;
  auto walk = [&](auto&& self, std::size_t left, const MultiPoly& product) -> void {
    if (left == 0) {
      total += product;
      return;
    }
    for (std::size_t len = 1; len <= left; ++len) {
      if (block[len].is_zero()) continue;
      self(self, left - len, product * block[len]);
    }
  };
  walk(walk, m, MultiPoly(1));
  return total;
}

// ------------------------------------------------------------ cyclic words

MultiPoly cyclic_word_weight(const CyclicWord& w) {
  const auto a_count = static_cast<Monomial::Exponent>(
      std::count(w.letters.begin(), w.letters.end(), 'a'));
  const auto b_count = static_cast<Monomial::Exponent>(w.letters.size() - a_count);
  return MultiPoly(Monomial({{0, a_count}, {1, b_count}}), Integer(1));
}

bool contains_cyclic(const CyclicWord& w, const std::string& pattern) {
  const std::size_t n = w.letters.size();
  if (pattern.empty()) return true;
  if (n == 0) return false;
  for (std::size_t start = 0; start < n; ++start) {
    bool match = true;
    for (std::size_t k = 0; k < pattern.size() && match; ++k) {
      match = w.letters[(start + k) % n] == pattern[k];
    }
    if (match) return true;
  }
  return false;
}

std::vector<CyclicWord> enumerate_cyclic_words(std::size_t n) {
  require_cyclic_length("enumerate_cyclic_words", n, kCyclicWordCap);
  std::vector<CyclicWord> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
    std::string letters(n, 'a');
    for (std::size_t p = 0; p < n; ++p) {
      if (bits & (1U << (n - 1 - p))) letters[p] = 'b';
    }
    out.push_back(CyclicWord{std::move(letters)});
  }
  return out;
}

MultiPoly cyclic_avoiding_weight(std::size_t n) {
  MultiPoly total;
  for (const auto& w : enumerate_cyclic_words(n)) {
    if (!contains_cyclic(w, "ab")) total += cyclic_word_weight(w);
  }
  return total;
}

std::vector<MultiPoly> pie_cyclic_terms(std::size_t n) {
  require_cyclic_length("pie_cyclic_terms", n, kPieCyclicCap);
  const MultiPoly free_letter = letter_a() + letter_b();
  const MultiPoly marked_pair = letter_a() * letter_b();
  std::vector<MultiPoly> terms(n / 2 + 1);
  std::vector<MultiPoly> placement_weight(n / 2 + 1);
  for (std::size_t j = 0; j <= n / 2; ++j) {
    placement_weight[j] = pow(marked_pair, static_cast<unsigned>(j)) *
                          pow(free_letter, static_cast<unsigned>(n - 2 * j));
  }
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!marks_disjoint(mask, n)) continue;
    const auto j = static_cast<std::size_t>(std::popcount(mask));
    terms[j] += placement_weight[j];
  }
  return terms;
}

MultiPoly pie_cyclic_sum(std::size_t n) {
  const auto terms = pie_cyclic_terms(n);
  MultiPoly total;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j % 2 == 0) {
      total += terms[j];
    } else {
      total -= terms[j];
    }
  }
  return total;
}

FormalSum pie_cyclic_formal(std::size_t n) {
  require_cyclic_length("pie_cyclic_formal", n, kPieCyclicFormalCap);
  FormalSum sum;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!marks_disjoint(mask, n)) continue;
    std::string forced(n, '?');
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) {
        forced[i] = 'a';
        forced[(i + 1) % n] = 'b';
      }
    }
    std::vector<std::size_t> free_positions;
    for (std::size_t i = 0; i < n; ++i) {
      if (forced[i] == '?') free_positions.push_back(i);
    }
    const Integer sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
    for (std::uint32_t fill = 0; fill < (1U << free_positions.size()); ++fill) {
      std::string letters = forced;
      for (std::size_t k = 0; k < free_positions.size(); ++k) {
        letters[free_positions[k]] = (fill & (1U << k)) ? 'b' : 'a';
      }
      sum[CyclicWord{std::move(letters)}] += sign;
    }
  }
  std::erase_if(sum, [](const auto& entry) { return sgn(entry.second) == 0; });
  return sum;
}

std::pair<LinearSubdigraph<MultiPoly>, LinearSubdigraph<MultiPoly>>
lsd_excluded_pair(std::size_t n) {
  return lsd_excluded_pair(from_matrix(build_S_symbolic(n)));
}

std::pair<LinearSubdigraph<MultiPoly>, LinearSubdigraph<MultiPoly>>
lsd_excluded_pair(const WeightedDigraph<MultiPoly>& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) {
    throw DimensionTooSmall("lsd_excluded_pair: n = " + std::to_string(n) +
                            " but S needs n >= 3");
  }
  Cycle forward(n);
  std::iota(forward.begin(), forward.end(), Vertex{1});
  Cycle backward{1};
  for (Vertex v = n; v >= 2; --v) backward.push_back(v);
  return {make_lsd(g, {forward}), make_lsd(g, {backward})};
}

}  // namespace detrec
