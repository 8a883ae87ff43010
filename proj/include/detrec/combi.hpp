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

#ifndef DETREC_COMBI_HPP
#define DETREC_COMBI_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detrec/digraph.hpp"
#include "detrec/families.hpp"
#include "detrec/poly.hpp"

namespace detrec {

// ----------------------------------------------------------------- tilings

inline constexpr std::size_t kTilingCap = 20;

/// A tiling of a linear n-board, as tile lengths from left to right.
struct Tiling {
  std::vector<std::size_t> parts;

  std::size_t length() const noexcept;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

/// All tilings of an n-board by tiles of length 1..r, in lexicographic order
/// of their parts. n = 0 gives the single empty tiling.
std::vector<Tiling> enumerate_tilings(std::size_t n, std::size_t r);

/// Product of c_(part) over the tiles; 1 for the empty tiling.
template <Scalar S>
S tiling_weight(const Tiling& t, std::span<const S> coeffs) {
  S w = ScalarTraits<S>::one();
  for (std::size_t part : t.parts) {
    if (part == 0 || part > coeffs.size()) {
      throw InvalidArgument("tiling_weight: tile of length " + std::to_string(part) +
                            " with only " + std::to_string(coeffs.size()) +
                            " coefficients");
    }
    w = w * coeffs[part - 1];
  }
  return w;
}

/// Cycles of the LSD matched with t: a tile covering cells k..k+i-1 becomes
/// the cycle k -> k+i-1 -> k+i-2 -> ... -> k+1 -> k, a 1-tile a loop.
std::vector<Cycle> tiling_cycles(const Tiling& t);

/// The LSD of dc = D(C(coeffs; n)) matched with t, weight read off dc.
template <Scalar S>
LinearSubdigraph<S> tiling_to_lsd(const Tiling& t, const WeightedDigraph<S>& dc) {
  if (t.length() != dc.vertex_count()) {
    throw InvalidArgument("tiling_to_lsd: tiling of a " + std::to_string(t.length()) +
                          "-board against a digraph on " +
                          std::to_string(dc.vertex_count()) + " vertices");
  }
  return make_lsd(dc, tiling_cycles(t));
}

template <Scalar S>
LinearSubdigraph<S> tiling_to_lsd(const Tiling& t, std::span<const S> coeffs) {
  return tiling_to_lsd(t, from_matrix(build_C(coeffs, t.length())));
}

/// A tiling of n labelled cells on a circle by 1- and 2-tiles. A 2-tile
/// starting at cell n covers cells n and 1.
struct CircularTiling {
  struct Tile {
    std::size_t start;   // 1-based
    std::size_t length;  // 1 or 2
    friend auto operator<=>(const Tile&, const Tile&) = default;
  };

  std::size_t n = 0;
  std::vector<Tile> tiles;  // sorted by start

  friend auto operator<=>(const CircularTiling&, const CircularTiling&) = default;
};

/// All circular tilings for n >= 3, sorted. Their number is the Lucas
/// number l_n.
std::vector<CircularTiling> enumerate_circular_tilings(std::size_t n);

// ------------------------------------------------------------ linear words

inline constexpr std::size_t kIncreasingWordCap = 12;
inline constexpr std::size_t kPieLinearCap = 10;

/// Letters are 1-based indices into the alphabet x1..xn; letter k has weight
/// x(k-1) in the polynomial ring.
struct Word {
  std::vector<std::size_t> letters;
  friend auto operator<=>(const Word&, const Word&) = default;
};

MultiPoly word_weight(const Word& w);

/// True if some letter is immediately followed by a smaller one.
bool has_descent(const Word& w);

/// Weakly increasing words of length m over n_vars letters, lexicographic.
/// These are exactly the words with no descent.
std::vector<Word> enumerate_increasing_words(std::size_t m, std::size_t n_vars);

/// The inclusion-exclusion sum for words of length m with no descent: over
/// every way to cut the word into blocks, a block of length 1 is a free
/// letter (x1 + ... + xn) and a block of length L >= 2 is a marked strictly
/// decreasing run x_(j_L) ... x_(j_1), summed over all runs, with sign
/// (-1)^(L-1).
MultiPoly pie_linear_sum(std::size_t m, std::size_t n_vars);

// ------------------------------------------------------------ cyclic words

inline constexpr std::size_t kCyclicWordCap = 20;
inline constexpr std::size_t kPieCyclicCap = 16;
inline constexpr std::size_t kPieCyclicFormalCap = 12;

/// A word over {a, b} read clockwise from a fixed position 1. Rotations are
/// different words.
struct CyclicWord {
  std::string letters;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;
};

/// a^(#a) b^(#b) with a = x0, b = x1.
MultiPoly cyclic_word_weight(const CyclicWord& w);

/// True if pattern occurs starting at some position, reading cyclically.
bool contains_cyclic(const CyclicWord& w, const std::string& pattern);

/// All 2^n words for 3 <= n <= 20 in lexicographic order (a < b).
std::vector<CyclicWord> enumerate_cyclic_words(std::size_t n);

/// Weight of all cyclic words of length n in which no a is immediately
/// followed by b. Equals a^n + b^n.
MultiPoly cyclic_avoiding_weight(std::size_t n);

/// C_0, C_1, ...: C_j is the total weight of the formal sums with j marked,
/// pairwise disjoint cyclic position pairs (i, i+1) each forced to "ab".
std::vector<MultiPoly> pie_cyclic_terms(std::size_t n);

/// C_0 - C_1 + C_2 - ...
MultiPoly pie_cyclic_sum(std::size_t n);

/// Formal integer combination of cyclic words.
using FormalSum = std::map<CyclicWord, Integer>;

/// C_0 - C_1 + C_2 - ... expanded in ZC(n) before taking weights. Zero
/// coefficients are removed, so the result lists the avoiding words.
FormalSum pie_cyclic_formal(std::size_t n);

/// The two Hamiltonian LSDs of D(S(a, b; n)) left out of the word bijection:
/// L1 = 1 -> 2 -> ... -> n -> 1 and L2 = 1 -> n -> n-1 -> ... -> 2 -> 1.
/// Their signed weights are a^n and b^n.
std::pair<LinearSubdigraph<MultiPoly>, LinearSubdigraph<MultiPoly>>
lsd_excluded_pair(std::size_t n);

/// Same two cycles read off a given digraph on n >= 3 vertices.
std::pair<LinearSubdigraph<MultiPoly>, LinearSubdigraph<MultiPoly>>
lsd_excluded_pair(const WeightedDigraph<MultiPoly>& ds);

}  // namespace detrec

#endif  // DETREC_COMBI_HPP
