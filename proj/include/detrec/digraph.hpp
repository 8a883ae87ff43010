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

#ifndef DETREC_DIGRAPH_HPP
#define DETREC_DIGRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "detrec/matrix.hpp"

namespace detrec {

/*
  The weighted digraph D(M) of a square matrix M has vertices 1..n and an edge
  i -> j of weight M[i][j] for every nonzero entry. A linear subdigraph (LSD)
  is a set of vertex-disjoint directed cycles covering every vertex, loops
  included, and

      det M = sum over LSDs L of (-1)^(n - c(L)) w(L),

  c(L) being the number of cycles and w(L) the product of all edge weights.

  Vertex labels in this header are 1-based; SquareMatrix stays 0-based.
*/

using Vertex = std::size_t;

/// Vertices in traversal order, canonically rotated so the smallest is first.
using Cycle = std::vector<Vertex>;

inline constexpr std::size_t kLsdVertexCap = 12;

template <Scalar S>
class WeightedDigraph {
 public:
  explicit WeightedDigraph(SquareMatrix<S> matrix) : matrix_(std::move(matrix)) {}

  std::size_t vertex_count() const noexcept { return matrix_.size(); }
  const S& weight(Vertex from, Vertex to) const { return matrix_(from - 1, to - 1); }
  bool has_edge(Vertex from, Vertex to) const {
    return !ScalarTraits<S>::is_zero(weight(from, to));
  }
  const SquareMatrix<S>& matrix() const noexcept { return matrix_; }

 private:
  SquareMatrix<S> matrix_;
};

template <Scalar S>
WeightedDigraph<S> from_matrix(SquareMatrix<S> m) {
  return WeightedDigraph<S>(std::move(m));
}

/// Counts i_t of cycles of each length t >= 2. Loops are implied.
class CycleType {
 public:
  CycleType() = default;
  /// Zero counts are dropped. Throws InvalidCycleType on a length below 2.
  explicit CycleType(std::map<std::size_t, std::size_t> counts);

  static CycleType of_cycles(const std::vector<Cycle>& cycles);

  const std::map<std::size_t, std::size_t>& counts() const noexcept { return counts_; }
  std::size_t count(std::size_t length) const;
  /// sum of t * i_t
  std::size_t covered_vertices() const noexcept;
  /// sum of (t - 1) * i_t, which is n - c(L)
  std::size_t sign_exponent() const noexcept;
  std::size_t longest() const noexcept;

  /// "{}" or "{2:1,3:1}"
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::map<std::size_t, std::size_t> counts_;
};

template <Scalar S>
struct LinearSubdigraph {
  std::size_t n = 0;
  std::vector<Cycle> cycles;  // canonical, sorted by first vertex
  S weight = ScalarTraits<S>::zero();

  std::size_t cycle_count() const noexcept { return cycles.size(); }
  /// (-1)^(n - c(L))
  int sign() const noexcept { return (n - cycles.size()) % 2 == 0 ? 1 : -1; }
  S signed_weight() const { return sign() > 0 ? weight : S(-weight); }
  CycleType cycle_type() const { return CycleType::of_cycles(cycles); }

  friend bool operator==(const LinearSubdigraph&, const LinearSubdigraph&) = default;
};

/// Rotates c so its smallest vertex comes first.
Cycle canonical_cycle(Cycle c);

/// Canonicalizes and sorts cycles; throws InvalidArgument unless they are
/// disjoint and cover 1..n.
std::vector<Cycle> canonical_cover(std::vector<Cycle> cycles, std::size_t n);

/// Product of edge weights along a cycle (zero if an edge is missing).
template <Scalar S>
S cycle_weight(const WeightedDigraph<S>& g, const Cycle& c) {
  S w = ScalarTraits<S>::one();
  for (std::size_t k = 0; k < c.size(); ++k) {
    w = w * g.weight(c[k], c[(k + 1) % c.size()]);
  }
  return w;
}

/// The LSD of g made of the given cycles, weight read off g.
template <Scalar S>
LinearSubdigraph<S> make_lsd(const WeightedDigraph<S>& g, std::vector<Cycle> cycles) {
  LinearSubdigraph<S> lsd;
  lsd.n = g.vertex_count();
  lsd.cycles = canonical_cover(std::move(cycles), lsd.n);
  lsd.weight = ScalarTraits<S>::one();
  for (const auto& c : lsd.cycles) lsd.weight = lsd.weight * cycle_weight(g, c);
  return lsd;
}

namespace detail {

template <Scalar S>
class LsdEnumerator {
 public:
  explicit LsdEnumerator(const WeightedDigraph<S>& g)
      : g_(g), n_(g.vertex_count()), used_(n_ + 1, false) {}

  std::vector<LinearSubdigraph<S>> run() {
    cover(ScalarTraits<S>::one());
    return std::move(out_);
  }

 private:
  // Extends the cover from the smallest vertex not yet used. Cycles through
  // that vertex are grown along nonzero edges; at every step closing the
  // cycle is tried before extending it, and extensions go in increasing
  // vertex order, which yields LSDs in lexicographic order of their cycle
  // lists.
  void cover(const S& weight) {
    Vertex start = 1;
    while (start <= n_ && used_[start]) ++start;
    if (start > n_) {
      LinearSubdigraph<S> lsd;
      lsd.n = n_;
      lsd.cycles = cycles_;
      lsd.weight = weight;
      out_.push_back(std::move(lsd));
      return;
    }
    used_[start] = true;
    path_.assign(1, start);
    grow(weight);
    used_[start] = false;
  }

  void grow(const S& weight) {
    const Vertex start = path_.front();
    const Vertex tail = path_.back();
    if (g_.has_edge(tail, start)) {
      std::vector<Vertex> saved = path_;
      cycles_.push_back(path_);
      cover(weight * g_.weight(tail, start));
      cycles_.pop_back();
      path_ = std::move(saved);
    }
    for (Vertex next = start + 1; next <= n_; ++next) {
      if (used_[next] || !g_.has_edge(tail, next)) continue;
      used_[next] = true;
      path_.push_back(next);
      grow(weight * g_.weight(tail, next));
      path_.pop_back();
      used_[next] = false;
    }
  }

  const WeightedDigraph<S>& g_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<Vertex> path_;
  std::vector<Cycle> cycles_;
  std::vector<LinearSubdigraph<S>> out_;
};

}  // namespace detail

/// Every LSD of g with nonzero weight, each once, in lexicographic order of
/// canonical cycle lists. Throws TooLarge above 12 vertices.
template <Scalar S>
std::vector<LinearSubdigraph<S>> enumerate_lsds(const WeightedDigraph<S>& g) {
  check_cap("enumerate_lsds: n", static_cast<long long>(g.vertex_count()),
            kLsdVertexCap);
  // Only nonzero edges are followed and every scalar ring here is an integral
  // domain, so each LSD produced has nonzero weight.
  return detail::LsdEnumerator<S>(g).run();
}

/// det M as the signed sum of LSD weights.
template <Scalar S>
S det_via_lsd(const SquareMatrix<S>& m) {
  const auto g = from_matrix(m);
  S total = ScalarTraits<S>::zero();
  for (const auto& lsd : enumerate_lsds(g)) total = total + lsd.signed_weight();
  return total;
}

/// Number of LSDs per cycle type.
template <Scalar S>
std::map<CycleType, std::size_t> cycle_census(const std::vector<LinearSubdigraph<S>>& lsds) {
  std::map<CycleType, std::size_t> census;
  for (const auto& lsd : lsds) ++census[lsd.cycle_type()];
  return census;
}

/// Number of LSDs with cycle type ct in the digraph of an n x n matrix with
/// nonzero entries exactly on the subdiagonal and the first `band` diagonals
/// from the main one upward:
///   (n - sum (t-1) i_t)! / (prod i_t! * (n - sum t i_t)!).
/// Throws InvalidCycleType if the cycles need more than n vertices or a
/// length exceeds band.
Integer count_cycle_type(std::size_t n, const CycleType& ct, std::size_t band);

/// All cycle types with lengths in 2..band covering at most n vertices.
std::vector<CycleType> enumerate_cycle_types(std::size_t n, std::size_t band);

/// Graphviz text for D(M): vertices v1..vn, one edge per nonzero entry
/// labelled with its canonical weight. Edges of `highlight` are drawn bold.
template <Scalar S>
std::string to_dot(const WeightedDigraph<S>& g, const VariableNames& names = {},
                   const std::vector<Cycle>& highlight = {}) {
  std::vector<std::pair<Vertex, Vertex>> bold;
  for (const auto& c : highlight) {
    for (std::size_t k = 0; k < c.size(); ++k) bold.emplace_back(c[k], c[(k + 1) % c.size()]);
  }
  std::ostringstream out;
  out << "digraph {\n";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) out << "  v" << v << ";\n";
  for (Vertex i = 1; i <= g.vertex_count(); ++i) {
    for (Vertex j = 1; j <= g.vertex_count(); ++j) {
      if (!g.has_edge(i, j)) continue;
      out << "  v" << i << " -> v" << j << " [label=\""
          << scalar_to_string(g.weight(i, j), names) << "\"";
      if (std::find(bold.begin(), bold.end(), std::pair{i, j}) != bold.end()) {
        out << ", style=bold";
      }
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

template <Scalar S>
std::string to_dot(const WeightedDigraph<S>& g, const LinearSubdigraph<S>& lsd,
                   const VariableNames& names = {}) {
  return to_dot(g, names, lsd.cycles);
}

}  // namespace detrec

#endif  // DETREC_DIGRAPH_HPP
