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

#include "detrec/symfunc.hpp"

#include <algorithm>
#include <numeric>

namespace detrec {
namespace {

// Calls visit(indices) for every sequence i_1 <= ... <= i_k over [0, n) when
// strict is false, or i_1 < ... < i_k when strict is true.
template <class F>
void for_each_index_sequence(unsigned k, std::size_t n, bool strict, F visit) {
  std::vector<Monomial::Variable> seq;
  seq.reserve(k);
  auto recurse = [&](auto&& self, Monomial::Variable lo) -> void {
    if (seq.size() == k) {
      visit(seq);
      return;
    }
    for (Monomial::Variable v = lo; v < n; ++v) {
      seq.push_back(v);
      self(self, strict ? v + 1 : v);
      seq.pop_back();
    }
  };
  recurse(recurse, 0);
}

MultiPoly sum_of_index_monomials(unsigned k, std::size_t n_vars, bool strict) {
  MultiPoly out;
  for_each_index_sequence(k, n_vars, strict, [&](const auto& seq) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(seq.size());
    for (auto v : seq) entries.emplace_back(v, 1);
    out += MultiPoly(Monomial(std::move(entries)), Integer(1));
  });
  return out;
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw InvalidArgument("Partition: parts must be weakly decreasing");
  }
}

unsigned Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0U);
}

std::size_t Partition::nonzero_length() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](unsigned p) { return p > 0; }));
}

Partition Partition::padded(std::size_t length) const {
  if (nonzero_length() > length) {
    throw InvalidArgument("Partition: " + std::to_string(nonzero_length()) +
                          " nonzero parts do not fit in " +
                          std::to_string(length) + " variables");
  }
  std::vector<unsigned> parts(parts_.begin(),
                              parts_.begin() + static_cast<std::ptrdiff_t>(
                                                   std::min(length, parts_.size())));
  parts.resize(length, 0);
  return Partition(std::move(parts));
}

MultiPoly elementary(unsigned k, std::size_t n_vars) {
  if (k > n_vars) return MultiPoly();
  return sum_of_index_monomials(k, n_vars, /*strict=*/true);
}

MultiPoly homogeneous(unsigned k, std::size_t n_vars) {
  return sum_of_index_monomials(k, n_vars, /*strict=*/false);
}

MultiPoly alternant(const Partition& lambda, std::size_t n_vars) {
  if (n_vars == 0) throw InvalidArgument("alternant: need at least one variable");
  const Partition full = lambda.padded(n_vars);
  const auto& parts = full.parts();
  const SquareMatrix<MultiPoly> m(n_vars, [&](std::size_t i, std::size_t j) {
    const auto exp = static_cast<Monomial::Exponent>(parts[i] + n_vars - 1 - i);
    return MultiPoly(Monomial::variable(static_cast<Monomial::Variable>(j), exp),
                     Integer(1));
  });
  return det_cofactor(m);
}

MultiPoly schur(const Partition& lambda, std::size_t n_vars) {
  return exact_divide(alternant(lambda, n_vars), alternant(Partition(), n_vars));
}

SquareMatrix<MultiPoly> build_E(std::size_t m, std::size_t n_vars) {
  std::vector<MultiPoly> e(m + 1);
  for (std::size_t t = 1; t <= m; ++t) {
    e[t] = elementary(static_cast<unsigned>(t), n_vars);
  }
  return SquareMatrix<MultiPoly>(m, [&](std::size_t i, std::size_t j) {
    if (i == j + 1) return MultiPoly(1);
    if (j < i) return MultiPoly();
    return e[j - i + 1];
  });
}

}  // namespace detrec
