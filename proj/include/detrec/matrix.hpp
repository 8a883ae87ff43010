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

#ifndef DETREC_MATRIX_HPP
#define DETREC_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "detrec/errors.hpp"
#include "detrec/scalar.hpp"

namespace detrec {

/// Dense n x n matrix, row-major, 0-based indices. Entries are fixed at
/// construction; with() returns a modified copy.
template <Scalar S>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n)
      : n_(n), entries_(n * n, ScalarTraits<S>::zero()) {}

  /// entry(i, j) is called once per cell, 0-based.
  template <class F>
    requires std::invocable<F&, std::size_t, std::size_t>
  SquareMatrix(std::size_t n, F entry) : n_(n) {
    entries_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) entries_.push_back(S(entry(i, j)));
    }
  }

  SquareMatrix(std::initializer_list<std::initializer_list<S>> rows)
      : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw InvalidArgument("SquareMatrix: ragged rows");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  std::size_t size() const noexcept { return n_; }

  const S& operator()(std::size_t i, std::size_t j) const {
    assert(i < n_ && j < n_);
    return entries_[i * n_ + j];
  }

  SquareMatrix with(std::size_t i, std::size_t j, S value) const {
    SquareMatrix copy = *this;
    copy.entries_[i * n_ + j] = std::move(value);
    return copy;
  }

  /// Entry-wise image under f.
  template <class F>
  auto map(F f) const {
    using T = std::decay_t<decltype(f(entries_.front()))>;
    return SquareMatrix<T>(n_, [&](std::size_t i, std::size_t j) {
      return f((*this)(i, j));
    });
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<S> entries_;
};

inline constexpr std::size_t kCofactorCap = 8;

namespace detail {

// Laplace expansion along the first remaining row over the columns left in
// `cols`.
template <Scalar S>
S cofactor_expand(const SquareMatrix<S>& m, std::size_t row,
                  std::vector<std::size_t>& cols) {
  if (cols.empty()) return ScalarTraits<S>::one();
  S total = ScalarTraits<S>::zero();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const S& entry = m(row, cols[k]);
    if (ScalarTraits<S>::is_zero(entry)) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    S minor = cofactor_expand(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 0) {
      total = total + entry * minor;
    } else {
      total = total - entry * minor;
    }
  }
  return total;
}

}  // namespace detail

/// Determinant by first-row cofactor expansion. Factorial cost; n <= 8.
template <Scalar S>
S det_cofactor(const SquareMatrix<S>& m) {
  check_cap("det_cofactor: n", static_cast<long long>(m.size()), kCofactorCap);
  std::vector<std::size_t> cols(m.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return detail::cofactor_expand(m, 0, cols);
}

/// Determinant by fraction-free (Bareiss) elimination. Each step divides by
/// the previous pivot, which is exact in any integral domain.
template <Scalar S>
S det_bareiss(const SquareMatrix<S>& m) {
  using T = ScalarTraits<S>;
  const std::size_t n = m.size();
  if (n == 0) return T::one();
  std::vector<std::vector<S>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  }
  bool negate = false;
  S previous = T::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (T::is_zero(a[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && T::is_zero(a[swap_row][k])) ++swap_row;
      if (swap_row == n) return T::zero();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        S cross = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = T::exact_divide(cross, previous);
      }
      a[i][k] = T::zero();
    }
    previous = a[k][k];
  }
  S det = a[n - 1][n - 1];
  return negate ? S(-det) : det;
}

/// Rows of tab-separated canonical scalars, one row per line.
template <Scalar S>
std::string dump(const SquareMatrix<S>& m, const VariableNames& names = {}) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out << '\t';
      out << scalar_to_string(m(i, j), names);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace detrec

#endif  // DETREC_MATRIX_HPP
