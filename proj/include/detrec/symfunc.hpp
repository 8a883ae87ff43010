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

#ifndef DETREC_SYMFUNC_HPP
#define DETREC_SYMFUNC_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "detrec/matrix.hpp"
#include "detrec/poly.hpp"

namespace detrec {

/// Weakly decreasing sequence of non-negative parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts)
      : Partition(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned weight() const noexcept;
  /// Parts that are nonzero.
  std::size_t nonzero_length() const noexcept;

  /// Same partition with exactly `length` parts: zeros appended or trailing
  /// zeros removed. Throws InvalidArgument if a nonzero part would be dropped.
  Partition padded(std::size_t length) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

// Variables are x0..x(n_vars-1).

/// e_k(x0..x(n-1)); 1 for k = 0, 0 for k > n_vars.
MultiPoly elementary(unsigned k, std::size_t n_vars);

/// h_k(x0..x(n-1)): every monomial of total degree k with coefficient 1.
MultiPoly homogeneous(unsigned k, std::size_t n_vars);

/// a_{lambda+delta}: det of the matrix with (i, j) entry x_j^(lambda_i + l-1-i),
/// l = n_vars, by cofactor expansion. lambda is padded to n_vars parts.
MultiPoly alternant(const Partition& lambda, std::size_t n_vars);

/// s_lambda as the bialternant quotient a_{lambda+delta} / a_delta.
MultiPoly schur(const Partition& lambda, std::size_t n_vars);

/// The m x m matrix with e_(j-i+1) on and above the diagonal (zero once the
/// index passes n_vars), 1 on the subdiagonal and 0 below it. Its
/// determinant is h_m.
SquareMatrix<MultiPoly> build_E(std::size_t m, std::size_t n_vars);

}  // namespace detrec

#endif  // DETREC_SYMFUNC_HPP
