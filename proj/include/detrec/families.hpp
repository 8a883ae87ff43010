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

#ifndef DETREC_FAMILIES_HPP
#define DETREC_FAMILIES_HPP

#include <span>
#include <vector>

#include "detrec/matrix.hpp"

namespace detrec {

/*
  Structured matrices whose determinants count weighted combinatorial objects.
  Descriptions below use 1-based (row, column) positions.

  C(c_1..c_r; n)   recurrence matrix. Row i holds (-1)^(t+1) c_t at column
                   i+t-1 for t = 1..r (c_1 on the diagonal, -c_2 above it,
                   +c_3 above that, ...) and 1 on the subdiagonal. Bands that
                   would fall outside the matrix are cut off, so n < r is
                   allowed. det C = u_n.
  G(n, r)          C with every c_t = 1. det G = n-th r-acci number.
  F(n)             G(n, 2): 1 on the diagonal, -1 above, 1 below.
  S(a, b; n)       n >= 3. a+b on the diagonal, a above and b below it,
                   except (1,2) = (-1)^(n+1) a and (2,1) = (-1)^(n+1) b;
                   corners (1,n) = b and (n,1) = a. det S = 2(a^n + b^n).
  A(n)             S at a = (1+sqrt 5)/2, b = (1-sqrt 5)/2.
*/

template <Scalar S>
SquareMatrix<S> build_C(std::span<const S> coeffs, std::size_t n) {
  if (coeffs.empty()) throw InvalidArgument("build_C: need r >= 1 coefficients");
  if (n == 0) throw InvalidArgument("build_C: need n >= 1");
  const std::size_t r = coeffs.size();
  return SquareMatrix<S>(n, [&](std::size_t i, std::size_t j) -> S {
    if (i == j + 1) return ScalarTraits<S>::one();
    if (j < i) return ScalarTraits<S>::zero();
    const std::size_t t = j - i + 1;
    if (t > r) return ScalarTraits<S>::zero();
    return t % 2 == 1 ? coeffs[t - 1] : S(-coeffs[t - 1]);
  });
}

template <Scalar S>
SquareMatrix<S> build_C(const std::vector<S>& coeffs, std::size_t n) {
  return build_C(std::span<const S>(coeffs), n);
}

SquareMatrix<Integer> build_G(std::size_t n, std::size_t r);

SquareMatrix<Integer> build_F(std::size_t n);

template <Scalar S>
SquareMatrix<S> build_S(const S& a, const S& b, std::size_t n) {
  if (n < 3) {
    throw DimensionTooSmall("build_S: n = " + std::to_string(n) +
                            " but the matrix needs n >= 3");
  }
  const bool odd_n = n % 2 == 1;  // (-1)^(n+1) = +1
  return SquareMatrix<S>(n, [&](std::size_t i, std::size_t j) -> S {
    if (i == j) return a + b;
    if (i == 0 && j == 1) return odd_n ? a : S(-a);
    if (i == 1 && j == 0) return odd_n ? b : S(-b);
    if (i == 0 && j == n - 1) return b;
    if (i == n - 1 && j == 0) return a;
    if (j == i + 1) return a;
    if (i == j + 1) return b;
    return ScalarTraits<S>::zero();
  });
}

/// S over the polynomial ring with a = x0, b = x1.
SquareMatrix<MultiPoly> build_S_symbolic(std::size_t n);

SquareMatrix<QuadExt> build_A(std::size_t n);

}  // namespace detrec

#endif  // DETREC_FAMILIES_HPP
