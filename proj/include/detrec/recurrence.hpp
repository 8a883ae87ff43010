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

#ifndef DETREC_RECURRENCE_HPP
#define DETREC_RECURRENCE_HPP

#include <cstddef>
#include <vector>

#include "detrec/errors.hpp"
#include "detrec/quadext.hpp"
#include "detrec/scalar.hpp"

namespace detrec {

/// u_n = c_1 u_(n-1) + ... + c_r u_(n-r) with u_0 = 1 and u_j = 0 for j < 0.
template <Scalar S>
struct RecurrenceSpec {
  std::vector<S> coefficients;  // c_1..c_r

  explicit RecurrenceSpec(std::vector<S> coeffs) : coefficients(std::move(coeffs)) {
    if (coefficients.empty()) throw InvalidArgument("RecurrenceSpec: need order r >= 1");
  }

  std::size_t order() const noexcept { return coefficients.size(); }
};

template <Scalar S>
S eval_recurrence(const RecurrenceSpec<S>& spec, std::size_t n) {
  std::vector<S> u;
  u.reserve(n + 1);
  u.push_back(ScalarTraits<S>::one());
  for (std::size_t k = 1; k <= n; ++k) {
    S next = ScalarTraits<S>::zero();
    for (std::size_t t = 1; t <= spec.order() && t <= k; ++t) {
      next = next + spec.coefficients[t - 1] * u[k - t];
    }
    u.push_back(std::move(next));
  }
  return u[n];
}

/// Symbolic coefficients c_t = x(t-1).
RecurrenceSpec<MultiPoly> symbolic_recurrence(std::size_t order);

/// f_0 = f_1 = 1.
Integer fibonacci(std::size_t n);

/// l_0 = 2, l_1 = 1, l_2 = 3, then l_n = l_(n-1) + l_(n-2).
Integer lucas(std::size_t n);

/// F_0 = 1, F_n = F_(n-1) + ... + F_(n-r), negative indices 0.
Integer racci(std::size_t n, std::size_t r);

inline constexpr std::size_t kRacciMultinomialCap = 30;

/// r-acci number as the sum over cycle types of count_cycle_type(n, type, r).
Integer racci_multinomial(std::size_t n, std::size_t r);

/// (phi^(n+1) - psi^(n+1)) / sqrt 5, evaluated exactly.
QuadExt binet_fib(std::size_t n);

/// phi^n + psi^n, evaluated exactly.
QuadExt binet_lucas(std::size_t n);

}  // namespace detrec

#endif  // DETREC_RECURRENCE_HPP
