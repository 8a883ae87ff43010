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

#include "detrec/recurrence.hpp"

#include "detrec/digraph.hpp"

namespace detrec {

RecurrenceSpec<MultiPoly> symbolic_recurrence(std::size_t order) {
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(order);
  for (std::size_t t = 0; t < order; ++t) {
    coeffs.push_back(MultiPoly::variable(static_cast<Monomial::Variable>(t)));
  }
  return RecurrenceSpec<MultiPoly>(std::move(coeffs));
}

Integer fibonacci(std::size_t n) {
  Integer prev = 1;  // f_0
  Integer cur = 1;   // f_1
  if (n == 0) return prev;
  for (std::size_t k = 2; k <= n; ++k) {
    Integer next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer lucas(std::size_t n) {
  static const Integer seeds[] = {2, 1, 3};
  if (n < 3) return seeds[n];
  Integer prev = seeds[1];
  Integer cur = seeds[2];
  for (std::size_t k = 3; k <= n; ++k) {
    Integer next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer racci(std::size_t n, std::size_t r) {
  if (r == 0) throw InvalidArgument("racci: need r >= 1");
  std::vector<Integer> f(n + 1);
  f[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t t = 1; t <= r && t <= k; ++t) f[k] += f[k - t];
  }
  return f[n];
}

Integer racci_multinomial(std::size_t n, std::size_t r) {
  if (r == 0) throw InvalidArgument("racci_multinomial: need r >= 1");
  check_cap("racci_multinomial: n", static_cast<long long>(n), kRacciMultinomialCap);
  Integer total = 0;
  for (const auto& ct : enumerate_cycle_types(n, r)) total += count_cycle_type(n, ct, r);
  return total;
}

QuadExt binet_fib(std::size_t n) {
  const auto k = static_cast<unsigned>(n + 1);
  const QuadExt diff = quad_pow(QuadExt::phi(), k) - quad_pow(QuadExt::psi(), k);
  return diff * QuadExt(Rational(0), Rational(1, 5), 5);  // 1/sqrt 5
}

QuadExt binet_lucas(std::size_t n) {
  const auto k = static_cast<unsigned>(n);
  return quad_pow(QuadExt::phi(), k) + quad_pow(QuadExt::psi(), k);
}

}  // namespace detrec
