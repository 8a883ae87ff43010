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

#ifndef DETREC_IDENTITIES_HPP
#define DETREC_IDENTITIES_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "detrec/matrix.hpp"

namespace detrec {

/*
  One verifier per identity. Each computes the left-hand side one way and the
  right-hand side by one or more independent routes, then compares canonical
  text forms. When the routes on the right agree, rhs is their common value;
  when they do not, rhs lists them separated by " | ", so a failing report
  shows every disagreeing value and passed == (lhs == rhs) always holds.
*/

struct VerificationReport {
  std::string identity_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string lhs;
  std::string rhs;
  bool passed = false;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// {"identity", "params", "lhs", "rhs", "passed", "elapsed_ms"}
nlohmann::ordered_json to_json(const VerificationReport& report);
/// Inverse of to_json. Throws InvalidArgument on a schema mismatch.
VerificationReport report_from_json(const nlohmann::ordered_json& j);

/// The matrix constructors the verifiers use. Replaceable so tests can plant
/// a deliberately wrong matrix and check that some verifier notices.
struct MatrixBuilders {
  std::function<SquareMatrix<MultiPoly>(std::size_t m, std::size_t n_vars)> E;
  std::function<SquareMatrix<MultiPoly>(const std::vector<MultiPoly>&, std::size_t n)>
      C_symbolic;
  std::function<SquareMatrix<Integer>(const std::vector<Integer>&, std::size_t n)> C_integer;
  std::function<SquareMatrix<MultiPoly>(std::size_t n)> S_symbolic;
};

const MatrixBuilders& default_builders();

/// det E(e_1..e_m) = h_m in n_vars variables. m <= 6, n_vars <= 4.
VerificationReport verify_hom_det(std::size_t m, std::size_t n_vars,
                                  const MatrixBuilders& builders = default_builders());

/// Sum of all degree-n monomials in k variables against the cycle-type sum
/// of c(i_2..i_k, n) e_1^.. (-e_2)^i_2 ... ((-1)^(k-1) e_k)^i_k, and against
/// det E(e_1..e_k, 0..0) of order n. n <= 8, 2 <= k <= 4 (k = 1 allowed).
VerificationReport verify_sury(std::size_t n, std::size_t k,
                               const MatrixBuilders& builders = default_builders());

/// The three-variable identity in x, y, z: the binomial sum on the left,
/// the alternant quotient on the right, cross-checked with s_(n) and h_n.
/// n <= 8.
VerificationReport verify_mclaughlin(std::size_t n);

/// sum (-1)^i C(n-i, i) (x+y)^(n-2i) (xy)^i = x^n + x^(n-1) y + ... + y^n.
/// n <= 12.
VerificationReport verify_two_var(std::size_t n);

/// u_n by iteration against det C and the tiling weight sum, with symbolic
/// coefficients c_t = x(t-1). r <= 4, n <= 10.
VerificationReport verify_recurrence_det_symbolic(
    std::size_t r, std::size_t n, const MatrixBuilders& builders = default_builders());

/// Same with integer coefficients.
VerificationReport verify_recurrence_det(const std::vector<Integer>& coeffs, std::size_t n,
                                         const MatrixBuilders& builders = default_builders());

/// racci(n, r) against det G by elimination, by LSDs (n <= 10), and the
/// cycle-type multinomial sum. n <= 12, r <= 4.
VerificationReport verify_racci(std::size_t n, std::size_t r,
                                const MatrixBuilders& builders = default_builders());

/// f_n against det F by elimination and by LSDs (n <= 10). 1 <= n <= 12.
VerificationReport verify_fib(std::size_t n,
                              const MatrixBuilders& builders = default_builders());

/// f_n against Binet's formula and, for 1 <= n <= 12, det F. n <= 30.
VerificationReport verify_binet_fib(std::size_t n,
                                    const MatrixBuilders& builders = default_builders());

/// l_n against phi^n + psi^n and, for n >= 3, det A / 2 (n <= 12) and the
/// circular tiling count. n <= 30.
VerificationReport verify_binet_lucas(std::size_t n,
                                      const MatrixBuilders& builders = default_builders());

/// det S(a, b; n) = 2(a^n + b^n), also through the word decomposition
/// det S = (C_0 - C_1 + ...) + w(L1) + w(L2). 3 <= n <= 8.
VerificationReport verify_lucas_symbolic(std::size_t n,
                                         const MatrixBuilders& builders = default_builders());

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Every verifier over its parameter grid, sizes capped by max_n, plus ten
/// seeded random integer recurrences. Sorted by identity then parameters.
/// Runs verifiers concurrently; the result does not depend on scheduling.
std::vector<VerificationReport> verify_all(std::size_t max_n,
                                           std::uint64_t seed = kDefaultSeed,
                                           const MatrixBuilders& builders = default_builders());

bool all_passed(const std::vector<VerificationReport>& reports);

/// Identity ids in the order the CLI lists them.
const std::vector<std::string>& identity_ids();

}  // namespace detrec

#endif  // DETREC_IDENTITIES_HPP
