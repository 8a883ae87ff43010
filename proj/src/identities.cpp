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

#include "detrec/identities.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

#include "detrec/combi.hpp"
#include "detrec/digraph.hpp"
#include "detrec/families.hpp"
#include "detrec/recurrence.hpp"
#include "detrec/symfunc.hpp"

namespace detrec {
namespace {

using Clock = std::chrono::steady_clock;

// Common value of the routes, or all of them joined when they disagree.
std::string agree(const std::vector<std::string>& routes) {
  if (std::adjacent_find(routes.begin(), routes.end(), std::not_equal_to<>()) ==
      routes.end()) {
    return routes.front();
  }
  std::string joined;
  for (const auto& r : routes) {
    if (!joined.empty()) joined += " | ";
    joined += r;
  }
  return joined;
}

VerificationReport finish(std::string id, nlohmann::ordered_json params,
                          std::string lhs, const std::vector<std::string>& rhs_routes,
                          Clock::time_point start) {
  VerificationReport report;
  report.identity_id = std::move(id);
  report.params = std::move(params);
  report.lhs = std::move(lhs);
  report.rhs = agree(rhs_routes);
  report.passed = report.lhs == report.rhs;
  report.elapsed = Clock::now() - start;
  return report;
}

void require_positive(const char* what, std::size_t value) {
  if (value == 0) throw InvalidArgument(std::string(what) + " must be >= 1");
}

void cap(const char* what, std::size_t value, std::size_t limit) {
  check_cap(what, static_cast<long long>(value), static_cast<long long>(limit));
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

MultiPoly var(Monomial::Variable v) { return MultiPoly::variable(v); }

// Every monomial x0^r0 ... x(k-1)^r(k-1) with r0 + ... = n, built from the
// exponent vectors directly.
MultiPoly all_monomials(std::size_t n, std::size_t k) {
  MultiPoly out;
  std::vector<Monomial::Entry> exps;
  auto recurse = [&](auto&& self, Monomial::Variable v, std::size_t left) -> void {
    if (v + 1 == k) {
      exps.emplace_back(v, static_cast<Monomial::Exponent>(left));
      out += MultiPoly(Monomial(exps), Integer(1));
      exps.pop_back();
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      exps.emplace_back(v, static_cast<Monomial::Exponent>(e));
      self(self, v + 1, left - e);
      exps.pop_back();
    }
  };
  recurse(recurse, 0, n);
  return out;
}

nlohmann::ordered_json coeffs_json(const std::vector<Integer>& coeffs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_si());
  return arr;
}

template <Scalar S>
VerificationReport recurrence_three_way(nlohmann::ordered_json params,
                                        const std::vector<S>& coeffs,
                                        const SquareMatrix<S>& c, std::size_t n,
                                        Clock::time_point start) {
  const S iterated = eval_recurrence(RecurrenceSpec<S>(coeffs), n);
  const S det = det_bareiss(c);
  S tilings = ScalarTraits<S>::zero();
  for (const auto& t : enumerate_tilings(n, coeffs.size())) {
    tilings = tilings + tiling_weight(t, std::span<const S>(coeffs));
  }
  return finish("recurrence-det", std::move(params), scalar_to_string(iterated),
                {scalar_to_string(det), scalar_to_string(tilings)}, start);
}

SquareMatrix<Integer> fib_matrix(std::size_t n, const MatrixBuilders& builders) {
  return builders.C_integer({Integer(1), Integer(1)}, n);
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity_id;
  j["params"] = report.params;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["passed"] = report.passed;
  j["elapsed_ms"] = report.elapsed.count();
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  static const char* const keys[] = {"identity", "params", "lhs",
                                     "rhs",      "passed", "elapsed_ms"};
  if (!j.is_object() || j.size() != std::size(keys)) {
    throw InvalidArgument("report: expected an object with exactly 6 keys");
  }
  for (const char* key : keys) {
    if (!j.contains(key)) throw InvalidArgument(std::string("report: missing ") + key);
  }
  if (!j["identity"].is_string() || !j["params"].is_object() || !j["lhs"].is_string() ||
      !j["rhs"].is_string() || !j["passed"].is_boolean() || !j["elapsed_ms"].is_number()) {
    throw InvalidArgument("report: field of the wrong type");
  }
  VerificationReport r;
  r.identity_id = j["identity"].get<std::string>();
  r.params = j["params"];
  r.lhs = j["lhs"].get<std::string>();
  r.rhs = j["rhs"].get<std::string>();
  r.passed = j["passed"].get<bool>();
  r.elapsed = std::chrono::duration<double, std::milli>(j["elapsed_ms"].get<double>());
  return r;
}

const MatrixBuilders& default_builders() {
  static const MatrixBuilders builders{
      .E = [](std::size_t m, std::size_t n_vars) { return build_E(m, n_vars); },
      .C_symbolic = [](const std::vector<MultiPoly>& c,
                       std::size_t n) { return build_C(c, n); },
      .C_integer = [](const std::vector<Integer>& c, std::size_t n) { return build_C(c, n); },
      .S_symbolic = [](std::size_t n) { return build_S_symbolic(n); },
  };
  return builders;
}

VerificationReport verify_hom_det(std::size_t m, std::size_t n_vars,
                                  const MatrixBuilders& builders) {
  const auto start = Clock::now();
  require_positive("verify_hom_det: m", m);
  require_positive("verify_hom_det: n_vars", n_vars);
  cap("verify_hom_det: m", m, 6);
  cap("verify_hom_det: n_vars", n_vars, 4);
  const MultiPoly det = det_bareiss(builders.E(m, n_vars));
  const MultiPoly h = homogeneous(static_cast<unsigned>(m), n_vars);
  return finish("hom-det", {{"m", m}, {"n_vars", n_vars}}, det.to_string(),
                {h.to_string()}, start);
}

VerificationReport verify_sury(std::size_t n, std::size_t k,
                               const MatrixBuilders& builders) {
  const auto start = Clock::now();
  require_positive("verify_sury: n", n);
  require_positive("verify_sury: k", k);
  cap("verify_sury: n", n, 8);
  cap("verify_sury: k", k, 4);

  const MultiPoly lhs = all_monomials(n, k);

  std::vector<MultiPoly> signed_e(k + 1);
  for (std::size_t t = 1; t <= k; ++t) {
    const MultiPoly e = elementary(static_cast<unsigned>(t), k);
    signed_e[t] = t % 2 == 1 ? e : -e;
  }
  MultiPoly rhs;
  for (const auto& ct : enumerate_cycle_types(n, k)) {
    MultiPoly term(count_cycle_type(n, ct, k));
    term *= pow(signed_e[1], static_cast<unsigned>(n - ct.covered_vertices()));
    for (const auto& [length, count] : ct.counts()) {
      term *= pow(signed_e[length], static_cast<unsigned>(count));
    }
    rhs += term;
  }

  const MultiPoly det = det_bareiss(builders.E(n, k));
  return finish("sury", {{"n", n}, {"k", k}}, lhs.to_string(),
                {rhs.to_string(), det.to_string()}, start);
}

VerificationReport verify_mclaughlin(std::size_t n) {
  const auto start = Clock::now();
  require_positive("verify_mclaughlin: n", n);
  cap("verify_mclaughlin: n", n, 8);
  const MultiPoly x = var(0), y = var(1), z = var(2);
  const MultiPoly sum1 = x + y + z;
  const MultiPoly sum2 = x * y + y * z + z * x;
  const MultiPoly prod = x * y * z;

  MultiPoly lhs;
  for (std::size_t j = 0; 3 * j <= n; ++j) {
    for (std::size_t i = 0; 2 * i + 3 * j <= n; ++i) {
      // C(n-i-2j, i+j) vanishes when i+j > n-i-2j; mpz_bin_uiui handles it.
      Integer coef = binomial(i + j, j) * binomial(n - i - 2 * j, i + j);
      if (i % 2 == 1) coef = -coef;
      lhs += MultiPoly(coef) * pow(sum1, static_cast<unsigned>(n - 2 * i - 3 * j)) *
             pow(sum2, static_cast<unsigned>(i)) * pow(prod, static_cast<unsigned>(j));
    }
  }

  const auto e = static_cast<unsigned>(n + 1);
  const MultiPoly numerator = x * y * (pow(x, e) - pow(y, e)) -
                              x * z * (pow(x, e) - pow(z, e)) +
                              y * z * (pow(y, e) - pow(z, e));
  const MultiPoly denominator = (x - y) * (x - z) * (y - z);
  const MultiPoly quotient = exact_divide(numerator, denominator);
  const MultiPoly s = schur(Partition{static_cast<unsigned>(n)}, 3);
  const MultiPoly h = homogeneous(static_cast<unsigned>(n), 3);
  return finish("mclaughlin", {{"n", n}}, lhs.to_string(),
                {quotient.to_string(), s.to_string(), h.to_string()}, start);
}

VerificationReport verify_two_var(std::size_t n) {
  const auto start = Clock::now();
  require_positive("verify_two_var: n", n);
  cap("verify_two_var: n", n, 12);
  const MultiPoly x = var(0), y = var(1);
  MultiPoly lhs;
  for (std::size_t i = 0; 2 * i <= n; ++i) {
    Integer coef = binomial(n - i, i);
    if (i % 2 == 1) coef = -coef;
    lhs += MultiPoly(coef) * pow(x + y, static_cast<unsigned>(n - 2 * i)) *
           pow(x * y, static_cast<unsigned>(i));
  }
  MultiPoly rhs;
  for (std::size_t k = 0; k <= n; ++k) {
    rhs += pow(x, static_cast<unsigned>(n - k)) * pow(y, static_cast<unsigned>(k));
  }
  return finish("two-var", {{"n", n}}, lhs.to_string(), {rhs.to_string()}, start);
}

VerificationReport verify_recurrence_det_symbolic(std::size_t r, std::size_t n,
                                                  const MatrixBuilders& builders) {
  const auto start = Clock::now();
  require_positive("verify_recurrence_det: r", r);
  require_positive("verify_recurrence_det: n", n);
  cap("verify_recurrence_det: r", r, 4);
  cap("verify_recurrence_det: n", n, 10);
  const auto coeffs = symbolic_recurrence(r).coefficients;
  return recurrence_three_way<MultiPoly>({{"coeffs", "symbolic"}, {"r", r}, {"n", n}},
                                         coeffs, builders.C_symbolic(coeffs, n), n,
                                         start);
}

VerificationReport verify_recurrence_det(const std::vector<Integer>& coeffs, std::size_t n,
                                         const MatrixBuilders& builders) {
  const auto start = Clock::now();
  require_positive("verify_recurrence_det: r", coeffs.size());
  require_positive("verify_recurrence_det: n", n);
  cap("verify_recurrence_det: r", coeffs.size(), 4);
  cap("verify_recurrence_det: n", n, 10);
  return recurrence_three_way<Integer>(
      {{"coeffs", coeffs_json(coeffs)}, {"r", coeffs.size()}, {"n", n}}, coeffs,
      builders.C_integer(coeffs, n), n, start);
}

VerificationReport verify_racci(std::size_t n, std::size_t r,
                                const MatrixBuilders& builders) {
  const auto start = Clock::now();
  require_positive("verify_racci: n", n);
  require_positive("verify_racci: r", r);
  cap("verify_racci: n", n, 12);
  cap("verify_racci: r", r, 4);
  const auto g = builders.C_integer(std::vector<Integer>(r, Integer(1)), n);
  std::vector<std::string> routes{det_bareiss(g).get_str()};
  if (n <= 10) routes.push_back(det_via_lsd(g).get_str());
  routes.push_back(racci_multinomial(n, r).get_str());
  return finish("racci", {{"n", n}, {"r", r}}, racci(n, r).get_str(), routes, start);
}

VerificationReport verify_fib(std::size_t n, const MatrixBuilders& builders) {
  const auto start = Clock::now();
  require_positive("verify_fib: n", n);
  cap("verify_fib: n", n, 12);
  const auto f = fib_matrix(n, builders);
  std::vector<std::string> routes{det_bareiss(f).get_str()};
  if (n <= 10) routes.push_back(det_via_lsd(f).get_str());
  return finish("fib", {{"n", n}}, fibonacci(n).get_str(), routes, start);
}

VerificationReport verify_binet_fib(std::size_t n, const MatrixBuilders& builders) {
  const auto start = Clock::now();
  cap("verify_binet_fib: n", n, 30);
  std::vector<std::string> routes{binet_fib(n).to_string()};
  if (n >= 1 && n <= 12) routes.push_back(det_bareiss(fib_matrix(n, builders)).get_str());
  return finish("binet-fib", {{"n", n}}, fibonacci(n).get_str(), routes, start);
}

VerificationReport verify_binet_lucas(std::size_t n, const MatrixBuilders& builders) {
  const auto start = Clock::now();
  cap("verify_binet_lucas: n", n, 30);
  std::vector<std::string> routes{binet_lucas(n).to_string()};
  if (n >= 3 && n <= 12) {
    const std::map<Monomial::Variable, QuadExt> golden{{0, QuadExt::phi()},
                                                       {1, QuadExt::psi()}};
    const auto a = builders.S_symbolic(n).map(
        [&](const MultiPoly& p) { return substitute(p, golden); });
    routes.push_back((det_bareiss(a) * QuadExt(Rational(1, 2))).to_string());
  }
  if (n >= 3 && n <= kTilingCap) {
    routes.push_back(std::to_string(enumerate_circular_tilings(n).size()));
  }
  return finish("binet-lucas", {{"n", n}}, lucas(n).get_str(), routes, start);
}

VerificationReport verify_lucas_symbolic(std::size_t n, const MatrixBuilders& builders) {
  const auto start = Clock::now();
  if (n < 3) {
    throw DimensionTooSmall("verify_lucas_symbolic: n = " + std::to_string(n) +
                            " but S needs n >= 3");
  }
  cap("verify_lucas_symbolic: n", n, 8);
  const auto names = VariableNames::ab();
  const auto s = builders.S_symbolic(n);
  const MultiPoly det = det_bareiss(s);
  const MultiPoly a = var(0), b = var(1);
  const auto k = static_cast<unsigned>(n);
  const MultiPoly closed = MultiPoly(2) * (pow(a, k) + pow(b, k));
  const auto [l1, l2] = lsd_excluded_pair(from_matrix(s));
  const MultiPoly decomposition = pie_cyclic_sum(n) + l1.signed_weight() + l2.signed_weight();
  return finish("lucas-symbolic", {{"n", n}}, det.to_string(names),
                {closed.to_string(names), decomposition.to_string(names)}, start);
}

std::vector<VerificationReport> verify_all(std::size_t max_n, std::uint64_t seed,
                                           const MatrixBuilders& builders) {
  std::vector<std::function<VerificationReport()>> jobs;
  const auto upto = [&](std::size_t limit) { return std::min(limit, max_n); };

  for (std::size_t m = 1; m <= upto(6); ++m) {
    for (std::size_t v = 1; v <= 4; ++v) {
      jobs.emplace_back([=, &builders] { return verify_hom_det(m, v, builders); });
    }
  }
  for (std::size_t n = 1; n <= upto(8); ++n) {
    for (std::size_t k = 2; k <= 4; ++k) {
      jobs.emplace_back([=, &builders] { return verify_sury(n, k, builders); });
    }
  }
  for (std::size_t n = 1; n <= upto(8); ++n) {
    jobs.emplace_back([=] { return verify_mclaughlin(n); });
  }
  for (std::size_t n = 1; n <= upto(12); ++n) {
    jobs.emplace_back([=] { return verify_two_var(n); });
  }
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t n = 1; n <= upto(8); ++n) {
      jobs.emplace_back(
          [=, &builders] { return verify_recurrence_det_symbolic(r, n, builders); });
    }
  }
  // Raw generator output reduced by modulo keeps the vectors identical across
  // standard library implementations.
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    std::vector<Integer> coeffs;
    for (std::size_t t = 0; t < r; ++t) coeffs.emplace_back(static_cast<long>(rng() % 11) - 5);
    const std::size_t n = upto(10);
    jobs.emplace_back([=, &builders] { return verify_recurrence_det(coeffs, n, builders); });
  }
  for (std::size_t n = 1; n <= upto(10); ++n) {
    for (std::size_t r = 1; r <= 4; ++r) {
      jobs.emplace_back([=, &builders] { return verify_racci(n, r, builders); });
    }
  }
  for (std::size_t n = 1; n <= upto(12); ++n) {
    jobs.emplace_back([=, &builders] { return verify_fib(n, builders); });
  }
  for (std::size_t n = 0; n <= upto(30); ++n) {
    jobs.emplace_back([=, &builders] { return verify_binet_fib(n, builders); });
    jobs.emplace_back([=, &builders] { return verify_binet_lucas(n, builders); });
  }
  for (std::size_t n = 3; n <= upto(8); ++n) {
    jobs.emplace_back([=, &builders] { return verify_lucas_symbolic(n, builders); });
  }

  std::vector<VerificationReport> reports(jobs.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) reports[i] = jobs[i]();
    }));
  }
  for (auto& f : pool) f.get();

  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
    return a.params < b.params;
  });
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{
      "hom-det", "sury",       "mclaughlin",  "two-var",     "recurrence-det",
      "racci",   "fib",        "binet-fib",   "binet-lucas", "lucas-symbolic"};
  return ids;
}

}  // namespace detrec
