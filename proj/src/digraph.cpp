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

#include "detrec/digraph.hpp"

namespace detrec {

CycleType::CycleType(std::map<std::size_t, std::size_t> counts) {
  for (const auto& [length, count] : counts) {
    if (length < 2) {
      throw InvalidCycleType("CycleType: cycle length " + std::to_string(length) +
                             " (loops are implied, lengths start at 2)");
    }
    if (count > 0) counts_.emplace(length, count);
  }
}

CycleType CycleType::of_cycles(const std::vector<Cycle>& cycles) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : cycles) {
    if (c.size() >= 2) ++counts[c.size()];
  }
  return CycleType(std::move(counts));
}

std::size_t CycleType::count(std::size_t length) const {
  auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t CycleType::covered_vertices() const noexcept {
  std::size_t total = 0;
  for (const auto& [length, count] : counts_) total += length * count;
  return total;
}

std::size_t CycleType::sign_exponent() const noexcept {
  std::size_t total = 0;
  for (const auto& [length, count] : counts_) total += (length - 1) * count;
  return total;
}

std::size_t CycleType::longest() const noexcept {
  return counts_.empty() ? 1 : counts_.rbegin()->first;
}

std::string CycleType::to_string() const {
  std::string out = "{";
  for (const auto& [length, count] : counts_) {
    if (out.size() > 1) out += ',';
    out += std::to_string(length) + ':' + std::to_string(count);
  }
  return out + '}';
}

Cycle canonical_cycle(Cycle c) {
  auto smallest = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), smallest, c.end());
  return c;
}

std::vector<Cycle> canonical_cover(std::vector<Cycle> cycles, std::size_t n) {
  std::vector<bool> seen(n + 1, false);
  std::size_t covered = 0;
  for (auto& c : cycles) {
    if (c.empty()) throw InvalidArgument("LSD: empty cycle");
    for (Vertex v : c) {
      if (v < 1 || v > n) {
        throw InvalidArgument("LSD: vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
      }
      if (seen[v]) throw InvalidArgument("LSD: vertex " + std::to_string(v) + " repeated");
      seen[v] = true;
      ++covered;
    }
    c = canonical_cycle(std::move(c));
  }
  if (covered != n) throw InvalidArgument("LSD: cycles do not span every vertex");
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

Integer factorial(std::size_t k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

}  // namespace

Integer count_cycle_type(std::size_t n, const CycleType& ct, std::size_t band) {
  if (ct.covered_vertices() > n) {
    throw InvalidCycleType("count_cycle_type: type " + ct.to_string() + " needs " +
                           std::to_string(ct.covered_vertices()) + " > " +
                           std::to_string(n) + " vertices");
  }
  if (ct.longest() > band) {
    throw InvalidCycleType("count_cycle_type: cycle length " +
                           std::to_string(ct.longest()) + " exceeds band " +
                           std::to_string(band));
  }
  // Cycles in such a digraph occupy runs of consecutive vertices, so an LSD is
  // a sequence of blocks: arrange n - sum (t-1) i_t blocks, of which
  // n - sum t i_t are loops and i_t are t-cycles.
  const std::size_t blocks = n - ct.sign_exponent();
  Integer denominator = factorial(n - ct.covered_vertices());
  for (const auto& [length, count] : ct.counts()) denominator *= factorial(count);
  Integer out;
  mpz_divexact(out.get_mpz_t(), factorial(blocks).get_mpz_t(), denominator.get_mpz_t());
  return out;
}

std::vector<CycleType> enumerate_cycle_types(std::size_t n, std::size_t band) {
  std::vector<CycleType> out;
  std::map<std::size_t, std::size_t> counts;
  auto recurse = [&](auto&& self, std::size_t length, std::size_t room) -> void {
    if (length > band) {
      out.emplace_back(counts);
      return;
    }
    for (std::size_t i = 0; i * length <= room; ++i) {
      counts[length] = i;
      self(self, length + 1, room - i * length);
    }
    counts.erase(length);
  };
  recurse(recurse, 2, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detrec
