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

#ifndef DETREC_EMIT_HPP
#define DETREC_EMIT_HPP

#include "json.hpp"

#include "detrec/combi.hpp"
#include "detrec/digraph.hpp"

namespace detrec {

using Json = nlohmann::ordered_json;

Json cycles_json(const std::vector<Cycle>& cycles);

/// {"parts": [...], "cycles": [[...], ...]}: a tiling next to the cycle list
/// of the LSD it corresponds to.
Json tiling_json(const Tiling& t);

/// {"n": n, "tiles": [[start, length], ...]}
Json circular_tiling_json(const CircularTiling& t);

/// {"letters": [...], "weight": "..."}
Json word_json(const Word& w);

/// {"word": "abba", "weight": "..."} with a, b as variable names.
Json cyclic_word_json(const CyclicWord& w);

/// {"cycles": [[...], ...], "cycle_count": c, "sign": +-1, "weight": "..."}
template <Scalar S>
Json lsd_json(const LinearSubdigraph<S>& lsd, const VariableNames& names = {}) {
  Json j;
  j["cycles"] = cycles_json(lsd.cycles);
  j["cycle_count"] = lsd.cycle_count();
  j["sign"] = lsd.sign();
  if constexpr (std::is_same_v<S, MultiPoly>) {
    j["weight"] = lsd.weight.to_string(names);
  } else {
    j["weight"] = scalar_to_string(lsd.weight);
  }
  return j;
}

}  // namespace detrec

#endif  // DETREC_EMIT_HPP
