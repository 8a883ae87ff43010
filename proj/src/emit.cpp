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

#include "detrec/emit.hpp"

namespace detrec {

Json cycles_json(const std::vector<Cycle>& cycles) {
  Json out = Json::array();
  for (const auto& c : cycles) out.push_back(c);
  return out;
}

Json tiling_json(const Tiling& t) {
  Json j;
  j["parts"] = t.parts;
  j["cycles"] = cycles_json(tiling_cycles(t));
  return j;
}

Json circular_tiling_json(const CircularTiling& t) {
  Json tiles = Json::array();
  for (const auto& tile : t.tiles) tiles.push_back({tile.start, tile.length});
  Json j;
  j["n"] = t.n;
  j["tiles"] = std::move(tiles);
  return j;
}

Json word_json(const Word& w) {
  Json j;
  j["letters"] = w.letters;
  j["weight"] = word_weight(w).to_string();
  return j;
}

Json cyclic_word_json(const CyclicWord& w) {
  Json j;
  j["word"] = w.letters;
  j["weight"] = cyclic_word_weight(w).to_string(VariableNames::ab());
  return j;
}

}  // namespace detrec
