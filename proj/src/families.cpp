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

#include "detrec/families.hpp"

namespace detrec {

SquareMatrix<Integer> build_G(std::size_t n, std::size_t r) {
  if (r == 0) throw InvalidArgument("build_G: need r >= 1");
  const std::vector<Integer> ones(r, Integer(1));
  return build_C(ones, n);
}

SquareMatrix<Integer> build_F(std::size_t n) { return build_G(n, 2); }

SquareMatrix<MultiPoly> build_S_symbolic(std::size_t n) {
  return build_S(MultiPoly::variable(0), MultiPoly::variable(1), n);
}

SquareMatrix<QuadExt> build_A(std::size_t n) {
  return build_S(QuadExt::phi(), QuadExt::psi(), n);
}

}  // namespace detrec
