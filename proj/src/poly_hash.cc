// Copyright 2026 The Residsketch Authors.
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

#include "residsketch/poly_hash.h"

#include "residsketch/random.h"

namespace residsketch {

template <std::size_t K>
PolyHash<K>::PolyHash(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t d = 0; d < K; ++d) coeffs_[d] = rng.Below(kMersenne61);
  while (coeffs_[K - 1] == 0) coeffs_[K - 1] = rng.Below(kMersenne61);
}

template class PolyHash<2>;
template class PolyHash<4>;

}  // namespace residsketch
