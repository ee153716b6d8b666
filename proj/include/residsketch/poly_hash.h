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

#ifndef RESIDSKETCH_POLY_HASH_H_
#define RESIDSKETCH_POLY_HASH_H_

#include <array>
#include <cstddef>
#include <cstdint>

namespace residsketch {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

constexpr std::uint64_t ModMersenne61(unsigned __int128 x) {
  // Two folds bring anything below 2^125 under 2^61 + 16.
  const unsigned __int128 once = (x & kMersenne61) + (x >> 61);
  const auto r = static_cast<std::uint64_t>((once & kMersenne61) + (once >> 61));
  return r >= kMersenne61 ? r - kMersenne61 : r;
}

constexpr std::uint64_t MulModMersenne61(std::uint64_t a, std::uint64_t b) {
  return ModMersenne61(static_cast<unsigned __int128>(a) * b);
}

// Degree-(K-1) polynomial over GF(2^61 - 1): a K-wise independent family.
// K = 2 gives h(i) = (a*i + b) mod P with a in [1, P) and b in [0, P).
template <std::size_t K>
class PolyHash {
 public:
  static_assert(K >= 2);

  // Coefficients drawn deterministically from `seed`; the leading one is
  // nonzero.
  explicit PolyHash(std::uint64_t seed);

  // Keys must be below 2^61 - 1.
  std::uint64_t operator()(std::uint64_t key) const {
    std::uint64_t acc = coeffs_[K - 1];
    for (std::size_t d = K - 1; d-- > 0;) {
      acc = ModMersenne61(static_cast<unsigned __int128>(acc) * key +
                          coeffs_[d]);
    }
    return acc;
  }

  // Coefficient of key^d.
  std::uint64_t coefficient(std::size_t d) const { return coeffs_[d]; }

 private:
  std::array<std::uint64_t, K> coeffs_{};
};

using PairwiseHash = PolyHash<2>;
using FourwiseHash = PolyHash<4>;

// Pairwise-independent map [n] -> [buckets].
class BucketHash {
 public:
  BucketHash(std::uint64_t seed, std::size_t buckets)
      : hash_(seed), buckets_(buckets) {}

  std::size_t operator()(std::uint64_t key) const {
    return static_cast<std::size_t>(hash_(key) % buckets_);
  }

 private:
  PairwiseHash hash_;
  std::size_t buckets_;
};

// 4-wise independent map [n] -> {-1, +1} from the low bit of a cubic.
class SignHash {
 public:
  explicit SignHash(std::uint64_t seed) : hash_(seed) {}

  double operator()(std::uint64_t key) const {
    return (hash_(key) & 1U) ? 1.0 : -1.0;
  }

 private:
  FourwiseHash hash_;
};

}  // namespace residsketch

#endif  // RESIDSKETCH_POLY_HASH_H_
