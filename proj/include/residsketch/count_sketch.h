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

#ifndef RESIDSKETCH_COUNT_SKETCH_H_
#define RESIDSKETCH_COUNT_SKETCH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "residsketch/poly_hash.h"

namespace residsketch {

// Buckets per row for k-residual l_p estimation:
//   ceil(c_b * eps^(-2p/(p-1)) * k^(2/p) * n^(1-2/p)), clamped to [1, n].
// Requires p > 2 (UnsupportedP otherwise), 0 < eps <= 1 and 1 <= k <= n.
std::size_t BucketCount(std::size_t n, std::size_t k, double p, double eps,
                        double c_b = 1.0);

// ceil(c_l * log2 n), at least 1.
std::size_t RowCount(std::size_t n, double c_l = 3.0);

// Median of `values`. Even counts average the two middle order statistics so
// that negating every input negates the result exactly. Reorders `values`.
double Median(std::span<double> values);

// Turnstile CountSketch over the universe [n]: `rows` independent rows of
// `buckets` counters, each with a pairwise bucket hash and a 4-wise sign
// hash keyed from `seed`.
class VectorCountSketch {
 public:
  VectorCountSketch(std::size_t n, std::size_t rows, std::size_t buckets,
                    std::uint64_t seed);

  std::size_t universe() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t buckets() const { return buckets_; }
  std::uint64_t seed() const { return seed_; }

  std::size_t bucket(std::size_t row, std::size_t index) const {
    return bucket_hash_[row](index);
  }
  double sign(std::size_t row, std::size_t index) const {
    return sign_hash_[row](index);
  }
  double counter(std::size_t row, std::size_t b) const {
    return table_[row * buckets_ + b];
  }
  std::span<const double> table() const { return table_; }

  // x[index] += value. Throws InvalidInput if index >= n.
  void Update(std::size_t index, double value);

  // median_r sign_r(i) * table[r][bucket_r(i)].
  double Estimate(std::size_t index) const;
  // Estimates for the whole universe, O(n * rows).
  std::vector<double> EstimateAll() const;

  // Entrywise table sum. Throws IncompatibleStates on different shape/seed.
  void MergeFrom(const VectorCountSketch& other);

  friend bool operator==(const VectorCountSketch& a,
                         const VectorCountSketch& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.buckets_ == b.buckets_ &&
           a.seed_ == b.seed_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_;
  std::size_t rows_;
  std::size_t buckets_;
  std::uint64_t seed_;
  std::vector<BucketHash> bucket_hash_;
  std::vector<SignHash> sign_hash_;
  std::vector<double> table_;
};

}  // namespace residsketch

#endif  // RESIDSKETCH_COUNT_SKETCH_H_
