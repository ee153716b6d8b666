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

#include "residsketch/count_sketch.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "residsketch/errors.h"
#include "residsketch/random.h"

namespace residsketch {

std::size_t BucketCount(std::size_t n, std::size_t k, double p, double eps,
                        double c_b) {
  if (!(p > 2.0)) {
    throw UnsupportedP("bucket count requires p > 2, got " + std::to_string(p));
  }
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw InvalidSpec("eps must lie in (0, 1], got " + std::to_string(eps));
  }
  if (k < 1 || k > n) throw InvalidSpec("need 1 <= k <= n");
  if (!(c_b > 0.0)) throw InvalidSpec("c_b must be positive");
  const double nn = static_cast<double>(n);
  const double raw = c_b * std::pow(eps, -2.0 * p / (p - 1.0)) *
                     std::pow(static_cast<double>(k), 2.0 / p) *
                     std::pow(nn, 1.0 - 2.0 / p);
  // A relative nudge keeps values that are integers in exact arithmetic
  // (e.g. n^(1/3) = 100) from rounding up past themselves.
  const double b = std::ceil(raw * (1.0 - 1e-12));
  if (b >= nn) return n;
  return b < 1.0 ? 1 : static_cast<std::size_t>(b);
}

std::size_t RowCount(std::size_t n, double c_l) {
  if (n < 2) return 1;
  const double r = std::ceil(c_l * std::log2(static_cast<double>(n)));
  return r < 1.0 ? 1 : static_cast<std::size_t>(r);
}

double Median(std::span<double> values) {
  const std::size_t count = values.size();
  if (count == 0) return 0.0;
  const std::size_t mid = count / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (count % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

VectorCountSketch::VectorCountSketch(std::size_t n, std::size_t rows,
                                     std::size_t buckets, std::uint64_t seed)
    : n_(n), rows_(rows), buckets_(buckets), seed_(seed) {
  if (n < 1 || rows < 1 || buckets < 1) {
    throw InvalidSpec("CountSketch needs n, rows, buckets >= 1");
  }
  if (n >= kMersenne61) throw InvalidSpec("universe exceeds hash field");
  bucket_hash_.reserve(rows);
  sign_hash_.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    bucket_hash_.emplace_back(DeriveSeed(seed, 2 * r), buckets);
    sign_hash_.emplace_back(DeriveSeed(seed, 2 * r + 1));
  }
  table_.assign(rows * buckets, 0.0);
}

void VectorCountSketch::Update(std::size_t index, double value) {
  if (index >= n_) {
    throw InvalidInput("CountSketch update: index " + std::to_string(index) +
                       " >= n " + std::to_string(n_));
  }
  if (value == 0.0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    table_[r * buckets_ + bucket_hash_[r](index)] +=
        value * sign_hash_[r](index);
  }
}

double VectorCountSketch::Estimate(std::size_t index) const {
  if (index >= n_) {
    throw InvalidInput("CountSketch estimate: index out of range");
  }
  thread_local std::vector<double> votes;
  votes.resize(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    votes[r] = sign_hash_[r](index) * table_[r * buckets_ + bucket_hash_[r](index)];
  }
  return Median(votes);
}

std::vector<double> VectorCountSketch::EstimateAll() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = Estimate(i);
  return out;
}

void VectorCountSketch::MergeFrom(const VectorCountSketch& other) {
  if (n_ != other.n_ || rows_ != other.rows_ || buckets_ != other.buckets_ ||
      seed_ != other.seed_) {
    throw IncompatibleStates("CountSketch merge: shape or seed differs");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += other.table_[i];
}

}  // namespace residsketch
