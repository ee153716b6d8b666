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

#ifndef RESIDSKETCH_VECTOR_RESIDUAL_H_
#define RESIDSKETCH_VECTOR_RESIDUAL_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "residsketch/count_sketch.h"
#include "residsketch/lp_backend.h"

namespace residsketch {

struct Candidate {
  std::size_t index;
  double estimate;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Up to k coordinates ordered by |estimate| descending, ties to the lower
// index. This is the candidate set J together with x_hat restricted to J.
struct TopKCandidates {
  std::vector<Candidate> entries;

  std::vector<std::size_t> indices() const;
};

// Selects the k largest |estimates[i]|; k is clamped to estimates.size().
TopKCandidates SelectTopK(std::span<const double> estimates, std::size_t k);

// Scans the whole universe of `cs` and selects the top k point estimates.
TopKCandidates TopKFromSketch(const VectorCountSketch& cs, std::size_t k);

struct ResidualParams {
  std::size_t n = 1;
  std::size_t k = 1;
  double p = 3.0;
  double eps = 0.5;
  double c_b = 1.0;  // bucket constant
  double c_l = 3.0;  // row constant: rows = ceil(c_l * log2 n)
  std::uint64_t seed = 0;
  // Nonzero values override the formulas above.
  std::size_t buckets = 0;
  std::size_t rows = 0;

  std::size_t ResolvedBuckets() const;
  std::size_t ResolvedRows() const;
};

// Streaming estimator of ||x_{-k}||_p^p for p > 2.
//
// Every update goes to a CountSketch and, in parallel, to an l_p estimator.
// At query time the top-k estimated coordinates J are subtracted from a copy
// of the estimator, whose output is then ||x - x_hat_J||_p^p up to the
// estimator's own error. The pipeline stays usable after a query.
class ResidualPipeline {
 public:
  // Uses an ExactLpBackend when `backend` is null. Throws UnsupportedP for
  // p <= 2.
  explicit ResidualPipeline(const ResidualParams& params,
                            std::unique_ptr<LpEstimator> backend = nullptr);

  ResidualPipeline(const ResidualPipeline& other);
  ResidualPipeline& operator=(const ResidualPipeline& other);
  ResidualPipeline(ResidualPipeline&&) = default;
  ResidualPipeline& operator=(ResidualPipeline&&) = default;

  const ResidualParams& params() const { return params_; }
  const VectorCountSketch& sketch() const { return cs_; }
  const LpEstimator& backend() const { return *backend_; }

  void Update(std::size_t index, double value);

  // Shards built with identical params merge by entrywise addition.
  void MergeFrom(const ResidualPipeline& other);

  // J with x_hat_J: the k-sparse recovery vector.
  TopKCandidates SparseRecover() const;

  // Estimate of ||x_{-k}||_p^p.
  double ResidualEstimate() const;

  struct Result {
    TopKCandidates recovered;
    double residual = 0.0;
  };
  // Both outputs from a single candidate scan.
  Result Query() const;

 private:
  ResidualParams params_;
  VectorCountSketch cs_;
  std::unique_ptr<LpEstimator> backend_;
};

}  // namespace residsketch

#endif  // RESIDSKETCH_VECTOR_RESIDUAL_H_
