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

#ifndef RESIDSKETCH_BILINEAR_H_
#define RESIDSKETCH_BILINEAR_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "residsketch/dense_matrix.h"
#include "residsketch/sketch.h"

namespace residsketch {

// One turnstile update A[row, col] += value.
struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Sketch size as a function of (k, eps). m is normally a direct user
// parameter; these helpers exist for callers that think in accuracy terms.
struct SketchSizePolicy {
  double c_outer = 1.0;  // m = ceil(c_outer * k / eps^2)
  double c_inner = 1.0;  // inner = ceil(c_inner * k^2 / eps^2)
  std::size_t inner_cap = 4096;

  std::size_t OuterDim(std::size_t k, double eps) const;
  std::size_t InnerDim(std::size_t k, double eps) const;
  // Inner CountSketch size when m is given directly: min(m^2, inner_cap).
  std::size_t InnerDimForOuter(std::size_t m) const;
};

// JL(m x inner) composed with CountSketch(inner x n). The two stages get
// independent seeds derived from `seed`.
ComposedSketch MakeComposedSketch(std::size_t m, std::size_t inner,
                                  std::size_t n, std::uint64_t seed);

// Accumulates S*A*T under single-entry updates.
//
// For a composed side only the inner (CountSketch) stage is applied per
// update; the dense outer stage is applied once in Finalize(). The
// accumulator therefore has shape inner_left x inner_right in that case.
//
// Single writer. Shard a stream over states built from identical specs and
// combine them with Merge.
class BilinearSketchState {
 public:
  BilinearSketchState(AnySketch left, AnySketch right);

  // Rows of A (input dimension of the left sketch).
  std::size_t rows() const { return InDim(left_); }
  // Columns of A (input dimension of the right sketch).
  std::size_t cols() const { return InDim(right_); }

  const AnySketch& left() const { return left_; }
  const AnySketch& right() const { return right_; }

  // Raw accumulator at the per-update stage.
  const DenseMatrix& accumulator() const { return acc_; }

  // Throws InvalidInput on out-of-range indices or non-finite value.
  void Update(std::size_t row, std::size_t col, double value);
  void Update(const Triplet& t) { Update(t.row, t.col, t.value); }
  void Update(std::span<const Triplet> stream);

  // acc += other.acc. Throws IncompatibleStates unless every stage spec
  // (family, dims, sparsity, seed) matches.
  void MergeFrom(const BilinearSketchState& other);

  bool SameSketches(const BilinearSketchState& other) const;

  // S*A*T with the outer stages applied, shape OutDim(left) x OutDim(right).
  DenseMatrix Finalize() const;

  // ||SAT - [SAT]_k||_F.
  double EstimateResidual(std::size_t k) const;

  // Snapshot: text header with stage records and accumulator dims, then the
  // accumulator row-major as little-endian IEEE-754 doubles.
  void WriteSnapshot(std::ostream& out) const;
  static BilinearSketchState ReadSnapshot(std::istream& in);

 private:
  AnySketch left_;
  AnySketch right_;
  DenseMatrix acc_;
};

BilinearSketchState Merge(const BilinearSketchState& a,
                          const BilinearSketchState& b);

struct BatchEstimate {
  double estimate = 0.0;
  double sketch_ms = 0.0;    // streaming every nonzero through Update
  double finalize_ms = 0.0;  // outer stages + SVD
};

// Streams every triplet through a fresh state and estimates. Same code path
// as incremental use.
BatchEstimate EstimateBatch(std::span<const Triplet> triplets, std::size_t k,
                            const AnySketch& left, const AnySketch& right);
BatchEstimate EstimateBatch(const DenseMatrix& a, std::size_t k,
                            const AnySketch& left, const AnySketch& right);

// Nonzeros of `a` in row-major order.
std::vector<Triplet> ToTriplets(const DenseMatrix& a);

}  // namespace residsketch

#endif  // RESIDSKETCH_BILINEAR_H_
