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

#ifndef RESIDSKETCH_TESTKIT_H_
#define RESIDSKETCH_TESTKIT_H_

// Ground-truth oracles and instance generators. Everything here is exact or
// brute force and deliberately avoids the estimator code paths it is used to
// check.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "residsketch/bilinear.h"
#include "residsketch/dense_matrix.h"

namespace residsketch::testkit {

// ||x_{-k}||_p^p: zero the k largest |x_i| (ties keep the lower index) and
// sum |x_i|^p over the rest.
double ExactVectorResidual(std::span<const double> x, std::size_t k, double p);

// Indices of the k largest |x_i|, ties to the lower index.
std::vector<std::size_t> ExactTopK(std::span<const double> x, std::size_t k);

// Sum of |x_i|^p over `indices`, accumulated in descending order of |x_i| so
// that S_J <= S_I comparisons are exact whenever J's sorted values are
// dominated termwise by I's.
double IndexPowerSum(std::span<const double> x,
                     std::span<const std::size_t> indices, double p);

// ||A - A_k||_F through the eigenvalues of the smaller Gram matrix. This is
// a different route from the bidiagonal SVD used by the estimator.
double ExactMatrixResidual(const DenseMatrix& a, std::size_t k);

// Dense matrix from triplets (duplicates add).
DenseMatrix Densify(std::span<const Triplet> triplets, std::size_t rows,
                    std::size_t cols);

// n x d Gaussian noise plus a rank-r signal with singular values
// signal_scale * (r, r-1, ..., 1) along random orthonormal directions.
DenseMatrix LowRankPlusNoise(std::size_t n, std::size_t d, std::size_t rank,
                             double signal_scale, double noise_sigma,
                             std::uint64_t seed);

DenseMatrix GaussianMatrix(std::size_t rows, std::size_t cols,
                           std::uint64_t seed, double sigma = 1.0);

// Random sparse matrix with exactly `nnz` distinct nonzero positions holding
// small positive integers.
std::vector<Triplet> SparseIntegerMatrix(std::size_t rows, std::size_t cols,
                                         std::size_t nnz, std::uint64_t seed);

// Pair of distributions on (k/eps^2) x k matrices used to show that rank-
// (k-1) residual estimation needs large sketches.
enum class HardDistribution { kD1, kD2 };

struct HardInstanceSpec {
  std::size_t k = 2;
  double eps = 0.25;
  double c = 10.0;
  std::uint64_t seed = 0;
  HardDistribution which = HardDistribution::kD1;

  std::size_t rows() const;  // ceil(k / eps^2)
  std::size_t cols() const { return k; }
};

struct HardInstance {
  DenseMatrix matrix;  // G + c*sqrt(eps)*B, plus c*sqrt(eps)*alpha*u v^T for D2
  DenseMatrix noise;   // G
  DenseMatrix source;  // H, whose SVD supplies B and (alpha, u, v)
  double alpha = 0.0;  // k-th singular value of H
};

// Samples H and G with i.i.d. N(0,1) entries. B keeps the top k-1 singular
// triplets of H; (alpha, u, v) is the k-th. Throws InvalidSpec for k <= 1 or
// eps outside (0, 1].
HardInstance GenerateHardInstance(const HardInstanceSpec& spec);

struct ZipfStreamSpec {
  std::size_t n = 10000;
  double exponent = 1.1;
  std::size_t scale = 1;  // update magnitudes uniform in [1, scale]
  std::size_t updates = 100000;
  double turnstile_fraction = 0.0;  // share of negative updates
  std::uint64_t seed = 0;
};

struct VectorUpdate {
  std::size_t index;
  double value;

  friend bool operator==(const VectorUpdate&, const VectorUpdate&) = default;
};

struct ZipfStream {
  std::vector<VectorUpdate> updates;
  std::vector<double> vector;  // exact sum of the updates
};

// Each update picks rank r with probability proportional to r^-exponent and
// lands on index perm(r) for a seeded permutation perm of [n].
ZipfStream GenerateZipfStream(const ZipfStreamSpec& spec);

struct GapVector {
  std::vector<double> values;
  std::vector<std::size_t> planted;  // sorted positions of the spikes
};

// k blocks of length `block`; entries uniform in {-1, 0, 1}. With probability
// 1/2 per block one random position is overwritten by +-spike.
GapVector GenerateGapVector(std::size_t k, std::size_t block, double spike,
                            std::uint64_t seed);

// One update per nonzero coordinate, in index order.
std::vector<VectorUpdate> VectorToStream(std::span<const double> x);

// Cross-check SVD: one-sided Jacobi rotations on the columns. Slow, simple,
// independent of Eigen's decompositions.
std::vector<double> JacobiSingularValues(const DenseMatrix& a);

}  // namespace residsketch::testkit

#endif  // RESIDSKETCH_TESTKIT_H_
