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

#include "residsketch/testkit.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "Eigen/Eigenvalues"
#include "Eigen/QR"
#include "Eigen/SVD"
#include "residsketch/errors.h"
#include "residsketch/random.h"

namespace residsketch::testkit {
namespace {

std::vector<std::size_t> OrderByMagnitude(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(x[a]) > std::abs(x[b]);
  });
  return order;
}

Eigen::MatrixXd GaussianEigen(std::size_t rows, std::size_t cols,
                              SplitMix64& rng, double sigma) {
  std::normal_distribution<double> normal(0.0, sigma);
  Eigen::MatrixXd m(rows, cols);
  // Row-major fill order so the stream of draws matches DenseMatrix layout.
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = normal(rng);
  }
  return m;
}

Eigen::MatrixXd RandomOrthonormal(std::size_t rows, std::size_t cols,
                                  SplitMix64& rng) {
  Eigen::MatrixXd g = GaussianEigen(rows, cols, rng, 1.0);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(rows, cols);
}

}  // namespace

double ExactVectorResidual(std::span<const double> x, std::size_t k, double p) {
  const auto order = OrderByMagnitude(x);
  double sum = 0.0;
  // Smallest terms first.
  for (std::size_t i = order.size(); i-- > std::min(k, order.size());) {
    const double v = std::abs(x[order[i]]);
    if (v != 0.0) sum += std::pow(v, p);
  }
  return sum;
}

std::vector<std::size_t> ExactTopK(std::span<const double> x, std::size_t k) {
  auto order = OrderByMagnitude(x);
  order.resize(std::min(k, order.size()));
  return order;
}

double IndexPowerSum(std::span<const double> x,
                     std::span<const std::size_t> indices, double p) {
  std::vector<double> terms;
  terms.reserve(indices.size());
  for (std::size_t i : indices) terms.push_back(std::pow(std::abs(x[i]), p));
  std::sort(terms.begin(), terms.end(), std::greater<>());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

double ExactMatrixResidual(const DenseMatrix& a, std::size_t k) {
  if (!a.AllFinite()) throw InvalidInput("ExactMatrixResidual: non-finite");
  const std::size_t dim = std::min(a.rows(), a.cols());
  if (k >= dim) return 0.0;
  const auto view = a.eigen();
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
  if (a.rows() >= a.cols()) {
    gram.selfadjointView<Eigen::Lower>().rankUpdate(view.transpose());
  } else {
    gram.selfadjointView<Eigen::Lower>().rankUpdate(view);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram,
                                                     Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw NumericalFailure("ExactMatrixResidual: eigensolver failed");
  }
  // Ascending eigenvalues; the tail is the first dim - k of them.
  const auto& ev = eig.eigenvalues();
  double sum = 0.0;
  for (std::size_t i = 0; i < dim - k; ++i) {
    sum += std::max(0.0, ev(static_cast<Eigen::Index>(i)));
  }
  return std::sqrt(sum);
}

DenseMatrix Densify(std::span<const Triplet> triplets, std::size_t rows,
                    std::size_t cols) {
  DenseMatrix out(rows, cols);
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw InvalidInput("Densify: triplet outside " + std::to_string(rows) +
                         "x" + std::to_string(cols));
    }
    out(t.row, t.col) += t.value;
  }
  return out;
}

DenseMatrix LowRankPlusNoise(std::size_t n, std::size_t d, std::size_t rank,
                             double signal_scale, double noise_sigma,
                             std::uint64_t seed) {
  SplitMix64 rng(seed);
  Eigen::MatrixXd u = RandomOrthonormal(n, rank, rng);
  Eigen::MatrixXd v = RandomOrthonormal(d, rank, rng);
  Eigen::VectorXd sigma(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    sigma(static_cast<Eigen::Index>(i)) =
        signal_scale * static_cast<double>(rank - i);
  }
  Eigen::MatrixXd a = u * sigma.asDiagonal() * v.transpose();
  a += GaussianEigen(n, d, rng, noise_sigma);
  return DenseMatrix::FromEigen(a);
}

DenseMatrix GaussianMatrix(std::size_t rows, std::size_t cols,
                           std::uint64_t seed, double sigma) {
  SplitMix64 rng(seed);
  std::normal_distribution<double> normal(0.0, sigma);
  DenseMatrix m(rows, cols);
  for (double& v : m.data()) v = normal(rng);
  return m;
}

std::vector<Triplet> SparseIntegerMatrix(std::size_t rows, std::size_t cols,
                                         std::size_t nnz, std::uint64_t seed) {
  if (nnz > rows * cols) throw InvalidSpec("SparseIntegerMatrix: nnz too big");
  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(nnz * 2);
  std::vector<Triplet> out;
  out.reserve(nnz);
  while (out.size() < nnz) {
    const std::size_t r = rng.Below(rows);
    const std::size_t c = rng.Below(cols);
    if (!seen.insert(static_cast<std::uint64_t>(r) * cols + c).second) continue;
    out.push_back({r, c, static_cast<double>(1 + rng.Below(8))});
  }
  return out;
}

std::size_t HardInstanceSpec::rows() const {
  const double r = std::ceil(static_cast<double>(k) / (eps * eps) *
                             (1.0 - 1e-12));
  return static_cast<std::size_t>(r);
}

HardInstance GenerateHardInstance(const HardInstanceSpec& spec) {
  if (spec.k <= 1) throw InvalidSpec("hard instance needs k >= 2");
  if (!(spec.eps > 0.0 && spec.eps <= 1.0)) {
    throw InvalidSpec("hard instance needs eps in (0, 1]");
  }
  const std::size_t rows = spec.rows();
  const std::size_t cols = spec.cols();
  SplitMix64 rng(spec.seed);
  Eigen::MatrixXd h = GaussianEigen(rows, cols, rng, 1.0);
  Eigen::MatrixXd g = GaussianEigen(rows, cols, rng, 1.0);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeThinU |
                                               Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const auto& u = svd.matrixU();
  const auto& v = svd.matrixV();
  const auto last = static_cast<Eigen::Index>(cols - 1);

  Eigen::MatrixXd signal = u.leftCols(last) * s.head(last).asDiagonal() *
                           v.leftCols(last).transpose();
  if (spec.which == HardDistribution::kD2) {
    signal += s(last) * u.col(last) * v.col(last).transpose();
  }
  HardInstance out;
  out.matrix = DenseMatrix::FromEigen(g + spec.c * std::sqrt(spec.eps) * signal);
  out.noise = DenseMatrix::FromEigen(g);
  out.source = DenseMatrix::FromEigen(h);
  out.alpha = s(last);
  return out;
}

ZipfStream GenerateZipfStream(const ZipfStreamSpec& spec) {
  if (spec.n == 0 || spec.scale == 0) {
    throw InvalidSpec("Zipf stream needs n >= 1 and scale >= 1");
  }
  if (!(spec.turnstile_fraction >= 0.0 && spec.turnstile_fraction <= 1.0)) {
    throw InvalidSpec("turnstile fraction must lie in [0, 1]");
  }
  SplitMix64 rng(spec.seed);
  std::vector<std::size_t> perm(spec.n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = spec.n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.Below(i)]);
  }
  std::vector<double> cdf(spec.n);
  double total = 0.0;
  for (std::size_t r = 0; r < spec.n; ++r) {
    total += std::pow(static_cast<double>(r + 1), -spec.exponent);
    cdf[r] = total;
  }
  ZipfStream out;
  out.vector.assign(spec.n, 0.0);
  out.updates.reserve(spec.updates);
  for (std::size_t u = 0; u < spec.updates; ++u) {
    const double target = rng.Uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    const std::size_t rank =
        std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()),
                              spec.n - 1);
    double value = static_cast<double>(1 + rng.Below(spec.scale));
    if (rng.Uniform() < spec.turnstile_fraction) value = -value;
    const std::size_t index = perm[rank];
    out.updates.push_back({index, value});
    out.vector[index] += value;
  }
  return out;
}

GapVector GenerateGapVector(std::size_t k, std::size_t block, double spike,
                            std::uint64_t seed) {
  if (k == 0 || block == 0) throw InvalidSpec("gap vector needs k, block >= 1");
  SplitMix64 rng(seed);
  GapVector out;
  out.values.resize(k * block);
  for (std::size_t b = 0; b < k; ++b) {
    double* blk = out.values.data() + b * block;
    for (std::size_t i = 0; i < block; ++i) {
      blk[i] = static_cast<double>(rng.Below(3)) - 1.0;
    }
    if (rng.Below(2) == 1) {
      const std::size_t pos = rng.Below(block);
      blk[pos] = spike * rng.Sign();
      out.planted.push_back(b * block + pos);
    }
  }
  return out;
}

std::vector<VectorUpdate> VectorToStream(std::span<const double> x) {
  std::vector<VectorUpdate> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) out.push_back({i, x[i]});
  }
  return out;
}

std::vector<double> JacobiSingularValues(const DenseMatrix& a) {
  // Work on the orientation with fewer columns.
  const bool wide = a.cols() > a.rows();
  const DenseMatrix w = wide ? a.Transposed() : a;
  const std::size_t m = w.rows();
  const std::size_t n = w.cols();
  std::vector<std::vector<double>> col(n, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) col[j][i] = w(i, j);
  }
  constexpr double kTol = 1e-15;
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += col[p][i] * col[p][i];
          beta += col[q][i] * col[q][i];
          gamma += col[p][i] * col[q][i];
        }
        if (gamma == 0.0 || std::abs(gamma) <= kTol * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double xp = col[p][i];
          const double xq = col[q][i];
          col[p][i] = c * xp - s * xq;
          col[q][i] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (double v : col[j]) sum += v * v;
    sv[j] = std::sqrt(sum);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace residsketch::testkit
