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
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "residsketch/errors.h"
#include "residsketch/linalg.h"
#include "residsketch/lp_backend.h"
#include "residsketch/random.h"
#include "residsketch/vector_residual.h"

namespace residsketch::testkit {
namespace {

TEST(ExactVectorResidualTest, Examples) {
  const std::vector<double> x = {5, 3, 1};
  EXPECT_EQ(ExactVectorResidual(x, 1, 3.0), 28.0);
  EXPECT_EQ(ExactVectorResidual(x, 3, 3.0), 0.0);
  EXPECT_EQ(ExactVectorResidual(x, 0, 3.0), 153.0);
  const std::vector<double> signs = {-4, 4, 1};
  // Tie on |x|: the lower index is kept.
  EXPECT_EQ(ExactTopK(signs, 1), (std::vector<std::size_t>{0}));
  EXPECT_EQ(ExactVectorResidual(signs, 1, 2.0), 17.0);
}

TEST(IndexPowerSumTest, SumsSelectedEntries) {
  const std::vector<double> x = {1, -2, 3};
  const std::vector<std::size_t> idx = {0, 2};
  EXPECT_EQ(IndexPowerSum(x, idx, 3.0), 28.0);
}

TEST(ExactMatrixResidualTest, Examples) {
  EXPECT_NEAR(ExactMatrixResidual(DenseMatrix::Diagonal({3, 2, 1}), 1),
              std::sqrt(5.0), 1e-12);
  EXPECT_EQ(ExactMatrixResidual(DenseMatrix::Zeros(4, 3), 1), 0.0);
  EXPECT_EQ(ExactMatrixResidual(GaussianMatrix(5, 4, 1), 4), 0.0);
}

TEST(ExactMatrixResidualTest, AgreesWithJacobiOracle) {
  const DenseMatrix m = GaussianMatrix(10, 8, 99);
  const auto sv = JacobiSingularValues(m);
  double tail = 0.0;
  for (std::size_t i = 3; i < sv.size(); ++i) tail += sv[i] * sv[i];
  EXPECT_NEAR(ExactMatrixResidual(m, 3), std::sqrt(tail), 1e-8 * std::sqrt(tail));
}

TEST(ExactMatrixResidualTest, MutualOracleWithLinalg) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t rows = 3 + seed % 17;
    const std::size_t cols = 2 + (seed * 5) % 13;
    const std::size_t k = seed % std::min(rows, cols);
    const DenseMatrix m = GaussianMatrix(rows, cols, 10000 + seed);
    const double a = ExactMatrixResidual(m, k);
    const double b = RankKResidual(m, k);
    EXPECT_NEAR(a, b, 1e-8 * std::max(b, 1e-300)) << rows << "x" << cols;
  }
}

TEST(GeneratorTest, DeterministicUnderSeed) {
  EXPECT_EQ(GaussianMatrix(4, 3, 5), GaussianMatrix(4, 3, 5));
  EXPECT_NE(GaussianMatrix(4, 3, 5), GaussianMatrix(4, 3, 6));
  EXPECT_EQ(LowRankPlusNoise(20, 10, 2, 3.0, 0.1, 1),
            LowRankPlusNoise(20, 10, 2, 3.0, 0.1, 1));
  EXPECT_EQ(SparseIntegerMatrix(30, 40, 100, 2), SparseIntegerMatrix(30, 40, 100, 2));
  const HardInstanceSpec spec{.seed = 4};
  EXPECT_EQ(GenerateHardInstance(spec).matrix, GenerateHardInstance(spec).matrix);
  EXPECT_EQ(GenerateZipfStream({.seed = 3}).updates,
            GenerateZipfStream({.seed = 3}).updates);
  EXPECT_EQ(GenerateGapVector(4, 50, 5.0, 1).values,
            GenerateGapVector(4, 50, 5.0, 1).values);
}

TEST(GeneratorTest, LowRankPlusNoiseHasExpectedSpectrum) {
  const DenseMatrix a = LowRankPlusNoise(60, 40, 3, 10.0, 0.0, 7);
  const auto s = SingularValues(a).values;
  EXPECT_NEAR(s[0], 30.0, 1e-9);
  EXPECT_NEAR(s[1], 20.0, 1e-9);
  EXPECT_NEAR(s[2], 10.0, 1e-9);
  EXPECT_NEAR(s[3], 0.0, 1e-9);
}

TEST(GeneratorTest, SparseIntegerMatrixShape) {
  const auto t = SparseIntegerMatrix(30, 40, 200, 9);
  ASSERT_EQ(t.size(), 200u);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : t) {
    EXPECT_LT(e.row, 30u);
    EXPECT_LT(e.col, 40u);
    EXPECT_GE(e.value, 1.0);
    EXPECT_EQ(e.value, std::floor(e.value));
    seen.insert({e.row, e.col});
  }
  EXPECT_EQ(seen.size(), 200u);
}

TEST(DensifyTest, DuplicatesAdd) {
  const std::vector<Triplet> t = {{0, 1, 2.0}, {0, 1, 3.0}, {1, 0, -1.0}};
  const DenseMatrix d = Densify(t, 2, 2);
  EXPECT_EQ(d, DenseMatrix::FromRows({{0, 5}, {-1, 0}}));
}

TEST(HardInstanceTest, Shape) {
  const auto h = GenerateHardInstance({.k = 2, .eps = 0.25});
  EXPECT_EQ(h.matrix.rows(), 32u);
  EXPECT_EQ(h.matrix.cols(), 2u);
  EXPECT_EQ(HardInstanceSpec({.k = 3, .eps = 0.3}).rows(), 34u);
}

TEST(HardInstanceTest, RejectsDegenerateSpecs) {
  EXPECT_THROW(GenerateHardInstance({.k = 1}), InvalidSpec);
  EXPECT_THROW(GenerateHardInstance({.k = 2, .eps = 0.0}), InvalidSpec);
  EXPECT_THROW(GenerateHardInstance({.k = 2, .eps = 1.5}), InvalidSpec);
}

// With the same H and G, D2 - D1 is exactly the k-th triplet scaled by c*sqrt(eps),
// and D2 = G + c*sqrt(eps)*H.
TEST(HardInstanceTest, D2AddsTheKthTriplet) {
  HardInstanceSpec spec{.k = 3, .eps = 0.2, .seed = 11};
  spec.which = HardDistribution::kD2;
  const auto d2 = GenerateHardInstance(spec);
  DenseMatrix expected = d2.source;
  expected *= spec.c * std::sqrt(spec.eps);
  expected += d2.noise;
  EXPECT_LE(MaxAbsDiff(d2.matrix, expected), 1e-10);
  spec.which = HardDistribution::kD1;
  const auto d1 = GenerateHardInstance(spec);
  EXPECT_EQ(d1.noise, d2.noise);
  EXPECT_EQ(d1.alpha, d2.alpha);
  EXPECT_NEAR(d2.alpha, SingularValues(d2.source).values[2], 1e-10);
}

TEST(HardInstanceTest, D2EntryVariance) {
  HardInstanceSpec spec{.k = 10, .eps = 0.1, .c = 10.0};
  spec.which = HardDistribution::kD2;
  double sum = 0.0, sq = 0.0;
  std::size_t count = 0;
  for (std::uint64_t s = 0; count < 1000000; ++s) {
    spec.seed = s;
    const auto h = GenerateHardInstance(spec);
    for (double v : h.matrix.data()) {
      sum += v;
      sq += v * v;
      ++count;
    }
  }
  const double mean = sum / count;
  const double var = sq / count - mean * mean;
  const double want = 1.0 + spec.c * spec.c * spec.eps;
  EXPECT_NEAR(var, want, 0.05 * want);
}

TEST(HardInstanceTest, D1WeylBound) {
  int held = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto h = GenerateHardInstance({.k = 4, .eps = 0.25, .seed = s});
    const double sigma_min = SingularValues(h.matrix).values.back();
    held += sigma_min <= SingularValues(h.noise).values.front();
  }
  EXPECT_GE(held, 95);
}

TEST(ZipfStreamTest, InsertOnlyByDefault) {
  const auto z = GenerateZipfStream({.n = 500, .updates = 2000, .seed = 1});
  ASSERT_EQ(z.updates.size(), 2000u);
  for (const auto& u : z.updates) {
    EXPECT_GT(u.value, 0.0);
    EXPECT_LT(u.index, 500u);
  }
}

TEST(ZipfStreamTest, ReplayReproducesVector) {
  const auto z = GenerateZipfStream(
      {.n = 1000, .scale = 5, .updates = 5000, .turnstile_fraction = 0.3, .seed = 2});
  std::vector<double> replay(1000, 0.0);
  int negative = 0;
  for (const auto& u : z.updates) {
    replay[u.index] += u.value;
    negative += u.value < 0;
    EXPECT_EQ(std::abs(u.value), std::floor(std::abs(u.value)));
    EXPECT_LE(std::abs(u.value), 5.0);
  }
  EXPECT_EQ(replay, z.vector);
  EXPECT_NEAR(negative / 5000.0, 0.3, 0.03);
}

TEST(ZipfStreamTest, HeadDominatesTail) {
  const auto z = GenerateZipfStream({.n = 10000, .exponent = 1.1, .seed = 5});
  std::vector<double> sorted = z.vector;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  EXPECT_GE(sorted[0], sorted[99]);
  EXPECT_GT(sorted[0], 10 * sorted[99]);
}

TEST(GapVectorTest, ShapeAndAlphabet) {
  const auto g = GenerateGapVector(10, 100, 7.0, 3);
  ASSERT_EQ(g.values.size(), 1000u);
  EXPECT_TRUE(std::is_sorted(g.planted.begin(), g.planted.end()));
  std::set<std::size_t> planted(g.planted.begin(), g.planted.end());
  std::vector<int> per_block(10, 0);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const double a = std::abs(g.values[i]);
    if (planted.count(i)) {
      EXPECT_EQ(a, 7.0);
      ++per_block[i / 100];
    } else {
      EXPECT_TRUE(a == 0.0 || a == 1.0);
    }
  }
  for (int c : per_block) EXPECT_LE(c, 1);
}

TEST(GapVectorTest, ZeroSpikeIsIndistinguishable) {
  const auto g = GenerateGapVector(5, 40, 0.0, 1);
  for (double v : g.values) EXPECT_LE(std::abs(v), 1.0);
}

TEST(GapVectorTest, PlantedFoundByExactTopK) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = GenerateGapVector(10, 100, 3.0, s);
    auto top = ExactTopK(g.values, g.planted.size());
    std::sort(top.begin(), top.end());
    EXPECT_EQ(top, g.planted);
  }
}

TEST(GapVectorTest, SparseRecoverFindsMostSpikes) {
  constexpr std::size_t kK = 10;
  constexpr std::size_t kBlock = 1000;
  constexpr double kP = 3.0;
  const double spike = std::pow(static_cast<double>(kBlock), 1.0 / kP);
  std::size_t planted = 0, found = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto g = GenerateGapVector(kK, kBlock, spike, DeriveSeed(1, s));
    ResidualParams params;
    params.n = kK * kBlock;
    params.k = kK;
    params.p = kP;
    params.eps = 0.5;
    params.seed = DeriveSeed(2, s);
    ResidualPipeline pipe(params);
    for (const auto& u : VectorToStream(g.values)) pipe.Update(u.index, u.value);
    const auto j = pipe.SparseRecover().indices();
    const std::set<std::size_t> js(j.begin(), j.end());
    planted += g.planted.size();
    for (std::size_t p : g.planted) found += js.count(p);
  }
  EXPECT_GE(3 * found, 2 * planted);
}

TEST(VectorToStreamTest, OneUpdatePerNonzero) {
  const std::vector<double> x = {0, 2, 0, -1};
  EXPECT_EQ(VectorToStream(x),
            (std::vector<VectorUpdate>{{1, 2.0}, {3, -1.0}}));
}

}  // namespace
}  // namespace residsketch::testkit
