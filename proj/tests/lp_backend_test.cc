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

#include "residsketch/lp_backend.h"

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "residsketch/errors.h"
#include "residsketch/random.h"

namespace residsketch {
namespace {

using Factory = std::function<std::unique_ptr<LpEstimator>(std::size_t)>;

struct BackendCase {
  const char* name;
  Factory make;
};

// Contract checks that any backend must pass, within its advertised error.
class LpContractTest : public ::testing::TestWithParam<BackendCase> {
 protected:
  std::unique_ptr<LpEstimator> Make(std::size_t n) const {
    return GetParam().make(n);
  }
  static bool Within(double got, double want, double eps) {
    const double slack = eps * std::abs(want) + 1e-9 * (1.0 + std::abs(want));
    return std::abs(got - want) <= slack;
  }
};

TEST_P(LpContractTest, LinearInUpdates) {
  auto a = Make(200);
  auto b = Make(200);
  SplitMix64 rng(1);
  std::vector<std::pair<std::size_t, double>> ups;
  for (int u = 0; u < 500; ++u) {
    ups.emplace_back(rng.Below(200), static_cast<double>(rng.Below(11)) - 5.0);
  }
  for (const auto& [i, v] : ups) a->Update(i, v);
  for (auto it = ups.rbegin(); it != ups.rend(); ++it) b->Update(it->first, it->second);
  for (double p : {1.0, 3.0, 4.5}) {
    EXPECT_TRUE(Within(a->Finalize(p), b->Finalize(p), a->error_factor()));
  }
}

TEST_P(LpContractTest, MergeThenFinalizeEqualsUnion) {
  auto whole = Make(300);
  auto left = Make(300);
  auto right = Make(300);
  SplitMix64 rng(2);
  for (int u = 0; u < 1000; ++u) {
    const std::size_t i = rng.Below(300);
    const double v = rng.Uniform() * 4.0 - 2.0;
    whole->Update(i, v);
    (u % 3 == 0 ? left : right)->Update(i, v);
  }
  left->MergeFrom(*right);
  EXPECT_TRUE(Within(left->Finalize(3.0), whole->Finalize(3.0),
                     whole->error_factor()));
}

TEST_P(LpContractTest, MergeRejectsOtherShapes) {
  auto a = Make(10);
  EXPECT_THROW(a->MergeFrom(*Make(11)), IncompatibleStates);
}

TEST_P(LpContractTest, CloneIsIndependent) {
  auto a = Make(10);
  a->Update(3, 2.0);
  auto c = a->Clone();
  c->Update(3, -2.0);
  EXPECT_TRUE(Within(a->Finalize(3.0), 8.0, a->error_factor()));
  EXPECT_TRUE(Within(c->Finalize(3.0), 0.0, a->error_factor()));
}

TEST_P(LpContractTest, OutOfRangeUpdateThrows) {
  auto a = Make(10);
  EXPECT_THROW(a->Update(10, 1.0), InvalidInput);
}

INSTANTIATE_TEST_SUITE_P(
    Backends, LpContractTest,
    ::testing::Values(BackendCase{
        "exact",
        [](std::size_t n) -> std::unique_ptr<LpEstimator> {
          return std::make_unique<ExactLpBackend>(n);
        }}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(ExactLpBackendTest, UnitVector) {
  ExactLpBackend b(5);
  b.Update(1, 1.0);
  for (double p : {1.0, 2.0, 3.0, 7.5}) EXPECT_EQ(b.Finalize(p), 1.0);
}

TEST(ExactLpBackendTest, AllOnes) {
  ExactLpBackend b(64);
  for (std::size_t i = 0; i < 64; ++i) b.Update(i, 1.0);
  EXPECT_EQ(b.Finalize(3.0), 64.0);
}

TEST(ExactLpBackendTest, ThreeFour) {
  ExactLpBackend b(2);
  b.Update(0, 3.0);
  b.Update(1, 4.0);
  EXPECT_DOUBLE_EQ(b.Finalize(3.0), 91.0);
}

TEST(ExactLpBackendTest, CancellationRestoresCoordinate) {
  ExactLpBackend b(4);
  b.Update(2, 9.0);
  b.Update(2, -9.0);
  EXPECT_EQ(b.values()[2], 0.0);
  EXPECT_EQ(b.Finalize(3.0), 0.0);
}

TEST(ExactLpBackendTest, MatchesDirectSummation) {
  ExactLpBackend b(100);
  std::vector<double> oracle(100, 0.0);
  SplitMix64 rng(4);
  for (int u = 0; u < 1000; ++u) {
    const std::size_t i = rng.Below(100);
    const double v = rng.Uniform() - 0.5;
    b.Update(i, v);
    oracle[i] += v;
  }
  for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(b.values()[i], oracle[i]);
  double sum = 0.0;
  for (double v : oracle) sum += std::pow(std::abs(v), 3.0);
  EXPECT_NEAR(b.Finalize(3.0), sum, 1e-12 * sum);
}

TEST(ExactLpBackendTest, ScaleCovariance) {
  ExactLpBackend x(50), cx(50);
  SplitMix64 rng(5);
  for (std::size_t i = 0; i < 50; ++i) {
    const double v = static_cast<double>(rng.Below(9)) - 4.0;
    x.Update(i, v);
    cx.Update(i, -3.0 * v);
  }
  EXPECT_NEAR(cx.Finalize(3.0), 27.0 * x.Finalize(3.0), 1e-9 * cx.Finalize(3.0));
}

TEST(ExactLpBackendTest, RejectsSubunitP) {
  ExactLpBackend b(3);
  EXPECT_THROW(b.Finalize(0.5), InvalidSpec);
}

TEST(PowerSumTest, Examples) {
  const std::vector<double> x = {3, -4};
  EXPECT_DOUBLE_EQ(PowerSum(x, 3.0), 91.0);
  EXPECT_DOUBLE_EQ(PowerSum(x, 2.0), 25.0);
}

}  // namespace
}  // namespace residsketch
