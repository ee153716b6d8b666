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

#ifndef RESIDSKETCH_TESTS_ACCEPTANCE_VECTOR_TRIALS_H_
#define RESIDSKETCH_TESTS_ACCEPTANCE_VECTOR_TRIALS_H_

// One randomized end-to-end run of the vector pipeline, shared by the
// acceptance suite and the calibration pilot.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "residsketch/lp_backend.h"
#include "residsketch/random.h"
#include "residsketch/testkit.h"
#include "residsketch/vector_residual.h"

namespace residsketch::acceptance {

enum class VectorWorkload { kZipf, kGap };

inline std::string WorkloadName(VectorWorkload w) {
  return w == VectorWorkload::kZipf ? "zipf" : "gap";
}

struct VectorTrialConfig {
  VectorWorkload workload = VectorWorkload::kZipf;
  std::size_t n = 10000;
  std::size_t k = 10;
  double p = 3.0;
  double eps = 0.5;
};

struct VectorTrialOutcome {
  double tail = 0.0;            // ||x_{-k}||_p^p
  double estimate = 0.0;        // pipeline output
  double recovery_error = 0.0;  // ||x - x_hat_J||_p^p
  double s_i = 0.0;             // sum over the true top k of |x_i|^p
  double s_j = 0.0;             // same over the candidate set J
  double max_point_error = 0.0; // max over J of |x_hat_j - x_j|
};

inline VectorTrialOutcome RunVectorTrial(const VectorTrialConfig& cfg,
                                         std::uint64_t seed) {
  std::vector<double> x;
  std::vector<testkit::VectorUpdate> stream;
  if (cfg.workload == VectorWorkload::kZipf) {
    auto z = testkit::GenerateZipfStream({.n = cfg.n,
                                          .exponent = 1.1,
                                          .updates = 10 * cfg.n,
                                          .seed = DeriveSeed(seed, 0)});
    x = std::move(z.vector);
    stream = std::move(z.updates);
  } else {
    const std::size_t block = cfg.n / cfg.k;
    const double spike = std::pow(static_cast<double>(block), 1.0 / cfg.p);
    x = testkit::GenerateGapVector(cfg.k, block, spike, DeriveSeed(seed, 0)).values;
    stream = testkit::VectorToStream(x);
  }

  ResidualParams params;
  params.n = cfg.n;
  params.k = cfg.k;
  params.p = cfg.p;
  params.eps = cfg.eps;
  params.seed = DeriveSeed(seed, 1);
  ResidualPipeline pipe(params);
  for (const auto& u : stream) pipe.Update(u.index, u.value);
  const auto result = pipe.Query();

  VectorTrialOutcome out;
  out.tail = testkit::ExactVectorResidual(x, cfg.k, cfg.p);
  out.estimate = result.residual;
  std::vector<double> diff = x;
  for (const auto& c : result.recovered.entries) {
    diff[c.index] -= c.estimate;
    out.max_point_error =
        std::max(out.max_point_error, std::abs(c.estimate - x[c.index]));
  }
  out.recovery_error = PowerSum(diff, cfg.p);
  out.s_i = testkit::IndexPowerSum(x, testkit::ExactTopK(x, cfg.k), cfg.p);
  out.s_j = testkit::IndexPowerSum(x, result.recovered.indices(), cfg.p);
  return out;
}

}  // namespace residsketch::acceptance

#endif  // RESIDSKETCH_TESTS_ACCEPTANCE_VECTOR_TRIALS_H_
