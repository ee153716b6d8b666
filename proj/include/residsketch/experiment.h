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

#ifndef RESIDSKETCH_EXPERIMENT_H_
#define RESIDSKETCH_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "residsketch/bilinear.h"
#include "residsketch/dataset_io.h"
#include "residsketch/testkit.h"

namespace residsketch {

struct TrialResult {
  std::uint64_t seed = 0;
  double estimate = 0.0;
  std::optional<double> eps_rel;  // estimate / exact - 1
  double build_ms = 0.0;
  double sketch_ms = 0.0;
  double finalize_ms = 0.0;
  nlohmann::json extra;  // command-specific per-trial payload
};

// One run of a command over `trials` independently seeded sketches.
struct ExperimentReport {
  std::string command;
  std::string dataset;
  nlohmann::json params;
  std::vector<TrialResult> trials;
  std::optional<double> exact;
  double ingest_ms = 0.0;
  double exact_ms = 0.0;
  nlohmann::json extra;

  double MeanEstimate() const;
  // Mean of the per-trial relative errors; empty without a nonzero exact.
  std::optional<double> MeanEpsRel() const;
  std::optional<double> MeanAbsEpsRel() const;
  double MeanSketchMs() const;

  // Timing fields are omitted when `with_timings` is false; what remains is
  // a deterministic function of the inputs and seeds.
  nlohmann::json ToJson(bool with_timings = true) const;
};

struct LowrankOptions {
  std::size_t k = 5;
  std::size_t m = 50;
  std::string family = "osnap";  // countsketch|jl|osnap|gaussian|composed
  std::size_t s = 2;
  std::size_t inner = 0;  // composed inner size; 0 = min(m^2, 4096)
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  bool with_exact = false;
};

// Builds the sketch pair for one trial. Left and right get independent seeds.
AnySketch MakeSketch(const std::string& family, std::size_t m, std::size_t s,
                     std::size_t inner, std::size_t in_dim, std::uint64_t seed);

ExperimentReport RunLowrank(const io::TripletMatrix& matrix,
                            const std::string& dataset,
                            const LowrankOptions& options);

struct VectorOptions {
  std::size_t n = 0;  // 0 = one past the largest index in the stream
  std::size_t k = 10;
  double p = 3.0;
  double eps = 0.5;
  double c_b = 1.0;
  double c_l = 3.0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool with_exact = false;
  bool emit_recovery = false;  // include x_hat_J in each trial
};

ExperimentReport RunVector(std::span<const testkit::VectorUpdate> stream,
                           const std::string& dataset,
                           const VectorOptions& options);

struct BenchReport {
  ExperimentReport osnap;
  ExperimentReport gaussian;

  // Gaussian mean sketch time over OSNAP mean sketch time.
  double SketchSpeedup() const;
  nlohmann::json ToJson(bool with_timings = true) const;
};

// Same protocol, matched m and seeds, under OSNAP(s) and dense Gaussian.
BenchReport RunBench(const io::TripletMatrix& matrix,
                     const std::string& dataset, const LowrankOptions& options);

}  // namespace residsketch

#endif  // RESIDSKETCH_EXPERIMENT_H_
