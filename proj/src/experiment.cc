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

#include "residsketch/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "residsketch/errors.h"
#include "residsketch/random.h"
#include "residsketch/vector_residual.h"

namespace residsketch {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<double> RelativeError(double estimate,
                                    const std::optional<double>& exact) {
  if (!exact || *exact == 0.0) return std::nullopt;
  return estimate / *exact - 1.0;
}

json OptionalNumber(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

double ExperimentReport::MeanEstimate() const {
  if (trials.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& t : trials) sum += t.estimate;
  return sum / static_cast<double>(trials.size());
}

std::optional<double> ExperimentReport::MeanEpsRel() const {
  if (!exact || *exact == 0.0 || trials.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& t : trials) sum += t.eps_rel.value_or(0.0);
  return sum / static_cast<double>(trials.size());
}

std::optional<double> ExperimentReport::MeanAbsEpsRel() const {
  if (!exact || *exact == 0.0 || trials.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& t : trials) sum += std::abs(t.eps_rel.value_or(0.0));
  return sum / static_cast<double>(trials.size());
}

double ExperimentReport::MeanSketchMs() const {
  if (trials.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& t : trials) sum += t.sketch_ms;
  return sum / static_cast<double>(trials.size());
}

json ExperimentReport::ToJson(bool with_timings) const {
  json out;
  out["command"] = command;
  out["dataset"] = dataset;
  out["params"] = params;
  out["trial_count"] = trials.size();
  out["estimate"] = MeanEstimate();
  out["exact"] = OptionalNumber(exact);
  out["eps_rel"] = OptionalNumber(MeanEpsRel());
  out["mean_abs_eps_rel"] = OptionalNumber(MeanAbsEpsRel());
  // exact present but zero: the relative error is undefined.
  out["exact_is_zero"] = exact.has_value() && *exact == 0.0;
  json per_trial = json::array();
  double build = 0.0, sketch = 0.0, finalize = 0.0;
  for (const auto& t : trials) {
    json jt;
    jt["seed"] = t.seed;
    jt["estimate"] = t.estimate;
    jt["eps_rel"] = OptionalNumber(t.eps_rel);
    if (with_timings) {
      jt["build_ms"] = t.build_ms;
      jt["sketch_ms"] = t.sketch_ms;
      jt["finalize_ms"] = t.finalize_ms;
    }
    if (!t.extra.is_null()) jt["extra"] = t.extra;
    per_trial.push_back(std::move(jt));
    build += t.build_ms;
    sketch += t.sketch_ms;
    finalize += t.finalize_ms;
  }
  out["trials"] = std::move(per_trial);
  if (!extra.is_null()) out["extra"] = extra;
  if (with_timings) {
    const double n = trials.empty() ? 1.0 : static_cast<double>(trials.size());
    out["timings_ms"] = {{"ingest", ingest_ms},
                         {"exact", exact_ms},
                         {"build_mean", build / n},
                         {"sketch_mean", sketch / n},
                         {"finalize_mean", finalize / n}};
  }
  return out;
}

AnySketch MakeSketch(const std::string& family, std::size_t m, std::size_t s,
                     std::size_t inner, std::size_t in_dim,
                     std::uint64_t seed) {
  if (family == "composed") {
    const std::size_t inner_dim =
        inner != 0 ? inner : SketchSizePolicy{}.InnerDimForOuter(m);
    return MakeComposedSketch(m, inner_dim, in_dim, seed);
  }
  SketchSpec spec;
  spec.family = ParseFamily(family);
  spec.out_dim = m;
  spec.in_dim = in_dim;
  spec.sparsity = spec.family == SketchFamily::kOsnap ? s : 1;
  spec.seed = seed;
  return SeededSketch(spec);
}

ExperimentReport RunLowrank(const io::TripletMatrix& matrix,
                            const std::string& dataset,
                            const LowrankOptions& options) {
  if (matrix.rows == 0 || matrix.cols == 0) {
    throw InvalidInput("lowrank: empty matrix");
  }
  ExperimentReport report;
  report.command = "lowrank";
  report.dataset = dataset;
  report.params = {{"rows", matrix.rows},     {"cols", matrix.cols},
                   {"nnz", matrix.entries.size()},
                   {"k", options.k},          {"m", options.m},
                   {"family", options.family}, {"s", options.s},
                   {"inner", options.inner},  {"trials", options.trials},
                   {"seed", options.seed}};

  if (options.with_exact) {
    const auto start = Clock::now();
    const DenseMatrix dense =
        testkit::Densify(matrix.entries, matrix.rows, matrix.cols);
    report.exact = testkit::ExactMatrixResidual(dense, options.k);
    report.exact_ms = MillisSince(start);
  }

  for (std::size_t t = 0; t < options.trials; ++t) {
    TrialResult trial;
    trial.seed = DeriveSeed(options.seed, t);
    auto start = Clock::now();
    AnySketch left = MakeSketch(options.family, options.m, options.s,
                                options.inner, matrix.rows,
                                DeriveSeed(trial.seed, 0));
    AnySketch right = MakeSketch(options.family, options.m, options.s,
                                 options.inner, matrix.cols,
                                 DeriveSeed(trial.seed, 1));
    BilinearSketchState state(std::move(left), std::move(right));
    trial.build_ms = MillisSince(start);

    start = Clock::now();
    state.Update(matrix.entries);
    trial.sketch_ms = MillisSince(start);

    start = Clock::now();
    trial.estimate = state.EstimateResidual(options.k);
    trial.finalize_ms = MillisSince(start);
    trial.eps_rel = RelativeError(trial.estimate, report.exact);
    report.trials.push_back(std::move(trial));
  }
  return report;
}

ExperimentReport RunVector(std::span<const testkit::VectorUpdate> stream,
                           const std::string& dataset,
                           const VectorOptions& options) {
  std::size_t n = options.n;
  if (n == 0) {
    for (const auto& u : stream) n = std::max(n, u.index + 1);
  }
  if (n == 0) throw InvalidInput("vector: empty stream and no --n given");

  ExperimentReport report;
  report.command = options.emit_recovery ? "recover" : "vector";
  report.dataset = dataset;

  ResidualParams params;
  params.n = n;
  params.k = options.k;
  params.p = options.p;
  params.eps = options.eps;
  params.c_b = options.c_b;
  params.c_l = options.c_l;
  report.params = {{"n", n},
                   {"k", options.k},
                   {"p", options.p},
                   {"eps", options.eps},
                   {"cb", options.c_b},
                   {"cl", options.c_l},
                   {"buckets", options.k == 0 ? 1 : params.ResolvedBuckets()},
                   {"rows", params.ResolvedRows()},
                   {"updates", stream.size()},
                   {"trials", options.trials},
                   {"seed", options.seed}};

  std::vector<double> dense;
  if (options.with_exact) {
    const auto start = Clock::now();
    dense.assign(n, 0.0);
    for (const auto& u : stream) {
      if (u.index >= n) throw InvalidInput("vector: index beyond --n");
      dense[u.index] += u.value;
    }
    report.exact = testkit::ExactVectorResidual(dense, options.k, options.p);
    report.exact_ms = MillisSince(start);
  }

  for (std::size_t t = 0; t < options.trials; ++t) {
    TrialResult trial;
    trial.seed = DeriveSeed(options.seed, t);
    params.seed = trial.seed;
    auto start = Clock::now();
    ResidualPipeline pipe(params);
    trial.build_ms = MillisSince(start);

    start = Clock::now();
    for (const auto& u : stream) pipe.Update(u.index, u.value);
    trial.sketch_ms = MillisSince(start);

    start = Clock::now();
    const auto result = pipe.Query();
    trial.finalize_ms = MillisSince(start);
    trial.estimate = result.residual;
    trial.eps_rel = RelativeError(trial.estimate, report.exact);

    if (options.emit_recovery || options.with_exact) {
      json extra;
      if (options.emit_recovery) {
        json rec = json::array();
        for (const auto& c : result.recovered.entries) {
          rec.push_back({c.index, c.estimate});
        }
        extra["recovered"] = std::move(rec);
      }
      if (options.with_exact) {
        // ||x - x_hat_J||_p^p against the dense replay.
        std::vector<double> diff = dense;
        for (const auto& c : result.recovered.entries) {
          diff[c.index] -= c.estimate;
        }
        extra["recovery_error"] = PowerSum(diff, options.p);
      }
      trial.extra = std::move(extra);
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

double BenchReport::SketchSpeedup() const {
  const double o = osnap.MeanSketchMs();
  return o > 0.0 ? gaussian.MeanSketchMs() / o : 0.0;
}

json BenchReport::ToJson(bool with_timings) const {
  json out;
  out["command"] = "bench";
  out["osnap"] = osnap.ToJson(with_timings);
  out["gaussian"] = gaussian.ToJson(with_timings);
  if (with_timings) out["sketch_speedup"] = SketchSpeedup();
  return out;
}

BenchReport RunBench(const io::TripletMatrix& matrix,
                     const std::string& dataset,
                     const LowrankOptions& options) {
  BenchReport out;
  LowrankOptions o = options;
  o.family = "osnap";
  out.osnap = RunLowrank(matrix, dataset, o);
  o.family = "gaussian";
  // The exact value does not depend on the family; reuse it.
  o.with_exact = false;
  out.gaussian = RunLowrank(matrix, dataset, o);
  if (out.osnap.exact) {
    out.gaussian.exact = out.osnap.exact;
    for (auto& t : out.gaussian.trials) {
      t.eps_rel = RelativeError(t.estimate, out.gaussian.exact);
    }
  }
  out.osnap.command = "bench";
  out.gaussian.command = "bench";
  return out;
}

}  // namespace residsketch
