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

#include "residsketch/vector_residual.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "residsketch/errors.h"

namespace residsketch {

std::vector<std::size_t> TopKCandidates::indices() const {
  std::vector<std::size_t> out;
  out.reserve(entries.size());
  for (const auto& c : entries) out.push_back(c.index);
  return out;
}

TopKCandidates SelectTopK(std::span<const double> estimates, std::size_t k) {
  k = std::min(k, estimates.size());
  std::vector<std::size_t> order(estimates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto better = [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(estimates[a]);
    const double mb = std::abs(estimates[b]);
    return ma != mb ? ma > mb : a < b;
  };
  std::partial_sort(order.begin(), order.begin() + k, order.end(), better);
  TopKCandidates out;
  out.entries.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.entries.push_back({order[i], estimates[order[i]]});
  }
  return out;
}

TopKCandidates TopKFromSketch(const VectorCountSketch& cs, std::size_t k) {
  return SelectTopK(cs.EstimateAll(), k);
}

std::size_t ResidualParams::ResolvedBuckets() const {
  return buckets != 0 ? buckets : BucketCount(n, k, p, eps, c_b);
}

std::size_t ResidualParams::ResolvedRows() const {
  return rows != 0 ? rows : RowCount(n, c_l);
}

namespace {

const ResidualParams& CheckParams(const ResidualParams& params) {
  if (!(params.p > 2.0)) {
    throw UnsupportedP("residual estimation requires p > 2, got " +
                       std::to_string(params.p));
  }
  if (params.n < 1) throw InvalidSpec("universe must be nonempty");
  if (params.k > params.n) throw InvalidSpec("k must not exceed n");
  return params;
}

// k = 0 makes the bucket formula meaningless; any positive size works since
// nothing is subtracted.
std::size_t BucketsFor(const ResidualParams& params) {
  if (params.buckets != 0) return params.buckets;
  if (params.k == 0) return 1;
  return params.ResolvedBuckets();
}

}  // namespace

ResidualPipeline::ResidualPipeline(const ResidualParams& params,
                                   std::unique_ptr<LpEstimator> backend)
    : params_(CheckParams(params)),
      cs_(params.n, params.ResolvedRows(), BucketsFor(params), params.seed),
      backend_(backend ? std::move(backend)
                       : std::make_unique<ExactLpBackend>(params.n)) {
  if (backend_->universe() != params.n) {
    throw InvalidSpec("l_p backend universe does not match n");
  }
}

ResidualPipeline::ResidualPipeline(const ResidualPipeline& other)
    : params_(other.params_), cs_(other.cs_), backend_(other.backend_->Clone()) {}

ResidualPipeline& ResidualPipeline::operator=(const ResidualPipeline& other) {
  if (this != &other) {
    params_ = other.params_;
    cs_ = other.cs_;
    backend_ = other.backend_->Clone();
  }
  return *this;
}

void ResidualPipeline::Update(std::size_t index, double value) {
  cs_.Update(index, value);
  backend_->Update(index, value);
}

void ResidualPipeline::MergeFrom(const ResidualPipeline& other) {
  cs_.MergeFrom(other.cs_);
  backend_->MergeFrom(*other.backend_);
}

TopKCandidates ResidualPipeline::SparseRecover() const {
  return TopKFromSketch(cs_, params_.k);
}

double ResidualPipeline::ResidualEstimate() const { return Query().residual; }

ResidualPipeline::Result ResidualPipeline::Query() const {
  Result result;
  result.recovered = SparseRecover();
  auto scratch = backend_->Clone();
  for (const auto& c : result.recovered.entries) {
    scratch->Update(c.index, -c.estimate);
  }
  result.residual = std::max(0.0, scratch->Finalize(params_.p));
  return result;
}

}  // namespace residsketch
