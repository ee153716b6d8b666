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
#include <string>

#include "residsketch/errors.h"

namespace residsketch {

double PowerSum(std::span<const double> x, double p) {
  double sum = 0.0;
  for (double v : x) {
    if (v != 0.0) sum += std::pow(std::abs(v), p);
  }
  return sum;
}

ExactLpBackend::ExactLpBackend(std::size_t n) : values_(n, 0.0) {
  if (n == 0) throw InvalidSpec("ExactLpBackend: empty universe");
}

void ExactLpBackend::Update(std::size_t index, double value) {
  if (index >= values_.size()) {
    throw InvalidInput("ExactLpBackend update: index " + std::to_string(index) +
                       " out of range");
  }
  values_[index] += value;
}

double ExactLpBackend::Finalize(double p) const {
  if (!(p >= 1.0)) throw InvalidSpec("Finalize: p must be >= 1");
  return PowerSum(values_, p);
}

void ExactLpBackend::MergeFrom(const LpEstimator& other) {
  const auto* exact = dynamic_cast<const ExactLpBackend*>(&other);
  if (exact == nullptr || exact->values_.size() != values_.size()) {
    throw IncompatibleStates("ExactLpBackend merge: incompatible backend");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] += exact->values_[i];
  }
}

std::unique_ptr<LpEstimator> ExactLpBackend::Clone() const {
  return std::make_unique<ExactLpBackend>(*this);
}

}  // namespace residsketch
