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

#ifndef RESIDSKETCH_LP_BACKEND_H_
#define RESIDSKETCH_LP_BACKEND_H_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace residsketch {

// Estimator of ||x||_p^p under turnstile updates.
//
// Implementations must be linear: the state after a sequence of updates
// depends only on the accumulated vector, so two instances built with the
// same configuration can be merged. Finalize returns a value within a
// factor (1 +- error_factor()) of ||x||_p^p with the backend's advertised
// probability.
class LpEstimator {
 public:
  virtual ~LpEstimator() = default;

  virtual std::size_t universe() const = 0;
  virtual void Update(std::size_t index, double value) = 0;
  virtual double Finalize(double p) const = 0;
  // Throws IncompatibleStates when `other` is a different backend or shape.
  virtual void MergeFrom(const LpEstimator& other) = 0;
  virtual double error_factor() const = 0;
  virtual std::unique_ptr<LpEstimator> Clone() const = 0;
};

// Dense accumulator; exact up to floating-point rounding.
class ExactLpBackend final : public LpEstimator {
 public:
  explicit ExactLpBackend(std::size_t n);

  std::size_t universe() const override { return values_.size(); }
  void Update(std::size_t index, double value) override;
  // Sum of |x_i|^p. Requires p >= 1.
  double Finalize(double p) const override;
  void MergeFrom(const LpEstimator& other) override;
  double error_factor() const override { return 0.0; }
  std::unique_ptr<LpEstimator> Clone() const override;

  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Sum of |x_i|^p over a vector.
double PowerSum(std::span<const double> x, double p);

}  // namespace residsketch

#endif  // RESIDSKETCH_LP_BACKEND_H_
