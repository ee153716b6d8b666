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

#include "residsketch/linalg.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "Eigen/SVD"
#include "residsketch/errors.h"

namespace residsketch {

double SingularSpectrum::TailNorm(std::size_t k) const {
  if (k >= values.size()) return 0.0;
  // Smallest first, so small terms are not swamped.
  double sum = 0.0;
  for (std::size_t i = values.size(); i-- > k;) sum += values[i] * values[i];
  return std::sqrt(sum);
}

SingularSpectrum SingularValues(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InvalidInput("SingularValues: empty matrix");
  }
  if (!m.AllFinite()) {
    throw InvalidInput("SingularValues: non-finite entry");
  }
  Eigen::MatrixXd work = m.eigen();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(work);
  if (svd.info() != Eigen::Success) {
    throw NumericalFailure("SingularValues: SVD did not converge");
  }
  const auto& sv = svd.singularValues();
  SingularSpectrum out;
  out.values.assign(sv.data(), sv.data() + sv.size());
  // Eigen already sorts, but clamp and re-sort so the invariant never rests
  // on a backend detail.
  for (double& v : out.values) v = std::max(v, 0.0);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double RankKResidual(const DenseMatrix& m, std::size_t k) {
  if (k >= std::min(m.rows(), m.cols())) {
    if (!m.AllFinite()) throw InvalidInput("RankKResidual: non-finite entry");
    return 0.0;
  }
  return SingularValues(m).TailNorm(k);
}

double FrobeniusNorm(const DenseMatrix& m) {
  if (!m.AllFinite()) throw InvalidInput("FrobeniusNorm: non-finite entry");
  // Scaled accumulation avoids overflow on large entries.
  return m.eigen().stableNorm();
}

}  // namespace residsketch
