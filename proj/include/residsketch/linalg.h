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

#ifndef RESIDSKETCH_LINALG_H_
#define RESIDSKETCH_LINALG_H_

#include <cstddef>
#include <vector>

#include "residsketch/dense_matrix.h"

namespace residsketch {

// Singular values sorted nonincreasing; length min(rows, cols).
struct SingularSpectrum {
  std::vector<double> values;

  // sqrt of the sum of squares of values[k:]. Zero when k >= values.size().
  double TailNorm(std::size_t k) const;
};

// Full spectrum via divide-and-conquer bidiagonal SVD.
// Throws InvalidInput on non-finite or empty input, NumericalFailure if the
// decomposition does not converge.
SingularSpectrum SingularValues(const DenseMatrix& m);

// ||M - M_k||_F, the Frobenius distance to the best rank-k approximation.
// k beyond min(rows, cols) yields 0 so callers can sweep k freely.
double RankKResidual(const DenseMatrix& m, std::size_t k);

double FrobeniusNorm(const DenseMatrix& m);

}  // namespace residsketch

#endif  // RESIDSKETCH_LINALG_H_
