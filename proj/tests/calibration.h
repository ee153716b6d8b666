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

#ifndef RESIDSKETCH_TESTS_CALIBRATION_H_
#define RESIDSKETCH_TESTS_CALIBRATION_H_

// Constants fixed once from pilot runs and then frozen. Changing any of them
// requires re-running the pilot, not tuning until a test goes green.

namespace residsketch::calibration {

// S_I - S_J <= kDisplacementC * eps^(1-1/p) * ||x_{-k}||_p^p.
// Pilot (300 trials per Zipf/gap x p in {3,4}): worst ratio 0.0019.
inline constexpr double kDisplacementC = 0.01;

// |x_hat_j - x_j| <= eps * ||x_{-k}||_p / (kPointErrorC1 * k^(1/p)), j in J.
// Pilot 15th percentile of the largest admissible c1: 44 (Zipf p=3),
// 108 (Zipf p=4), 2.2 (gap p=3), 2.5 (gap p=4).
inline constexpr double kPointErrorC1 = 1.5;

}  // namespace residsketch::calibration

#endif  // RESIDSKETCH_TESTS_CALIBRATION_H_
