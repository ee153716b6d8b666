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

// Pilot runs behind the frozen constants in calibration.h. Uses seeds
// disjoint from the acceptance suite and the unit tests.
//
//   calibration_pilot [trials]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "vector_trials.h"

namespace {

using residsketch::DeriveSeed;
using residsketch::acceptance::RunVectorTrial;
using residsketch::acceptance::VectorTrialConfig;
using residsketch::acceptance::VectorWorkload;
using residsketch::acceptance::WorkloadName;

double Quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const auto idx = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1));
  return v[idx];
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 300;
  std::printf("%-5s %-3s %12s %12s %12s %12s\n", "load", "p", "C_max", "C_q99",
              "c1_q15", "c1_min");
  for (auto w : {VectorWorkload::kZipf, VectorWorkload::kGap}) {
    for (double p : {3.0, 4.0}) {
      VectorTrialConfig cfg{.workload = w, .p = p};
      std::vector<double> displacement, c1;
      for (int t = 0; t < trials; ++t) {
        const auto o = RunVectorTrial(cfg, DeriveSeed(0xca11b, t));
        displacement.push_back((o.s_i - o.s_j) /
                               (std::pow(cfg.eps, 1.0 - 1.0 / p) * o.tail));
        // Largest c1 for which the point-error bound still holds.
        const double scale = cfg.eps * std::pow(o.tail, 1.0 / p) /
                             std::pow(static_cast<double>(cfg.k), 1.0 / p);
        c1.push_back(o.max_point_error > 0 ? scale / o.max_point_error : 1e300);
      }
      std::printf("%-5s %-3.0f %12.4g %12.4g %12.4g %12.4g\n",
                  WorkloadName(w).c_str(), p, Quantile(displacement, 1.0),
                  Quantile(displacement, 0.99), Quantile(c1, 0.15),
                  Quantile(c1, 0.0));
    }
  }
  return 0;
}
