// Copyright 2026 The pslq Authors
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

// Fixed-step floating-point simulation of eating under lower quotas. Each
// step recomputes the active set from the current consumption, so it checks
// the event-driven exact solver against a direct reading of the rules.

#ifndef PSLQ_TESTS_ORACLES_DISCRETE_EATING_HPP_
#define PSLQ_TESTS_ORACLES_DISCRETE_EATING_HPP_

#include <algorithm>
#include <optional>
#include <vector>

namespace pslq::oracle {

struct DiscreteRun {
  std::vector<std::vector<double>> consumption;
  std::optional<double> critical_time;  // first step with reserve <= slack
};

inline DiscreteRun discrete_eating(const std::vector<std::vector<int>>& rankings,
                                   const std::vector<double>& lower,
                                   const std::vector<double>& upper, double dt) {
  const std::size_t n = rankings.size();
  const std::size_t k = lower.size();
  const double slack = 1e-9;
  DiscreteRun run;
  run.consumption.assign(n, std::vector<double>(k, 0.0));
  std::vector<double> eaten(k, 0.0);
  const int steps = static_cast<int>(1.0 / dt + 0.5);
  for (int s = 0; s < steps; ++s) {
    const double t = s * dt;
    double deficit = 0;
    for (std::size_t p = 0; p < k; ++p) deficit += std::max(0.0, lower[p] - eaten[p]);
    const double reserve = static_cast<double>(n) * (1 - t) - deficit;
    if (!run.critical_time && reserve <= slack) run.critical_time = t;
    std::vector<bool> active(k);
    for (std::size_t p = 0; p < k; ++p) {
      active[p] = lower[p] - eaten[p] > slack ||
                  (eaten[p] < upper[p] - slack && reserve > slack);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (int p : rankings[i]) {
        if (!active[p]) continue;
        run.consumption[i][p] += dt;
        eaten[p] += dt;
        break;
      }
    }
  }
  return run;
}

}  // namespace pslq::oracle

#endif  // PSLQ_TESTS_ORACLES_DISCRETE_EATING_HPP_
