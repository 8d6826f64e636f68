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

// Lottery implementation of random assignments: any feasible R under integer
// quotas is a convex combination of feasible deterministic assignments. The
// constraint family (rows, plus per-project column windows) is a bihierarchy,
// so each peeling step can pick an integral point by solving a flow with
// lower bounds.

#ifndef PSLQ_DECOMPOSITION_HPP_
#define PSLQ_DECOMPOSITION_HPP_

#include <vector>

#include "pslq/market.hpp"

namespace pslq {

struct LotteryTerm {
  Rational weight;
  DeterministicAssignment assignment;
};

struct Lottery {
  std::vector<LotteryTerm> terms;

  Rational total_weight() const;
  // Sum of weight * X over all terms.
  Matrix expectation(int students, int projects) const;
};

// Integral X with x_ip = 0 where r_ip = 0, x_ip = 1 where r_ip = 1, and each
// column sum between floor and ceil of R's column sum. Ties are broken by the
// first flow found with students ascending and projects in market order.
DeterministicAssignment extract_extreme_point(const Matrix& r, const Market& market);

// Peels extreme points off R with the largest step that keeps the rescaled
// remainder inside [0,1] and inside every column window. Terminates after at
// most (fractional entries + fractional columns + 1) terms.
Lottery decompose(const Matrix& r, const Market& market);

// Number of fractional entries plus fractional column sums of r.
int fractional_count(const Matrix& r);

}  // namespace pslq

#endif  // PSLQ_DECOMPOSITION_HPP_
