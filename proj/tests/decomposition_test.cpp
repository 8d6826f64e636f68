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

#include "pslq/decomposition.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pslq/eating.hpp"
#include "pslq/mechanisms.hpp"
#include "pslq/strategy_lab.hpp"

namespace pslq {
namespace {

using fixtures::mat;

// Reconstruction, weights, per-term feasibility and the term bound.
void expect_valid_lottery(const Lottery& lot, const Matrix& r, const Market& m) {
  EXPECT_EQ(lot.total_weight(), Rational(1));
  EXPECT_EQ(lot.expectation(m.students(), m.projects()), r);
  for (const auto& t : lot.terms) {
    EXPECT_GT(t.weight, Rational(0));
    EXPECT_TRUE(is_feasible(t.assignment, m).feasible);
  }
  EXPECT_LE(static_cast<int>(lot.terms.size()), fractional_count(r) + 1);
}

TEST(Decompose, IntegralInputIsSingleton) {
  const Market m = fixtures::gamma_market();
  const Matrix r = mat({{"1", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "1", "0"}});
  const Lottery lot = decompose(r, m);
  ASSERT_EQ(lot.terms.size(), 1u);
  EXPECT_EQ(lot.terms[0].weight, Rational(1));
  EXPECT_EQ(lot.terms[0].assignment.to_matrix(), r);
  EXPECT_EQ(extract_extreme_point(r, m).to_matrix(), r);
}

TEST(Decompose, TwoByTwoHalves) {
  const Market m = fixtures::make_market(
      {{"a", Rational(0), Rational(1)}, {"b", Rational(0), Rational(1)}}, {"ab", "ab"});
  const Matrix r = mat({{"1/2", "1/2"}, {"1/2", "1/2"}});
  const auto x = extract_extreme_point(r, m);
  EXPECT_TRUE(x.project_of() == (std::vector<int>{0, 1}) ||
              x.project_of() == (std::vector<int>{1, 0}));
  const Lottery lot = decompose(r, m);
  ASSERT_EQ(lot.terms.size(), 2u);
  EXPECT_EQ(lot.terms[0].weight, Rational(1, 2));
  expect_valid_lottery(lot, r, m);
}

TEST(Decompose, CriticalShiftExampleOutput) {
  const Market m = fixtures::critical_shift_market();
  const Matrix r = run_pslq(m);
  const Lottery lot = decompose(r, m);
  expect_valid_lottery(lot, r, m);
  for (const auto& t : lot.terms) EXPECT_EQ(t.assignment[4], 2);
}

TEST(Decompose, RplqZetaAndThePriorityMultiset) {
  const Market m = fixtures::zeta_market();
  const Matrix r = run_rplq_exact(m).assignment;
  expect_valid_lottery(decompose(r, m), r, m);

  // The 24 priority outcomes, each weighted 1/24, are another valid lottery.
  Lottery priority;
  for (std::uint64_t rank = 0; rank < factorial(4); ++rank) {
    priority.terms.push_back(
        {Rational(1, 24), run_priolq(m, Permutation(permutation_from_rank(rank, 4)))});
  }
  EXPECT_EQ(priority.expectation(4, 3), r);
}

TEST(ExtractExtremePoint, ZetaColumnWindows) {
  const Market m = fixtures::zeta_market();
  const Matrix r = run_pslq(m);
  const auto x = extract_extreme_point(r, m);
  const auto counts = x.column_counts();
  EXPECT_EQ(counts[0], 1);
  EXPECT_GE(counts[1], 1);
  EXPECT_LE(counts[1], 2);
  EXPECT_GE(counts[2], 1);
  EXPECT_LE(counts[2], 2);
  for (int i = 0; i < 4; ++i) EXPECT_GT(r(i, x[i]), Rational(0));
}

TEST(Decompose, RejectsNonIntegerQuotas) {
  const Market m = fractional_quota_market();
  const Matrix r = run_pslq(m);
  try {
    decompose(r, m);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "decomposition requires integer quotas");
  }
}

TEST(Decompose, RejectsInfeasibleInput) {
  const Market m = fixtures::zeta_market();
  const Matrix r = mat({{"1", "0", "0"}, {"1", "0", "0"}, {"1", "0", "0"}, {"1", "0", "0"}});
  EXPECT_THROW(decompose(r, m), InputError);
  EXPECT_THROW(extract_extreme_point(r, m), InputError);
}

TEST(DecomposeProperty, RandomMechanismOutputs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Market m = fixtures::random_integer_market(
        seed, 2 + seed % 6, 2 + seed % 3,
        seed % 2 ? QuotaStyle::kIntegerTight : QuotaStyle::kIntegerLoose);
    for (const Matrix& r : {run_pslq(m), run_rplq_exact(m).assignment}) {
      const Lottery lot = decompose(r, m);
      EXPECT_EQ(lot.expectation(m.students(), m.projects()), r) << seed;
      EXPECT_EQ(lot.total_weight(), Rational(1));
      for (const auto& t : lot.terms) EXPECT_TRUE(is_feasible(t.assignment, m).feasible);
      EXPECT_LE(static_cast<int>(lot.terms.size()), fractional_count(r) + 1) << seed;
    }
  }
}

}  // namespace
}  // namespace pslq
