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

#include "pslq/strategy_lab.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pslq/axioms.hpp"
#include "pslq/mechanisms.hpp"

namespace pslq {
namespace {

using fixtures::mat;
using fixtures::row;

TEST(Manipulation, ZetaStudentThreeIncomparable) {
  const auto rep = search_manipulation(Mechanism::kPslq, fixtures::zeta_market(), 2);
  EXPECT_EQ(rep.relation, ManipulationRelation::kIncomparableChange);
  EXPECT_EQ(rep.truthful_row, row({"0", "5/6", "1/6"}));
  EXPECT_EQ(rep.misreport, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(rep.misreport_row, row({"1/3", "5/9", "1/9"}));
  EXPECT_EQ(rep.misreports_tried, 5);
  EXPECT_EQ(rep.strict_gains, 0);
  EXPECT_FALSE(rep.truthful_dominates_all);
}

TEST(Manipulation, FractionalQuotaStrictGain) {
  const auto rep = search_manipulation(Mechanism::kPslq, fractional_quota_market(), 0);
  EXPECT_EQ(rep.relation, ManipulationRelation::kStrictGain);
  EXPECT_EQ(rep.truthful_row, row({"2/3", "0", "1/3"}));
  EXPECT_EQ(rep.misreport, (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(rep.misreport_row, row({"2/3", "1/3", "0"}));
  EXPECT_EQ(rep.strict_gains, 1);
}

TEST(Manipulation, RejectsBadStudent) {
  EXPECT_THROW(search_manipulation(Mechanism::kPslq, fixtures::zeta_market(), 4), InputError);
}

TEST(WeakSp, FractionalQuotaCounterexample) {
  const auto check = verify_weak_sp(Mechanism::kPslq, fractional_quota_market());
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.counterexample.has_value());
  EXPECT_EQ(check.counterexample->student, 0);
  EXPECT_EQ(check.counterexample->misreport, (std::vector<int>{1, 0, 2}));
}

TEST(WeakSp, SingleProjectMarketHolds) {
  const Market m = fixtures::make_market({{"a", Rational(0), std::nullopt}}, {"a", "a", "a"});
  EXPECT_TRUE(verify_weak_sp(Mechanism::kPslq, m).holds);
  EXPECT_TRUE(verify_weak_sp(Mechanism::kRplqExact, m, true).holds);
}

TEST(WeakSpProperty, PslqIntegerQuotaCampaign) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Market m = fixtures::random_integer_market(
        seed, 2 + seed % 3, 2 + seed % 2,
        seed % 2 ? QuotaStyle::kIntegerTight : QuotaStyle::kIntegerLoose);
    const auto check = verify_weak_sp(Mechanism::kPslq, m);
    EXPECT_TRUE(check.holds) << "seed " << seed;
  }
}

TEST(StrategyProofnessProperty, RplqTruthDominatesEveryReport) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Market m = fixtures::random_integer_market(seed, 2 + seed % 3, 2 + seed % 2);
    EXPECT_TRUE(verify_weak_sp(Mechanism::kRplqExact, m, true).holds) << seed;
    EXPECT_TRUE(is_weakly_envy_free(run_rplq_exact(m).assignment, m.profile()).holds);
  }
}

TEST(CoalitionProperty, NoProfitablePairUnderPriority) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Market m = fixtures::random_integer_market(seed, 2 + seed % 3, 2 + seed % 2);
    const Permutation order(permutation_from_rank(seed % factorial(m.students()), m.students()));
    EXPECT_FALSE(find_pair_deviation_priolq(m, order).has_value()) << seed;
  }
}

TEST(Impossibility, MisreportMatricesAndContradiction) {
  const auto cert = impossibility_scenario();
  EXPECT_EQ(cert.r_prime, mat({{"2/3", "1/3", "0"}, {"0", "1/3", "2/3"}}));
  EXPECT_EQ(cert.r_double_prime, mat({{"2/3", "0", "1/3"}, {"0", "2/3", "1/3"}}));
  EXPECT_EQ(cert.r_prime_solutions, 1);
  EXPECT_EQ(cert.r_double_prime_solutions, 1);
  EXPECT_EQ(cert.family_t.size(), 13u);
  EXPECT_EQ(cert.efficient_envy_free_t, cert.family_t);
  EXPECT_TRUE(cert.prime_dominates_family);
  EXPECT_TRUE(cert.double_prime_dominates_family);
  EXPECT_EQ(cert.forced_t_by_student1, Rational(1, 3));
  EXPECT_EQ(cert.forced_t_by_student2, Rational(0));
  EXPECT_TRUE(cert.contradiction);
}

TEST(Impossibility, FamilyRowsSumToOne) {
  for (int j = 0; j <= 12; ++j) {
    const Matrix r = impossibility_family_member(Rational(j, 36));
    EXPECT_EQ(r.row_sum(0), Rational(1));
    EXPECT_EQ(r.row_sum(1), Rational(1));
    EXPECT_TRUE(is_feasible(r, fractional_quota_market()).feasible);
  }
  EXPECT_THROW(impossibility_scenario(10), InputError);
}

TEST(Impossibility, Snapshot) {
  std::ifstream in(std::string(PSLQ_TEST_DATA) + "/impossibility.golden.txt");
  ASSERT_TRUE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(render_certificate(impossibility_scenario()), golden.str());
}

}  // namespace
}  // namespace pslq
