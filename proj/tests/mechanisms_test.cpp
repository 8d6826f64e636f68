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

#include "pslq/mechanisms.hpp"
#include "pslq/strategy_lab.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "pslq/axioms.hpp"
#include "pslq/eating.hpp"

namespace pslq {
namespace {

using fixtures::mat;

TEST(PrioLq, ZetaIdentityOrder) {
  const Market m = fixtures::zeta_market();
  const auto mu = run_priolq(m, Permutation::identity(4));
  EXPECT_EQ(mu.project_of(), (std::vector<int>{0, 2, 1, 1}));
}

TEST(PrioLq, ZetaLastStudentIsRestricted) {
  const Market m = fixtures::zeta_market();
  // Order 3, 4, 1, 2: student 2 is last and only c still needs a student.
  const auto mu = run_priolq(m, Permutation({2, 3, 0, 1}));
  EXPECT_EQ(mu.project_of(), (std::vector<int>{0, 2, 1, 1}));
  const auto swapped = run_priolq(m, Permutation({1, 2, 3, 0}));
  // Student 2 first takes a; student 1 is then forced onto c.
  EXPECT_EQ(swapped.project_of(), (std::vector<int>{2, 0, 1, 1}));
}

TEST(PrioLq, RespectsUpperQuotaInUnrestrictedMenu) {
  const Market m = fixtures::make_market(
      {{"a", Rational(0), Rational(1)}, {"b", Rational(0), std::nullopt}}, {"ab", "ab", "ab"});
  const auto mu = run_priolq(m, Permutation::identity(3));
  EXPECT_EQ(mu.project_of(), (std::vector<int>{0, 1, 1}));
}

TEST(PrioLq, RejectsOrderOfWrongLength) {
  const Market m = fixtures::zeta_market();
  EXPECT_THROW(run_priolq(m, Permutation::identity(3)), InputError);
}

TEST(PriorityStateProperty, DeficitNeverExceedsRemainingStudents) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Market m = fixtures::random_integer_market(
        seed, 2 + seed % 6, 2 + seed % 3,
        seed % 2 ? QuotaStyle::kIntegerTight : QuotaStyle::kIntegerLoose);
    const int n = m.students();
    const auto order = permutation_from_rank(seed % factorial(n), n);
    PriorityState st(m);
    for (int s = 0; s < n; ++s) {
      EXPECT_LE(st.unfilled_lower(), Rational(st.remaining()));
      const auto deficient = st.deficient();
      for (int p = 0; p < m.projects(); ++p) {
        EXPECT_EQ(deficient[p], Rational(st.counts()[p]) < m.lower(p));
      }
      st.serve(order[s]);
    }
    EXPECT_TRUE(is_feasible(st.result(), m).feasible) << seed;
  }
}

TEST(PrioLqProperty, EfficientAndFairToTheServiceOrder) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Market m = fixtures::random_integer_market(seed, 2 + seed % 5, 2 + seed % 3);
    const int n = m.students();
    const Permutation order(permutation_from_rank((seed * 7) % factorial(n), n));
    const auto mu = run_priolq(m, order);
    EXPECT_TRUE(is_mqc_efficient(mu, m).efficient) << seed;
    EXPECT_TRUE(is_ml_fair(mu, m.profile(), MasterList(order)).holds) << seed;
  }
}

TEST(Rplq, GammaIsTopChoices) {
  const Market m = fixtures::gamma_market();
  EXPECT_EQ(run_rplq_exact(m).assignment,
            mat({{"1", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "1", "0"}}));
}

TEST(Rplq, ZetaGolden) {
  const Market m = fixtures::zeta_market();
  const auto res = run_rplq_exact(m);
  EXPECT_EQ(res.mode, RplqMode::kExact);
  EXPECT_EQ(res.assignment, mat({{"1/2", "1/4", "1/4"},
                                 {"1/2", "0", "1/2"},
                                 {"0", "7/8", "1/8"},
                                 {"0", "7/8", "1/8"}}));
}

TEST(Rplq, SixStudentGolden) {
  const Market m = fixtures::six_student_market();
  const auto r = run_rplq_exact(m).assignment;
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(std::vector<Rational>(r.row(i).begin(), r.row(i).end()),
              fixtures::row({"3/5", "1/15", "1/3", "0"}));
    EXPECT_EQ(std::vector<Rational>(r.row(i + 3).begin(), r.row(i + 3).end()),
              fixtures::row({"0", "2/3", "1/3", "0"}));
  }
}

TEST(RplqProperty, ExactDenominatorsDivideFactorial) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Market m = fixtures::random_integer_market(seed, 2 + seed % 5, 2 + seed % 3);
    const auto r = run_rplq_exact(m).assignment;
    const auto nf = factorial(m.students());
    for (int i = 0; i < r.rows(); ++i)
      for (const auto& v : r.row(i)) EXPECT_TRUE(v.denominator_divides(nf));
    EXPECT_TRUE(is_feasible(r, m).feasible);
  }
}

TEST(Rplq, ExactRefusesLargeMarkets) {
  const Market m = fixtures::random_integer_market(1, kExactEnumerationLimit + 1, 3);
  EXPECT_THROW(run_rplq_exact(m), InputError);
  EXPECT_THROW(run_rplq_exact_serial(m), InputError);
}

TEST(Rplq, SampledIsDeterministicAndClose) {
  const Market m = fixtures::zeta_market();
  const auto a = run_rplq_sampled(m, 20000, 42);
  const auto b = run_rplq_sampled(m, 20000, 42);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.mode, RplqMode::kMonteCarlo);
  EXPECT_EQ(a.samples, 20000u);
  EXPECT_EQ(a.seed, 42u);
  const auto exact = run_rplq_exact(m).assignment;
  for (int i = 0; i < 4; ++i)
    for (int p = 0; p < 3; ++p)
      EXPECT_NEAR(a.assignment(i, p).to_double(), exact(i, p).to_double(), 0.02);
  EXPECT_NE(run_rplq_sampled(m, 20000, 43).assignment, a.assignment);
  EXPECT_THROW(run_rplq_sampled(m, 0, 1), InputError);
}

TEST(PermutationRank, EnumeratesLexicographically) {
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(5), 120u);
  EXPECT_EQ(permutation_from_rank(0, 3), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(permutation_from_rank(1, 3), (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(permutation_from_rank(5, 3), (std::vector<int>{2, 1, 0}));
}

TEST(Multiunit, SingleUnitMatchesBaseMechanisms) {
  const Market m = fixtures::zeta_market();
  EXPECT_EQ(run_multiunit(m, 1, MultiunitMechanism::kPslq).assignment, run_pslq(m));
  EXPECT_EQ(run_multiunit(m, 1, MultiunitMechanism::kRplq).assignment,
            run_rplq_exact(m).assignment);
}

TEST(Multiunit, ClonesCarryQuotasAndRowsSumToQ) {
  const Market m = fixtures::zeta_market();
  const auto clones = clone_market(m, 2);
  EXPECT_EQ(clones.market.students(), 8);
  EXPECT_EQ(clones.owner[3], 1);
  EXPECT_EQ(clones.market.profile().ranking(3)[0], m.profile().ranking(1)[0]);
  EXPECT_EQ(clones.market.lower(), m.lower());  // quotas are not scaled
  const auto res = run_multiunit(m, 2, MultiunitMechanism::kPslq);
  for (int i = 0; i < m.students(); ++i) EXPECT_EQ(res.assignment.row_sum(i), Rational(2));
  EXPECT_TRUE(is_feasible(res.clone_assignment, clones.market).feasible);
}

TEST(Multiunit, OpposedPairWithTwoUnits) {
  const Market m = fixtures::make_market(
      {{"a", Rational(1), Rational(2)}, {"b", Rational(1), Rational(2)}}, {"ab", "ba"});
  const auto res = run_multiunit(m, 2, MultiunitMechanism::kPslq);
  // Both clones of each student eat their top project, which holds 2 units.
  EXPECT_EQ(res.assignment, fixtures::mat({{"2", "0"}, {"0", "2"}}));
}

TEST(Rplq, RejectsFractionalQuotas) {
  const Market m = fractional_quota_market();
  EXPECT_THROW(run_priolq(m, Permutation::identity(2)), InputError);
  EXPECT_THROW(run_rplq_exact(m), InputError);
  EXPECT_THROW(run_rplq_sampled(m, 10, 1), InputError);
  EXPECT_THROW(search_manipulation(Mechanism::kRplqExact, m, 0), InputError);
}

TEST(Multiunit, RejectsQuotasThatCannotAbsorbClones) {
  // sum(u) = 6 < 2 * 5
  EXPECT_THROW(clone_market(fixtures::critical_shift_market(), 2), InputError);
}

TEST(Multiunit, UnboundedUpperQuotaScalesWithQ) {
  const Market m = fixtures::zeta_market();
  const auto clones = clone_market(m, 3);
  EXPECT_EQ(clones.market.upper(0), Rational(12));
  EXPECT_TRUE(clones.market.upper_unbounded(0));
  EXPECT_THROW(clone_market(m, 0), InputError);
}

TEST(Multiunit, LargeRplqFallsBackToSampling) {
  const Market m = fixtures::zeta_market();
  const auto res = run_multiunit(m, 3, MultiunitMechanism::kRplq, 2000, 5);
  EXPECT_EQ(res.rplq_mode, RplqMode::kMonteCarlo);
  for (int i = 0; i < m.students(); ++i) EXPECT_EQ(res.assignment.row_sum(i), Rational(3));
}

}  // namespace
}  // namespace pslq
