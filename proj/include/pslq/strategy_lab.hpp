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

#ifndef PSLQ_STRATEGY_LAB_HPP_
#define PSLQ_STRATEGY_LAB_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pslq/market.hpp"

namespace pslq {

enum class Mechanism { kPslq, kRplqExact };

std::string_view to_string(Mechanism m);

// Largest k for which all k! misreports are enumerated.
inline constexpr int kMisreportEnumerationLimit = 7;

enum class ManipulationRelation {
  kStrictGain,         // some misreport strictly sd-dominates the truthful row
  kIncomparableChange, // no gain, but some misreport row is not dominated by truth
  kNone,               // truth weakly dominates every misreport row
};

std::string_view to_string(ManipulationRelation r);

struct ManipulationReport {
  int student = 0;
  std::vector<Rational> truthful_row;
  ManipulationRelation relation = ManipulationRelation::kNone;
  // First misreport (lexicographic in project index order) realising
  // `relation`; empty for kNone.
  std::vector<int> misreport;
  std::vector<Rational> misreport_row;

  int misreports_tried = 0;
  int rows_changed = 0;     // misreport rows different from the truthful row
  int incomparable = 0;     // neither row dominates the other
  int strict_gains = 0;
  // Truthful row weakly dominates every misreport row.
  bool truthful_dominates_all = true;
};

// Runs the mechanism on the true profile and on every other strict ranking of
// `student`. Misreports are evaluated in parallel; the report is assembled in
// enumeration order so it matches the serial version exactly.
ManipulationReport search_manipulation(Mechanism mechanism, const Market& market,
                                       int student);
ManipulationReport search_manipulation_serial(Mechanism mechanism,
                                              const Market& market, int student);

struct WeakSpCheck {
  bool holds = true;
  std::optional<ManipulationReport> counterexample;
  explicit operator bool() const { return holds; }
};

// No student has a strictly sd-improving misreport. With `strong` set, the
// truthful row must also weakly dominate every misreport row.
WeakSpCheck verify_weak_sp(Mechanism mechanism, const Market& market,
                           bool strong = false);

// Two-student coalitions under PrioLQ with a fixed order: a joint misreport
// that leaves both weakly better and one strictly better.
struct CoalitionDeviation {
  int first = 0;
  int second = 0;
  std::vector<int> first_report;
  std::vector<int> second_report;
};

std::optional<CoalitionDeviation> find_pair_deviation_priolq(const Market& market,
                                                             const Permutation& order);

// Certificate that ordinal efficiency, envy-freeness and weak
// strategy-proofness are incompatible once quotas may be fractional.
struct ImpossibilityCertificate {
  explicit ImpossibilityCertificate(Market m) : market(std::move(m)) {}

  Market market;
  int grid = 0;  // denominator of the rational grid searched
  // R^t for t on the grid, all verified efficient and envy-free at the true
  // profile.
  std::vector<Rational> family_t;
  // Every grid matrix that is efficient and envy-free at the true profile,
  // as its t value (r_1b).
  std::vector<Rational> efficient_envy_free_t;
  Matrix r_prime;        // student 1 reports b > a > c
  Matrix r_double_prime; // student 2 reports b > a > c
  int r_prime_solutions = 0;        // grid points efficient + envy-free at >'
  int r_double_prime_solutions = 0; // grid points efficient + envy-free at >''
  bool prime_dominates_family = true;         // R'_1 sd(>_1) R^t_1 for all t
  bool double_prime_dominates_family = true;  // R''_2 sd(>_2) R^t_2 for all t
  Rational forced_t_by_student1;  // t with R^t_1 = R'_1
  Rational forced_t_by_student2;  // t with R^t_2 = R''_2
  bool contradiction = false;
  std::vector<std::string> notes;
};

// Two students, projects a, b, c with l(a) = 0, u(a) unbounded and
// l = u = 2/3 on b and c; preferences 1: a > b > c, 2: b > c > a.
Market fractional_quota_market();

// R^t = [[2/3, t, 1/3 - t], [0, 2/3 - t, 1/3 + t]].
Matrix impossibility_family_member(const Rational& t);
ImpossibilityCertificate impossibility_scenario(int grid = 36);
std::string render_certificate(const ImpossibilityCertificate& cert);

}  // namespace pslq

#endif  // PSLQ_STRATEGY_LAB_HPP_
