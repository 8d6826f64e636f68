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

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pslq/axioms.hpp"
#include "pslq/eating.hpp"
#include "pslq/mechanisms.hpp"

namespace pslq {
namespace {

std::vector<Rational> row_of(const Matrix& m, int i) {
  const auto r = m.row(i);
  return {r.begin(), r.end()};
}

std::vector<Rational> run_row(Mechanism mechanism, const Market& market, int student) {
  switch (mechanism) {
    case Mechanism::kPslq:
      return row_of(run_pslq(market), student);
    case Mechanism::kRplqExact:
      return row_of(run_rplq_exact(market).assignment, student);
  }
  throw std::logic_error("unknown mechanism");
}

void check_searchable(Mechanism mechanism, const Market& market, int student) {
  if (student < 0 || student >= market.students()) {
    throw InputError("student " + std::to_string(student + 1) + " out of range");
  }
  if (market.projects() > kMisreportEnumerationLimit) {
    throw InputError("misreport search enumerates k! rankings and is limited to k <= " +
                     std::to_string(kMisreportEnumerationLimit));
  }
  if (mechanism == Mechanism::kRplqExact) require_integer_quotas(market);
  if (mechanism == Mechanism::kRplqExact &&
      market.students() > kExactEnumerationLimit) {
    throw InputError("exact RPLQ misreport search is limited to n <= " +
                     std::to_string(kExactEnumerationLimit));
  }
}

// Every strict ranking except the truthful one, in lexicographic order.
std::vector<std::vector<int>> misreports_of(const Market& market, int student) {
  const auto truth = market.profile().ranking(student);
  std::vector<int> r(static_cast<std::size_t>(market.projects()));
  std::iota(r.begin(), r.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (!std::equal(r.begin(), r.end(), truth.begin())) out.push_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

ManipulationReport assemble(int student, std::vector<Rational> truthful,
                            const std::vector<std::vector<int>>& reports,
                            const std::vector<std::vector<Rational>>& rows,
                            std::span<const int> ranking) {
  ManipulationReport rep;
  rep.student = student;
  rep.truthful_row = std::move(truthful);
  rep.misreports_tried = static_cast<int>(reports.size());
  std::optional<std::size_t> first_gain;
  std::optional<std::size_t> first_incomparable;
  for (std::size_t j = 0; j < reports.size(); ++j) {
    const auto& row = rows[j];
    if (row == rep.truthful_row) continue;
    ++rep.rows_changed;
    const bool truth_wins = sd_dominates(rep.truthful_row, row, ranking);
    const bool lie_wins = sd_dominates(row, rep.truthful_row, ranking);
    if (!truth_wins) rep.truthful_dominates_all = false;
    if (lie_wins) {
      ++rep.strict_gains;
      if (!first_gain) first_gain = j;
    } else if (!truth_wins) {
      ++rep.incomparable;
      if (!first_incomparable) first_incomparable = j;
    }
  }
  std::optional<std::size_t> pick;
  if (first_gain) {
    rep.relation = ManipulationRelation::kStrictGain;
    pick = first_gain;
  } else if (first_incomparable) {
    rep.relation = ManipulationRelation::kIncomparableChange;
    pick = first_incomparable;
  }
  if (pick) {
    rep.misreport = reports[*pick];
    rep.misreport_row = rows[*pick];
  }
  return rep;
}

}  // namespace

std::string_view to_string(Mechanism m) {
  switch (m) {
    case Mechanism::kPslq: return "pslq";
    case Mechanism::kRplqExact: return "rplq";
  }
  return "unknown";
}

std::string_view to_string(ManipulationRelation r) {
  switch (r) {
    case ManipulationRelation::kStrictGain: return "strict-sd-gain";
    case ManipulationRelation::kIncomparableChange: return "incomparable-change";
    case ManipulationRelation::kNone: return "none";
  }
  return "unknown";
}

ManipulationReport search_manipulation(Mechanism mechanism, const Market& market,
                                       int student) {
  check_searchable(mechanism, market, student);
  const auto reports = misreports_of(market, student);
  std::vector<std::vector<Rational>> rows(reports.size());
  const auto count = static_cast<std::int64_t>(reports.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < count; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const Market lie =
        market.with_profile(market.profile().with_report(student, reports[idx]));
    rows[idx] = run_row(mechanism, lie, student);
  }
  return assemble(student, run_row(mechanism, market, student), reports, rows,
                  market.profile().ranking(student));
}

ManipulationReport search_manipulation_serial(Mechanism mechanism,
                                              const Market& market, int student) {
  check_searchable(mechanism, market, student);
  const auto reports = misreports_of(market, student);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) {
    rows.push_back(run_row(
        mechanism, market.with_profile(market.profile().with_report(student, r)),
        student));
  }
  return assemble(student, run_row(mechanism, market, student), reports, rows,
                  market.profile().ranking(student));
}

WeakSpCheck verify_weak_sp(Mechanism mechanism, const Market& market, bool strong) {
  for (int i = 0; i < market.students(); ++i) {
    ManipulationReport rep = search_manipulation(mechanism, market, i);
    const bool bad = rep.relation == ManipulationRelation::kStrictGain ||
                     (strong && !rep.truthful_dominates_all);
    if (bad) return {false, std::move(rep)};
  }
  return {};
}

std::optional<CoalitionDeviation> find_pair_deviation_priolq(
    const Market& market, const Permutation& order) {
  const auto& profile = market.profile();
  const int n = market.students();
  std::vector<std::vector<int>> rankings;
  std::vector<int> r(static_cast<std::size_t>(market.projects()));
  std::iota(r.begin(), r.end(), 0);
  do {
    rankings.push_back(r);
  } while (std::next_permutation(r.begin(), r.end()));

  const DeterministicAssignment truth = run_priolq(market, order);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (const auto& ra : rankings) {
        for (const auto& rb : rankings) {
          const Market lie = market.with_profile(
              profile.with_report(a, ra).with_report(b, rb));
          const DeterministicAssignment mu = run_priolq(lie, order);
          const int da = profile.rank(a, truth[a]) - profile.rank(a, mu[a]);
          const int db = profile.rank(b, truth[b]) - profile.rank(b, mu[b]);
          if (da >= 0 && db >= 0 && (da > 0 || db > 0)) {
            return CoalitionDeviation{a, b, ra, rb};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Market fractional_quota_market() {
  const Rational two_thirds(2, 3);
  std::vector<ProjectSpec> projects{
      {"a", Rational(0), std::nullopt},
      {"b", two_thirds, two_thirds},
      {"c", two_thirds, two_thirds},
  };
  return Market(std::move(projects), PreferenceProfile({{0, 1, 2}, {1, 2, 0}}, 3));
}

Matrix impossibility_family_member(const Rational& t) {
  Matrix r(2, 3);
  r(0, 0) = Rational(2, 3);
  r(0, 1) = t;
  r(0, 2) = Rational(1, 3) - t;
  r(1, 0) = Rational(0);
  r(1, 1) = Rational(2, 3) - t;
  r(1, 2) = Rational(1, 3) + t;
  return r;
}

namespace {

// All grid matrices (entries multiples of 1/grid) feasible in the market and
// both ordinally efficient and envy-free.
std::vector<Matrix> efficient_envy_free_grid(const Market& market, int grid) {
  std::vector<Matrix> out;
  const Rational step(1, grid);
  const Rational one(1);
  const Rational two_thirds(2, 3);
  const Rational third(1, 3);
  for (int a = 0; a <= grid; ++a) {
    for (int b = 0; a + b <= grid; ++b) {
      // Column b and c are pinned at 2/3, so column a is 2/3 as well and
      // student 2's row follows from student 1's.
      Matrix r(2, 3);
      r(0, 0) = Rational(a) * step;
      r(0, 1) = Rational(b) * step;
      r(0, 2) = one - r(0, 0) - r(0, 1);
      r(1, 0) = two_thirds - r(0, 0);
      r(1, 1) = two_thirds - r(0, 1);
      r(1, 2) = r(0, 0) + r(0, 1) - third;
      if (!is_feasible(r, market)) continue;
      if (!is_envy_free(r, market.profile())) continue;
      if (!is_ordinally_efficient(r, market)) continue;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

ImpossibilityCertificate impossibility_scenario(int grid) {
  if (grid < 3 || grid % 3 != 0) {
    throw InputError("impossibility grid must be a positive multiple of 3");
  }
  ImpossibilityCertificate cert(fractional_quota_market());
  cert.grid = grid;
  const Market& truth = cert.market;
  const Market prime =
      truth.with_profile(truth.profile().with_report(0, {1, 0, 2}));
  const Market double_prime =
      truth.with_profile(truth.profile().with_report(1, {1, 0, 2}));

  // (1) The family R^t, t in [0, 1/3].
  const Rational third(1, 3);
  for (int j = 0; j * 3 <= grid; ++j) {
    const Rational t = Rational(j, grid);
    const Matrix r = impossibility_family_member(t);
    if (is_feasible(r, truth) && is_envy_free(r, truth.profile()) &&
        is_ordinally_efficient(r, truth)) {
      cert.family_t.push_back(t);
    }
  }
  for (const auto& r : efficient_envy_free_grid(truth, grid)) {
    cert.efficient_envy_free_t.push_back(r(0, 1));
  }

  // (2) The efficient envy-free matrices at the two deviation profiles.
  const auto at_prime = efficient_envy_free_grid(prime, grid);
  const auto at_double_prime = efficient_envy_free_grid(double_prime, grid);
  cert.r_prime_solutions = static_cast<int>(at_prime.size());
  cert.r_double_prime_solutions = static_cast<int>(at_double_prime.size());
  cert.r_prime = at_prime.empty() ? Matrix(2, 3) : at_prime.front();
  cert.r_double_prime =
      at_double_prime.empty() ? Matrix(2, 3) : at_double_prime.front();

  // (3) Weak strategy-proofness pins t from both sides.
  for (const auto& t : cert.family_t) {
    const Matrix r = impossibility_family_member(t);
    if (!sd_dominates(cert.r_prime.row(0), r.row(0), truth.profile().ranking(0)))
      cert.prime_dominates_family = false;
    if (!sd_dominates(cert.r_double_prime.row(1), r.row(1),
                      truth.profile().ranking(1)))
      cert.double_prime_dominates_family = false;
  }
  cert.forced_t_by_student1 = cert.r_prime(0, 1);
  cert.forced_t_by_student2 = Rational(2, 3) - cert.r_double_prime(1, 1);
  const Matrix forced1 = impossibility_family_member(cert.forced_t_by_student1);
  const Matrix forced2 = impossibility_family_member(cert.forced_t_by_student2);
  const bool row1_matches = std::ranges::equal(cert.r_prime.row(0), forced1.row(0));
  const bool row2_matches =
      std::ranges::equal(cert.r_double_prime.row(1), forced2.row(1));

  cert.contradiction = cert.r_prime_solutions == 1 &&
                       cert.r_double_prime_solutions == 1 &&
                       cert.prime_dominates_family &&
                       cert.double_prime_dominates_family && row1_matches &&
                       row2_matches &&
                       cert.forced_t_by_student1 != cert.forced_t_by_student2;

  cert.notes.push_back(
      "R^t row 1 is (2/3, t, 1/3 - t): it must sum to 1, so the third entry is "
      "1/3 - t rather than 1 - t");
  cert.notes.push_back("uniqueness of R' and R'' is certified on the 1/" +
                       std::to_string(grid) + " grid");
  return cert;
}

std::string render_certificate(const ImpossibilityCertificate& cert) {
  const auto& m = cert.market;
  auto fmt_row = [](std::span<const Rational> row) {
    std::string s = "(";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ", ";
      s += row[j].str();
    }
    return s + ")";
  };
  auto fmt_matrix = [&](const Matrix& r) {
    std::string s;
    for (int i = 0; i < r.rows(); ++i) {
      s += "  student " + std::to_string(i + 1) + ": " + fmt_row(r.row(i)) + "\n";
    }
    return s;
  };
  std::ostringstream out;
  out << "impossibility certificate\n";
  out << "market: n = " << m.students() << ", projects";
  for (int p = 0; p < m.projects(); ++p) {
    out << " " << m.name(p) << "[" << m.lower(p).str() << ","
        << (m.upper_unbounded(p) ? std::string("inf") : m.upper(p).str()) << "]";
  }
  out << "\n";
  out << "truthful profile: 1: a > b > c; 2: b > c > a\n";
  out << "grid: 1/" << cert.grid << "\n";
  out << "step 1: R^t = [[2/3, t, 1/3 - t], [0, 2/3 - t, 1/3 + t]]\n";
  out << "  family members verified efficient and envy-free: "
      << cert.family_t.size() << " (t = " << cert.family_t.front().str()
      << " .. " << cert.family_t.back().str() << ")\n";
  out << "  grid matrices efficient and envy-free at the true profile: "
      << cert.efficient_envy_free_t.size() << ", all of the form R^t: "
      << (cert.efficient_envy_free_t == cert.family_t ? "yes" : "no") << "\n";
  out << "step 2: student 1 reports b > a > c; unique efficient envy-free R' ("
      << cert.r_prime_solutions << " solution)\n"
      << fmt_matrix(cert.r_prime);
  out << "        student 2 reports b > a > c; unique efficient envy-free R'' ("
      << cert.r_double_prime_solutions << " solution)\n"
      << fmt_matrix(cert.r_double_prime);
  out << "step 3: R'_1 sd(>_1) R^t_1 for every t: "
      << (cert.prime_dominates_family ? "yes" : "no") << "\n";
  out << "        R''_2 sd(>_2) R^t_2 for every t: "
      << (cert.double_prime_dominates_family ? "yes" : "no") << "\n";
  out << "        weak strategy-proofness for student 1 forces t* = "
      << cert.forced_t_by_student1.str() << "\n";
  out << "        weak strategy-proofness for student 2 forces t* = "
      << cert.forced_t_by_student2.str() << "\n";
  out << "contradiction: " << (cert.contradiction ? "yes" : "no") << "\n";
  for (const auto& note : cert.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace pslq
