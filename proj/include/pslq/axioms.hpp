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

// Exact checkers for the fairness and efficiency axioms on random and
// deterministic assignments.
//
// Ordinal efficiency under quotas: R is efficient iff the trade relation
// (p -> q when some student holding q prefers p) is acyclic and there is no
// wasteful chain, i.e. no trade path that starts at a project with slack
// below its upper quota and ends at a project holding more than its lower
// quota. Every failure comes with an explicit shift matrix that produces a
// feasible dominating assignment.

#ifndef PSLQ_AXIOMS_HPP_
#define PSLQ_AXIOMS_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pslq/market.hpp"

namespace pslq {

// Prefix sums of x in `ranking` order all >= those of y; strict additionally
// requires x != y.
bool sd_dominates(std::span<const Rational> x, std::span<const Rational> y,
                  std::span<const int> ranking, bool strict = false);

// (i, j) with i envying j.
using StudentPair = std::pair<int, int>;

struct PairCheck {
  bool holds = true;
  std::optional<StudentPair> violation;
  explicit operator bool() const { return holds; }
};

// Every row i sd(>_i)-dominates every other row. Violation (i, j): i's row
// does not dominate j's.
PairCheck is_envy_free(const Matrix& r, const PreferenceProfile& profile);
// R_j sd(>_i) R_i implies R_i = R_j. Violation (i, j): j's row dominates i's
// under >_i but differs.
PairCheck is_weakly_envy_free(const Matrix& r, const PreferenceProfile& profile);

// Trade relation on projects: edge p -> q iff some student i has p >_i q and
// r_iq > 0. witness(p, q) is the lowest such student.
class TauGraph {
 public:
  TauGraph(const Matrix& r, const PreferenceProfile& profile);

  int projects() const { return k_; }
  bool has_edge(int p, int q) const { return witness_[index(p, q)] >= 0; }
  int witness(int p, int q) const { return witness_[index(p, q)]; }
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p) * k_ + static_cast<std::size_t>(q);
  }
  int k_ = 0;
  std::vector<int> witness_;
};

// Projects p_1 .. p_m with edges p_j -> p_{j+1} (indices mod m), each by
// students[j].
struct TauCycle {
  std::vector<int> projects;
  std::vector<int> students;
};

// Path p_1 -> i_1 -> p_2 -> ... -> i_l -> p_{l+1}: p_j >_{i_j} p_{j+1},
// r(i_j, p_{j+1}) > 0, p_1 below its upper quota, p_{l+1} above its lower.
struct WastefulChain {
  std::vector<int> projects;  // l + 1 entries
  std::vector<int> students;  // l entries
};

std::optional<TauCycle> find_tau_cycle(const Matrix& r,
                                       const PreferenceProfile& profile);
// Shortest chain by number of trades.
std::optional<WastefulChain> find_wasteful_chain(const Matrix& r,
                                                 const Market& market);

enum class WitnessKind { kTauCycle, kWastefulChain };

struct ImprovementWitness {
  WitnessKind kind = WitnessKind::kTauCycle;
  std::vector<int> projects;
  std::vector<int> students;
  Rational delta;
  Matrix shift;     // Delta
  Matrix improved;  // R + Delta
};

// Largest uniform shift along the cycle / chain, and the resulting matrices.
ImprovementWitness improve_along(const Matrix& r, const TauCycle& cycle);
ImprovementWitness improve_along(const Matrix& r, const WastefulChain& chain,
                                 const Market& market);

struct EfficiencyCheck {
  bool efficient = true;
  std::optional<ImprovementWitness> witness;
  explicit operator bool() const { return efficient; }
};

// Throws InputError when r is infeasible. On failure the witness's improved
// matrix is verified feasible and dominating before returning.
EfficiencyCheck is_ordinally_efficient(const Matrix& r, const Market& market);

// R' dominates R: every row weakly sd-dominates under the row owner's
// preferences and R' != R.
bool dominates(const Matrix& better, const Matrix& worse,
               const PreferenceProfile& profile);

// Violation (i, j): j is later on the list yet holds a project i prefers.
PairCheck is_ml_fair(const DeterministicAssignment& mu,
                     const PreferenceProfile& profile, const MasterList& ml);

// Candidate assignments k^n above which Pareto enumeration refuses to run.
inline constexpr std::uint64_t kParetoEnumerationLimit = 1'000'000;

struct ParetoCheck {
  bool efficient = true;
  std::optional<DeterministicAssignment> dominating;
  explicit operator bool() const { return efficient; }
};

// Exhaustive search over all feasible deterministic assignments for one that
// Pareto-dominates mu. The OpenMP version returns the lexicographically first
// dominating assignment, same as the serial one.
ParetoCheck is_mqc_efficient(const DeterministicAssignment& mu,
                             const Market& market);
ParetoCheck is_mqc_efficient_serial(const DeterministicAssignment& mu,
                                    const Market& market);

}  // namespace pslq

#endif  // PSLQ_AXIOMS_HPP_
