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

#ifndef PSLQ_MECHANISMS_HPP_
#define PSLQ_MECHANISMS_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "pslq/market.hpp"

namespace pslq {

// Largest n for which RPLQ is computed by enumerating all n! orders.
inline constexpr int kExactEnumerationLimit = 8;

// Serial dictatorship state under lower quotas. Before serving a student it
// compares the unfilled lower quota with the number of students left; when
// they are equal the menu shrinks to the projects still below their lower
// quota.
class PriorityState {
 public:
  explicit PriorityState(const Market& market);

  int step() const { return step_; }  // students served so far
  int remaining() const { return market_->students() - step_; }
  const std::vector<int>& counts() const { return counts_; }

  ProjectSet deficient() const;
  Rational unfilled_lower() const;
  // True when the unfilled lower quota is no longer below remaining().
  bool restricted() const;
  ProjectSet menu() const;

  // Assigns `student` her choice from menu(); returns the project.
  int serve(int student);
  DeterministicAssignment result() const;

 private:
  const Market* market_;
  int step_ = 0;
  std::vector<int> counts_;
  std::vector<int> project_of_;
};

// PrioLQ for the given service order.
// Throws InputError unless every quota is an integer.
void require_integer_quotas(const Market& market);

DeterministicAssignment run_priolq(const Market& market, const Permutation& order);

enum class RplqMode { kExact, kMonteCarlo };

struct RplqResult {
  RandomAssignment assignment;
  RplqMode mode = RplqMode::kExact;
  std::uint64_t samples = 0;  // Monte Carlo only
  std::uint64_t seed = 0;     // Monte Carlo only
};

// Uniform average of PrioLQ over all n! orders (OpenMP over permutation
// ranks). Throws InputError above kExactEnumerationLimit.
RplqResult run_rplq_exact(const Market& market);
// Single-threaded reference: walks std::next_permutation.
RplqResult run_rplq_exact_serial(const Market& market);

// Empirical average over `samples` uniform orders. Sample j draws its order
// from its own seeded substream, so the result does not depend on the thread
// count.
RplqResult run_rplq_sampled(const Market& market, std::uint64_t samples,
                            std::uint64_t seed);
RplqResult run_rplq_sampled_serial(const Market& market, std::uint64_t samples,
                                   std::uint64_t seed);

// q clones of each student. Clone j of student i is student i*q + j.
struct ClonedMarket {
  Market market;
  std::vector<int> owner;  // cloned student -> original student
  int original_students = 0;
  int q = 1;
};

ClonedMarket clone_market(const Market& market, int q);

// Sums clone rows back into an n x k matrix whose rows sum to q.
Matrix aggregate_clones(const Matrix& cloned, const ClonedMarket& clones);

enum class MultiunitMechanism { kPslq, kRplq };

struct MultiunitResult {
  Matrix assignment;       // n x k, rows sum to q
  Matrix clone_assignment; // (q n) x k
  RplqMode rplq_mode = RplqMode::kExact;
};

// Falls back to Monte Carlo RPLQ when q n exceeds the enumeration limit.
MultiunitResult run_multiunit(const Market& market, int q,
                              MultiunitMechanism mechanism,
                              std::uint64_t samples = 100000,
                              std::uint64_t seed = 0);

// Unranks index in [0, n!) to the index-th permutation in lexicographic order.
std::vector<int> permutation_from_rank(std::uint64_t rank, int n);
std::uint64_t factorial(int n);

}  // namespace pslq

#endif  // PSLQ_MECHANISMS_HPP_
