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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pslq/eating.hpp"
#include "pslq/random.hpp"

namespace pslq {
namespace {

using CountMatrix = std::vector<std::int64_t>;  // row-major n x k

void accumulate(CountMatrix& counts, const DeterministicAssignment& x, int k) {
  for (int i = 0; i < x.students(); ++i) {
    ++counts[static_cast<std::size_t>(i) * k + x[i]];
  }
}

Matrix counts_over(const CountMatrix& counts, int n, int k, std::uint64_t total) {
  Matrix r(n, k);
  const Rational denom(static_cast<std::int64_t>(total));
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < k; ++p)
      r(i, p) = Rational(counts[static_cast<std::size_t>(i) * k + p]) / denom;
  return r;
}

void check_enumerable(const Market& market) {
  if (market.students() > kExactEnumerationLimit) {
    throw InputError("exact RPLQ enumerates n! orders and is limited to n <= " +
                     std::to_string(kExactEnumerationLimit) + " (n = " +
                     std::to_string(market.students()) +
                     "); use Monte Carlo mode (--samples N --seed S)");
  }
}

std::vector<int> sampled_order(int n, std::uint64_t seed, std::uint64_t j) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng = substream(seed, j);
  fisher_yates(order, rng);
  return order;
}

}  // namespace

void require_integer_quotas(const Market& market) {
  // A deterministic assignment cannot meet a fractional lower or upper quota.
  if (!market.integer_quotas()) {
    throw InputError("PrioLQ and RPLQ require integer quotas");
  }
}

PriorityState::PriorityState(const Market& market)
    : market_(&market),
      counts_(static_cast<std::size_t>(market.projects()), 0),
      project_of_(static_cast<std::size_t>(market.students()), -1) {
  require_integer_quotas(market);
}

ProjectSet PriorityState::deficient() const {
  ProjectSet set(counts_.size(), false);
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    set[p] = Rational(counts_[p]) < market_->lower(static_cast<int>(p));
  }
  return set;
}

Rational PriorityState::unfilled_lower() const {
  Rational total;
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    total += positive_part(market_->lower(static_cast<int>(p)) - Rational(counts_[p]));
  }
  return total;
}

bool PriorityState::restricted() const {
  return !(unfilled_lower() < Rational(remaining()));
}

ProjectSet PriorityState::menu() const {
  if (restricted()) return deficient();
  ProjectSet set(counts_.size(), false);
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    set[p] = Rational(counts_[p] + 1) <= market_->upper(static_cast<int>(p));
  }
  return set;
}

int PriorityState::serve(int student) {
  if (remaining() <= 0) throw std::logic_error("all students already served");
  if (project_of_[student] != -1) throw InputError("student served twice");
  const ProjectSet m = menu();
  if (std::none_of(m.begin(), m.end(), [](bool b) { return b; })) {
    throw std::logic_error("PrioLQ menu empty at step " + std::to_string(step_ + 1));
  }
  const int p = choice(market_->profile(), student, m);
  ++counts_[p];
  project_of_[student] = p;
  ++step_;
  return p;
}

DeterministicAssignment PriorityState::result() const {
  if (remaining() != 0) throw std::logic_error("PrioLQ run incomplete");
  return DeterministicAssignment(project_of_, market_->projects());
}

DeterministicAssignment run_priolq(const Market& market, const Permutation& order) {
  if (order.size() != market.students()) {
    throw InputError("order has " + std::to_string(order.size()) +
                     " entries, market has " + std::to_string(market.students()) +
                     " students");
  }
  PriorityState state(market);
  for (int s = 0; s < order.size(); ++s) state.serve(order[s]);
  return state.result();
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int j = 2; j <= n; ++j) f *= static_cast<std::uint64_t>(j);
  return f;
}

std::vector<int> permutation_from_rank(std::uint64_t rank, int n) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int remaining = n; remaining > 0; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

RplqResult run_rplq_exact(const Market& market) {
  require_integer_quotas(market);
  check_enumerable(market);
  const int n = market.students();
  const int k = market.projects();
  const std::uint64_t total = factorial(n);
  const auto total_signed = static_cast<std::int64_t>(total);
  CountMatrix counts(static_cast<std::size_t>(n) * k, 0);

#pragma omp parallel
  {
    CountMatrix local(counts.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t rank = 0; rank < total_signed; ++rank) {
      const Permutation order(
          permutation_from_rank(static_cast<std::uint64_t>(rank), n));
      accumulate(local, run_priolq(market, order), k);
    }
#pragma omp critical
    for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += local[j];
  }
  return {counts_over(counts, n, k, total), RplqMode::kExact, 0, 0};
}

RplqResult run_rplq_exact_serial(const Market& market) {
  require_integer_quotas(market);
  check_enumerable(market);
  const int n = market.students();
  const int k = market.projects();
  CountMatrix counts(static_cast<std::size_t>(n) * k, 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t runs = 0;
  do {
    accumulate(counts, run_priolq(market, Permutation(order)), k);
    ++runs;
  } while (std::next_permutation(order.begin(), order.end()));
  return {counts_over(counts, n, k, runs), RplqMode::kExact, 0, 0};
}

RplqResult run_rplq_sampled(const Market& market, std::uint64_t samples,
                            std::uint64_t seed) {
  if (samples == 0) throw InputError("Monte Carlo RPLQ needs at least one sample");
  require_integer_quotas(market);
  const int n = market.students();
  const int k = market.projects();
  const auto total = static_cast<std::int64_t>(samples);
  CountMatrix counts(static_cast<std::size_t>(n) * k, 0);

#pragma omp parallel
  {
    CountMatrix local(counts.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t j = 0; j < total; ++j) {
      const Permutation order(sampled_order(n, seed, static_cast<std::uint64_t>(j)));
      accumulate(local, run_priolq(market, order), k);
    }
#pragma omp critical
    for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += local[j];
  }
  return {counts_over(counts, n, k, samples), RplqMode::kMonteCarlo, samples, seed};
}

RplqResult run_rplq_sampled_serial(const Market& market, std::uint64_t samples,
                                   std::uint64_t seed) {
  if (samples == 0) throw InputError("Monte Carlo RPLQ needs at least one sample");
  require_integer_quotas(market);
  const int n = market.students();
  const int k = market.projects();
  CountMatrix counts(static_cast<std::size_t>(n) * k, 0);
  for (std::uint64_t j = 0; j < samples; ++j) {
    accumulate(counts, run_priolq(market, Permutation(sampled_order(n, seed, j))), k);
  }
  return {counts_over(counts, n, k, samples), RplqMode::kMonteCarlo, samples, seed};
}

ClonedMarket clone_market(const Market& market, int q) {
  if (q < 1) throw InputError("clone count q must be at least 1");
  const int n = market.students();
  const int cloned_n = q * n;
  Rational sum_lower;
  Rational sum_upper;
  auto specs = market.specs();
  for (auto& spec : specs) {
    sum_lower += spec.lower;
    sum_upper += spec.upper.value_or(Rational(cloned_n));
  }
  if (sum_lower > Rational(cloned_n) || sum_upper < Rational(cloned_n)) {
    throw InputError("multi-unit market infeasible: need sum(l) = " +
                     sum_lower.str() + " <= q*n = " + std::to_string(cloned_n) +
                     " <= sum(u) = " + sum_upper.str());
  }
  std::vector<std::vector<int>> rankings;
  std::vector<int> owner;
  for (int i = 0; i < n; ++i) {
    const auto r = market.profile().ranking(i);
    for (int j = 0; j < q; ++j) {
      rankings.emplace_back(r.begin(), r.end());
      owner.push_back(i);
    }
  }
  PreferenceProfile profile(std::move(rankings), market.projects());
  return {Market(std::move(specs), std::move(profile)), std::move(owner), n, q};
}

Matrix aggregate_clones(const Matrix& cloned, const ClonedMarket& clones) {
  if (cloned.rows() != static_cast<int>(clones.owner.size())) {
    throw InputError("cloned matrix has wrong number of rows");
  }
  Matrix out(clones.original_students, cloned.cols());
  for (int c = 0; c < cloned.rows(); ++c)
    for (int p = 0; p < cloned.cols(); ++p) out(clones.owner[c], p) += cloned(c, p);
  return out;
}

MultiunitResult run_multiunit(const Market& market, int q,
                              MultiunitMechanism mechanism, std::uint64_t samples,
                              std::uint64_t seed) {
  const ClonedMarket clones = clone_market(market, q);
  MultiunitResult result;
  if (mechanism == MultiunitMechanism::kPslq) {
    result.clone_assignment = run_pslq(clones.market);
  } else if (clones.market.students() <= kExactEnumerationLimit) {
    result.clone_assignment = run_rplq_exact(clones.market).assignment;
  } else {
    result.clone_assignment = run_rplq_sampled(clones.market, samples, seed).assignment;
    result.rplq_mode = RplqMode::kMonteCarlo;
  }
  result.assignment = aggregate_clones(result.clone_assignment, clones);
  return result;
}

}  // namespace pslq
