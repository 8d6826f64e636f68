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

#include "pslq/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pslq {

bool sd_dominates(std::span<const Rational> x, std::span<const Rational> y,
                  std::span<const int> ranking, bool strict) {
  if (x.size() != y.size() || x.size() != ranking.size()) {
    throw InputError("sd_dominates: length mismatch");
  }
  Rational px;
  Rational py;
  bool differs = false;
  for (int p : ranking) {
    px += x[p];
    py += y[p];
    if (px < py) return false;
    if (x[p] != y[p]) differs = true;
  }
  return !strict || differs;
}

namespace {

void check_dims(const Matrix& r, const PreferenceProfile& profile) {
  if (r.rows() != profile.students() || r.cols() != profile.projects()) {
    throw InputError("assignment dimensions do not match the profile");
  }
}

bool rows_equal(const Matrix& r, int i, int j) {
  return std::equal(r.row(i).begin(), r.row(i).end(), r.row(j).begin());
}

}  // namespace

PairCheck is_envy_free(const Matrix& r, const PreferenceProfile& profile) {
  check_dims(r, profile);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.rows(); ++j) {
      if (i == j) continue;
      if (!sd_dominates(r.row(i), r.row(j), profile.ranking(i))) {
        return {false, StudentPair{i, j}};
      }
    }
  }
  return {};
}

PairCheck is_weakly_envy_free(const Matrix& r, const PreferenceProfile& profile) {
  check_dims(r, profile);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.rows(); ++j) {
      if (i == j || rows_equal(r, i, j)) continue;
      if (sd_dominates(r.row(j), r.row(i), profile.ranking(i))) {
        return {false, StudentPair{i, j}};
      }
    }
  }
  return {};
}

TauGraph::TauGraph(const Matrix& r, const PreferenceProfile& profile)
    : k_(profile.projects()),
      witness_(static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_), -1) {
  check_dims(r, profile);
  for (int i = 0; i < r.rows(); ++i) {
    const auto ranking = profile.ranking(i);
    for (int pos_q = 0; pos_q < k_; ++pos_q) {
      const int q = ranking[pos_q];
      if (r(i, q).sign() <= 0) continue;
      for (int pos_p = 0; pos_p < pos_q; ++pos_p) {
        const int p = ranking[pos_p];
        if (witness_[index(p, q)] < 0) witness_[index(p, q)] = i;
      }
    }
  }
}

std::vector<std::pair<int, int>> TauGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < k_; ++p)
    for (int q = 0; q < k_; ++q)
      if (has_edge(p, q)) out.emplace_back(p, q);
  return out;
}

std::optional<TauCycle> find_tau_cycle(const Matrix& r,
                                       const PreferenceProfile& profile) {
  const TauGraph graph(r, profile);
  const int k = graph.projects();
  enum Color { kWhite, kGray, kBlack };
  std::vector<Color> color(static_cast<std::size_t>(k), kWhite);
  std::vector<int> stack;

  // Iterative DFS keeping (node, next-neighbour) frames.
  for (int root = 0; root < k; ++root) {
    if (color[root] != kWhite) continue;
    std::vector<std::pair<int, int>> frames{{root, 0}};
    color[root] = kGray;
    stack.push_back(root);
    while (!frames.empty()) {
      auto& [node, next] = frames.back();
      if (next == k) {
        color[node] = kBlack;
        stack.pop_back();
        frames.pop_back();
        continue;
      }
      const int q = next++;
      if (!graph.has_edge(node, q)) continue;
      if (color[q] == kGray) {
        const auto start = std::find(stack.begin(), stack.end(), q);
        TauCycle cycle;
        cycle.projects.assign(start, stack.end());
        const auto m = cycle.projects.size();
        for (std::size_t j = 0; j < m; ++j) {
          cycle.students.push_back(
              graph.witness(cycle.projects[j], cycle.projects[(j + 1) % m]));
        }
        return cycle;
      }
      if (color[q] == kWhite) {
        color[q] = kGray;
        stack.push_back(q);
        frames.emplace_back(q, 0);
      }
    }
  }
  return std::nullopt;
}

std::optional<WastefulChain> find_wasteful_chain(const Matrix& r,
                                                 const Market& market) {
  const TauGraph graph(r, market.profile());
  const int k = graph.projects();
  const auto cols = r.col_sums();
  std::vector<bool> slack(static_cast<std::size_t>(k));
  std::vector<bool> surplus(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) {
    slack[p] = cols[p] < market.upper(p);
    surplus[p] = cols[p] > market.lower(p);
  }

  // Multi-source BFS from every slack project; the first edge that lands on a
  // surplus project closes a shortest chain.
  std::vector<int> parent(static_cast<std::size_t>(k), -1);
  std::vector<int> source(static_cast<std::size_t>(k), -1);
  std::deque<int> queue;
  for (int p = 0; p < k; ++p) {
    if (slack[p]) {
      source[p] = p;
      queue.push_back(p);
    }
  }
  auto path_to = [&](int x) {
    std::vector<int> path;
    for (int v = x; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  };
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < k; ++y) {
      if (!graph.has_edge(x, y)) continue;
      // Interior path nodes were tested when first reached, so a surplus y
      // is at worst the path's own source; the closed walk is still a chain.
      if (surplus[y]) {
        WastefulChain chain;
        chain.projects = path_to(x);
        chain.projects.push_back(y);
        for (std::size_t j = 0; j + 1 < chain.projects.size(); ++j) {
          chain.students.push_back(
              graph.witness(chain.projects[j], chain.projects[j + 1]));
        }
        return chain;
      }
      if (source[y] == -1) {
        source[y] = source[x];
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

namespace {

ImprovementWitness shift_along(const Matrix& r, std::vector<int> projects,
                               std::vector<int> students, Rational delta,
                               WitnessKind kind) {
  ImprovementWitness w;
  w.kind = kind;
  w.delta = std::move(delta);
  w.shift = Matrix(r.rows(), r.cols());
  const std::size_t trades = students.size();
  for (std::size_t j = 0; j < trades; ++j) {
    const int i = students[j];
    const int gain = projects[j];
    const int loss = projects[(j + 1) % projects.size()];
    w.shift(i, gain) += w.delta;
    w.shift(i, loss) -= w.delta;
  }
  w.improved = r;
  w.improved += w.shift;
  w.projects = std::move(projects);
  w.students = std::move(students);
  return w;
}

}  // namespace

ImprovementWitness improve_along(const Matrix& r, const TauCycle& cycle) {
  const std::size_t m = cycle.projects.size();
  if (m < 2 || cycle.students.size() != m) throw InputError("malformed cycle");
  Rational delta = r(cycle.students[0], cycle.projects[1 % m]);
  for (std::size_t j = 1; j < m; ++j) {
    delta = std::min(delta, r(cycle.students[j], cycle.projects[(j + 1) % m]));
  }
  // Appending p_1 makes the cyclic indexing in shift_along explicit.
  std::vector<int> projects = cycle.projects;
  projects.push_back(cycle.projects.front());
  return shift_along(r, std::move(projects), cycle.students, std::move(delta),
                     WitnessKind::kTauCycle);
}

ImprovementWitness improve_along(const Matrix& r, const WastefulChain& chain,
                                 const Market& market) {
  const std::size_t l = chain.students.size();
  if (l == 0 || chain.projects.size() != l + 1) throw InputError("malformed chain");
  const int first = chain.projects.front();
  const int last = chain.projects.back();
  Rational delta = market.upper(first) - r.col_sum(first);
  delta = std::min(delta, r.col_sum(last) - market.lower(last));
  for (std::size_t j = 0; j < l; ++j) {
    delta = std::min(delta, r(chain.students[j], chain.projects[j + 1]));
  }
  return shift_along(r, chain.projects, chain.students, std::move(delta),
                     WitnessKind::kWastefulChain);
}

bool dominates(const Matrix& better, const Matrix& worse,
               const PreferenceProfile& profile) {
  check_dims(better, profile);
  check_dims(worse, profile);
  for (int i = 0; i < better.rows(); ++i) {
    if (!sd_dominates(better.row(i), worse.row(i), profile.ranking(i))) return false;
  }
  return better != worse;
}

EfficiencyCheck is_ordinally_efficient(const Matrix& r, const Market& market) {
  const auto feasible = is_feasible(r, market);
  if (!feasible) {
    throw InputError("ordinal efficiency needs a feasible assignment: " +
                     feasible.violations.front());
  }
  std::optional<ImprovementWitness> witness;
  if (auto cycle = find_tau_cycle(r, market.profile())) {
    witness = improve_along(r, *cycle);
  } else if (auto chain = find_wasteful_chain(r, market)) {
    witness = improve_along(r, *chain, market);
  } else {
    return {};
  }
  if (witness->delta.sign() <= 0 || !is_feasible(witness->improved, market) ||
      !dominates(witness->improved, r, market.profile())) {
    throw std::logic_error("improvement witness failed verification");
  }
  return {false, std::move(witness)};
}

PairCheck is_ml_fair(const DeterministicAssignment& mu,
                     const PreferenceProfile& profile, const MasterList& ml) {
  if (mu.students() != profile.students() || ml.size() != profile.students()) {
    throw InputError("assignment, profile and master list sizes differ");
  }
  for (int i = 0; i < mu.students(); ++i) {
    for (int j = 0; j < mu.students(); ++j) {
      if (i == j) continue;
      if (profile.prefers(i, mu[j], mu[i]) && !ml.precedes(j, i)) {
        return {false, StudentPair{i, j}};
      }
    }
  }
  return {};
}

namespace {

std::uint64_t candidate_count(const Market& market) {
  const auto k = static_cast<std::uint64_t>(market.projects());
  std::uint64_t total = 1;
  for (int i = 0; i < market.students(); ++i) {
    if (total > kParetoEnumerationLimit / k) {
      throw InputError("Pareto enumeration over k^n = " +
                       std::to_string(market.projects()) + "^" +
                       std::to_string(market.students()) +
                       " assignments exceeds the limit of " +
                       std::to_string(kParetoEnumerationLimit) +
                       "; use a sampling study instead");
    }
    total *= k;
  }
  return total;
}

void decode(std::uint64_t code, int k, std::vector<int>& out) {
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    *it = static_cast<int>(code % static_cast<std::uint64_t>(k));
    code /= static_cast<std::uint64_t>(k);
  }
}

// Candidate is feasible and Pareto-dominates mu.
bool beats(const std::vector<int>& cand, const DeterministicAssignment& mu,
           const Market& market, std::vector<int>& counts) {
  const auto& profile = market.profile();
  bool strict = false;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const int rc = profile.rank(static_cast<int>(i), cand[i]);
    const int rm = profile.rank(static_cast<int>(i), mu[static_cast<int>(i)]);
    if (rc > rm) return false;
    if (rc < rm) strict = true;
  }
  if (!strict) return false;
  std::fill(counts.begin(), counts.end(), 0);
  for (int p : cand) ++counts[p];
  for (int p = 0; p < market.projects(); ++p) {
    const Rational c(counts[p]);
    if (c < market.lower(p) || c > market.upper(p)) return false;
  }
  return true;
}

void check_mu(const DeterministicAssignment& mu, const Market& market) {
  if (mu.students() != market.students() || mu.projects() != market.projects()) {
    throw InputError("assignment dimensions do not match the market");
  }
  const auto feasible = is_feasible(mu, market);
  if (!feasible) {
    throw InputError("Pareto check needs a feasible assignment: " +
                     feasible.violations.front());
  }
}

}  // namespace

ParetoCheck is_mqc_efficient(const DeterministicAssignment& mu,
                             const Market& market) {
  check_mu(mu, market);
  const std::uint64_t total = candidate_count(market);
  const int n = market.students();
  const int k = market.projects();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

#pragma omp parallel
  {
    std::vector<int> cand(static_cast<std::size_t>(n));
    std::vector<int> counts(static_cast<std::size_t>(k));
#pragma omp for schedule(static) reduction(min : best)
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
      if (code >= best) continue;
      decode(static_cast<std::uint64_t>(code), k, cand);
      if (beats(cand, mu, market, counts)) best = std::min(best, code);
    }
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return {};
  std::vector<int> cand(static_cast<std::size_t>(n));
  decode(static_cast<std::uint64_t>(best), k, cand);
  return {false, DeterministicAssignment(std::move(cand), k)};
}

ParetoCheck is_mqc_efficient_serial(const DeterministicAssignment& mu,
                                    const Market& market) {
  check_mu(mu, market);
  const std::uint64_t total = candidate_count(market);
  const int k = market.projects();
  std::vector<int> cand(static_cast<std::size_t>(market.students()));
  std::vector<int> counts(static_cast<std::size_t>(k));
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, k, cand);
    if (beats(cand, mu, market, counts)) {
      return {false, DeterministicAssignment(cand, k)};
    }
  }
  return {};
}

}  // namespace pslq
