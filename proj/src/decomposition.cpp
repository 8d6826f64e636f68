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

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace pslq {
namespace {

// Dinic max flow on small integer networks.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, long cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
    return static_cast<int>(arcs_.size()) - 2;
  }

  // Flow currently carried by the arc returned from add_arc.
  long flow(int arc) const { return arcs_[arc ^ 1].cap; }

  long max_flow(int s, int t) {
    long total = 0;
    while (levels(s, t)) {
      next_.assign(adj_.size(), 0);
      while (long pushed = push(s, t, std::numeric_limits<long>::max())) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    long cap;
  };

  bool levels(int s, int t) {
    level_.assign(adj_.size(), -1);
    level_[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a : adj_[v]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long push(int v, int t, long limit) {
    if (v == t) return limit;
    for (auto& j = next_[v]; j < adj_[v].size(); ++j) {
      const int a = adj_[v][j];
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      if (long got = push(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

long to_long(const Rational& q) { return std::stol(q.str()); }

void require_decomposable(const Matrix& r, const Market& market) {
  if (!market.integer_quotas()) {
    throw InputError("decomposition requires integer quotas");
  }
  const auto feasible = is_feasible(r, market);
  if (!feasible) {
    throw InputError("cannot decompose an infeasible assignment: " +
                     feasible.violations.front());
  }
}

DeterministicAssignment extract_unchecked(const Matrix& r) {
  const int n = r.rows();
  const int k = r.cols();
  // Nodes: source, students, projects, sink, then super source/sink for the
  // lower-bound reduction.
  const int source = 0;
  const int sink = n + k + 1;
  const int super_source = n + k + 2;
  const int super_sink = n + k + 3;
  FlowNetwork net(n + k + 4);
  std::vector<long> excess(static_cast<std::size_t>(n + k + 2), 0);

  auto bounded_arc = [&](int from, int to, long lo, long hi) {
    excess[from] -= lo;
    excess[to] += lo;
    return net.add_arc(from, to, hi - lo);
  };

  struct Cell {
    int student, project, arc;
    long lo;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) bounded_arc(source, 1 + i, 1, 1);
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < k; ++p) {
      const Rational& v = r(i, p);
      if (v.is_zero()) continue;
      const long lo = v == Rational(1) ? 1 : 0;
      cells.push_back({i, p, bounded_arc(1 + i, 1 + n + p, lo, 1), lo});
    }
  }
  for (int p = 0; p < k; ++p) {
    const Rational col = r.col_sum(p);
    bounded_arc(1 + n + p, sink, to_long(col.floor()), to_long(col.ceil()));
  }
  net.add_arc(sink, source, static_cast<long>(n));

  long required = 0;
  for (int v = 0; v < static_cast<int>(excess.size()); ++v) {
    if (excess[v] > 0) {
      net.add_arc(super_source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      net.add_arc(v, super_sink, -excess[v]);
    }
  }
  if (net.max_flow(super_source, super_sink) != required) {
    throw std::logic_error("no integral point in the column windows");
  }

  std::vector<int> project_of(static_cast<std::size_t>(n), -1);
  for (const auto& c : cells) {
    if (c.lo + net.flow(c.arc) == 1) project_of[c.student] = c.project;
  }
  return DeterministicAssignment(std::move(project_of), k);
}

}  // namespace

Rational Lottery::total_weight() const {
  Rational sum;
  for (const auto& t : terms) sum += t.weight;
  return sum;
}

Matrix Lottery::expectation(int students, int projects) const {
  Matrix m(students, projects);
  for (const auto& t : terms) {
    for (int i = 0; i < students; ++i) m(i, t.assignment[i]) += t.weight;
  }
  return m;
}

int fractional_count(const Matrix& r) {
  int count = 0;
  for (int i = 0; i < r.rows(); ++i)
    for (const auto& v : r.row(i))
      if (!v.is_integer()) ++count;
  for (const auto& c : r.col_sums())
    if (!c.is_integer()) ++count;
  return count;
}

DeterministicAssignment extract_extreme_point(const Matrix& r, const Market& market) {
  require_decomposable(r, market);
  return extract_unchecked(r);
}

Lottery decompose(const Matrix& r, const Market& market) {
  require_decomposable(r, market);
  const Rational one(1);
  const int bound = fractional_count(r) + 1;
  Lottery lottery;
  Matrix rest = r;
  Rational mass(1);  // probability not yet assigned to a term

  while (true) {
    if (static_cast<int>(lottery.terms.size()) >= bound) {
      throw std::logic_error("decomposition exceeded its term bound");
    }
    DeterministicAssignment x = extract_unchecked(rest);
    if (rest.is_integral()) {
      lottery.terms.push_back({mass, std::move(x)});
      break;
    }
    // Largest step keeping (rest - step X) / (1 - step) in [0,1] entrywise
    // and every column within [floor, ceil] of its current sum.
    Rational step = one;
    for (int i = 0; i < rest.rows(); ++i) {
      for (int p = 0; p < rest.cols(); ++p) {
        const Rational& v = rest(i, p);
        if (v.is_integer()) continue;
        step = std::min(step, x[i] == p ? v : one - v);
      }
    }
    const auto counts = x.column_counts();
    for (int p = 0; p < rest.cols(); ++p) {
      const Rational col = rest.col_sum(p);
      if (col.is_integer()) continue;
      step = std::min(step, Rational(counts[p]) == col.floor() ? col.ceil() - col
                                                                : col - col.floor());
    }
    lottery.terms.push_back({mass * step, x});
    Matrix xm = x.to_matrix();
    xm *= step;
    rest -= xm;
    rest *= one / (one - step);
    mass *= one - step;
  }
  return lottery;
}

}  // namespace pslq
