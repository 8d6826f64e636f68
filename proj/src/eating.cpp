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

#include "pslq/eating.hpp"

#include <algorithm>
#include <stdexcept>

namespace pslq {
namespace {

// Reserve at time s >= state.t if the current pattern were kept until s.
Rational reserve_at(const EatingState& state, const Market& market,
                    const Rational& s) {
  const Rational dt = s - state.t;
  Rational residual;
  for (int p = 0; p < market.projects(); ++p) {
    residual += positive_part(market.lower(p) - state.eaten[p] -
                              Rational(state.eaters[p]) * dt);
  }
  return Rational(market.students()) * (Rational(1) - s) - residual;
}

// First s in [t, 1] where the reserve reaches zero, given it is positive at t.
// The reserve is piecewise linear in s with a kink wherever an eaten
// project crosses its lower quota; between kinks it is linear, so the root is
// found by locating the first kink where it is non-positive and interpolating.
Rational reserve_root(const EatingState& state, const Market& market) {
  const Rational one(1);
  std::vector<Rational> points{state.t};
  for (int p = 0; p < market.projects(); ++p) {
    const Rational deficit = market.lower(p) - state.eaten[p];
    if (deficit.sign() > 0 && state.eaters[p] > 0) {
      Rational kink = state.t + deficit / Rational(state.eaters[p]);
      if (kink < one) points.push_back(std::move(kink));
    }
  }
  points.push_back(one);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Rational prev_point = points.front();
  Rational prev_value = reserve_at(state, market, prev_point);
  for (std::size_t j = 1; j < points.size(); ++j) {
    const Rational value = reserve_at(state, market, points[j]);
    if (value.sign() <= 0) {
      return prev_point +
             prev_value * (points[j] - prev_point) / (prev_value - value);
    }
    prev_point = points[j];
    prev_value = value;
  }
  // Reserve at t = 1 is minus the unmet lower quota, never positive.
  throw std::logic_error("reserve stayed positive through t = 1");
}

std::vector<int> members(const ProjectSet& set) {
  std::vector<int> out;
  for (std::size_t p = 0; p < set.size(); ++p)
    if (set[p]) out.push_back(static_cast<int>(p));
  return out;
}

}  // namespace

EatingState EatingState::initial(const Market& market) {
  EatingState s;
  s.t = Rational(0);
  s.consumption = Matrix(market.students(), market.projects());
  s.eaten.assign(static_cast<std::size_t>(market.projects()), Rational(0));
  s.active.assign(static_cast<std::size_t>(market.projects()), true);
  s.pattern.assign(static_cast<std::size_t>(market.students()), -1);
  s.eaters.assign(static_cast<std::size_t>(market.projects()), 0);
  return s;
}

Rational feasibility_reserve(const EatingState& state, const Market& market) {
  return reserve_at(state, market, state.t);
}

ProjectSet active_projects(const EatingState& state, const Market& market) {
  const bool slack = feasibility_reserve(state, market).sign() > 0;
  ProjectSet active(static_cast<std::size_t>(market.projects()), false);
  for (int p = 0; p < market.projects(); ++p) {
    const Rational& w = state.eaten[p];
    active[p] = w < market.lower(p) || (slack && w < market.upper(p));
  }
  return active;
}

void select_pattern(EatingState& state, const Market& market) {
  std::fill(state.eaters.begin(), state.eaters.end(), 0);
  for (int i = 0; i < market.students(); ++i) {
    state.pattern[i] = choice(market.profile(), i, state.active);
    ++state.eaters[state.pattern[i]];
  }
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kExhaustion: return "exhaustion";
    case EventKind::kCriticalShift: return "critical-shift";
    case EventKind::kEpochEnd: return "epoch-end";
  }
  return "unknown";
}

EatingEvent next_event(const EatingState& state, const Market& market) {
  const Rational one(1);
  if (state.t >= one) throw std::logic_error("next_event at end of epoch");
  const int k = market.projects();

  Rational tau = one;
  for (int p = 0; p < k; ++p) {
    if (!state.active[p]) continue;
    if (state.eaten[p] >= market.upper(p)) {
      tau = state.t;
    } else if (state.eaters[p] > 0) {
      tau = std::min(tau, state.t + (market.upper(p) - state.eaten[p]) /
                                        Rational(state.eaters[p]));
    }
  }

  Rational lambda = one;
  const Rational reserve = feasibility_reserve(state, market);
  if (reserve.sign() > 0) {
    lambda = reserve_root(state, market);
  } else if (reserve.sign() == 0) {
    // Reserve already binding: only deficient projects may stay, and each one
    // leaves as soon as it reaches its lower quota.
    for (int p = 0; p < k; ++p) {
      if (!state.active[p]) continue;
      const Rational deficit = market.lower(p) - state.eaten[p];
      if (deficit.sign() <= 0) {
        lambda = state.t;
      } else if (state.eaters[p] > 0) {
        lambda = std::min(lambda, state.t + deficit / Rational(state.eaters[p]));
      }
    }
  } else {
    throw std::logic_error("negative feasibility reserve " + reserve.str());
  }

  EatingEvent ev;
  ev.exhaustion_time = tau;
  ev.critical_time = lambda;
  ev.time = std::min({tau, lambda, one});
  if (ev.time == one) {
    ev.kind = EventKind::kEpochEnd;
    return ev;
  }
  ev.kind = lambda <= tau ? EventKind::kCriticalShift : EventKind::kExhaustion;

  EatingState probe = state;
  advance(probe, ev.time);
  const ProjectSet still = active_projects(probe, market);
  for (int p = 0; p < k; ++p) {
    if (!state.active[p] || still[p]) continue;
    if (probe.eaten[p] >= market.upper(p)) {
      ev.exhausted.push_back(p);
    } else {
      ev.pinned.push_back(p);
    }
  }
  return ev;
}

void advance(EatingState& state, const Rational& to) {
  const Rational dt = to - state.t;
  if (dt.sign() < 0) throw std::logic_error("advance backwards in time");
  if (dt.sign() > 0) {
    for (int i = 0; i < state.consumption.rows(); ++i) {
      const int p = state.pattern[i];
      if (p < 0) throw std::logic_error("advance without a pattern");
      state.consumption(i, p) += dt;
      state.eaten[p] += dt;
    }
  }
  state.t = to;
}

std::pair<RandomAssignment, EatingTrace> run_pslq_traced(const Market& market) {
  const Rational one(1);
  EatingState state = EatingState::initial(market);
  EatingTrace trace;
  if (feasibility_reserve(state, market).sign() == 0) trace.critical_time = state.t;

  // Every event before t = 1 removes at least one project.
  const int max_phases = market.projects() + 1;
  while (state.t < one) {
    if (static_cast<int>(trace.phases.size()) >= max_phases) {
      throw std::logic_error("eating loop failed to shrink the active set");
    }
    select_pattern(state, market);
    EatingEvent ev = next_event(state, market);

    EatingPhase phase;
    phase.start = state.t;
    phase.end = ev.time;
    phase.active = members(state.active);
    phase.pattern = state.pattern;
    phase.kind = ev.kind;
    phase.exhausted = ev.exhausted;
    phase.pinned = ev.pinned;

    advance(state, ev.time);
    if (ev.kind != EventKind::kEpochEnd) {
      if (ev.exhausted.empty() && ev.pinned.empty()) {
        throw std::logic_error("event at t = " + ev.time.str() +
                               " removed no project");
      }
      for (int p : ev.exhausted) state.active[p] = false;
      for (int p : ev.pinned) state.active[p] = false;
      if (!trace.critical_time &&
          feasibility_reserve(state, market).sign() == 0) {
        trace.critical_time = state.t;
      }
    }
    trace.phases.push_back(std::move(phase));
  }
  return {std::move(state.consumption), std::move(trace)};
}

RandomAssignment run_pslq(const Market& market) {
  return run_pslq_traced(market).first;
}

RandomAssignment replay_trace(const EatingTrace& trace, int students,
                              int projects) {
  Matrix r(students, projects);
  for (const auto& phase : trace.phases) {
    const Rational len = phase.end - phase.start;
    if (len.is_zero()) continue;
    for (int i = 0; i < students; ++i) r(i, phase.pattern[i]) += len;
  }
  return r;
}

}  // namespace pslq
