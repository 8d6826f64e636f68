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

// Probabilistic serial under lower quotas: students eat their best active
// project at unit speed on [0, 1]. A project stops being active when it hits
// its upper quota, or when the remaining eating mass n(1 - t) is exactly what
// the unfilled lower quotas still need; from that point on only projects below
// their lower quota stay on the menu.
//
// Everything is exact: within a phase the pattern is frozen, consumption is
// linear in t, and each event time is the root of a piecewise-linear equation
// solved in rationals.

#ifndef PSLQ_EATING_HPP_
#define PSLQ_EATING_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pslq/market.hpp"

namespace pslq {

struct EatingState {
  Rational t;
  Matrix consumption;           // r_ip(t)
  std::vector<Rational> eaten;  // column sums of `consumption`
  ProjectSet active;
  std::vector<int> pattern;  // project each student is eating, -1 if none
  std::vector<int> eaters;   // students currently eating each project

  // t = 0, nothing eaten, every project active, no pattern yet.
  static EatingState initial(const Market& market);
};

// n(1 - t) - sum_p (l(p) - eaten_p)_+ at the state's time. Never negative on
// a consistent state.
Rational feasibility_reserve(const EatingState& state, const Market& market);

// Projects active at the state's time: below their lower quota, or below
// their upper quota while the reserve is strictly positive.
ProjectSet active_projects(const EatingState& state, const Market& market);

// Points every student at her best project in state.active.
void select_pattern(EatingState& state, const Market& market);

enum class EventKind { kExhaustion, kCriticalShift, kEpochEnd };

std::string_view to_string(EventKind kind);

struct EatingEvent {
  Rational time;
  EventKind kind = EventKind::kEpochEnd;
  Rational exhaustion_time;  // earliest upper-quota hit (1 if none)
  Rational critical_time;    // reserve-binding time (1 if none)
  std::vector<int> exhausted;  // leave the active set at their upper quota
  std::vector<int> pinned;     // leave the active set through the reserve
};

// Next time the active set changes under the current frozen pattern, and
// which projects leave it. Requires state.t < 1 and a selected pattern.
EatingEvent next_event(const EatingState& state, const Market& market);

// Moves every student along her current pattern to time `to`.
void advance(EatingState& state, const Rational& to);

struct EatingPhase {
  Rational start;
  Rational end;
  std::vector<int> active;   // projects active during the phase
  std::vector<int> pattern;  // per-student project
  EventKind kind = EventKind::kEpochEnd;
  std::vector<int> exhausted;
  std::vector<int> pinned;
};

struct EatingTrace {
  std::vector<EatingPhase> phases;
  // First time the reserve hits zero before the end of the epoch; nullopt
  // means the lower quotas never bound (classical behaviour).
  std::optional<Rational> critical_time;
};

RandomAssignment run_pslq(const Market& market);
std::pair<RandomAssignment, EatingTrace> run_pslq_traced(const Market& market);

// Rebuilds the consumption matrix from the trace's linear segments.
RandomAssignment replay_trace(const EatingTrace& trace, int students,
                              int projects);

}  // namespace pslq

#endif  // PSLQ_EATING_HPP_
