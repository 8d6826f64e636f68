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

#ifndef PSLQ_GENERATOR_HPP_
#define PSLQ_GENERATOR_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "pslq/market.hpp"

namespace pslq {

enum class QuotaStyle {
  kNone,          // l = 0, u unbounded
  kIntegerTight,  // sum(l) in {n - 1, n}
  kIntegerLoose,  // small integer l, integer u
  kFractional,    // quotas are multiples of 1/denominator
};

enum class PreferenceStyle {
  kUniform,     // uniform random strict ranking
  kCorrelated,  // Plackett-Luce draws with per-project weights
};

struct GeneratorConfig {
  int n = 4;
  int k = 3;
  std::uint64_t seed = 0;
  QuotaStyle quota = QuotaStyle::kIntegerLoose;
  int denominator = 3;  // fractional style only
  PreferenceStyle preferences = PreferenceStyle::kUniform;
  std::vector<double> weights;  // correlated style, one per project
  int max_upper = 0;            // cap on finite upper quotas; 0 means n
};

QuotaStyle parse_quota_style(std::string_view name);
PreferenceStyle parse_preference_style(std::string_view name);

// Deterministic per seed. Quota draws are resampled until
// sum(l) <= n <= sum(u); throws InputError when the configuration cannot
// produce a valid market.
Market generate_market(const GeneratorConfig& cfg);

}  // namespace pslq

#endif  // PSLQ_GENERATOR_HPP_
