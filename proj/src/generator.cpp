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

#include "pslq/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pslq/random.hpp"

namespace pslq {
namespace {

constexpr int kMaxAttempts = 10000;

std::vector<int> draw_ranking(const GeneratorConfig& cfg, SplitMix64& rng) {
  std::vector<int> ranking(static_cast<std::size_t>(cfg.k));
  std::iota(ranking.begin(), ranking.end(), 0);
  if (cfg.preferences == PreferenceStyle::kUniform) {
    fisher_yates(ranking, rng);
    return ranking;
  }
  // Plackett-Luce: repeatedly draw the next project proportionally to weight.
  std::vector<double> w = cfg.weights;
  for (int pos = 0; pos < cfg.k; ++pos) {
    double total = 0;
    for (int j = pos; j < cfg.k; ++j) total += w[ranking[j]];
    double x = rng.unit() * total;
    int pick = cfg.k - 1;
    for (int j = pos; j < cfg.k; ++j) {
      x -= w[ranking[j]];
      if (x < 0) {
        pick = j;
        break;
      }
    }
    std::swap(ranking[pos], ranking[pick]);
  }
  return ranking;
}

std::vector<ProjectSpec> named_projects(int k) {
  std::vector<ProjectSpec> specs;
  for (int p = 0; p < k; ++p) {
    // a..z, then p26, p27, ...
    std::string name = p < 26 ? std::string(1, static_cast<char>('a' + p))
                              : "p" + std::to_string(p);
    specs.push_back({std::move(name), Rational(0), std::nullopt});
  }
  return specs;
}

// One quota draw; the caller rejects draws violating sum(l) <= n <= sum(u).
void draw_quotas(const GeneratorConfig& cfg, int cap, SplitMix64& rng,
                 std::vector<ProjectSpec>& specs) {
  const int n = cfg.n;
  const int k = cfg.k;
  switch (cfg.quota) {
    case QuotaStyle::kNone:
      return;
    case QuotaStyle::kIntegerLoose:
      for (auto& s : specs) {
        const auto lower = rng.between(0, n / k);
        s.lower = Rational(lower);
        s.upper = Rational(rng.between(std::max(lower, 1), cap));
      }
      return;
    case QuotaStyle::kIntegerTight: {
      // Deal n or n - 1 lower-quota seats one at a time.
      const auto seats = n - rng.between(0, 1);
      std::vector<int> lower(static_cast<std::size_t>(k), 0);
      for (int s = 0; s < seats; ++s) ++lower[rng.below(k)];
      for (int p = 0; p < k; ++p) {
        specs[p].lower = Rational(lower[p]);
        specs[p].upper = Rational(
            std::min(cap, lower[p] + rng.between(0, 2)));
      }
      return;
    }
    case QuotaStyle::kFractional: {
      const int d = cfg.denominator;
      for (auto& s : specs) {
        const auto lower = rng.between(0, d * n / k);
        s.lower = Rational(lower, d);
        if (rng.below(4) == 0) {
          s.upper.reset();
        } else {
          s.upper = Rational(rng.between(lower, d * cap), d);
        }
      }
      return;
    }
  }
}

bool quotas_valid(const std::vector<ProjectSpec>& specs, int n) {
  Rational lower_sum;
  Rational upper_sum;
  bool unbounded = false;
  for (const auto& s : specs) {
    if (s.upper && *s.upper < s.lower) return false;
    lower_sum += s.lower;
    if (s.upper) {
      upper_sum += *s.upper;
    } else {
      unbounded = true;
    }
  }
  return lower_sum <= Rational(n) && (unbounded || Rational(n) <= upper_sum);
}

}  // namespace

QuotaStyle parse_quota_style(std::string_view name) {
  if (name == "none") return QuotaStyle::kNone;
  if (name == "integer-tight") return QuotaStyle::kIntegerTight;
  if (name == "integer-loose") return QuotaStyle::kIntegerLoose;
  if (name == "fractional") return QuotaStyle::kFractional;
  throw InputError("unknown quota style \"" + std::string(name) + "\"");
}

PreferenceStyle parse_preference_style(std::string_view name) {
  if (name == "uniform") return PreferenceStyle::kUniform;
  if (name == "correlated") return PreferenceStyle::kCorrelated;
  throw InputError("unknown preference style \"" + std::string(name) + "\"");
}

Market generate_market(const GeneratorConfig& cfg) {
  if (cfg.n < 1 || cfg.k < 1) throw InputError("generator needs n >= 1 and k >= 1");
  if (cfg.max_upper < 0) throw InputError("max upper quota must be non-negative");
  const int cap = cfg.max_upper == 0 ? cfg.n : cfg.max_upper;
  if (cfg.quota != QuotaStyle::kNone &&
      static_cast<std::int64_t>(cfg.k) * cap < cfg.n) {
    throw InputError("unsatisfiable generator config: k * max upper quota (" +
                     std::to_string(static_cast<std::int64_t>(cfg.k) * cap) +
                     ") < n (" + std::to_string(cfg.n) + ")");
  }
  if (cfg.quota == QuotaStyle::kFractional && cfg.denominator < 1) {
    throw InputError("fractional quota style needs a denominator >= 1");
  }
  if (cfg.preferences == PreferenceStyle::kCorrelated) {
    if (static_cast<int>(cfg.weights.size()) != cfg.k) {
      throw InputError("correlated preferences need one weight per project");
    }
    for (double w : cfg.weights) {
      if (!(w > 0)) throw InputError("preference weights must be positive");
    }
  }

  SplitMix64 rng(cfg.seed);
  std::vector<std::vector<int>> rankings;
  for (int i = 0; i < cfg.n; ++i) rankings.push_back(draw_ranking(cfg, rng));

  auto specs = named_projects(cfg.k);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    draw_quotas(cfg, cap, rng, specs);
    if (quotas_valid(specs, cfg.n)) {
      return Market(std::move(specs), PreferenceProfile(std::move(rankings), cfg.k));
    }
  }
  throw InputError("generator found no valid quota draw in " +
                   std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace pslq
