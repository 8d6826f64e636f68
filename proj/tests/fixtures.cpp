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

#include "fixtures.hpp"

namespace pslq::fixtures {

Market make_market(std::vector<ProjectSpec> projects,
                   const std::vector<std::string>& rankings) {
  const int k = static_cast<int>(projects.size());
  std::vector<std::vector<int>> ranks;
  for (const auto& s : rankings) {
    std::vector<int> r;
    for (char c : s) r.push_back(c - 'a');
    ranks.push_back(std::move(r));
  }
  return Market(std::move(projects), PreferenceProfile(std::move(ranks), k));
}

Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  const int n = static_cast<int>(rows.size());
  const int k = static_cast<int>(rows.begin()->size());
  Matrix m(n, k);
  int i = 0;
  for (const auto& r : rows) {
    int p = 0;
    for (const char* v : r) m(i, p++) = Rational::parse(v);
    ++i;
  }
  return m;
}

std::vector<Rational> row(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Rational::parse(v));
  return out;
}

Market critical_shift_market() {
  return make_market({{"a", Rational(1), Rational(2)},
                      {"b", Rational(1), Rational(2)},
                      {"c", Rational(2), Rational(2)}},
                     {"abc", "abc", "bac", "bac", "cab"});
}

Market gamma_market() {
  return make_market({{"a", Rational(0), std::nullopt},
                      {"b", Rational(0), std::nullopt},
                      {"c", Rational(0), std::nullopt}},
                     {"abc", "acb", "bac", "bac"});
}

Market zeta_market() {
  return make_market({{"a", Rational(0), std::nullopt},
                      {"b", Rational(2), std::nullopt},
                      {"c", Rational(1), std::nullopt}},
                     {"abc", "acb", "bac", "bac"});
}

Market six_student_market() {
  return make_market({{"a", Rational(0), std::nullopt},
                      {"b", Rational(2), std::nullopt},
                      {"c", Rational(2), std::nullopt},
                      {"d", Rational(0), std::nullopt}},
                     {"abcd", "abcd", "abcd", "badc", "badc", "badc"});
}

Market chain_market() {
  return make_market({{"a", Rational(0), std::nullopt},
                      {"b", Rational(1), Rational(1)},
                      {"c", Rational(0), std::nullopt}},
                     {"abc", "bca"});
}

Market random_integer_market(std::uint64_t seed, int n, int k, QuotaStyle style) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.seed = seed;
  cfg.quota = style;
  return generate_market(cfg);
}

}  // namespace pslq::fixtures
