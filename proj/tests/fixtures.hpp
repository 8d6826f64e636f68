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

// Hand-built markets shared by the unit tests and the acceptance binary.

#ifndef PSLQ_TESTS_FIXTURES_HPP_
#define PSLQ_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pslq/generator.hpp"
#include "pslq/market.hpp"

namespace pslq::fixtures {

// Projects are single letters; each ranking string lists them best first,
// e.g. "bac".
Market make_market(std::vector<ProjectSpec> projects,
                   const std::vector<std::string>& rankings);

// Rows of "p/q" strings.
Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows);
std::vector<Rational> row(std::initializer_list<const char*> values);

// n = 5, u = (2,2,2), l = (1,1,2); 1,2: a b c, 3,4: b a c, 5: c a b.
Market critical_shift_market();
// n = 4, no quotas; 1: a b c, 2: a c b, 3,4: b a c.
Market gamma_market();
// gamma with l(b) = 2, l(c) = 1.
Market zeta_market();
// n = 6, l(b) = l(c) = 2; 1-3: a b c d, 4-6: b a d c.
Market six_student_market();
// n = 2, l(b) = u(b) = 1; 1: a b c, 2: b c a.
Market chain_market();

// Random market with integer quotas from the library generator.
Market random_integer_market(std::uint64_t seed, int n, int k,
                             QuotaStyle style = QuotaStyle::kIntegerLoose);

}  // namespace pslq::fixtures

#endif  // PSLQ_TESTS_FIXTURES_HPP_
