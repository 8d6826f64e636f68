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

#ifndef PSLQ_RANDOM_HPP_
#define PSLQ_RANDOM_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace pslq {

// SplitMix64. Used instead of <random> distributions because their output is
// implementation-defined; every draw here is bit-reproducible across
// platforms for a given seed.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), unbiased (rejection on the low zone).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Independent stream for item `index` of a run seeded with `seed`; lets
// parallel workers draw sample j without sharing a generator.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (index * 0xD1B54A32D192ED03ULL));
  mix();
  return SplitMix64(mix() + index);
}

template <typename T>
void fisher_yates(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t j = items.size(); j > 1; --j) {
    const auto pick = static_cast<std::size_t>(rng.below(j));
    std::swap(items[j - 1], items[pick]);
  }
}

}  // namespace pslq

#endif  // PSLQ_RANDOM_HPP_
