// Copyright 2026 The tlsum Authors.
//
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

#ifndef TLSUM_COMMON_H_
#define TLSUM_COMMON_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlsum {

// Dense, corpus-wide sentence index. Every ground set U is {0, ..., n-1}.
using SentenceId = int;

// Absolute tolerance used by every property check in the library.
inline constexpr double kPropertyTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 64-bit Mersenne twister; the only RNG used so that seeded runs agree
// across platforms. Distributions below avoid the implementation-defined
// <random> distributions for the same reason.
using Rng = std::mt19937_64;

// Uniform double in [0, 1).
inline double UniformDouble(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline bool Bernoulli(Rng& rng, double p) { return UniformDouble(rng) < p; }

// Fisher-Yates with UniformIndex.
template <typename T>
void Shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[UniformIndex(rng, i)]);
  }
}

// Returns a sorted copy with duplicates removed.
inline std::vector<SentenceId> Canonicalize(std::span<const SentenceId> ids) {
  std::vector<SentenceId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Members of a bitmask over a ground set of at most 64 elements.
inline std::vector<SentenceId> MaskToIds(std::uint64_t mask) {
  std::vector<SentenceId> ids;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) ids.push_back(i);
  }
  return ids;
}

}  // namespace tlsum

#endif  // TLSUM_COMMON_H_
