// Copyright 2026 The graphres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Seeded, splittable pseudo-random source.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The distributions in <random> are not, so the draws used here are
// written out explicitly and every seeded output is identical across
// standard libraries.

#ifndef GRAPHRES_RNG_HPP_
#define GRAPHRES_RNG_HPP_

#include <cstdint>
#include <random>

namespace graphres {

// splitmix64 finalizer; spreads nearby seeds across the state space.
constexpr std::uint64_t mix_seed(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  // Uniform on {0, ..., bound - 1}; bound >= 1. Rejection sampling, no bias.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return p >= 1.0 || uniform01() < p; }

  // An independent generator for sub-stream `stream`; does not advance *this.
  Rng split(std::uint64_t stream) const {
    return Rng(mix_seed(seed_ ^ mix_seed(stream + 0x632be59bd9b4e019ULL)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

inline std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Largest multiple of bound that fits, minus one.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r > limit);
  return r % bound;
}

}  // namespace graphres

#endif  // GRAPHRES_RNG_HPP_
