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


// Randomness-only constructions.
//
// In the vertex-addition process vertex t draws a degree D_t from a
// distribution on {0, ..., t-1} and then a uniform D_t-subset of the earlier
// vertices as its neighbourhood. With D_t uniform this is the process whose
// output probabilities likelihood.hpp computes; with D_t ~ Bi(t-1, p) it
// produces G(n, p).
//
// Random-bit accounting: vertex t spends b(t-1) bits on the degree and
// enough bits to index the largest layer C(t-1, floor((t-1)/2)) of subsets.

#ifndef GRAPHRES_RANDOMNESS_HPP_
#define GRAPHRES_RANDOMNESS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphres/graph.hpp"
#include "graphres/resource_cost.hpp"
#include "graphres/rng.hpp"

namespace graphres {

using BigInt = boost::multiprecision::cpp_int;

class DegreeDistributionSpec {
 public:
  enum class Kind : std::uint8_t { kUniform, kBinomial };

  static DegreeDistributionSpec uniform() { return {Kind::kUniform, 0.0}; }
  // Throws Error unless 0 <= p <= 1.
  static DegreeDistributionSpec binomial(double p);
  // "uniform" | "binomial:<p>".
  static DegreeDistributionSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  std::string name() const;

 private:
  DegreeDistributionSpec(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

// Every dyad independently with probability p. Throws Error unless 0 <= p <= 1.
Graph sample_gnp(int n, double p, std::uint64_t seed);
Graph sample_gnp(int n, double p, Rng& rng);

// Throws Error for n < 1.
Graph sample_vertex_addition(int n, const DegreeDistributionSpec& spec,
                             std::uint64_t seed);
Graph sample_vertex_addition(int n, const DegreeDistributionSpec& spec, Rng& rng);

// C(n, 2), one coin per dyad.
std::uint64_t dyad_bits(int n);

BigInt binomial(int n, int k);

// Bits to index a neighbour subset of vertex n: b(C(n-1, n/2) - 1) for even n
// (b_even) and b(C(n-1, (n-1)/2) - 1) for odd n (b_odd). Both n >= 2.
std::uint64_t subset_bits_even(int n);
std::uint64_t subset_bits_odd(int n);

// a(1) = 0, a(2) = 1, a(n) = a(n-1) + b_{e|o}(n) + floor(log2(n-1)) + 1.
std::uint64_t randomness_cost_a(int n);
// a(n) = sum_{i=3..n} floor(log2(C(i-1, floor((i-1)/2)) - 1))
//      + sum_{i=2..n} floor(log2(i-1)) + 2n - 3      for n >= 2.
std::uint64_t randomness_cost_a_closed_form(int n);

// random_bits = a(n); the process needs no instructions or memory.
ResourceCost vertex_addition_cost(int n);

}  // namespace graphres

#endif  // GRAPHRES_RANDOMNESS_HPP_
