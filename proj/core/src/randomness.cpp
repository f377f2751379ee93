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


#include "graphres/randomness.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <vector>

#include "graphres/errors.hpp"

namespace graphres {
namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error("probability must lie in [0, 1], got " + std::to_string(p));
  }
}

std::uint64_t floor_log2(const BigInt& v) {
  return static_cast<std::uint64_t>(boost::multiprecision::msb(v));
}

// b(v) for v >= 0.
std::uint64_t big_bit_length(const BigInt& v) {
  return v == 0 ? 1 : floor_log2(v) + 1;
}

BigInt central_layer(int i) { return binomial(i - 1, (i - 1) / 2); }

int draw_degree(int t, const DegreeDistributionSpec& spec, Rng& rng) {
  if (spec.kind() == DegreeDistributionSpec::Kind::kUniform) {
    return static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(t)));
  }
  int k = 0;
  for (int i = 1; i < t; ++i) k += rng.bernoulli(spec.p());
  return k;
}

}  // namespace

DegreeDistributionSpec DegreeDistributionSpec::binomial(double p) {
  require_probability(p);
  return {Kind::kBinomial, p};
}

DegreeDistributionSpec DegreeDistributionSpec::parse(std::string_view text) {
  if (text == "uniform") return uniform();
  constexpr std::string_view kPrefix = "binomial:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    const std::string rest(text.substr(kPrefix.size()));
    std::size_t used = 0;
    double p = 0;
    try {
      p = std::stod(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) {
      throw ParseError("binomial parameter must be a number, got '" + rest + "'");
    }
    return binomial(p);
  }
  throw ParseError("degree distribution must be 'uniform' or 'binomial:<p>', got '" +
                   std::string(text) + "'");
}

std::string DegreeDistributionSpec::name() const {
  if (kind_ == Kind::kUniform) return "uniform";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, p_);
  return "binomial:" + std::string(buf, res.ptr);
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return sample_gnp(n, p, rng);
}

Graph sample_gnp(int n, double p, Rng& rng) {
  require_probability(p);
  if (n < 0) throw Error("order must be non-negative");
  GraphBuilder b(n);
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      if (rng.bernoulli(p)) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph sample_vertex_addition(int n, const DegreeDistributionSpec& spec,
                             std::uint64_t seed) {
  Rng rng(seed);
  return sample_vertex_addition(n, spec, rng);
}

Graph sample_vertex_addition(int n, const DegreeDistributionSpec& spec, Rng& rng) {
  if (n < 1) throw Error("vertex-addition process needs n >= 1");
  GraphBuilder b(n);
  std::vector<Vertex> pool;
  for (int t = 2; t <= n; ++t) {
    const int k = draw_degree(t, spec, rng);
    pool.resize(t - 1);
    std::iota(pool.begin(), pool.end(), 1);
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<int>(rng.uniform_below(
                             static_cast<std::uint64_t>(t - 1 - i)));
      std::swap(pool[i], pool[j]);
      b.add_edge(pool[i], t);
    }
  }
  return std::move(b).build();
}

std::uint64_t dyad_bits(int n) {
  if (n < 0) throw Error("order must be non-negative");
  const auto m = static_cast<std::uint64_t>(n);
  return m * (m - (m > 0 ? 1 : 0)) / 2;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t subset_bits_even(int n) {
  if (n < 2 || n % 2 != 0) throw Error("b_even needs an even n >= 2");
  return big_bit_length(binomial(n - 1, n / 2) - 1);
}

std::uint64_t subset_bits_odd(int n) {
  if (n < 3 || n % 2 != 1) throw Error("b_odd needs an odd n >= 3");
  return big_bit_length(binomial(n - 1, (n - 1) / 2) - 1);
}

std::uint64_t randomness_cost_a(int n) {
  if (n < 1) throw Error("a(n) needs n >= 1");
  if (n == 1) return 0;
  std::uint64_t a = 1;
  for (int t = 3; t <= n; ++t) {
    const std::uint64_t subset = t % 2 == 0 ? subset_bits_even(t) : subset_bits_odd(t);
    a += subset + bit_length(static_cast<std::uint64_t>(t - 1));
  }
  return a;
}

std::uint64_t randomness_cost_a_closed_form(int n) {
  if (n < 1) throw Error("a(n) needs n >= 1");
  if (n == 1) return 0;
  std::uint64_t total = 2 * static_cast<std::uint64_t>(n) - 3;
  for (int i = 3; i <= n; ++i) total += floor_log2(central_layer(i) - 1);
  for (int i = 2; i <= n; ++i) total += floor_log2(BigInt(i - 1));
  return total;
}

ResourceCost vertex_addition_cost(int n) {
  ResourceCost c;
  c.random_bits = randomness_cost_a(n);
  return c;
}

}  // namespace graphres
