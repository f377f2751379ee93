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


// Brute-force reference implementations for tests. Deliberately naive: they
// try every permutation or every labelled graph and share no code with the
// library's search routines.

#ifndef GRAPHRES_TESTS_ORACLES_HPP_
#define GRAPHRES_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphres/graph.hpp"

namespace oracle {

using graphres::Graph;
using Rational = boost::multiprecision::cpp_rational;

inline bool adj(const Graph& g, int u, int v) { return g.adjacent(u, v); }

// Upper triangle bits under the ordering perm (perm[i] = vertex at position i).
inline std::string triangle(const Graph& g, const std::vector<int>& perm) {
  std::string s;
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s.push_back(adj(g, perm[i], perm[j]) ? '1' : '0');
  }
  return s;
}

inline std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

// Lexicographically smallest triangle over all n! orderings.
inline std::string canonical(const Graph& g) {
  std::vector<int> p = identity(g.order());
  std::string best = triangle(g, p);
  while (std::next_permutation(p.begin(), p.end())) best = std::min(best, triangle(g, p));
  return std::to_string(g.order()) + ":" + best;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<int> p = identity(g.order());
  const std::string base = triangle(g, p);
  std::uint64_t count = 0;
  do {
    count += triangle(g, p) == base;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && canonical(g) == canonical(h);
}

// Graph on n vertices whose dyad k (in row-major upper-triangle order) is
// present iff bit k of mask is set.
inline Graph from_mask(int n, std::uint64_t mask) {
  graphres::GraphBuilder b(n);
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++k) {
      if ((mask >> k) & 1U) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

inline std::uint64_t dyads(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Probability of the labelled outcome g under uniform vertex addition.
inline Rational labelled_probability(const Graph& g) {
  Rational p = 1;
  for (int t = 2; t <= g.order(); ++t) {
    int down = 0;
    for (int i = 1; i < t; ++i) down += adj(g, i, t);
    p /= Rational(static_cast<long long>(t) * static_cast<long long>(binom(t - 1, down)));
  }
  return p;
}

// Class likelihoods on n vertices: brute canonical string -> probability.
inline std::map<std::string, Rational> likelihood_table(int n) {
  std::map<std::string, Rational> out;
  const std::uint64_t total = std::uint64_t{1} << dyads(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    const Graph g = from_mask(n, m);
    out[canonical(g)] += labelled_probability(g);
  }
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace oracle

#endif  // GRAPHRES_TESTS_ORACLES_HPP_
