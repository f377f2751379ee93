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


// Likelihood of a graph under the uniform vertex-addition process: the
// probability that the process run for n steps produces a graph isomorphic
// to G. Vertex t picks a degree k uniformly from {0, ..., t-1} and a uniform
// k-subset of the earlier vertices, so a labelled outcome H has probability
//
//   prod_{t=2..n} 1 / (t * C(t-1, d-(t)))
//
// where d-(t) counts the neighbours of t in H that arrived before t.

#ifndef GRAPHRES_LIKELIHOOD_HPP_
#define GRAPHRES_LIKELIHOOD_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "graphres/graph.hpp"
#include "graphres/isomorphism.hpp"

namespace graphres {

using Rational = boost::multiprecision::cpp_rational;

struct Likelihood {
  Rational exact;

  double approx() const { return exact.convert_to<double>(); }
  // "p/q" in lowest terms, "1/1" and "0/1" included.
  std::string str() const;

  friend bool operator==(const Likelihood&, const Likelihood&) = default;
};

std::string rational_string(const Rational& r);

// Sums over vertex arrival orders with a dynamic programme over the set of
// vertices placed so far, then divides out |Aut(G)| so each labelled copy
// counts once. Throws OrderTooLarge above kMaxExactOrder.
Likelihood likelihood_exact(const Graph& g);

struct MonteCarloEstimate {
  double estimate = 0;
  double standard_error = 0;  // sqrt(p(1-p)/samples) at the estimate
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Fraction of `samples` seeded runs isomorphic to g. Throws Error if
// samples == 0.
MonteCarloEstimate likelihood_mc(const Graph& g, std::uint64_t samples,
                                 std::uint64_t seed);

// lower = 1 / (|Aut| * prod_{i=1..n} C(i-1, floor((i-1)/2))), upper = 1 / |Aut|.
struct LikelihoodBounds {
  Rational lower;
  Rational upper;
};
LikelihoodBounds likelihood_bounds(const Graph& g);

struct LikelihoodRow {
  CanonicalForm certificate;
  int n = 0;
  std::size_t edges = 0;
  std::uint64_t aut = 0;
  Likelihood likelihood;
  LikelihoodBounds bounds;
};
LikelihoodRow likelihood_row(const Graph& g);

// All isomorphism classes on n vertices, ascending by (likelihood, certificate).
// Likelihood is invariant under complementation, so the minimum is often
// shared; `minimizers` counts the rows tied at rows.front().
struct ExtremesTable {
  int n = 0;
  std::vector<LikelihoodRow> rows;
  std::size_t minimizers = 0;
  // Some minimizer is K_{a,b} with a + b = n, a >= b >= 1; (a, b) or (0, 0).
  bool argmin_complete_bipartite = false;
  std::pair<int, int> bipartite_sides{0, 0};

  const LikelihoodRow& argmin() const { return rows.front(); }
  const LikelihoodRow& argmax() const { return rows.back(); }
};
// Throws OrderTooLarge above kMaxClassOrder; practical up to n = 7.
ExtremesTable likelihood_extremes(int n);

// Columns: certificate,n,edges,aut,exact,float,lower,upper.
std::string likelihood_csv(const std::vector<LikelihoodRow>& rows);
nlohmann::json likelihood_json(const LikelihoodRow& row);

}  // namespace graphres

#endif  // GRAPHRES_LIKELIHOOD_HPP_
