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


#include "graphres/likelihood.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "graphres/errors.hpp"
#include "graphres/randomness.hpp"
#include "graphres/rng.hpp"

namespace graphres {
namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string Likelihood::str() const { return rational_string(exact); }

Likelihood likelihood_exact(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExactOrder) {
    throw OrderTooLarge("exact likelihood supports n <= " +
                        std::to_string(kMaxExactOrder) + ", got " +
                        std::to_string(n) + "; use the Monte-Carlo estimate");
  }
  if (n <= 1) return Likelihood{1};
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 1; v <= n; ++v) {
    adj[v - 1] = static_cast<std::uint32_t>(g.neighbor_mask(v));
  }
  // step[t][d] = 1 / (t * C(t-1, d)).
  std::vector<std::vector<Rational>> step(n + 1);
  for (int t = 1; t <= n; ++t) {
    for (int d = 0; d < t; ++d) {
      step[t].push_back(Rational(1) / (Rational(t) * Rational(binomial(t - 1, d))));
    }
  }
  // ways[S] = sum over orders of the vertices outside S, given S arrived
  // first, of the product of their step probabilities.
  const std::uint32_t full = (1U << n) - 1;
  std::vector<Rational> ways(std::size_t{1} << n);
  ways[full] = 1;
  for (std::uint32_t s = full; s-- > 0;) {
    const int t = std::popcount(s) + 1;
    Rational acc = 0;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      const int d = std::popcount(adj[v] & s);
      acc += step[t][d] * ways[s | (1U << v)];
    }
    ways[s] = std::move(acc);
  }
  return Likelihood{ways[0] / Rational(automorphism_count(g))};
}

MonteCarloEstimate likelihood_mc(const Graph& g, std::uint64_t samples,
                                 std::uint64_t seed) {
  if (samples == 0) throw Error("Monte-Carlo estimate needs at least one sample");
  if (g.order() < 1) throw Error("the process starts from K_1; order must be >= 1");
  Rng rng(seed);
  const auto uniform = DegreeDistributionSpec::uniform();
  MonteCarloEstimate out;
  out.samples = samples;
  out.seed = seed;
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (is_isomorphic(sample_vertex_addition(g.order(), uniform, rng), g)) ++out.hits;
  }
  const double s = static_cast<double>(samples);
  out.estimate = static_cast<double>(out.hits) / s;
  out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / s);
  return out;
}

LikelihoodBounds likelihood_bounds(const Graph& g) {
  const Rational aut(automorphism_count(g));
  BigInt layers = 1;
  for (int i = 1; i <= g.order(); ++i) layers *= binomial(i - 1, (i - 1) / 2);
  return LikelihoodBounds{Rational(1) / (aut * Rational(layers)), Rational(1) / aut};
}

LikelihoodRow likelihood_row(const Graph& g) {
  LikelihoodRow row;
  row.certificate = canonical_form(g);
  row.n = g.order();
  row.edges = g.edge_count();
  row.aut = automorphism_count(g);
  row.likelihood = likelihood_exact(g);
  row.bounds = likelihood_bounds(g);
  return row;
}

ExtremesTable likelihood_extremes(int n) {
  if (n < 1) throw Error("likelihood table needs n >= 1");
  ExtremesTable table;
  table.n = n;
  for (const CanonicalForm& c : isomorphism_classes(n)) {
    table.rows.push_back(likelihood_row(c.to_graph()));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const LikelihoodRow& a, const LikelihoodRow& b) {
                     if (a.likelihood.exact != b.likelihood.exact) {
                       return a.likelihood.exact < b.likelihood.exact;
                     }
                     return a.certificate < b.certificate;
                   });
  const Rational& lowest = table.argmin().likelihood.exact;
  while (table.minimizers < table.rows.size() &&
         table.rows[table.minimizers].likelihood.exact == lowest) {
    ++table.minimizers;
  }
  for (std::size_t i = 0; i < table.minimizers && !table.argmin_complete_bipartite; ++i) {
    const Graph g = table.rows[i].certificate.to_graph();
    for (int b = n / 2; b >= 1; --b) {
      if (is_isomorphic(g, complete_bipartite(n - b, b))) {
        table.argmin_complete_bipartite = true;
        table.bipartite_sides = {n - b, b};
        break;
      }
    }
  }
  return table;
}

std::string likelihood_csv(const std::vector<LikelihoodRow>& rows) {
  std::ostringstream out;
  out << "certificate,n,edges,aut,exact,float,lower,upper\n";
  for (const LikelihoodRow& r : rows) {
    out << r.certificate.hex() << ',' << r.n << ',' << r.edges << ',' << r.aut << ','
        << r.likelihood.str() << ',' << format_double(r.likelihood.approx()) << ','
        << rational_string(r.bounds.lower) << ',' << rational_string(r.bounds.upper)
        << '\n';
  }
  return out.str();
}

nlohmann::json likelihood_json(const LikelihoodRow& r) {
  return {{"certificate", r.certificate.hex()},
          {"n", r.n},
          {"edges", r.edges},
          {"aut", r.aut},
          {"exact", r.likelihood.str()},
          {"float", r.likelihood.approx()},
          {"lower", rational_string(r.bounds.lower)},
          {"upper", rational_string(r.bounds.upper)}};
}

}  // namespace graphres
