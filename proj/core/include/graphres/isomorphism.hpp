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

// Exact isomorphism machinery for small graphs (order <= 10).
//
// The canonical form of G is the lexicographically smallest upper-triangle
// adjacency string over all vertex orderings that list vertices by their
// colour-refinement class. Restricting to invariant-respecting orderings keeps
// the minimum a class invariant while pruning most of the n! search.

#ifndef GRAPHRES_ISOMORPHISM_HPP_
#define GRAPHRES_ISOMORPHISM_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "graphres/graph.hpp"

namespace graphres {

// Canonical forms and automorphism counts.
inline constexpr int kMaxExactOrder = 10;
// Pairwise isomorphism tests (direct backtracking, no canonical form).
inline constexpr int kMaxIsomorphismOrder = 16;
inline constexpr int kMaxClassOrder = 8;

// Byte certificate: order byte followed by the packed minimal adjacency bits.
// Equal certificates <=> isomorphic graphs.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  int order() const;
  std::string hex() const;
  // The canonical representative, i.e. the graph under the minimizing order.
  Graph to_graph() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

// Throws OrderTooLarge above kMaxExactOrder.
CanonicalForm canonical_form(const Graph& g);
// Throws OrderTooLarge above kMaxIsomorphismOrder when the cheap invariants
// (order, size, degree sequence) agree.
bool is_isomorphic(const Graph& g, const Graph& h);
std::uint64_t automorphism_count(const Graph& g);

// True iff some |V(h)|-subset of g induces a copy of h.
bool contains_induced(const Graph& g, const Graph& h);

// One canonical form per isomorphism class on n vertices, sorted. Grown from
// the classes on n-1 vertices by attaching a new vertex to every subset.
// Throws OrderTooLarge above kMaxClassOrder.
std::vector<CanonicalForm> isomorphism_classes(int n);

}  // namespace graphres

#endif  // GRAPHRES_ISOMORPHISM_HPP_
