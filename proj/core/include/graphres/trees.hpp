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


// Trees grown one vertex at a time, each new vertex t attaching to one
// earlier vertex. Vertex 1 is the root throughout.

#ifndef GRAPHRES_TREES_HPP_
#define GRAPHRES_TREES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphres/graph.hpp"
#include "graphres/isomorphism.hpp"
#include "graphres/likelihood.hpp"
#include "graphres/resource_cost.hpp"
#include "graphres/rng.hpp"

namespace graphres {

// parent(t) for t = 2..n, stored with index 0 unused and parent(1) = 0, so
// the JSON form is the array [0, 0, p2, ..., pn].
class ParentVector {
 public:
  ParentVector() = default;
  // Throws Error unless values[0] == 0, values[1] == 0 (when n >= 1) and
  // 1 <= values[t] < t for t >= 2.
  explicit ParentVector(std::vector<int> values);

  int order() const noexcept {
    return values_.empty() ? 0 : static_cast<int>(values_.size()) - 1;
  }
  int parent(Vertex t) const { return values_.at(static_cast<std::size_t>(t)); }
  const std::vector<int>& values() const noexcept { return values_; }

  nlohmann::json to_json() const { return values_; }
  static ParentVector from_json(const nlohmann::json& j);

  friend bool operator==(const ParentVector&, const ParentVector&) = default;

 private:
  std::vector<int> values_;
};

class RootedTree {
 public:
  RootedTree() = default;
  // Throws NotATree unless g is connected with n - 1 edges (n >= 1).
  explicit RootedTree(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  static constexpr Vertex root() noexcept { return 1; }
  // parents()[v] is v's neighbour on the path to the root; [0] and [1] are 0.
  const std::vector<int>& parents() const noexcept { return parents_; }
  // Vertices other than the root with degree 1, ascending.
  std::vector<Vertex> leaves() const;
  // Root-to-v path, inclusive.
  std::vector<Vertex> path_to(Vertex v) const;

 private:
  Graph graph_;
  std::vector<int> parents_;
};

// Realizes the parent vector: vertex t is joined to parent(t).
RootedTree build_tree_from_instructions(const ParentVector& pv);

// Uniform attachment: parent(t) uniform on 1..t-1. n >= 1.
ParentVector sample_ua_parents(int n, Rng& rng);
RootedTree sample_ua(int n, std::uint64_t seed);

// Canonical string of the tree rooted at vertex 1; equal strings <=> the
// rooted trees are isomorphic by a map sending root to root.
std::string rooted_shape(const RootedTree& t);
// Automorphisms fixing the root.
std::uint64_t rooted_automorphism_count(const RootedTree& t);

// Every root-to-vertex path has increasing labels.
bool is_recursive_tree(const RootedTree& t);

// Smallest-leaf convention. Throws NotATree for non-trees, Error for n < 2.
std::vector<int> prufer_encode(const Graph& tree);
// Entries must lie in 1..seq.size()+2; throws Error otherwise.
Graph prufer_decode(std::span<const int> seq);

enum class TreeMatch : std::uint8_t {
  kUnrooted,        // isomorphic as graphs
  kRootedAtVertex1  // isomorphic by a map fixing vertex 1
};

struct PositivityCheck {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double estimate = 0;
  std::uint64_t seed = 0;
};
// Uniform-attachment samples on |V(tree)| vertices isomorphic to tree.
PositivityCheck tree_positivity_check(const Graph& tree, std::uint64_t samples,
                                      std::uint64_t seed,
                                      TreeMatch match = TreeMatch::kUnrooted);

// Probability that uniform attachment produces a tree isomorphic to t:
// (#recursive labellings of t) / (n-1)!. Throws NotATree, OrderTooLarge above
// kMaxExactOrder.
Likelihood ua_likelihood_exact(const Graph& tree);
// Probability that uniform attachment yields a tree isomorphic to `tree` with
// both rooted at vertex 1: n! / (prod_v |subtree(v)| * |Aut_root|) increasing
// labellings out of (n-1)! outcomes. Throws NotATree.
Likelihood ua_likelihood_rooted(const Graph& tree);

// Instruction and memory bits sum_{t=1..n-1} b(t): vertex t+1 receives its
// parent index in b(t) bits and stores its own index at the same width.
ResourceCost tree_cost(int n);

// Concatenated parent fields, b(t-1) bits each for t = 2..n, big-endian, 1-based.
std::string encode_tree_instructions(const ParentVector& pv);
// Throws ParseError on wrong length or a field value outside 1..t-1.
ParentVector decode_tree_instructions(std::string_view bits, int n);

// Isomorphism classes of trees on n vertices via all n^(n-2) Prüfer
// sequences. 1 <= n <= 8.
std::vector<CanonicalForm> tree_classes(int n);

// Calls f(sequence) for every sequence in {1..n}^(n-2), lexicographically.
template <typename F>
void for_each_prufer_sequence(int n, F&& f) {
  const int len = n - 2;
  if (len < 0) return;
  std::vector<int> seq(len, 1);
  while (true) {
    f(std::span<const int>(seq));
    int i = len - 1;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) return;
    ++seq[i];
  }
}

}  // namespace graphres

#endif  // GRAPHRES_TREES_HPP_
