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


#include "graphres/trees.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

#include "graphres/errors.hpp"
#include "graphres/randomness.hpp"
#include "graphres/structure.hpp"

namespace graphres {

ParentVector::ParentVector(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) return;
  if (values_[0] != 0 || (values_.size() > 1 && values_[1] != 0)) {
    throw Error("parent vector must start with [0, 0]: index 0 is unused, 1 is the root");
  }
  for (std::size_t t = 2; t < values_.size(); ++t) {
    if (values_[t] < 1 || values_[t] >= static_cast<int>(t)) {
      throw Error("parent(" + std::to_string(t) + ") = " + std::to_string(values_[t]) +
                  " must lie in 1.." + std::to_string(t - 1));
    }
  }
}

ParentVector ParentVector::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("parent vector must be a JSON array");
  std::vector<int> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("parent vector entries must be integers");
    v.push_back(e.get<int>());
  }
  return ParentVector(std::move(v));
}

RootedTree::RootedTree(Graph g) : graph_(std::move(g)) {
  const int n = graph_.order();
  if (n < 1 || graph_.edge_count() != static_cast<std::size_t>(n - 1) ||
      !is_connected(graph_)) {
    throw NotATree("graph is not a tree");
  }
  parents_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::queue<Vertex> q;
  q.push(1);
  seen[1] = true;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : graph_.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      parents_[w] = v;
      q.push(w);
    }
  }
}

std::vector<Vertex> RootedTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 2; v <= order(); ++v) {
    if (graph_.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> RootedTree::path_to(Vertex v) const {
  if (v < 1 || v > order()) throw VertexOutOfRange("vertex out of range");
  std::vector<Vertex> path;
  for (Vertex w = v; w != 0; w = parents_[w]) path.push_back(w);
  std::reverse(path.begin(), path.end());
  return path;
}

RootedTree build_tree_from_instructions(const ParentVector& pv) {
  const int n = pv.order();
  GraphBuilder b(n);
  for (Vertex t = 2; t <= n; ++t) b.add_edge(pv.parent(t), t);
  return RootedTree(std::move(b).build());
}

ParentVector sample_ua_parents(int n, Rng& rng) {
  if (n < 1) throw Error("uniform attachment needs n >= 1");
  std::vector<int> values(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 2; t <= n; ++t) {
    values[t] = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(t - 1)));
  }
  return ParentVector(std::move(values));
}

RootedTree sample_ua(int n, std::uint64_t seed) {
  Rng rng(seed);
  return build_tree_from_instructions(sample_ua_parents(n, rng));
}

namespace {

std::vector<std::vector<Vertex>> children_of(const RootedTree& t) {
  std::vector<std::vector<Vertex>> kids(static_cast<std::size_t>(t.order()) + 1);
  for (Vertex v = 2; v <= t.order(); ++v) kids[t.parents()[v]].push_back(v);
  return kids;
}

// Vertices ordered so that every child precedes its parent.
std::vector<Vertex> bottom_up(const RootedTree& t) {
  std::vector<Vertex> order{RootedTree::root()};
  const auto kids = children_of(t);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex c : kids[order[i]]) order.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// AHU codes: "(" + sorted child codes + ")".
std::vector<std::string> shape_codes(const RootedTree& t) {
  const auto kids = children_of(t);
  std::vector<std::string> code(static_cast<std::size_t>(t.order()) + 1);
  for (Vertex v : bottom_up(t)) {
    std::vector<std::string> parts;
    for (Vertex c : kids[v]) parts.push_back(code[c]);
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const std::string& p : parts) s += p;
    code[v] = s + ")";
  }
  return code;
}

}  // namespace

std::string rooted_shape(const RootedTree& t) {
  if (t.order() == 0) return "";
  return shape_codes(t)[RootedTree::root()];
}

std::uint64_t rooted_automorphism_count(const RootedTree& t) {
  if (t.order() == 0) return 1;
  const auto kids = children_of(t);
  const auto code = shape_codes(t);
  std::uint64_t total = 1;
  // Identical child subtrees can be permuted freely: m! per group of m.
  for (Vertex v = 1; v <= t.order(); ++v) {
    std::vector<std::string> parts;
    for (Vertex c : kids[v]) parts.push_back(code[c]);
    std::sort(parts.begin(), parts.end());
    std::size_t run = 1;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
      if (i < parts.size() && parts[i] == parts[i - 1]) {
        total *= ++run;
      } else {
        run = 1;
      }
    }
  }
  return total;
}

bool is_recursive_tree(const RootedTree& t) {
  for (Vertex v = 2; v <= t.order(); ++v) {
    if (t.parents()[v] >= v) return false;
  }
  return true;
}

std::vector<int> prufer_encode(const Graph& tree) {
  const int n = tree.order();
  if (n < 2) throw Error("Prüfer encoding needs n >= 2");
  if (tree.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(tree)) {
    throw NotATree("graph is not a tree");
  }
  std::vector<int> degree = tree.degrees();
  degree.insert(degree.begin(), 0);
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n - 2));
  // Linear-time variant: `ptr` scans for the smallest leaf; a neighbour that
  // becomes a leaf below ptr is taken immediately.
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    int next = 0;
    for (Vertex w : tree.neighbors(leaf)) {
      if (!removed[w]) next = w;
    }
    removed[leaf] = true;
    seq.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      do {
        ++ptr;
      } while (degree[ptr] != 1 || removed[ptr]);
      leaf = ptr;
    }
  }
  return seq;
}

Graph prufer_decode(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  degree[0] = 0;
  for (int v : seq) {
    if (v < 1 || v > n) {
      throw Error("Prüfer entry " + std::to_string(v) + " outside 1.." +
                  std::to_string(n));
    }
    ++degree[v];
  }
  GraphBuilder b(n);
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    b.add_edge(leaf, v);
    degree[leaf] = 0;
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      do {
        ++ptr;
      } while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  // Two vertices of degree 1 remain: `leaf` and n.
  b.add_edge(leaf, n);
  return std::move(b).build();
}

PositivityCheck tree_positivity_check(const Graph& tree, std::uint64_t samples,
                                      std::uint64_t seed, TreeMatch match) {
  const RootedTree target(tree);
  const std::string shape = rooted_shape(target);
  PositivityCheck out;
  out.samples = samples;
  out.seed = seed;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const RootedTree t = build_tree_from_instructions(sample_ua_parents(tree.order(), rng));
    const bool hit = match == TreeMatch::kRootedAtVertex1 ? rooted_shape(t) == shape
                                                          : is_isomorphic(t.graph(), tree);
    if (hit) ++out.hits;
  }
  out.estimate = samples == 0 ? 0.0
                              : static_cast<double>(out.hits) / static_cast<double>(samples);
  return out;
}

Likelihood ua_likelihood_exact(const Graph& tree) {
  const RootedTree t(tree);
  const int n = tree.order();
  if (n > kMaxExactOrder) {
    throw OrderTooLarge("exact tree likelihood supports n <= " +
                        std::to_string(kMaxExactOrder));
  }
  // Arrival orders in which every vertex after the first has exactly one
  // earlier neighbour; each recursive labelling arises from |Aut| of them.
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 1; v <= n; ++v) adj[v - 1] = static_cast<std::uint32_t>(tree.neighbor_mask(v));
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint64_t> orders(std::size_t{1} << n, 0);
  orders[full] = 1;
  for (std::uint32_t s = full; s-- > 0;) {
    std::uint64_t acc = 0;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      if (s == 0 || std::popcount(adj[v] & s) == 1) acc += orders[s | (1U << v)];
    }
    orders[s] = acc;
  }
  BigInt factorial = 1;
  for (int i = 2; i < n; ++i) factorial *= i;
  const Rational labellings(orders[0], automorphism_count(tree));
  return Likelihood{labellings / Rational(factorial)};
}

Likelihood ua_likelihood_rooted(const Graph& tree) {
  const RootedTree t(tree);
  const int n = t.order();
  std::vector<int> size(static_cast<std::size_t>(n) + 1, 1);
  BigInt hooks = 1;
  for (Vertex v : bottom_up(t)) {
    hooks *= size[v];
    if (v != RootedTree::root()) size[t.parents()[v]] += size[v];
  }
  // n! / (n-1)! = n.
  return Likelihood{Rational(BigInt(n), hooks * BigInt(rooted_automorphism_count(t)))};
}

ResourceCost tree_cost(int n) {
  if (n < 1) throw Error("tree cost needs n >= 1");
  std::uint64_t bits = 0;
  for (int t = 1; t < n; ++t) bits += bit_length(static_cast<std::uint64_t>(t));
  ResourceCost c;
  c.instruction_bits = bits;
  c.memory_bits = bits;
  return c;
}

std::string encode_tree_instructions(const ParentVector& pv) {
  std::string out;
  for (int t = 2; t <= pv.order(); ++t) {
    const auto width = static_cast<int>(bit_length(static_cast<std::uint64_t>(t - 1)));
    const auto value = static_cast<std::uint64_t>(pv.parent(t));
    for (int i = width - 1; i >= 0; --i) out.push_back(((value >> i) & 1U) ? '1' : '0');
  }
  return out;
}

ParentVector decode_tree_instructions(std::string_view bits, int n) {
  if (n < 1) throw ParseError("tree needs n >= 1");
  if (bits.size() != tree_cost(n).instruction_bits) {
    throw ParseError("expected " + std::to_string(tree_cost(n).instruction_bits) +
                     " instruction bits for n = " + std::to_string(n) + ", got " +
                     std::to_string(bits.size()));
  }
  std::vector<int> values(static_cast<std::size_t>(n) + 1, 0);
  std::size_t pos = 0;
  for (int t = 2; t <= n; ++t) {
    const auto width = bit_length(static_cast<std::uint64_t>(t - 1));
    std::uint64_t value = 0;
    for (std::uint64_t i = 0; i < width; ++i, ++pos) {
      if (bits[pos] != '0' && bits[pos] != '1') throw ParseError("instruction bits must be 0/1");
      value = (value << 1) | static_cast<std::uint64_t>(bits[pos] - '0');
    }
    if (value < 1 || value >= static_cast<std::uint64_t>(t)) {
      throw ParseError("parent field for vertex " + std::to_string(t) + " is " +
                       std::to_string(value) + ", outside 1.." + std::to_string(t - 1));
    }
    values[t] = static_cast<int>(value);
  }
  return ParentVector(std::move(values));
}

std::vector<CanonicalForm> tree_classes(int n) {
  if (n < 1 || n > 8) throw OrderTooLarge("tree classes support 1 <= n <= 8");
  if (n == 1) return {canonical_form(Graph(1))};
  std::set<CanonicalForm> out;
  for_each_prufer_sequence(n, [&](std::span<const int> seq) {
    out.insert(canonical_form(prufer_decode(seq)));
  });
  return {out.begin(), out.end()};
}

}  // namespace graphres
