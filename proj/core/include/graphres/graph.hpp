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

// Simple undirected graphs on vertices 1..n, numbered in arrival order.
//
// Vertex t is the vertex added at time t. Graph is an immutable value: every
// operation that changes structure returns a new graph. Mutation during a
// construction goes through GraphBuilder.

#ifndef GRAPHRES_GRAPH_HPP_
#define GRAPHRES_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graphres {

using Vertex = int;

// Unordered pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  // The empty graph E_order.
  explicit Graph(int order);

  // Throws VertexOutOfRange for endpoints outside 1..order and Error for
  // self-loops. Repeated pairs collapse into one edge.
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  // Sorted lexicographically, each with u < v.
  std::vector<Edge> edges() const;
  // degrees()[v - 1] is the degree of v.
  std::vector<int> degrees() const;

  // Neighbourhood of v as a bit mask (bit u-1 set iff u ~ v). order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  // Vertex order()+1 joined exactly to `neighbors`.
  Graph add_vertex_with_neighbors(std::span<const Vertex> neighbors) const;

  // Subgraph induced on `vertices`, relabelled 1..k in the order given.
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  // Induced subgraph on 1..k.
  Graph prefix(int k) const;

  // Vertex v of this graph becomes image[v - 1]; image must be a permutation
  // of 1..order().
  Graph relabel(std::span<const Vertex> image) const;

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const;
  bool test(Vertex u, Vertex v) const;
  bool set(Vertex u, Vertex v);

  int n_ = 0;
  int words_ = 0;
  std::size_t edge_count_ = 0;
  // Symmetric bit matrix, row-major, words_ 64-bit words per row.
  std::vector<std::uint64_t> bits_;
};

// Mutable companion for step-by-step constructions over a fixed vertex count.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : g_(order) {}
  explicit GraphBuilder(Graph start) : g_(std::move(start)) {}

  int order() const noexcept { return g_.order(); }
  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  // Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);

  const Graph& view() const noexcept { return g_; }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

// A graph together with the memory bit ℓ(t) stored for each vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::uint8_t> labels;  // labels[t - 1] == ℓ(t), each 0 or 1

  int zeros() const;
  int ones() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

Graph disjoint_union(const Graph& g, const Graph& h);
// Disjoint union plus every edge between g and h.
Graph join(const Graph& g, const Graph& h);

Graph empty_graph(int n);
Graph complete_graph(int n);
// P_n numbered along the path; path_graph(0) is E_0.
Graph path_graph(int n);
// C_n numbered around the cycle; n >= 3.
Graph cycle_graph(int n);
// K_{a,b} = E_a + E_b.
Graph complete_bipartite(int a, int b);
// K_l + E_m: the clique occupies 1..l.
Graph complete_split(int clique, int independent);
// Disjoint union of paths of the given sizes, in order.
Graph linear_forest(std::span<const int> path_sizes);

}  // namespace graphres

#endif  // GRAPHRES_GRAPH_HPP_
