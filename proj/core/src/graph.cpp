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

#include "graphres/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "graphres/errors.hpp"

namespace graphres {

Graph::Graph(int order) {
  if (order < 0) throw Error("graph order must be non-negative");
  n_ = order;
  words_ = (order + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) {
      throw Error("self-loop at vertex " + std::to_string(e.u));
    }
    g.set(e.u, e.v);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." +
                           std::to_string(n_));
  }
}

bool Graph::test(Vertex u, Vertex v) const {
  const std::size_t row = static_cast<std::size_t>(u - 1) * words_;
  const int col = v - 1;
  return (bits_[row + col / 64] >> (col % 64)) & 1U;
}

bool Graph::set(Vertex u, Vertex v) {
  if (test(u, v)) return false;
  const int a = u - 1;
  const int b = v - 1;
  bits_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  bits_[static_cast<std::size_t>(b) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  ++edge_count_;
  return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return test(u, v);
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  const std::size_t row = static_cast<std::size_t>(v - 1) * words_;
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[row + w]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= n_; ++u) {
    if (test(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) {
      if (test(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (Vertex v = 1; v <= n_; ++v) out[v - 1] = degree(v);
  return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  check_vertex(v);
  if (n_ > 64) throw OrderTooLarge("neighbor_mask needs order <= 64");
  return bits_[static_cast<std::size_t>(v - 1)];
}

Graph Graph::add_vertex_with_neighbors(std::span<const Vertex> neighbors) const {
  Graph g(n_ + 1);
  for (Vertex s : neighbors) {
    if (s < 1 || s > n_) {
      throw VertexOutOfRange("neighbour " + std::to_string(s) +
                             " is not an existing vertex (1.." +
                             std::to_string(n_) + ")");
    }
  }
  for (const Edge& e : edges()) g.set(e.u, e.v);
  for (Vertex s : neighbors) g.set(s, n_ + 1);
  return g;
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  for (Vertex v : vertices) check_vertex(v);
  const int k = static_cast<int>(vertices.size());
  Graph g(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (vertices[i] == vertices[j]) {
        throw Error("induced_subgraph: repeated vertex");
      }
      if (test(vertices[i], vertices[j])) g.set(i + 1, j + 1);
    }
  }
  return g;
}

Graph Graph::prefix(int k) const {
  if (k < 0 || k > n_) throw VertexOutOfRange("prefix length out of range");
  std::vector<Vertex> vs(k);
  for (int i = 0; i < k; ++i) vs[i] = i + 1;
  return induced_subgraph(vs);
}

Graph Graph::relabel(std::span<const Vertex> image) const {
  if (static_cast<int>(image.size()) != n_) {
    throw Error("relabel: permutation size differs from graph order");
  }
  std::vector<bool> seen(n_ + 1, false);
  for (Vertex v : image) {
    check_vertex(v);
    if (seen[v]) throw Error("relabel: image is not a permutation");
    seen[v] = true;
  }
  Graph g(n_);
  for (const Edge& e : edges()) g.set(image[e.u - 1], image[e.v - 1]);
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) {
      if (!test(u, v)) g.set(u, v);
    }
  }
  return g;
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  return g_.set(u, v);
}

int LabeledGraph::zeros() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), 0));
}

int LabeledGraph::ones() const {
  return static_cast<int>(labels.size()) - zeros();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.order();
  GraphBuilder b(off + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + off, e.v + off);
  return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b(disjoint_union(g, h));
  const int off = g.order();
  for (Vertex u = 1; u <= off; ++u) {
    for (Vertex v = 1; v <= h.order(); ++v) b.add_edge(u, v + off);
  }
  return std::move(b).build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) { return Graph(n).complement(); }

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 2; v <= n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle length must be at least 3");
  GraphBuilder b(path_graph(n));
  b.add_edge(n, 1);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  return join(empty_graph(a), empty_graph(b));
}

Graph complete_split(int clique, int independent) {
  return join(complete_graph(clique), empty_graph(independent));
}

Graph linear_forest(std::span<const int> path_sizes) {
  Graph g;
  for (int r : path_sizes) {
    if (r < 1) throw Error("linear forest path sizes must be positive");
    g = disjoint_union(g, path_graph(r));
  }
  return g;
}

}  // namespace graphres
