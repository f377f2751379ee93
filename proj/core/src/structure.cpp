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

#include "graphres/structure.hpp"

#include <algorithm>
#include <array>

#include "graphres/isomorphism.hpp"

namespace graphres {

bool is_threshold(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  const std::vector<int> deg = g.degrees();

  // Counting sort by degree.
  std::vector<int> bucket(n + 1, 0);
  for (int d : deg) ++bucket[d + 1];
  for (int d = 1; d <= n; ++d) bucket[d] += bucket[d - 1];
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[bucket[deg[v]]++] = v;

  int lo = 0;
  int hi = n - 1;
  int dominating_removed = 0;
  while (lo <= hi) {
    const int remaining = hi - lo + 1;
    if (deg[order[lo]] - dominating_removed == 0) {
      ++lo;
    } else if (deg[order[hi]] - dominating_removed == remaining - 1) {
      --hi;
      ++dominating_removed;
    } else {
      return false;
    }
  }
  return true;
}

bool is_threshold_by_forbidden_subgraphs(const Graph& g) {
  static const std::array<Graph, 3> kForbidden = {
      path_graph(4), cycle_graph(4),
      disjoint_union(complete_graph(2), complete_graph(2))};
  return std::none_of(kForbidden.begin(), kForbidden.end(),
                      [&](const Graph& h) { return contains_induced(g, h); });
}

std::vector<int> component_sizes(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> sizes;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int size = 0;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

bool is_connected(const Graph& g) { return component_sizes(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 &&
         g.edge_count() == static_cast<std::size_t>(g.order() - 1) &&
         is_connected(g);
}

int max_degree(const Graph& g) {
  const std::vector<int> deg = g.degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool is_linear_forest(const Graph& g) {
  // Max degree <= 2 and acyclic: each component of size s has s-1 edges.
  if (max_degree(g) > 2) return false;
  const std::size_t components = component_sizes(g).size();
  return g.edge_count() + components == static_cast<std::size_t>(g.order());
}

}  // namespace graphres
