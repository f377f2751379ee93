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

#include "graphres/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

#include "graphres/errors.hpp"

namespace graphres {
namespace {

using Masks = std::array<std::uint32_t, kMaxIsomorphismOrder>;

void require_order(const Graph& g, int bound, const char* what) {
  if (g.order() > bound) {
    throw OrderTooLarge(std::string(what) + " supports order <= " +
                        std::to_string(bound) + ", got " +
                        std::to_string(g.order()));
  }
}

Masks masks_of(const Graph& g) {
  Masks m{};
  for (Vertex v = 1; v <= g.order(); ++v) {
    m[v - 1] = static_cast<std::uint32_t>(g.neighbor_mask(v));
  }
  return m;
}

// Colour refinement: start from degrees, then repeatedly split colours by the
// multiset of neighbour colours until stable. Colour ids are ranks of sorted
// signatures, so the result depends only on the isomorphism type of (G, v).
std::vector<int> invariant_cells(const Masks& adj, int n) {
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
  std::size_t classes = 0;
  std::vector<std::vector<int>> sig(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      sig[v].assign(1, color[v]);
      std::vector<int> nc;
      for (int u = 0; u < n; ++u) {
        if ((adj[v] >> u) & 1U) nc.push_back(color[u]);
      }
      std::sort(nc.begin(), nc.end());
      sig[v].insert(sig[v].end(), nc.begin(), nc.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

// u and v are twins when they have the same neighbours apart from each other.
// Swapping twins is an automorphism that fixes every other vertex, so search
// branches that differ only by such a swap are interchangeable.
bool twins(const Masks& adj, int u, int v) {
  const std::uint32_t ignore = (1U << u) | (1U << v);
  return ((adj[u] ^ adj[v]) & ~ignore) == 0;
}

// True if some w < v with the same cell is unused and a twin of v.
bool has_earlier_twin(const Masks& adj, const std::vector<int>& cell,
                      const std::vector<bool>& used, int v) {
  for (int w = 0; w < v; ++w) {
    if (!used[w] && cell[w] == cell[v] && twins(adj, w, v)) return true;
  }
  return false;
}

// Column p of the upper triangle holds bits (0,p),(1,p),...,(p-1,p); the
// first of those is the most significant, so comparing column values in
// column order is lexicographic comparison of the whole bit string.
class CanonicalSearch {
 public:
  CanonicalSearch(const Masks& adj, int n) : adj_(adj), n_(n) {
    cell_ = invariant_cells(adj, n);
    std::vector<int> sorted = cell_;
    std::sort(sorted.begin(), sorted.end());
    pos_cell_ = sorted;
    used_.assign(n, false);
    perm_.assign(n, -1);
    cur_.assign(n, 0);
    best_.assign(n, 0);
  }

  std::vector<std::uint32_t> run() {
    if (n_ > 0) dfs(0);
    return best_;
  }

 private:
  // -1 if cur < best on columns [0, p], 0 if equal, 1 if greater.
  int compare_prefix(int p) const {
    if (!have_best_) return -1;
    for (int i = 0; i <= p; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int p) {
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || cell_[v] != pos_cell_[p]) continue;
      if (has_earlier_twin(adj_, cell_, used_, v)) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < p; ++i) {
        col = (col << 1) | ((adj_[perm_[i]] >> v) & 1U);
      }
      cur_[p] = col;
      const int cmp = compare_prefix(p);
      if (cmp > 0) continue;
      perm_[p] = v;
      used_[v] = true;
      if (p + 1 == n_) {
        if (cmp < 0) {
          best_ = cur_;
          have_best_ = true;
        }
      } else {
        dfs(p + 1);
      }
      used_[v] = false;
    }
  }

  const Masks& adj_;
  int n_;
  std::vector<int> cell_;
  std::vector<int> pos_cell_;
  std::vector<bool> used_;
  std::vector<int> perm_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint32_t> best_;
  bool have_best_ = false;
};

std::string pack(int n, const std::vector<std::uint32_t>& columns) {
  std::string out(1, static_cast<char>(n));
  unsigned char byte = 0;
  int filled = 0;
  for (int p = 1; p < n; ++p) {
    for (int i = p - 1; i >= 0; --i) {
      byte = static_cast<unsigned char>((byte << 1) | ((columns[p] >> i) & 1U));
      if (++filled == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>(byte << (8 - filled)));
  }
  return out;
}

// Twins among the untaken candidates give equal subtree counts, so each twin
// class is searched once and weighted by its size.
std::uint64_t count_automorphisms(const Masks& adj, int n,
                                  const std::vector<int>& cell,
                                  std::vector<int>& image,
                                  std::vector<bool>& taken, int v) {
  if (v == n) return 1;
  std::uint64_t total = 0;
  for (int w = 0; w < n; ++w) {
    if (taken[w] || cell[w] != cell[v]) continue;
    if (has_earlier_twin(adj, cell, taken, w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      const bool e1 = (adj[v] >> u) & 1U;
      const bool e2 = (adj[w] >> image[u]) & 1U;
      ok = e1 == e2;
    }
    if (!ok) continue;
    std::uint64_t multiplicity = 1;
    for (int w2 = w + 1; w2 < n; ++w2) {
      if (!taken[w2] && cell[w2] == cell[w] && twins(adj, w, w2)) ++multiplicity;
    }
    image[v] = w;
    taken[w] = true;
    total += multiplicity * count_automorphisms(adj, n, cell, image, taken, v + 1);
    taken[w] = false;
  }
  return total;
}

bool find_isomorphism(const Masks& ag, const Masks& ah, int n,
                      const std::vector<int>& cg, const std::vector<int>& ch,
                      std::vector<int>& image, std::vector<bool>& taken, int v) {
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (taken[w] || ch[w] != cg[v]) continue;
    if (has_earlier_twin(ah, ch, taken, w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      ok = (((ag[v] >> u) & 1U) != 0) == (((ah[w] >> image[u]) & 1U) != 0);
    }
    if (!ok) continue;
    image[v] = w;
    taken[w] = true;
    if (find_isomorphism(ag, ah, n, cg, ch, image, taken, v + 1)) return true;
    taken[w] = false;
  }
  return false;
}

}  // namespace

int CanonicalForm::order() const {
  return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]);
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (char c : bytes_) {
    const auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

Graph CanonicalForm::to_graph() const {
  const int n = order();
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (int p = 1; p < n; ++p) {
    for (int i = 0; i < p; ++i, ++bit) {
      const auto byte = static_cast<unsigned char>(bytes_[1 + bit / 8]);
      if ((byte >> (7 - bit % 8)) & 1U) b.add_edge(i + 1, p + 1);
    }
  }
  return std::move(b).build();
}

CanonicalForm canonical_form(const Graph& g) {
  require_order(g, kMaxExactOrder, "canonical_form");
  const Masks adj = masks_of(g);
  CanonicalSearch search(adj, g.order());
  return CanonicalForm(pack(g.order(), search.run()));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg = g.degrees();
  std::vector<int> dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  require_order(g, kMaxIsomorphismOrder, "is_isomorphic");
  const int n = g.order();
  const Masks ag = masks_of(g);
  const Masks ah = masks_of(h);
  const std::vector<int> cg = invariant_cells(ag, n);
  const std::vector<int> ch = invariant_cells(ah, n);
  std::vector<int> sg = cg;
  std::vector<int> sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  return find_isomorphism(ag, ah, n, cg, ch, image, taken, 0);
}

std::uint64_t automorphism_count(const Graph& g) {
  require_order(g, kMaxExactOrder, "automorphism_count");
  const int n = g.order();
  const Masks adj = masks_of(g);
  const std::vector<int> cell = invariant_cells(adj, n);
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  return count_automorphisms(adj, n, cell, image, taken, 0);
}

bool contains_induced(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  if (k > n) return false;
  if (k == 0) return true;
  const CanonicalForm target = canonical_form(h);
  const std::size_t target_edges = h.edge_count();

  std::vector<Vertex> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    std::size_t edges = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) edges += g.adjacent(pick[i], pick[j]);
    }
    if (edges == target_edges &&
        canonical_form(g.induced_subgraph(pick)) == target) {
      return true;
    }
    // Next k-combination of 1..n in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return false;
}

std::vector<CanonicalForm> isomorphism_classes(int n) {
  if (n < 0) throw Error("order must be non-negative");
  if (n > kMaxClassOrder) {
    throw OrderTooLarge("isomorphism_classes supports n <= " +
                        std::to_string(kMaxClassOrder));
  }
  std::set<CanonicalForm> level{canonical_form(Graph(0))};
  for (int order = 1; order <= n; ++order) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& c : level) {
      const Graph base = c.to_graph();
      const int m = base.order();
      std::vector<Vertex> nbrs;
      for (std::uint32_t subset = 0; subset < (1U << m); ++subset) {
        nbrs.clear();
        for (int v = 0; v < m; ++v) {
          if ((subset >> v) & 1U) nbrs.push_back(v + 1);
        }
        next.insert(canonical_form(base.add_vertex_with_neighbors(nbrs)));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace graphres
