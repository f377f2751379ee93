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

#include "graphres/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "graphres/errors.hpp"

namespace graphres {
namespace {

// Labelled graph on |x| vertices with {i,j}, i < j, present iff keep(i, j).
LabeledGraph from_condition(const InstructionString& x,
                            const std::function<bool(int, int, int, int)>& keep) {
  const int n = x.size();
  GraphBuilder b(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (keep(i, j, x.bit(i), x.bit(j))) b.add_edge(i, j);
    }
  }
  return LabeledGraph{std::move(b).build(), x.bits()};
}

RunStatistics runs_of(const InstructionString& x, int value) {
  RunStatistics out;
  int run = 0;
  for (std::uint8_t b : x.bits()) {
    if (b == value) {
      ++run;
    } else if (run > 0) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run > 0) out.push_back(run);
  return out;
}

// Segments of consecutive positions where position t joins t-1 iff
// link(x_{t-1}, x_t); returns segment sizes >= 2.
RunStatistics linked_segments(const InstructionString& x,
                              const std::function<bool(int, int)>& link) {
  RunStatistics out;
  int size = x.empty() ? 0 : 1;
  for (int t = 2; t <= x.size(); ++t) {
    if (link(x.bit(t - 1), x.bit(t))) {
      ++size;
    } else {
      if (size >= 2) out.push_back(size);
      size = 1;
    }
  }
  if (size >= 2) out.push_back(size);
  return out;
}

InstructionString complemented(const InstructionString& x) {
  std::vector<std::uint8_t> bits = x.bits();
  for (auto& b : bits) b ^= 1U;
  return InstructionString(std::move(bits));
}

// Paths of the listed sizes, then isolated vertices up to n.
Graph paths_with_isolated_completion(const RunStatistics& sizes, int n) {
  const int covered = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (covered > n) throw Error("path sizes exceed the vertex count");
  return disjoint_union(linear_forest(sizes), empty_graph(n - covered));
}

FamilyPrediction exact(std::string name, LabeledGraph g, bool threshold = false) {
  return FamilyPrediction{std::move(name), std::move(g), false, threshold};
}

FamilyPrediction up_to_iso(std::string name, Graph g, const InstructionString& x) {
  return FamilyPrediction{std::move(name), LabeledGraph{std::move(g), x.bits()},
                          true, false};
}

using A = Action;

FamilyPrediction full_memory(const RuleSet& r, const InstructionString& x) {
  if (r == RuleSet{A::kNoEdge, A::kNoEdge}) {
    return exact("E_l U E_m", from_condition(x, [](int, int, int, int) { return false; }));
  }
  if (r == RuleSet{A::kJoinLabel1, A::kNoEdge}) return exact("E_(x)", family_E(x));
  if (r == RuleSet{A::kJoinLabel0, A::kNoEdge}) {
    return exact("K_l U E_m", from_condition(x, [](int, int, int a, int b) {
                   return a == 0 && b == 0;
                 }));
  }
  if (r == RuleSet{A::kDominateAll, A::kNoEdge}) {
    return exact("threshold", threshold_from_creation_sequence(x), true);
  }
  if (r == RuleSet{A::kJoinLabel1, A::kJoinLabel0}) {
    return exact("K_{l,m}", from_condition(x, [](int, int, int a, int b) { return a != b; }));
  }
  if (r == RuleSet{A::kJoinLabel0, A::kJoinLabel0}) return exact("K_(x)", family_K(x));
  if (r == RuleSet{A::kDominateAll, A::kJoinLabel0}) {
    return exact("K_l + E_m", from_condition(x, [](int, int, int a, int b) {
                   return a == 0 || b == 0;
                 }));
  }
  if (r == RuleSet{A::kJoinLabel0, A::kJoinLabel1}) {
    return exact("K_l U K_m", from_condition(x, [](int, int, int a, int b) { return a == b; }));
  }
  if (r == RuleSet{A::kDominateAll, A::kJoinLabel1}) return exact("K~_(x)", family_Ktilde(x));
  if (r == RuleSet{A::kDominateAll, A::kDominateAll}) {
    return exact("K_{l+m}", from_condition(x, [](int, int, int, int) { return true; }));
  }
  throw Error("no closed form for rule " + r.mnemonic());
}

FamilyPrediction fading_memory(const RuleSet& r, const InstructionString& x) {
  const int n = x.size();
  if (r == RuleSet{A::kNoEdge, A::kNoEdge}) return up_to_iso("E_t", empty_graph(n), x);
  if (r == RuleSet{A::kDominateAll, A::kDominateAll}) {
    return up_to_iso("K_t", complete_graph(n), x);
  }
  if (r == RuleSet{A::kDominateAll, A::kNoEdge}) {
    return exact("threshold", threshold_from_creation_sequence(x), true);
  }
  if (r == RuleSet{A::kJoinLabel0, A::kNoEdge}) {
    return up_to_iso("U P_r (r in R) + isolated",
                     paths_with_isolated_completion(runs_R(x), n), x);
  }
  if (r == RuleSet{A::kJoinLabel0, A::kJoinLabel1}) {
    RunStatistics both = runs_R(x);
    const RunStatistics s = runs_S(x);
    both.insert(both.end(), s.begin(), s.end());
    return up_to_iso("U P_r (r in R) U P_s (s in S)", linear_forest(both), x);
  }
  if (r == RuleSet{A::kJoinLabel1, A::kNoEdge}) {
    int pairs = 0;
    for (int t = 2; t <= n; ++t) pairs += x.bit(t - 1) == 1 && x.bit(t) == 0;
    return up_to_iso("rP_2 U E_{t-2r}",
                     paths_with_isolated_completion(RunStatistics(pairs, 2), n), x);
  }
  if (r == RuleSet{A::kJoinLabel1, A::kJoinLabel0}) {
    return up_to_iso("U P_q (q in Q) U E",
                     paths_with_isolated_completion(alternating_Q(x), n), x);
  }
  if (r == RuleSet{A::kJoinLabel0, A::kJoinLabel0}) {
    return up_to_iso("U P_a (a in A) U E",
                     paths_with_isolated_completion(blocks_A(x), n), x);
  }
  if (r == RuleSet{A::kDominateAll, A::kJoinLabel0}) return exact("K'_(x)", family_Kprime(x));
  if (r == RuleSet{A::kDominateAll, A::kJoinLabel1}) return exact("E'_(x)", family_Eprime(x));
  throw Error("no closed form for rule " + r.mnemonic());
}

}  // namespace

RunStatistics runs_R(const InstructionString& x) { return runs_of(x, 0); }

RunStatistics runs_S(const InstructionString& x) { return runs_of(x, 1); }

RunStatistics alternating_Q(const InstructionString& x) {
  return linked_segments(x, [](int prev, int cur) { return prev != cur; });
}

RunStatistics blocks_A(const InstructionString& x) {
  return linked_segments(x, [](int prev, int) { return prev == 0; });
}

LabeledGraph family_E(const InstructionString& x) {
  return from_condition(x, [](int, int, int a, int b) { return a == 1 && b == 0; });
}

LabeledGraph family_K(const InstructionString& x) {
  return from_condition(x, [](int, int, int a, int b) {
    return (a == 0 && b == 0) || (a == 0 && b == 1);
  });
}

LabeledGraph family_Ktilde(const InstructionString& x) {
  return from_condition(x, [](int, int, int a, int b) {
    return a == b || (a == 1 && b == 0);
  });
}

LabeledGraph family_Kprime(const InstructionString& x) {
  return from_condition(x, [](int i, int j, int a, int b) {
    if (a == 0 && b == 0) return true;
    if (a == 1 && b == 0) return true;
    return a == 0 && b == 1 && j == i + 1;
  });
}

LabeledGraph family_Eprime(const InstructionString& x) {
  return from_condition(x, [](int i, int j, int a, int b) {
    if (a == 0 && b == 0) return true;
    if (a == 1 && b == 0) return true;
    return a == 1 && b == 1 && j == i + 1;
  });
}

LabeledGraph threshold_from_creation_sequence(const InstructionString& x) {
  return from_condition(x, [](int, int, int, int b) { return b == 0; });
}

FamilyPrediction predicted_family(const RuleSet& rule, const MemoryModel& model,
                                  const InstructionString& x) {
  if (!model.reads_labels() && rule.uses_labels()) {
    throw InvalidActionForModel("rule " + rule.mnemonic() + " needs memory");
  }
  const std::vector<RuleSet> reps = distinct_rules();
  const bool is_rep = std::find(reps.begin(), reps.end(), rule) != reps.end();
  if (!is_rep) {
    FamilyPrediction p = predicted_family(rule.bit_swapped(), model, complemented(x));
    p.graph.labels = x.bits();
    return p;
  }
  switch (model.kind()) {
    case MemoryModel::Kind::kNone:
    case MemoryModel::Kind::kFull:
      return full_memory(rule, x);
    case MemoryModel::Kind::kFading:
      return fading_memory(rule, x);
    case MemoryModel::Kind::kModifiable:
      break;
  }
  throw Error("no closed form for the modifiable model");
}

}  // namespace graphres
