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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "graphres/errors.hpp"
#include "graphres/families.hpp"
#include "graphres/isomorphism.hpp"
#include "graphres/machines.hpp"
#include "graphres/structure.hpp"

namespace graphres {
namespace {

using A = Action;

InstructionString bits(const char* s) { return InstructionString::parse(s); }

template <typename F>
void for_each_string_upto(int max_len, F f) {
  for (int len = 0; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      f(InstructionString::from_index(v, len));
    }
  }
}

// Component sizes >= 2, sorted, plus the number of isolated vertices.
std::pair<std::vector<int>, int> shape(const Graph& g) {
  std::vector<int> big;
  int isolated = 0;
  for (int s : component_sizes(g)) {
    if (s >= 2) {
      big.push_back(s);
    } else {
      ++isolated;
    }
  }
  std::sort(big.begin(), big.end());
  return {big, isolated};
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(RunStatisticsTest, WorkedString) {
  const InstructionString x = bits("00110100010");
  EXPECT_EQ(runs_R(x), (RunStatistics{2, 1, 3, 1}));
  EXPECT_EQ(runs_S(x), (RunStatistics{2, 1, 1}));
  EXPECT_EQ(alternating_Q(x), (RunStatistics{2, 4, 3}));
  EXPECT_EQ(blocks_A(x), (RunStatistics{3, 2, 4}));
}

TEST(RunStatisticsTest, EdgeCases) {
  EXPECT_TRUE(runs_R(InstructionString()).empty());
  EXPECT_TRUE(alternating_Q(bits("0000")).empty());
  EXPECT_EQ(alternating_Q(bits("0101")), (RunStatistics{4}));
  EXPECT_TRUE(blocks_A(bits("1111")).empty());
  EXPECT_EQ(blocks_A(bits("000")), (RunStatistics{3}));
  EXPECT_EQ(blocks_A(bits("0")), RunStatistics{});
}

TEST(RunStatisticsTest, ZeroAndOneRunsPartitionTheString) {
  for_each_string_upto(12, [](const InstructionString& x) {
    const RunStatistics r = runs_R(x);
    const RunStatistics s = runs_S(x);
    EXPECT_EQ(std::accumulate(r.begin(), r.end(), 0) + std::accumulate(s.begin(), s.end(), 0),
              x.size());
    for (const RunStatistics& st : {alternating_Q(x), blocks_A(x)}) {
      EXPECT_LE(std::accumulate(st.begin(), st.end(), 0), x.size());
    }
  });
}

TEST(RunStatisticsTest, AlternatingSegmentsAreFadingComponents) {
  const RuleSet r{A::kJoinLabel1, A::kJoinLabel0};
  for_each_string_upto(12, [&](const InstructionString& x) {
    const Graph g = construct(r, MemoryModel::fading(2), x);
    ASSERT_EQ(shape(g).first, sorted(alternating_Q(x))) << x.str();
  });
}

TEST(FamilyTest, Examples) {
  EXPECT_EQ(family_E(bits("00010")).graph, Graph::from_edges(5, std::vector<Edge>{{4, 5}}));
  EXPECT_EQ(family_E(bits("00000")).graph, empty_graph(5));
  EXPECT_EQ(family_Ktilde(bits("0011")).graph,
            Graph::from_edges(4, std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_EQ(family_Kprime(bits("01")).graph, complete_graph(2));
  EXPECT_EQ(family_Kprime(bits("011")).graph, Graph::from_edges(3, std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(family_Eprime(bits("11")).graph, complete_graph(2));
  EXPECT_EQ(threshold_from_creation_sequence(bits("1000")).graph, complete_graph(4));
  EXPECT_EQ(threshold_from_creation_sequence(bits("0111")).graph, empty_graph(4));
}

TEST(FamilyTest, LabelsFollowTheString) {
  for_each_string_upto(6, [](const InstructionString& x) {
    for (const LabeledGraph& g : {family_E(x), family_K(x), family_Ktilde(x),
                                  family_Kprime(x), family_Eprime(x),
                                  threshold_from_creation_sequence(x)}) {
      EXPECT_EQ(g.labels, x.bits());
      EXPECT_EQ(g.graph.order(), x.size());
    }
  });
}

TEST(FamilyTest, NamedFamiliesMatchMachines) {
  const MemoryModel full = MemoryModel::full();
  const MemoryModel fading = MemoryModel::fading(2);
  for_each_string_upto(8, [&](const InstructionString& x) {
    auto out = [&](A a0, A a1, const MemoryModel& m) {
      return LabeledGraph{construct(RuleSet{a0, a1}, m, x), x.bits()};
    };
    EXPECT_EQ(out(A::kJoinLabel1, A::kNoEdge, full), family_E(x));
    EXPECT_EQ(out(A::kJoinLabel0, A::kJoinLabel0, full), family_K(x));
    EXPECT_EQ(out(A::kDominateAll, A::kJoinLabel1, full), family_Ktilde(x));
    EXPECT_EQ(out(A::kDominateAll, A::kJoinLabel0, fading), family_Kprime(x));
    EXPECT_EQ(out(A::kDominateAll, A::kJoinLabel1, fading), family_Eprime(x));
    EXPECT_EQ(out(A::kDominateAll, A::kNoEdge, MemoryModel::none()),
              threshold_from_creation_sequence(x));
  });
}

// Unlabelled cross-check of the full-memory table against the standard
// family constructors.
TEST(FamilyTest, FullMemoryTableUpToIsomorphism) {
  const MemoryModel full = MemoryModel::full();
  for_each_string_upto(8, [&](const InstructionString& x) {
    const int l = x.zeros();
    const int m = x.ones();
    auto out = [&](A a0, A a1) { return construct(RuleSet{a0, a1}, full, x); };
    EXPECT_EQ(out(A::kNoEdge, A::kNoEdge), empty_graph(l + m));
    EXPECT_TRUE(is_isomorphic(out(A::kJoinLabel0, A::kNoEdge),
                              disjoint_union(complete_graph(l), empty_graph(m))));
    EXPECT_TRUE(is_threshold(out(A::kDominateAll, A::kNoEdge)));
    EXPECT_TRUE(is_isomorphic(out(A::kJoinLabel1, A::kJoinLabel0), complete_bipartite(l, m)));
    EXPECT_TRUE(is_isomorphic(out(A::kDominateAll, A::kJoinLabel0), complete_split(l, m)));
    EXPECT_TRUE(is_isomorphic(out(A::kJoinLabel0, A::kJoinLabel1),
                              disjoint_union(complete_graph(l), complete_graph(m))));
    EXPECT_EQ(out(A::kDominateAll, A::kDominateAll), complete_graph(l + m));
  });
}

TEST(FamilyTest, FadingTableComponentShapes) {
  const MemoryModel fading = MemoryModel::fading(2);
  for_each_string_upto(10, [&](const InstructionString& x) {
    const int n = x.size();
    auto out = [&](A a0, A a1) { return construct(RuleSet{a0, a1}, fading, x); };
    auto covered = [](const RunStatistics& s) {
      return std::accumulate(s.begin(), s.end(), 0);
    };
    auto big = [](RunStatistics s) {
      s.erase(std::remove(s.begin(), s.end(), 1), s.end());
      return sorted(s);
    };
    const RunStatistics r = runs_R(x);
    const RunStatistics s = runs_S(x);
    // (0->0)(1->-): paths on the runs of zeros, everything else isolated.
    EXPECT_EQ(shape(out(A::kJoinLabel0, A::kNoEdge)),
              std::make_pair(big(r), n - covered(big(r))));
    RunStatistics rs = r;
    rs.insert(rs.end(), s.begin(), s.end());
    EXPECT_EQ(shape(out(A::kJoinLabel0, A::kJoinLabel1)).first, big(rs));
    int pairs = 0;
    for (int t = 2; t <= n; ++t) pairs += x.bit(t - 1) == 1 && x.bit(t) == 0;
    EXPECT_EQ(shape(out(A::kJoinLabel1, A::kNoEdge)),
              std::make_pair(std::vector<int>(pairs, 2), n - 2 * pairs));
    EXPECT_EQ(shape(out(A::kJoinLabel0, A::kJoinLabel0)).first, sorted(blocks_A(x)));
    EXPECT_TRUE(is_linear_forest(out(A::kJoinLabel0, A::kJoinLabel0)));
    EXPECT_EQ(out(A::kNoEdge, A::kNoEdge), empty_graph(n));
  });
}

TEST(PredictedFamilyTest, CoversEveryRuleAndModel) {
  for (const MemoryModel& m : {MemoryModel::none(), MemoryModel::full(), MemoryModel::fading(2)}) {
    for (const RuleSet& r : all_rules_for(m)) {
      for_each_string_upto(8, [&](const InstructionString& x) {
        const FamilyPrediction p = predicted_family(r, m, x);
        const Graph g = construct(r, m, x);
        if (p.up_to_isomorphism) {
          ASSERT_TRUE(is_isomorphic(g, p.graph.graph)) << r.mnemonic() << " " << x.str();
        } else {
          ASSERT_EQ((LabeledGraph{g, x.bits()}), p.graph) << r.mnemonic() << " " << x.str();
        }
        if (p.threshold) ASSERT_TRUE(is_threshold(g));
      });
    }
  }
}

TEST(PredictedFamilyTest, Errors) {
  EXPECT_THROW(predicted_family(RuleSet{A::kJoinLabel0, A::kNoEdge}, MemoryModel::none(),
                                bits("01")),
               InvalidActionForModel);
  EXPECT_THROW(predicted_family(RuleSet{A::kJoinLabel0, A::kNoEdge}, MemoryModel::modifiable(),
                                bits("01")),
               Error);
}

}  // namespace
}  // namespace graphres
