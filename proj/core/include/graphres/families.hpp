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

// Closed-form graph families indexed by an instruction string, and the run
// statistics that describe the fading-memory path decompositions.
//
// Every constructor here is written from an edge condition on (i, j, x_i, x_j)
// and never calls the machines, so the two can be checked against each other.
// Throughout, l = #0s and m = #1s of x, and vertex t carries label x_t.

#ifndef GRAPHRES_FAMILIES_HPP_
#define GRAPHRES_FAMILIES_HPP_

#include <string>
#include <vector>

#include "graphres/graph.hpp"
#include "graphres/instruction.hpp"
#include "graphres/machines.hpp"

namespace graphres {

using RunStatistics = std::vector<int>;

// Lengths of the maximal runs of 0s, in order.
RunStatistics runs_R(const InstructionString& x);
// Lengths of the maximal runs of 1s, in order.
RunStatistics runs_S(const InstructionString& x);
// Lengths >= 2 of the maximal alternating substrings, in order.
RunStatistics alternating_Q(const InstructionString& x);
// Sizes >= 2 of the blocks of consecutive positions linked by t-1 ~ t
// whenever x_{t-1} = 0; each block is a run of 0s closed by the next bit.
RunStatistics blocks_A(const InstructionString& x);

// {i,j} for i < j with x_i = 1, x_j = 0: K_{l,m} keeping only the pairs whose
// 0-labelled vertex arrives after its 1-labelled partner.
LabeledGraph family_E(const InstructionString& x);
// K_l + E_m keeping only the 0-1 pairs whose 0-labelled vertex is earlier.
LabeledGraph family_K(const InstructionString& x);
// K_l ⊎ K_m plus the 0-1 pairs whose 0-labelled vertex is later.
LabeledGraph family_Ktilde(const InstructionString& x);
// Clique on the 0s, every 0-1 pair whose 0 is later, and {t-1,t} whenever
// x_{t-1} = 0 and x_t = 1.
LabeledGraph family_Kprime(const InstructionString& x);
// family_Ktilde with 1-1 edges restricted to consecutive positions.
LabeledGraph family_Eprime(const InstructionString& x);

// Threshold graph with creation sequence x: vertex t dominates when x_t = 0
// and is isolated when x_t = 1.
LabeledGraph threshold_from_creation_sequence(const InstructionString& x);

// The prediction for a machine output: an exact labelled graph, or a graph
// that must only match up to isomorphism (the path decompositions).
struct FamilyPrediction {
  std::string name;
  LabeledGraph graph;
  bool up_to_isomorphism = false;
  // Output must additionally be a threshold graph.
  bool threshold = false;
};

// Closed form for interpret(rule, model, x) under none, full or fading:2.
// Works for every valid rule; bit-swapped rules map through the distinct
// representative on the complemented string.
FamilyPrediction predicted_family(const RuleSet& rule, const MemoryModel& model,
                                  const InstructionString& x);

}  // namespace graphres

#endif  // GRAPHRES_FAMILIES_HPP_
