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

#ifndef GRAPHRES_STRUCTURE_HPP_
#define GRAPHRES_STRUCTURE_HPP_

#include <vector>

#include "graphres/graph.hpp"

namespace graphres {

// Threshold recognition by elimination: repeatedly delete an isolated or a
// dominating vertex. Vertices are bucketed by degree once; deleting a
// dominating vertex lowers every remaining degree by one, which is tracked
// as a single offset, so the elimination itself is linear in n.
bool is_threshold(const Graph& g);

// The forbidden-subgraph characterization: no induced P4, C4 or 2K2.
bool is_threshold_by_forbidden_subgraphs(const Graph& g);

// Component sizes in order of each component's smallest vertex.
std::vector<int> component_sizes(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
int max_degree(const Graph& g);
// Disjoint union of paths (isolated vertices count as P1).
bool is_linear_forest(const Graph& g);

}  // namespace graphres

#endif  // GRAPHRES_STRUCTURE_HPP_
