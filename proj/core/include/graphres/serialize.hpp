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

// Byte-deterministic text formats for graphs:
//
//   DOT     "graph G {" / one line per vertex / one line per edge "u -- v;" / "}"
//   JSON    {"n":3,"edges":[[1,2],[2,3]]}  1-based, u < v, sorted
//   matrix  upper triangle of A(G), row-major, as '0'/'1' characters
//
// Graph expressions, for command lines and tests:
//
//   expr := sum ('u' sum)*        disjoint union
//   sum  := atom ('+' atom)*      join
//   atom := K<n> | E<n> | P<n> | C<n> | K<a>,<b> | S<l>,<m> | '(' expr ')'
//
// K<a>,<b> is the complete bipartite graph, S<l>,<m> the complete split
// graph K_l + E_m. A string starting with '{' is parsed as JSON instead.

#ifndef GRAPHRES_SERIALIZE_HPP_
#define GRAPHRES_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "graphres/graph.hpp"

namespace graphres {

std::string to_dot(const Graph& g, std::string_view comment = {});
nlohmann::json to_json(const Graph& g);
std::string to_json_string(const Graph& g);
std::string to_matrix_string(const Graph& g);

// Throws ParseError on malformed input, VertexOutOfRange on bad indices.
Graph graph_from_json(const nlohmann::json& j);
Graph graph_from_json_string(std::string_view text);
// Length must be C(n,2) for some n >= 2; the empty string is ambiguous
// between E_0 and E_1, so `order` disambiguates when >= 0.
Graph graph_from_matrix_string(std::string_view bits, int order = -1);

Graph parse_graph_expression(std::string_view text);

}  // namespace graphres

#endif  // GRAPHRES_SERIALIZE_HPP_
