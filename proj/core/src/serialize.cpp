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

#include "graphres/serialize.hpp"

#include <cctype>
#include <sstream>

#include "graphres/errors.hpp"

namespace graphres {

std::string to_dot(const Graph& g, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "// " << comment << "\n";
  os << "graph G {\n";
  for (Vertex v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

// Ordered so that "n" precedes "edges", as in the documented format.
std::string to_json_string(const Graph& g) {
  nlohmann::ordered_json out;
  out["n"] = g.order();
  out["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) out["edges"].push_back({e.u, e.v});
  return out.dump();
}

std::string to_matrix_string(const Graph& g) {
  std::string out;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      out.push_back(g.adjacent(u, v) ? '1' : '0');
    }
  }
  return out;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("graph JSON needs an integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 0) throw ParseError("graph JSON: n must be non-negative");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("graph JSON: edges must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("graph JSON: each edge is a pair of integers");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Graph::from_edges(n, edges);
}

Graph graph_from_json_string(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed graph JSON");
  return graph_from_json(j);
}

Graph graph_from_matrix_string(std::string_view bits, int order) {
  int n = order;
  if (n < 0) {
    n = bits.empty() ? 0 : 2;
    while (static_cast<std::size_t>(n) * (n - 1) / 2 < bits.size()) ++n;
  }
  if (static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2 != bits.size()) {
    throw ParseError("matrix string length is not a triangular number C(n,2)");
  }
  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++k) {
      if (bits[k] == '1') {
        b.add_edge(u, v);
      } else if (bits[k] != '0') {
        throw ParseError("matrix string may only contain '0' and '1'");
      }
    }
  }
  return std::move(b).build();
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("graph expression '" + std::string(s_) + "': " + why +
                     " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > 4096) fail("size too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  Graph expr() {
    Graph g = sum();
    while (accept('u')) g = disjoint_union(g, sum());
    return g;
  }

  Graph sum() {
    Graph g = atom();
    while (accept('+')) g = join(g, atom());
    return g;
  }

  Graph atom() {
    skip_space();
    if (accept('(')) {
      Graph g = expr();
      if (!accept(')')) fail("expected ')'");
      return g;
    }
    if (pos_ >= s_.size()) fail("expected a graph name");
    const char kind = s_[pos_++];
    const int a = number();
    switch (kind) {
      case 'K':
        if (accept(',')) return complete_bipartite(a, number());
        return complete_graph(a);
      case 'E':
        return empty_graph(a);
      case 'P':
        return path_graph(a);
      case 'C':
        if (a < 3) fail("cycle length must be at least 3");
        return cycle_graph(a);
      case 'S':
        if (!accept(',')) fail("S needs two sizes, S<l>,<m>");
        return complete_split(a, number());
      default:
        --pos_;
        fail(std::string("unknown graph name '") + kind + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_expression(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) {
    ++first;
  }
  if (first < text.size() && text[first] == '{') return graph_from_json_string(text);
  return ExpressionParser(text).parse();
}

}  // namespace graphres
