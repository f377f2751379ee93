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

#include "graphres/machines.hpp"

#include <algorithm>

#include "graphres/errors.hpp"
#include "graphres/isomorphism.hpp"
#include "graphres/serialize.hpp"

namespace graphres {
namespace {

Action action_from_symbol(char c) {
  switch (c) {
    case '-':
      return Action::kNoEdge;
    case 'E':
      return Action::kDominateAll;
    case '0':
      return Action::kJoinLabel0;
    case '1':
      return Action::kJoinLabel1;
    default:
      throw ParseError(std::string("unknown action symbol '") + c +
                       "' (expected one of - E 0 1)");
  }
}

Action swap_action(Action a) {
  switch (a) {
    case Action::kJoinLabel0:
      return Action::kJoinLabel1;
    case Action::kJoinLabel1:
      return Action::kJoinLabel0;
    default:
      return a;
  }
}

void validate(const RuleSet& rule, const MemoryModel& model) {
  if (!model.reads_labels() && rule.uses_labels()) {
    throw InvalidActionForModel("rule " + rule.mnemonic() +
                                " joins by label, which needs memory; model '" +
                                model.name() + "' keeps no labels");
  }
}

// Standard (non-modifying) edges fired by vertex t.
void standard_edges(Action a, const MemoryModel& model, const InstructionString& x,
                    int t, std::vector<Edge>& out) {
  switch (a) {
    case Action::kNoEdge:
      return;
    case Action::kDominateAll:
      for (Vertex i = 1; i < t; ++i) out.emplace_back(i, t);
      return;
    case Action::kJoinLabel0:
    case Action::kJoinLabel1: {
      const int wanted = a == Action::kJoinLabel0 ? 0 : 1;
      if (model.kind() == MemoryModel::Kind::kFading) {
        if (t >= 2 && x.bit(t - 1) == wanted) out.emplace_back(t - 1, t);
      } else {
        for (Vertex i = 1; i < t; ++i) {
          if (x.bit(i) == wanted) out.emplace_back(i, t);
        }
      }
      return;
    }
  }
}

ResourceCost machine_cost(const MemoryModel& model, int n) {
  ResourceCost c;
  c.instruction_bits = static_cast<std::uint64_t>(n);
  switch (model.kind()) {
    case MemoryModel::Kind::kNone:
      c.memory_bits = 0;
      break;
    case MemoryModel::Kind::kFading:
      c.memory_bits = static_cast<std::uint64_t>(std::min(n, model.window()));
      break;
    default:
      c.memory_bits = static_cast<std::uint64_t>(n);
  }
  return c;
}

ConstructionTrace run(const RuleSet& rule, const MemoryModel& model,
                      const InstructionString& x, const std::vector<bool>& choices) {
  validate(rule, model);
  const int n = x.size();
  ConstructionTrace trace;
  trace.rule = rule;
  trace.model = model;
  trace.x = x;
  trace.choices = choices;
  trace.steps.reserve(n);
  GraphBuilder g(n);
  std::vector<Edge> candidate;
  for (int t = 1; t <= n; ++t) {
    StepRecord step;
    step.t = t;
    step.bit = x.bit(t);
    step.action = rule.for_bit(step.bit);
    step.modified = !choices.empty() && choices[t - 1];
    candidate.clear();
    if (step.modified) {
      if (!is_label_join(step.action)) {
        throw ModifyUnsupported("step " + std::to_string(t) + " fires '" +
                                action_symbol(step.action) +
                                "', which has no labels to modify by");
      }
      const int c = step.action == Action::kJoinLabel0 ? 0 : 1;
      for (Vertex i = 1; i <= t; ++i) {
        for (Vertex j = 1; j <= t; ++j) {
          if (i != j && x.bit(i) == step.bit && x.bit(j) == c) {
            candidate.emplace_back(i, j);
          }
        }
      }
    } else {
      standard_edges(step.action, model, x, t, candidate);
    }
    std::sort(candidate.begin(), candidate.end());
    for (const Edge& e : candidate) {
      if (g.add_edge(e.u, e.v)) step.added.push_back(e);
    }
    trace.steps.push_back(std::move(step));
  }
  trace.result.graph = std::move(g).build();
  trace.result.labels = x.bits();
  trace.cost = machine_cost(model, n);
  return trace;
}

}  // namespace

char action_symbol(Action a) {
  switch (a) {
    case Action::kNoEdge:
      return '-';
    case Action::kDominateAll:
      return 'E';
    case Action::kJoinLabel0:
      return '0';
    case Action::kJoinLabel1:
      return '1';
  }
  return '?';
}

bool is_label_join(Action a) {
  return a == Action::kJoinLabel0 || a == Action::kJoinLabel1;
}

std::string RuleSet::mnemonic() const {
  return std::string("0>") + action_symbol(on_zero) + ",1>" + action_symbol(on_one);
}

RuleSet RuleSet::parse(std::string_view text) {
  if (text.size() != 7 || text.substr(0, 2) != "0>" || text.substr(3, 3) != ",1>") {
    throw ParseError("rule mnemonic must look like \"0>1,1>-\", got '" +
                     std::string(text) + "'");
  }
  return RuleSet{action_from_symbol(text[2]), action_from_symbol(text[6])};
}

RuleSet RuleSet::bit_swapped() const {
  return RuleSet{swap_action(on_one), swap_action(on_zero)};
}

std::vector<RuleSet> all_rules() {
  constexpr Action kAll[] = {Action::kNoEdge, Action::kDominateAll,
                             Action::kJoinLabel0, Action::kJoinLabel1};
  std::vector<RuleSet> out;
  for (Action a : kAll) {
    for (Action b : kAll) out.push_back(RuleSet{a, b});
  }
  return out;
}

std::vector<RuleSet> distinct_rules() {
  using A = Action;
  return {
      {A::kNoEdge, A::kNoEdge},           {A::kJoinLabel1, A::kNoEdge},
      {A::kJoinLabel0, A::kNoEdge},       {A::kDominateAll, A::kNoEdge},
      {A::kJoinLabel1, A::kJoinLabel0},   {A::kJoinLabel0, A::kJoinLabel0},
      {A::kDominateAll, A::kJoinLabel0},  {A::kJoinLabel0, A::kJoinLabel1},
      {A::kDominateAll, A::kJoinLabel1},  {A::kDominateAll, A::kDominateAll},
  };
}

MemoryModel MemoryModel::fading(int window) {
  if (window != 2) {
    throw Error("fading memory is only defined for window 2, got " +
                std::to_string(window));
  }
  return MemoryModel(Kind::kFading, window);
}

MemoryModel MemoryModel::parse(std::string_view text) {
  if (text == "none") return none();
  if (text == "full") return full();
  if (text == "modifiable") return modifiable();
  if (text == "fading") return fading(2);
  if (text.substr(0, 7) == "fading:") {
    const std::string w(text.substr(7));
    if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos ||
        w.size() > 6) {
      throw ParseError("fading window must be a positive integer");
    }
    return fading(std::stoi(w));
  }
  throw ParseError("unknown memory model '" + std::string(text) +
                   "' (none, full, fading, fading:2, modifiable)");
}

std::string MemoryModel::name() const {
  switch (kind_) {
    case Kind::kNone:
      return "none";
    case Kind::kFull:
      return "full";
    case Kind::kFading:
      return "fading:" + std::to_string(window_);
    case Kind::kModifiable:
      return "modifiable";
  }
  return "?";
}

std::vector<RuleSet> rules_for(const MemoryModel& model) {
  std::vector<RuleSet> out;
  for (const RuleSet& r : distinct_rules()) {
    if (model.reads_labels() || !r.uses_labels()) out.push_back(r);
  }
  return out;
}

std::vector<RuleSet> all_rules_for(const MemoryModel& model) {
  std::vector<RuleSet> out;
  for (const RuleSet& r : all_rules()) {
    if (model.reads_labels() || !r.uses_labels()) out.push_back(r);
  }
  return out;
}

Graph ConstructionTrace::graph_after(int t) const {
  if (t < 0 || t > x.size()) throw VertexOutOfRange("step out of range");
  GraphBuilder g(t);
  for (int s = 0; s < t; ++s) {
    for (const Edge& e : steps[s].added) g.add_edge(e.u, e.v);
  }
  return std::move(g).build();
}

ConstructionTrace interpret(const RuleSet& rule, const MemoryModel& model,
                            const InstructionString& x) {
  return run(rule, model, x, {});
}

Graph construct(const RuleSet& rule, const MemoryModel& model,
                const InstructionString& x) {
  validate(rule, model);
  const int n = x.size();
  GraphBuilder g(n);
  std::vector<Edge> edges;
  for (int t = 1; t <= n; ++t) {
    edges.clear();
    standard_edges(rule.for_bit(x.bit(t)), model, x, t, edges);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
  }
  return std::move(g).build();
}

ConstructionTrace interpret_modifiable(const RuleSet& rule,
                                       const InstructionString& x,
                                       const std::vector<bool>& choices) {
  if (static_cast<int>(choices.size()) != x.size()) {
    throw Error("choice sequence length " + std::to_string(choices.size()) +
                " differs from instruction length " + std::to_string(x.size()));
  }
  return run(rule, MemoryModel::modifiable(), x, choices);
}

std::vector<int> modifying_steps(const ConstructionTrace& trace) {
  std::vector<int> out;
  Graph previous = trace.graph_after(1 <= trace.x.size() ? 1 : 0);
  for (int t = 2; t <= trace.x.size(); ++t) {
    const Graph current = trace.graph_after(t);
    const Graph without_t = current.prefix(t - 1);
    // Edges are only ever added, so the prefix is a supergraph of G_{t-1}.
    if (!(without_t == previous) && !is_isomorphic(without_t, previous)) {
      out.push_back(t);
    }
    previous = current;
  }
  return out;
}

bool is_memory_modifiable_output(const ConstructionTrace& trace) {
  return !modifying_steps(trace).empty();
}

nlohmann::json trace_to_json(const ConstructionTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const StepRecord& s : trace.steps) {
    nlohmann::json added = nlohmann::json::array();
    for (const Edge& e : s.added) added.push_back({e.u, e.v});
    steps.push_back({{"t", s.t},
                     {"bit", s.bit},
                     {"action", std::string(1, action_symbol(s.action))},
                     {"modified", s.modified},
                     {"added", std::move(added)}});
  }
  std::string choices;
  for (bool c : trace.choices) choices.push_back(c ? '1' : '0');
  nlohmann::json out = {
      {"rule", trace.rule.mnemonic()},
      {"model", trace.model.name()},
      {"x", trace.x.str()},
      {"steps", std::move(steps)},
      {"graph", to_json(trace.result.graph)},
      {"labels", trace.result.labels},
      {"cost",
       {{"instruction_bits", trace.cost.instruction_bits},
        {"memory_bits", trace.cost.memory_bits},
        {"random_bits", trace.cost.random_bits}}},
  };
  if (!trace.choices.empty()) out["choices"] = choices;
  return out;
}

}  // namespace graphres
