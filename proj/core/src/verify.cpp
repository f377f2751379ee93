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


#include "graphres/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "graphres/errors.hpp"
#include "graphres/families.hpp"
#include "graphres/serialize.hpp"
#include "graphres/structure.hpp"

namespace graphres {
namespace {

constexpr int kMaxPropositionOrder = 8;
constexpr int kMaxModifiableOrder = 7;
constexpr int kMaxSearchOrder = 12;

void for_each_string(int length, const std::function<void(const InstructionString&)>& f) {
  const std::uint64_t total = std::uint64_t{1} << length;
  for (std::uint64_t v = 0; v < total; ++v) f(InstructionString::from_index(v, length));
}

std::vector<std::string> rule_names(const std::vector<RuleSet>& rules) {
  std::vector<std::string> out;
  for (const RuleSet& r : rules) out.push_back(r.mnemonic());
  return out;
}

std::string choices_string(const std::vector<bool>& choices) {
  std::string s;
  for (bool c : choices) s.push_back(c ? '1' : '0');
  return s;
}

// Machine output against the closed form for P2, P3 and P5.
void check_tables(const MemoryModel& model, int max_n, VerificationReport& report) {
  const std::vector<RuleSet> rules = all_rules_for(model);
  report.models = {model.name()};
  report.rules = rule_names(rules);
  for (const RuleSet& rule : rules) {
    for (int len = 0; len <= max_n; ++len) {
      for_each_string(len, [&](const InstructionString& x) {
        ++report.cases;
        const Graph out = construct(rule, model, x);
        const FamilyPrediction want = predicted_family(rule, model, x);
        bool ok = want.up_to_isomorphism
                      ? is_isomorphic(out, want.graph.graph)
                      : (LabeledGraph{out, x.bits()} == want.graph);
        if (ok && want.threshold) {
          ok = is_threshold(out) && is_threshold_by_forbidden_subgraphs(out);
        }
        if (!ok) {
          report.counterexamples.push_back(
              {rule, model, x, {}, 0,
               want.name + (want.threshold ? " (threshold)" : "") + ": " +
                   to_matrix_string(want.graph.graph),
               to_matrix_string(out)});
        }
      });
    }
  }
}

bool in_modifiable_family(const Graph& g) {
  const int n = g.order();
  if (is_isomorphic(g, complete_graph(n))) return true;
  for (int a = 0; a <= n; ++a) {
    if (is_isomorphic(g, complete_split(a, n - a))) return true;
    if (a >= n - a && is_isomorphic(g, complete_bipartite(a, n - a))) return true;
  }
  return false;
}

void check_modifiable(int max_n, VerificationReport& report) {
  const MemoryModel model = MemoryModel::modifiable();
  const std::vector<RuleSet> rules = all_rules_for(model);
  report.models = {model.name()};
  report.rules = rule_names(rules);
  std::uint64_t flagged = 0;
  std::uint64_t final_outside = 0;
  for (const RuleSet& rule : rules) {
    for (int len = 1; len <= max_n; ++len) {
      for_each_string(len, [&](const InstructionString& x) {
        for_each_choice_sequence(rule, x, [&](const std::vector<bool>& choices) {
          ++report.cases;
          const ConstructionTrace trace = interpret_modifiable(rule, x, choices);
          const std::vector<int> steps = modifying_steps(trace);
          if (steps.empty()) return;
          ++flagged;
          // A memory-modifiable graph is M_t at a step t that rewrote earlier
          // edges; each such M_t must be a complete split, complete bipartite
          // or complete graph.
          for (int t : steps) {
            const Graph m = trace.graph_after(t);
            if (!in_modifiable_family(m)) {
              report.counterexamples.push_back(
                  {rule, model, x, choices, t, "K_l + E_m, K_{l,m} or K_{l+m}",
                   to_matrix_string(m)});
            }
          }
          if (!in_modifiable_family(trace.result.graph)) ++final_outside;
        });
      });
    }
  }
  report.notes.push_back("flagged traces: " + std::to_string(flagged));
  report.notes.push_back(
      "flagged traces whose final graph (after later standard steps) lies outside "
      "the three families: " +
      std::to_string(final_outside));
}

void check_path_cycle_free(int max_n, VerificationReport& report) {
  const MemoryModel model = MemoryModel::full();
  const std::vector<RuleSet> rules = all_rules_for(model);
  report.models = {model.name()};
  report.rules = rule_names(rules);
  struct Pattern {
    const char* name;
    Graph graph;
    bool forbidden;
  };
  const std::vector<Pattern> patterns = {
      {"P4", path_graph(4), false}, {"C4", cycle_graph(4), false},
      {"P5", path_graph(5), true},  {"C5", cycle_graph(5), true},
      {"P6", path_graph(6), true},  {"C6", cycle_graph(6), true},
  };
  std::vector<bool> seen(patterns.size(), false);
  for (const RuleSet& rule : rules) {
    // Distinct labelled outputs only; many strings repeat a graph.
    std::unordered_set<std::string> done;
    for (int len = 0; len <= max_n; ++len) {
      for_each_string(len, [&](const InstructionString& x) {
        ++report.cases;
        const Graph out = construct(rule, model, x);
        std::string key = std::to_string(len) + ":" + to_matrix_string(out);
        if (!done.insert(key).second) return;
        for (std::size_t i = 0; i < patterns.size(); ++i) {
          const Pattern& p = patterns[i];
          if (p.graph.order() > out.order()) continue;
          if (!p.forbidden && seen[i]) continue;
          if (!contains_induced(out, p.graph)) continue;
          if (p.forbidden) {
            report.counterexamples.push_back(
                {rule, model, x, {}, 0, std::string("no induced ") + p.name,
                 to_matrix_string(out)});
          } else {
            seen[i] = true;
            report.witnesses.push_back({p.name, rule, x});
          }
        }
      });
    }
  }
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (!patterns[i].forbidden && !seen[i]) {
      report.counterexamples.push_back(
          {RuleSet{}, model, InstructionString{}, {}, -1,
           std::string("some output with induced ") + patterns[i].name, "none found"});
    }
  }
}

// Labelled outputs on n vertices, deduplicated before canonicalization.
std::set<CanonicalForm> canonical_outputs(const RuleSet& rule, const MemoryModel& model,
                                          int n) {
  std::unordered_set<std::string> labelled;
  std::set<CanonicalForm> out;
  auto add = [&](const Graph& g) {
    if (labelled.insert(to_matrix_string(g)).second) out.insert(canonical_form(g));
  };
  for_each_string(n, [&](const InstructionString& x) {
    if (model.kind() == MemoryModel::Kind::kModifiable) {
      for_each_choice_sequence(rule, x, [&](const std::vector<bool>& choices) {
        add(interpret_modifiable(rule, x, choices).result.graph);
      });
    } else {
      add(construct(rule, model, x));
    }
  });
  return out;
}

}  // namespace

std::string to_string(PropositionId id) {
  switch (id) {
    case PropositionId::kThresholdNoMemory:
      return "P2";
    case PropositionId::kFullMemoryTable:
      return "P3";
    case PropositionId::kFadingMemoryTable:
      return "P5";
    case PropositionId::kModifiable:
      return "C_modifiable";
    case PropositionId::kPathCycleFree:
      return "C_pnfree";
  }
  return "?";
}

PropositionId parse_proposition(std::string_view text) {
  for (auto id : {PropositionId::kThresholdNoMemory, PropositionId::kFullMemoryTable,
                  PropositionId::kFadingMemoryTable, PropositionId::kModifiable,
                  PropositionId::kPathCycleFree}) {
    if (text == to_string(id)) return id;
  }
  throw ParseError("unknown proposition '" + std::string(text) +
                   "' (P2, P3, P5, C_modifiable, C_pnfree)");
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json ces = nlohmann::json::array();
  for (const Counterexample& c : counterexamples) {
    nlohmann::json j = {{"rule", c.rule.mnemonic()},
                        {"model", c.model.name()},
                        {"x", c.x.str()},
                        {"step", c.step},
                        {"expected", c.expected},
                        {"got", c.got}};
    if (!c.choices.empty()) j["choices"] = choices_string(c.choices);
    ces.push_back(std::move(j));
  }
  nlohmann::json wit = nlohmann::json::array();
  for (const Witness& w : witnesses) {
    wit.push_back({{"pattern", w.what}, {"rule", w.rule.mnemonic()}, {"x", w.x.str()}});
  }
  nlohmann::json out = {{"proposition", to_string(id)},
                        {"max_n", max_n},
                        {"models", models},
                        {"rules", rules},
                        {"cases", cases},
                        {"pass", pass()},
                        {"counterexamples", std::move(ces)},
                        {"witnesses", std::move(wit)},
                        {"notes", notes}};
  if (include_timing) out["wall_seconds"] = wall_seconds;
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << to_string(id) << " max_n=" << max_n << " cases=" << cases << ' '
      << (pass() ? "PASS" : "FAIL") << " counterexamples=" << counterexamples.size()
      << '\n';
  for (const Witness& w : witnesses) {
    out << "  witness " << w.what << ": rule " << w.rule.mnemonic() << " x=" << w.x.str()
        << '\n';
  }
  for (const std::string& n : notes) out << "  note: " << n << '\n';
  const std::size_t shown = std::min<std::size_t>(counterexamples.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const Counterexample& c = counterexamples[i];
    out << "  counterexample: rule " << c.rule.mnemonic() << " model " << c.model.name()
        << " x=" << c.x.str();
    if (!c.choices.empty()) out << " choices=" << choices_string(c.choices);
    if (c.step > 0) out << " step=" << c.step;
    out << " expected " << c.expected << " got " << c.got << '\n';
  }
  return out.str();
}

std::set<CanonicalForm> enumerate_outputs(const RuleSet& rule, const MemoryModel& model,
                                          int n) {
  if (n < 0) throw Error("length must be non-negative");
  const int bound = model.kind() == MemoryModel::Kind::kModifiable ? kMaxModifiableOrder
                                                                   : kMaxExactOrder;
  if (n > bound) {
    throw OrderTooLarge("output enumeration under model '" + model.name() +
                        "' supports n <= " + std::to_string(bound));
  }
  if (!model.reads_labels() && rule.uses_labels()) {
    throw InvalidActionForModel("rule " + rule.mnemonic() + " needs memory");
  }
  return canonical_outputs(rule, model, n);
}

std::set<CanonicalForm> reachable_classes(const MemoryModel& model, int n) {
  std::set<CanonicalForm> out;
  for (const RuleSet& rule : all_rules_for(model)) {
    const std::set<CanonicalForm> part = enumerate_outputs(rule, model, n);
    out.insert(part.begin(), part.end());
  }
  return out;
}

std::size_t expressiveness_count(const MemoryModel& model, int n) {
  return reachable_classes(model, n).size();
}

VerificationReport verify_proposition(PropositionId id, int max_n) {
  const int bound =
      id == PropositionId::kModifiable ? kMaxModifiableOrder : kMaxPropositionOrder;
  if (max_n < 0) throw Error("max_n must be non-negative");
  if (max_n > bound) {
    throw OrderTooLarge(to_string(id) + " is checked for max_n <= " + std::to_string(bound));
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = id;
  report.max_n = max_n;
  switch (id) {
    case PropositionId::kThresholdNoMemory:
      check_tables(MemoryModel::none(), max_n, report);
      break;
    case PropositionId::kFullMemoryTable:
      check_tables(MemoryModel::full(), max_n, report);
      break;
    case PropositionId::kFadingMemoryTable:
      check_tables(MemoryModel::fading(2), max_n, report);
      break;
    case PropositionId::kModifiable:
      check_modifiable(max_n, report);
      break;
    case PropositionId::kPathCycleFree:
      check_path_cycle_free(max_n, report);
      break;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool replays(const Counterexample& c) {
  if (c.step < 0) return false;
  const ConstructionTrace trace =
      c.model.kind() == MemoryModel::Kind::kModifiable
          ? interpret_modifiable(c.rule, c.x, c.choices)
          : interpret(c.rule, c.model, c.x);
  const Graph g = c.step > 0 ? trace.graph_after(c.step) : trace.result.graph;
  return to_matrix_string(g) == c.got;
}

std::vector<Construction> find_constructions(const Graph& g, const MemoryModel& model) {
  const int n = g.order();
  const bool modifiable = model.kind() == MemoryModel::Kind::kModifiable;
  const int bound = modifiable ? kMaxModifiableOrder : kMaxSearchOrder;
  if (n > bound) {
    throw OrderTooLarge("construction search under model '" + model.name() +
                        "' supports n <= " + std::to_string(bound));
  }
  std::vector<Construction> out;
  for (const RuleSet& rule : all_rules_for(model)) {
    for_each_string(n, [&](const InstructionString& x) {
      if (modifiable) {
        for_each_choice_sequence(rule, x, [&](const std::vector<bool>& choices) {
          if (is_isomorphic(interpret_modifiable(rule, x, choices).result.graph, g)) {
            out.push_back({rule, x, choices});
          }
        });
      } else if (is_isomorphic(construct(rule, model, x), g)) {
        out.push_back({rule, x, {}});
      }
    });
  }
  return out;
}

}  // namespace graphres
