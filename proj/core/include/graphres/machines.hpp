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

// Construction machines.
//
// A sender transmits one instruction bit x_t per time step. The builder adds
// vertex t, optionally records ℓ(t) = x_t in memory, and fires the action the
// rule set assigns to x_t:
//
//   NoEdge       vertex t is isolated
//   DominateAll  vertex t is joined to every earlier vertex
//   JoinLabel c  vertex t is joined to earlier vertices labelled c
//
// How much of the label memory the builder can read depends on the model:
// none, all of it, only the previous vertex (fading memory, window 2), or
// all of it plus the right to add edges among earlier vertices (modifiable).

#ifndef GRAPHRES_MACHINES_HPP_
#define GRAPHRES_MACHINES_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphres/graph.hpp"
#include "graphres/instruction.hpp"
#include "graphres/resource_cost.hpp"

namespace graphres {

enum class Action : std::uint8_t {
  kNoEdge,
  kDominateAll,
  kJoinLabel0,
  kJoinLabel1,
};

// '-', 'E', '0', '1'.
char action_symbol(Action a);
bool is_label_join(Action a);

// (0 -> on_zero)(1 -> on_one). Mnemonic "0>1,1>-" is (0 -> 1)(1 -> ∅).
struct RuleSet {
  Action on_zero = Action::kNoEdge;
  Action on_one = Action::kNoEdge;

  Action for_bit(int bit) const { return bit == 0 ? on_zero : on_one; }
  bool uses_labels() const { return is_label_join(on_zero) || is_label_join(on_one); }
  std::string mnemonic() const;
  // Throws ParseError unless text is "0>a,1>b" with a, b in {-, E, 0, 1}.
  static RuleSet parse(std::string_view text);
  // The same rule with the roles of 0 and 1 exchanged everywhere; on the
  // complemented string it produces the same graph with complemented labels.
  RuleSet bit_swapped() const;

  friend auto operator<=>(const RuleSet&, const RuleSet&) = default;
};

// All 16 (on_zero, on_one) pairs.
std::vector<RuleSet> all_rules();
// The 10 rules left after identifying bit-swapped pairs, in the order
// (∅,∅) (1,∅) (0,∅) (E,∅) (1,0) (0,0) (E,0) (0,1) (E,1) (E,E).
std::vector<RuleSet> distinct_rules();

class MemoryModel {
 public:
  enum class Kind : std::uint8_t { kNone, kFull, kFading, kModifiable };

  static MemoryModel none() { return MemoryModel(Kind::kNone, 0); }
  static MemoryModel full() { return MemoryModel(Kind::kFull, 0); }
  // Only window == 2 is supported; anything else throws Error.
  static MemoryModel fading(int window = 2);
  static MemoryModel modifiable() { return MemoryModel(Kind::kModifiable, 0); }
  // "none" | "full" | "fading" | "fading:2" | "modifiable".
  static MemoryModel parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int window() const noexcept { return window_; }
  bool reads_labels() const noexcept { return kind_ != Kind::kNone; }
  std::string name() const;

  friend bool operator==(const MemoryModel&, const MemoryModel&) = default;

 private:
  MemoryModel(Kind k, int w) : kind_(k), window_(w) {}
  Kind kind_;
  int window_;
};

// Rules from distinct_rules() that are valid under the model.
std::vector<RuleSet> rules_for(const MemoryModel& model);
// Rules from all_rules() that are valid under the model.
std::vector<RuleSet> all_rules_for(const MemoryModel& model);

struct StepRecord {
  int t = 0;
  int bit = 0;
  Action action = Action::kNoEdge;
  bool modified = false;
  std::vector<Edge> added;
};

struct ConstructionTrace {
  RuleSet rule;
  MemoryModel model = MemoryModel::none();
  InstructionString x;
  std::vector<bool> choices;  // modify flags; empty unless modifiable
  std::vector<StepRecord> steps;
  LabeledGraph result;
  ResourceCost cost;

  // G_t, replayed from the step records.
  Graph graph_after(int t) const;
};

// Throws InvalidActionForModel if the rule joins by label under a model that
// keeps no labels. Under the modifiable model this is the all-standard run.
ConstructionTrace interpret(const RuleSet& rule, const MemoryModel& model,
                            const InstructionString& x);

// Graph-only variant of interpret for enumeration loops.
Graph construct(const RuleSet& rule, const MemoryModel& model,
                const InstructionString& x);

// choices[t-1] == true asks for the label-pair saturating move at step t:
// with bit b firing JoinLabel c, every pair {i,j}, i != j <= t, with
// ℓ(i) = b and ℓ(j) = c becomes an edge. Throws ModifyUnsupported if the
// fired action is not a label join, Error if choices.size() != x.size().
ConstructionTrace interpret_modifiable(const RuleSet& rule,
                                       const InstructionString& x,
                                       const std::vector<bool>& choices);

// Steps t >= 2 at which G_t minus vertex t is not isomorphic to G_{t-1}.
std::vector<int> modifying_steps(const ConstructionTrace& trace);
bool is_memory_modifiable_output(const ConstructionTrace& trace);

nlohmann::json trace_to_json(const ConstructionTrace& trace);

}  // namespace graphres

#endif  // GRAPHRES_MACHINES_HPP_
