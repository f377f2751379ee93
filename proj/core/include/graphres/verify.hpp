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


// Exhaustive checks of the construction claims at small n, and the inverse
// search from a target graph to the (rule, instruction string) pairs that
// build it.

#ifndef GRAPHRES_VERIFY_HPP_
#define GRAPHRES_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphres/graph.hpp"
#include "graphres/instruction.hpp"
#include "graphres/isomorphism.hpp"
#include "graphres/machines.hpp"

namespace graphres {

enum class PropositionId : std::uint8_t {
  kThresholdNoMemory,  // "P2": no-memory outputs are E_t, K_t or threshold
  kFullMemoryTable,    // "P3": full-memory outputs match the closed forms
  kFadingMemoryTable,  // "P5": fading-memory outputs match the closed forms
  kModifiable,         // "C_modifiable"
  kPathCycleFree,      // "C_pnfree"
};

std::string to_string(PropositionId id);
// Accepts P2, P3, P5, C_modifiable, C_pnfree.
PropositionId parse_proposition(std::string_view text);

struct Counterexample {
  RuleSet rule;
  MemoryModel model = MemoryModel::none();
  InstructionString x;
  std::vector<bool> choices;  // modifiable model only
  int step = 0;               // step whose graph failed; 0 means the final graph
  std::string expected;       // description of the claimed family
  std::string got;            // adjacency upper triangle of the offending graph
};

struct Witness {
  std::string what;
  RuleSet rule;
  InstructionString x;
};

struct VerificationReport {
  PropositionId id = PropositionId::kThresholdNoMemory;
  int max_n = 0;
  std::vector<std::string> models;
  std::vector<std::string> rules;
  std::uint64_t cases = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool pass() const noexcept { return counterexamples.empty(); }
  nlohmann::json to_json(bool include_timing = true) const;
  // A few plain-text lines for logs.
  std::string summary() const;
};

// Canonical forms of every output on n vertices: all x in {0,1}^n, and under
// the modifiable model every choice sequence that modifies only at
// label-join steps. n <= kMaxExactOrder (n <= 7 for the modifiable model).
std::set<CanonicalForm> enumerate_outputs(const RuleSet& rule,
                                          const MemoryModel& model, int n);

// Union of enumerate_outputs over every rule valid under the model.
std::set<CanonicalForm> reachable_classes(const MemoryModel& model, int n);
std::size_t expressiveness_count(const MemoryModel& model, int n);

// max_n <= 8, and <= 7 for kModifiable; throws OrderTooLarge otherwise.
VerificationReport verify_proposition(PropositionId id, int max_n);

// Re-runs the machine and compares with c.got. Counterexamples about a
// missing witness have no construction and never replay.
bool replays(const Counterexample& c);

struct Construction {
  RuleSet rule;
  InstructionString x;
  std::vector<bool> choices;  // modifiable model only
};
// Every (rule, x) over all valid rules, and choice sequences under the
// modifiable model, whose output is isomorphic to g. |V(g)| <= 12 (<= 7 for
// the modifiable model).
std::vector<Construction> find_constructions(const Graph& g, const MemoryModel& model);

// Calls f(choices) for every choice vector of length |x| that modifies only
// at steps whose fired action is a label join.
template <typename F>
void for_each_choice_sequence(const RuleSet& rule, const InstructionString& x, F&& f) {
  std::vector<int> joins;
  for (int t = 1; t <= x.size(); ++t) {
    if (is_label_join(rule.for_bit(x.bit(t)))) joins.push_back(t);
  }
  std::vector<bool> choices(static_cast<std::size_t>(x.size()), false);
  const std::uint64_t total = std::uint64_t{1} << joins.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 0; k < joins.size(); ++k) {
      choices[joins[k] - 1] = ((mask >> k) & 1U) != 0;
    }
    f(static_cast<const std::vector<bool>&>(choices));
  }
}

}  // namespace graphres

#endif  // GRAPHRES_VERIFY_HPP_
