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


#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphres/errors.hpp"
#include "graphres/isomorphism.hpp"
#include "graphres/likelihood.hpp"
#include "graphres/machines.hpp"
#include "graphres/randomness.hpp"
#include "graphres/serialize.hpp"
#include "graphres/trees.hpp"
#include "graphres/verify.hpp"

namespace graphres::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kGraphHelp =
    "Graph: JSON {\"n\":N,\"edges\":[[i,j],...]} or an expression. Atoms: "
    "K<n> complete, E<n> empty, P<n> path, C<n> cycle, K<a>,<b> complete "
    "bipartite, S<l>,<m> clique K_l joined to E_m. '+' joins, 'u' takes the "
    "disjoint union ('+' binds tighter), parentheses group. Example: (K2uK1)+E2";

constexpr const char* kRuleHelp =
    "Rule \"0>a,1>b\": the action fired for bit 0 and for bit 1. Actions: '-' "
    "no edge, 'E' join every earlier vertex, '0'/'1' join earlier vertices "
    "whose stored bit is 0/1 (needs memory)";

constexpr const char* kModelHelp =
    "Memory model: none | full | fading (window 2, only the previous "
    "vertex's bit is visible) | modifiable (full memory plus edge edits "
    "among earlier vertices at chosen steps)";

ojson graph_json(const Graph& g) { return ojson::parse(to_json_string(g)); }

// Relative --out paths land under $GRAPHRES_OUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("GRAPHRES_OUT_DIR"); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path p = resolve_output(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << text;
}

// The graph in `format`; `meta` fields lead the JSON object and become a
// DOT comment.
std::string render_graph(const Graph& g, const std::string& format, const ojson& meta) {
  if (format == "dot") {
    std::string comment;
    for (const auto& [k, v] : meta.items()) {
      if (!comment.empty()) comment += ' ';
      comment += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return to_dot(g, comment);
  }
  if (format == "matrix") return to_matrix_string(g) + "\n";
  ojson j = meta.is_null() ? ojson::object() : meta;
  const ojson body = graph_json(g);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j.dump() + "\n";
}

std::string choices_text(const std::vector<bool>& c) {
  std::string s;
  for (bool b : c) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<bool> parse_choices(const std::string& text, int length) {
  if (text.empty()) return std::vector<bool>(static_cast<std::size_t>(length), false);
  std::vector<bool> out;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("--choices takes 0/1 characters (1 = modify)");
    out.push_back(c == '1');
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string rule, model, x, choices, format = "json", out;
  bool verbose = false;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  const RuleSet rule = RuleSet::parse(a.rule);
  const MemoryModel model = MemoryModel::parse(a.model);
  const InstructionString x = InstructionString::parse(a.x);
  if (!a.choices.empty() && model.kind() != MemoryModel::Kind::kModifiable) {
    throw Error("--choices applies only to --model modifiable");
  }
  const ConstructionTrace trace =
      model.kind() == MemoryModel::Kind::kModifiable
          ? interpret_modifiable(rule, x, parse_choices(a.choices, x.size()))
          : interpret(rule, model, x);
  std::string text;
  if (a.verbose && a.format == "json") {
    text = trace_to_json(trace).dump() + "\n";
  } else {
    text = render_graph(trace.result.graph, a.format,
                        ojson{{"rule", rule.mnemonic()}, {"model", model.name()}, {"x", x.str()}});
    if (a.verbose) {
      std::ostringstream os;
      const std::string lead = a.format == "dot" ? "// " : "";
      for (const StepRecord& s : trace.steps) {
        os << lead << "t=" << s.t << " bit=" << s.bit << " action=" << action_symbol(s.action)
           << (s.modified ? " modify" : "") << " added=";
        for (std::size_t i = 0; i < s.added.size(); ++i) {
          os << (i ? "," : "") << '{' << s.added[i].u << ',' << s.added[i].v << '}';
        }
        os << '\n';
      }
      os << lead << "cost instruction_bits=" << trace.cost.instruction_bits
         << " memory_bits=" << trace.cost.memory_bits
         << " random_bits=" << trace.cost.random_bits << '\n';
      text += os.str();
    }
  }
  emit(text, a.out, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string proposition, format = "text", out;
  int max_n = -1;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const PropositionId id = parse_proposition(a.proposition);
  const int max_n = a.max_n >= 0 ? a.max_n : (id == PropositionId::kModifiable ? 7 : 8);
  const VerificationReport report = verify_proposition(id, max_n);
  std::string text = a.format == "json" ? report.to_json(a.timing).dump(2) + "\n"
                                        : report.summary();
  if (a.format != "json" && a.timing) {
    text += "  wall_seconds=" + format_double(report.wall_seconds) + "\n";
  }
  emit(text, a.out, out);
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

struct LikelihoodArgs {
  std::string graph, format = "text", out;
  bool exact = false, bounds = false;
  std::optional<std::uint64_t> mc, seed;
  std::optional<int> extremes;
};

int cmd_likelihood(const LikelihoodArgs& a, std::ostream& out, std::ostream& err) {
  const int modes = int{a.exact} + int{a.bounds} + int{a.mc.has_value()} +
                    int{a.extremes.has_value()};
  if (modes != 1) throw Error("choose exactly one of --exact, --bounds, --mc, --extremes");
  if (a.extremes) {
    const ExtremesTable t = likelihood_extremes(*a.extremes);
    std::string text;
    if (a.format == "json") {
      ojson rows = ojson::array();
      for (const LikelihoodRow& r : t.rows) rows.push_back(ojson::parse(likelihood_json(r).dump()));
      ojson j = {{"n", t.n},
                 {"classes", t.rows.size()},
                 {"argmin", t.argmin().certificate.hex()},
                 {"argmax", t.argmax().certificate.hex()},
                 {"minimizers", t.minimizers},
                 {"argmin_complete_bipartite", t.argmin_complete_bipartite},
                 {"bipartite_sides", {t.bipartite_sides.first, t.bipartite_sides.second}},
                 {"rows", std::move(rows)}};
      text = j.dump(2) + "\n";
    } else {
      text = likelihood_csv(t.rows);
    }
    emit(text, a.out, out);
    err << "classes=" << t.rows.size() << " min=" << t.argmin().likelihood.str()
        << " minimizers=" << t.minimizers << " max=" << t.argmax().likelihood.str();
    if (t.argmin_complete_bipartite) {
      err << " argmin=K_{" << t.bipartite_sides.first << ',' << t.bipartite_sides.second << '}';
    } else {
      err << " argmin_complete_bipartite=false argmin_graph="
          << to_json_string(t.argmin().certificate.to_graph());
    }
    err << '\n';
    return kExitOk;
  }
  if (a.graph.empty()) throw Error("--graph is required");
  const Graph g = parse_graph_expression(a.graph);
  std::string text;
  if (a.mc) {
    if (!a.seed) throw Error("--mc needs an explicit --seed");
    const MonteCarloEstimate m = likelihood_mc(g, *a.mc, *a.seed);
    if (a.format == "json") {
      text = ojson{{"seed", m.seed},
                   {"samples", m.samples},
                   {"hits", m.hits},
                   {"estimate", m.estimate},
                   {"stderr", m.standard_error}}
                 .dump() +
             "\n";
    } else {
      text = "estimate=" + format_double(m.estimate) +
             " stderr=" + format_double(m.standard_error) +
             " hits=" + std::to_string(m.hits) + " samples=" + std::to_string(m.samples) +
             " seed=" + std::to_string(m.seed) + "\n";
    }
  } else if (a.bounds) {
    const LikelihoodBounds b = likelihood_bounds(g);
    if (a.format == "json") {
      text = ojson{{"aut", automorphism_count(g)},
                   {"lower", rational_string(b.lower)},
                   {"upper", rational_string(b.upper)}}
                 .dump() +
             "\n";
    } else {
      text = "aut=" + std::to_string(automorphism_count(g)) +
             " lower=" + rational_string(b.lower) + " upper=" + rational_string(b.upper) + "\n";
    }
  } else {
    if (a.format == "csv") {
      text = likelihood_csv({likelihood_row(g)});
    } else if (a.format == "json") {
      text = likelihood_json(likelihood_row(g)).dump() + "\n";
    } else {
      text = likelihood_exact(g).str() + "\n";
    }
  }
  emit(text, a.out, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct RandomArgs {
  int n = 0;
  double p = 0.5;
  std::string dist = "uniform", format = "json", out;
  std::uint64_t seed = 0;
};

int cmd_random_gnp(const RandomArgs& a, std::ostream& out) {
  const Graph g = sample_gnp(a.n, a.p, a.seed);
  emit(render_graph(g, a.format, ojson{{"seed", a.seed}, {"p", a.p}}), a.out, out);
  return kExitOk;
}

int cmd_random_va(const RandomArgs& a, std::ostream& out) {
  const DegreeDistributionSpec spec = DegreeDistributionSpec::parse(a.dist);
  const Graph g = sample_vertex_addition(a.n, spec, a.seed);
  emit(render_graph(g, a.format, ojson{{"seed", a.seed}, {"dist", spec.name()}}), a.out, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TreeArgs {
  int n = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  std::string format = "json", graph, encode, decode, parents, bits, out;
  bool rooted = false;
};

int cmd_tree_sample(const TreeArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  const ParentVector pv = sample_ua_parents(a.n, rng);
  const RootedTree t = build_tree_from_instructions(pv);
  std::string text;
  if (a.format == "json") {
    ojson j = {{"seed", a.seed},
               {"n", a.n},
               {"parents", pv.values()},
               {"recursive", is_recursive_tree(t)},
               {"edges", graph_json(t.graph())["edges"]}};
    text = j.dump() + "\n";
  } else {
    text = render_graph(t.graph(), a.format, ojson{{"seed", a.seed}});
  }
  emit(text, a.out, out);
  return kExitOk;
}

int cmd_tree_cost(const TreeArgs& a, std::ostream& out) {
  const ResourceCost c = tree_cost(a.n);
  emit("instruction_bits=" + std::to_string(c.instruction_bits) +
           " memory_bits=" + std::to_string(c.memory_bits) + "\n",
       a.out, out);
  return kExitOk;
}

int cmd_tree_likelihood(const TreeArgs& a, std::ostream& out) {
  const Graph g = parse_graph_expression(a.graph);
  std::string text;
  if (a.samples) {
    const PositivityCheck c = tree_positivity_check(
        g, *a.samples, a.seed, a.rooted ? TreeMatch::kRootedAtVertex1 : TreeMatch::kUnrooted);
    text = "hits=" + std::to_string(c.hits) + " samples=" + std::to_string(c.samples) +
           " estimate=" + format_double(c.estimate) + " seed=" + std::to_string(c.seed) + "\n";
  } else {
    text = (a.rooted ? ua_likelihood_rooted(g) : ua_likelihood_exact(g)).str() + "\n";
  }
  emit(text, a.out, out);
  return kExitOk;
}

int cmd_tree_prufer(const TreeArgs& a, std::ostream& out) {
  if (a.encode.empty() == a.decode.empty()) throw Error("give exactly one of --encode, --decode");
  std::string text;
  if (!a.encode.empty()) {
    const std::vector<int> seq = prufer_encode(parse_graph_expression(a.encode));
    for (std::size_t i = 0; i < seq.size(); ++i) text += (i ? "," : "") + std::to_string(seq[i]);
    text += "\n";
  } else {
    std::vector<int> seq;
    std::stringstream ss(a.decode);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
          item.size() > 9) {
        throw ParseError("Prüfer sequence is a comma-separated list of positive integers");
      }
      seq.push_back(std::stoi(item));
    }
    text = render_graph(prufer_decode(seq), a.format, nullptr);
  }
  emit(text, a.out, out);
  return kExitOk;
}

int cmd_tree_encode(const TreeArgs& a, std::ostream& out) {
  const nlohmann::json j = nlohmann::json::parse(a.parents, nullptr, false);
  if (j.is_discarded()) throw ParseError("--parents must be a JSON array");
  emit(encode_tree_instructions(ParentVector::from_json(j)) + "\n", a.out, out);
  return kExitOk;
}

int cmd_tree_decode(const TreeArgs& a, std::ostream& out) {
  const ParentVector pv = decode_tree_instructions(a.bits, a.n);
  emit(pv.to_json().dump() + "\n", a.out, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct FindArgs {
  std::string graph, model, format = "text", out;
};

int cmd_find(const FindArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph_expression(a.graph);
  const MemoryModel model = MemoryModel::parse(a.model);
  const std::vector<Construction> found = find_constructions(g, model);
  std::string text;
  if (a.format == "json") {
    ojson arr = ojson::array();
    for (const Construction& c : found) {
      ojson j = {{"rule", c.rule.mnemonic()}, {"x", c.x.str()}};
      if (!c.choices.empty()) j["choices"] = choices_text(c.choices);
      arr.push_back(std::move(j));
    }
    text = arr.dump() + "\n";
  } else {
    for (const Construction& c : found) {
      text += c.rule.mnemonic() + " " + c.x.str();
      if (!c.choices.empty()) text += " " + choices_text(c.choices);
      text += "\n";
    }
  }
  emit(text, a.out, out);
  err << found.size() << " construction(s)\n";
  return kExitOk;
}

struct CountArgs {
  std::string model;
  int n = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "graphres: build graphs one vertex at a time from one instruction bit per "
      "vertex under bounded memory, check the closed forms of what each memory "
      "model can build, and measure the randomness a random construction needs."};
  app.name("graphres");
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand(
      "build",
      "Run the construction machine: vertex t arrives, reads bit x_t and fires "
      "the rule's action for that bit. Without memory every output is empty, "
      "complete or threshold; with full memory outputs follow ten closed forms; "
      "with fading memory label joins reach only the previous vertex.");
  build_cmd->add_option("--rule", build.rule, kRuleHelp)->required();
  build_cmd->add_option("--model", build.model, kModelHelp)->required();
  build_cmd->add_option("--x", build.x, "Instruction bits, e.g. 10010")->required();
  build_cmd->add_option("--choices", build.choices,
                        "Modifiable model only: one 0/1 per step, 1 = saturate all "
                        "pairs labelled (bit, joined label) up to this step");
  build_cmd->add_option("--format", build.format, "dot | json | matrix")
      ->check(CLI::IsMember({"dot", "json", "matrix"}));
  build_cmd->add_flag("-v,--verbose", build.verbose, "Also print the step trace and bit cost");
  build_cmd->add_option("--out", build.out, "Output file (relative to $GRAPHRES_OUT_DIR)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Exhaustively check a construction claim over every rule and instruction "
      "string up to --max-n. P2: no-memory outputs are empty, complete or "
      "threshold graphs. P3: full-memory outputs equal their closed forms. P5: "
      "fading-memory outputs equal their closed forms (paths of the run lengths "
      "plus isolated vertices). C_modifiable: every graph that rewrote earlier "
      "edges is a complete split, complete bipartite or complete graph. "
      "C_pnfree: full-memory outputs contain no induced P5, C5, P6, C6, while P4 "
      "and C4 occur. Exit 1 on any counterexample.");
  verify_cmd->add_option("proposition", verify.proposition, "P2 | P3 | P5 | C_modifiable | C_pnfree")
      ->required();
  verify_cmd->add_option("--max-n", verify.max_n,
                         "Longest instruction string (default 8, 7 for C_modifiable)");
  verify_cmd->add_option("--format", verify.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--timing", verify.timing, "Include wall time (output then varies)");
  verify_cmd->add_option("--out", verify.out, "Output file (relative to $GRAPHRES_OUT_DIR)");

  LikelihoodArgs lik;
  std::uint64_t lik_mc = 0, lik_seed = 0;
  int lik_extremes = 0;
  auto* lik_cmd = app.add_subcommand(
      "likelihood",
      "Probability that the uniform vertex-addition process (vertex t picks a "
      "degree uniformly from 0..t-1, then a uniform neighbour set of that size) "
      "produces a graph isomorphic to --graph. --exact gives the rational value "
      "(n <= 10), --mc estimates it by sampling, --bounds gives the automorphism "
      "bounds 1/(|Aut| prod C(i-1, floor((i-1)/2))) <= L <= 1/|Aut|, --extremes N "
      "tabulates every class on N vertices (N <= 8) and reports whether a complete "
      "bipartite graph attains the minimum.");
  lik_cmd->add_option("--graph", lik.graph, kGraphHelp);
  lik_cmd->add_flag("--exact", lik.exact, "Exact rational likelihood");
  lik_cmd->add_flag("--bounds", lik.bounds, "Automorphism-group bounds");
  auto* mc_opt = lik_cmd->add_option("--mc", lik_mc, "Monte-Carlo sample count");
  auto* seed_opt = lik_cmd->add_option("--seed", lik_seed, "Seed for --mc");
  auto* ext_opt = lik_cmd->add_option("--extremes", lik_extremes, "Tabulate all classes on N vertices");
  lik_cmd->add_option("--format", lik.format, "text | csv | json (extremes: csv | json)")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  lik_cmd->add_option("--out", lik.out, "Output file (relative to $GRAPHRES_OUT_DIR)");

  RandomArgs rnd;
  auto* random_cmd = app.add_subcommand("random", "Seeded random graph samplers");
  random_cmd->require_subcommand(1);
  auto* gnp_cmd = random_cmd->add_subcommand(
      "gnp", "G(n, p): every vertex pair is an edge independently with probability p");
  gnp_cmd->add_option("--n", rnd.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gnp_cmd->add_option("--p", rnd.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gnp_cmd->add_option("--seed", rnd.seed, "Seed (required)")->required();
  gnp_cmd->add_option("--format", rnd.format, "dot | json | matrix")
      ->check(CLI::IsMember({"dot", "json", "matrix"}));
  gnp_cmd->add_option("--out", rnd.out, "Output file (relative to $GRAPHRES_OUT_DIR)");
  auto* va_cmd = random_cmd->add_subcommand(
      "va",
      "Vertex addition: vertex t draws a degree k and joins a uniform k-subset of "
      "the earlier vertices. 'uniform' draws k from 0..t-1; 'binomial:p' draws "
      "k ~ Bi(t-1, p), which reproduces G(n, p)");
  va_cmd->add_option("--n", rnd.n, "Vertex count (>= 1)")->required();
  va_cmd->add_option("--dist", rnd.dist, "uniform | binomial:<p>");
  va_cmd->add_option("--seed", rnd.seed, "Seed (required)")->required();
  va_cmd->add_option("--format", rnd.format, "dot | json | matrix")
      ->check(CLI::IsMember({"dot", "json", "matrix"}));
  va_cmd->add_option("--out", rnd.out, "Output file (relative to $GRAPHRES_OUT_DIR)");

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand(
      "tree", "Trees grown by attaching each new vertex to one earlier vertex");
  tree_cmd->require_subcommand(1);
  auto* tsample = tree_cmd->add_subcommand(
      "sample",
      "Uniform attachment: vertex t attaches to a uniform vertex of 1..t-1. The "
      "result is always a recursive tree (labels increase away from vertex 1)");
  tsample->add_option("--n", tree.n, "Vertex count (>= 1)")->required();
  tsample->add_option("--seed", tree.seed, "Seed (required)")->required();
  tsample->add_option("--format", tree.format, "json (parent vector) | dot | matrix")
      ->check(CLI::IsMember({"dot", "json", "matrix"}));
  tsample->add_option("--out", tree.out, "Output file (relative to $GRAPHRES_OUT_DIR)");
  auto* tcost = tree_cmd->add_subcommand(
      "cost",
      "Bits to build any recursive tree deterministically: vertex t+1 receives its "
      "parent in b(t) = floor(log2 t) + 1 bits and stores its index in as many, "
      "sum_{t=1..n-1} b(t) = O(n log n) of each");
  tcost->add_option("--n", tree.n, "Vertex count (>= 1)")->required();
  auto* tlik = tree_cmd->add_subcommand(
      "likelihood",
      "Probability that uniform attachment yields a tree isomorphic to --graph "
      "(exact, always positive); with --samples, count sampled hits instead");
  tlik->add_option("--graph", tree.graph, kGraphHelp)->required();
  auto* tsamples = tlik->add_option("--samples", tree.samples, "Sample count");
  tlik->add_option("--seed", tree.seed, "Seed (required with --samples)")->needs(tsamples);
  tsamples->needs("--seed");
  tlik->add_flag("--rooted", tree.rooted,
                 "Match shapes rooted at vertex 1 (e.g. P3 rooted at an end vs. at "
                 "its centre) instead of unrooted isomorphism");
  auto* tprufer = tree_cmd->add_subcommand(
      "prufer",
      "Prüfer code: repeatedly delete the smallest leaf and record its neighbour");
  tprufer->add_option("--encode", tree.encode, "Tree to encode (graph expression or JSON)");
  tprufer->add_option("--decode", tree.decode, "Comma-separated sequence, e.g. 2,3");
  tprufer->add_option("--format", tree.format, "dot | json | matrix (decode)")
      ->check(CLI::IsMember({"dot", "json", "matrix"}));
  auto* tencode = tree_cmd->add_subcommand(
      "encode", "Instruction bits for a parent vector: b(t-1) bits per vertex t, big-endian");
  tencode->add_option("--parents", tree.parents, "JSON parent vector, e.g. [0,0,1,1,2]")
      ->required();
  auto* tdecode = tree_cmd->add_subcommand("decode", "Parent vector from instruction bits");
  tdecode->add_option("--bits", tree.bits, "Instruction bits")->required();
  tdecode->add_option("--n", tree.n, "Vertex count")->required();

  RandomArgs cost;
  auto* cost_cmd = app.add_subcommand("cost", "Bit counts of the constructions");
  cost_cmd->require_subcommand(1);
  auto* cost_a = cost_cmd->add_subcommand(
      "a",
      "a(n): random bits for the vertex-addition process, b(t-1) bits for each "
      "degree plus enough bits to index a subset of the largest size class");
  cost_a->add_option("--n", cost.n, "Vertex count (>= 1)")->required();
  auto* cost_dyads = cost_cmd->add_subcommand(
      "dyads", "C(n,2): one coin per vertex pair for G(n, 1/2)");
  cost_dyads->add_option("--n", cost.n, "Vertex count")->required();
  auto* cost_tree = cost_cmd->add_subcommand(
      "tree", "Instruction bits to build a recursive tree on n vertices");
  cost_tree->add_option("--n", cost.n, "Vertex count (>= 1)")->required();

  FindArgs find;
  auto* find_cmd = app.add_subcommand(
      "find",
      "Every (rule, instruction string) whose output is isomorphic to --graph "
      "under --model (n <= 12, n <= 7 for modifiable); no output means the model "
      "cannot build the graph");
  find_cmd->add_option("--graph", find.graph, kGraphHelp)->required();
  find_cmd->add_option("--model", find.model, kModelHelp)->required();
  find_cmd->add_option("--format", find.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  find_cmd->add_option("--out", find.out, "Output file (relative to $GRAPHRES_OUT_DIR)");

  CountArgs count;
  auto* count_cmd = app.add_subcommand(
      "expressiveness",
      "Number of isomorphism classes on n vertices reachable under the model, over "
      "all rules and strings (n <= 10, n <= 7 for modifiable)");
  count_cmd->add_option("--model", count.model, kModelHelp)->required();
  count_cmd->add_option("--n", count.n, "Vertex count")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("graphres");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd) return cmd_build(build, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*lik_cmd) {
      if (*mc_opt) lik.mc = lik_mc;
      if (*seed_opt) lik.seed = lik_seed;
      if (*ext_opt) lik.extremes = lik_extremes;
      return cmd_likelihood(lik, out, err);
    }
    if (*gnp_cmd) return cmd_random_gnp(rnd, out);
    if (*va_cmd) return cmd_random_va(rnd, out);
    if (*tsample) return cmd_tree_sample(tree, out);
    if (*tcost) return cmd_tree_cost(tree, out);
    if (*tlik) return cmd_tree_likelihood(tree, out);
    if (*tprufer) return cmd_tree_prufer(tree, out);
    if (*tencode) return cmd_tree_encode(tree, out);
    if (*tdecode) return cmd_tree_decode(tree, out);
    if (*cost_a) {
      out << randomness_cost_a(cost.n) << '\n';
      return kExitOk;
    }
    if (*cost_dyads) {
      out << dyad_bits(cost.n) << '\n';
      return kExitOk;
    }
    if (*cost_tree) {
      out << tree_cost(cost.n).instruction_bits << '\n';
      return kExitOk;
    }
    if (*find_cmd) return cmd_find(find, out, err);
    if (*count_cmd) {
      out << expressiveness_count(MemoryModel::parse(count.model), count.n) << '\n';
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace graphres::cli
