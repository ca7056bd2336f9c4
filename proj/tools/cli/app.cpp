#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "earcolor/acyclic_coloring.hpp"
#include "earcolor/clique_cycle.hpp"
#include "earcolor/coloring.hpp"
#include "earcolor/corollaries.hpp"
#include "earcolor/cycles.hpp"
#include "earcolor/error.hpp"
#include "earcolor/proper_coloring.hpp"
#include "graph_file.hpp"

namespace earcolor::cli {

using Json = nlohmann::ordered_json;

namespace {

struct GlobalFlags {
  bool plain = false;
  bool no_timing = false;
  bool audit = false;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::size_t max_ear_paths = kDefaultMaxEarPaths;
  int max_oracle_vertices = kDefaultOracleVertices;
};

struct CommandResult {
  Json report = Json::object();
  int exit_code = kExitOk;
};

struct Input {
  GraphFile file;
  std::string digest;
};

struct Context {
  const GlobalFlags& flags;
  const Input& input;

  CensusOptions census(int min_length = 2) const {
    CensusOptions c;
    c.max_cycles = flags.max_cycles;
    c.min_length = min_length;
    return c;
  }
  EarSearchLimits ear_limits() const { return EarSearchLimits{flags.max_ear_paths}; }
  CorollaryOptions corollary() const {
    CorollaryOptions c;
    c.census = census();
    c.ear_limits = ear_limits();
    c.oracle_vertices = flags.max_oracle_vertices;
    return c;
  }
  bool undirected() const { return input.file.mode == GraphMode::undirected; }
  // Undirected graphs are analysed through their bidirection, ignoring 2-cycles.
  int min_cycle_length() const { return undirected() ? 3 : 2; }
};

Input load_input(const std::string& path, std::istream& stdin_stream) {
  Input input;
  if (path == "-") {
    input.file = parse_graph_file(stdin_stream);
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open graph file '" + path + "'");
    input.file = parse_graph_file(file);
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(serialize_graph_file(input.file))));
  input.digest = std::string("fnv1a64:") + hex;
  return input;
}

void require_directed(const Context& ctx, const std::string& command) {
  if (ctx.undirected()) throw InputError(command + " needs a directed graph file");
}

void require_undirected(const Context& ctx, const std::string& command) {
  if (!ctx.undirected()) throw InputError(command + " needs an undirected graph file (mode undirected)");
}

Json cycle_json(const VertexCycle& cycle) { return Json(cycle.vertices); }

Json verification_json(const ColoringVerdict& verdict, ColoringKind kind, std::optional<int> bound) {
  Json v;
  v["checker"] = kind == ColoringKind::proper ? "proper" : "acyclic";
  v["valid"] = verdict.valid;
  v["colors_used"] = verdict.colors_used;
  if (bound) v["within_bound"] = verdict.colors_used <= *bound;
  if (!verdict.reason.empty()) v["reason"] = verdict.reason;
  if (verdict.monochromatic_arc) {
    v["monochromatic_arc"] = {verdict.monochromatic_arc->tail, verdict.monochromatic_arc->head};
  }
  if (verdict.monochromatic_cycle) v["monochromatic_cycle"] = cycle_json(*verdict.monochromatic_cycle);
  return v;
}

bool verification_passed(const Json& verification) {
  return verification.at("valid").get<bool>() && verification.value("within_bound", true);
}

// Records the independent verdict and adjusts the exit code.
void attach_coloring(CommandResult& result, std::span<const int> colors, const ColoringVerdict& verdict,
                     ColoringKind kind, std::optional<int> bound) {
  result.report["coloring"] = Json(std::vector<int>(colors.begin(), colors.end()));
  if (bound) result.report["bound"] = *bound;
  result.report["verification"] = verification_json(verdict, kind, bound);
  if (!verification_passed(result.report["verification"])) result.exit_code = kExitFailedCheck;
}

ColoringVerdict check_proper(const Context& ctx, std::span<const int> colors) {
  return ctx.undirected() ? verify_proper(ctx.input.file.undirected(), colors)
                          : verify_proper(ctx.input.file.digraph(), colors);
}

Json hypothesis_json(const HypothesisVerdict& verdict) {
  Json h;
  h["checked"] = true;
  h["holds"] = verdict.holds;
  if (verdict.witness) h["witness"] = cycle_json(*verdict.witness);
  return h;
}

Json unchecked_hypothesis() { return Json{{"checked", false}}; }

Json ear_json(const Ear& ear) { return Json(ear.path); }

// --- commands -------------------------------------------------------------

CommandResult cmd_census(const Context& ctx, int k) {
  CommandResult result;
  const ResidueCensus census = residue_census(ctx.input.file.as_digraph(), k, ctx.census(ctx.min_cycle_length()));
  result.report["parameters"] = {{"k", k}, {"min_cycle_length", ctx.min_cycle_length()}};
  Json c;
  c["modulus"] = census.modulus;
  c["realized"] = census.realized_residues();
  Json witnesses = Json::array();
  for (const auto& w : census.witnesses) witnesses.push_back(w ? cycle_json(*w) : Json(nullptr));
  c["witnesses"] = witnesses;
  c["counts"] = census.counts ? Json(*census.counts) : Json(nullptr);
  result.report["census"] = c;
  return result;
}

CommandResult cmd_check(const Context& ctx, int k, int r) {
  CommandResult result;
  const HypothesisVerdict verdict =
      hypothesis_holds(ctx.input.file.as_digraph(), k, r, ctx.census(ctx.min_cycle_length()));
  result.report["parameters"] = {{"k", k}, {"r", verdict.residue}, {"min_cycle_length", ctx.min_cycle_length()}};
  result.report["hypothesis"] = hypothesis_json(verdict);
  if (!verdict.holds) result.exit_code = kExitFailedCheck;
  return result;
}

CommandResult cmd_color1(const Context& ctx, int k, bool skip_check) {
  require_directed(ctx, "color1");
  CommandResult result;
  const Digraph d = ctx.input.file.digraph();
  ProperColoringOptions options;
  options.check_hypothesis = !skip_check;
  options.audit = ctx.flags.audit;
  options.census = ctx.census();
  options.ear_limits = ctx.ear_limits();
  result.report["parameters"] = {{"k", k}, {"r", 1 % k}};
  const ProperColoringRun run = color_mod1(d, k, options);
  result.report["hypothesis"] = skip_check ? unchecked_hypothesis() : Json{{"checked", true}, {"holds", true}};
  attach_coloring(result, run.result.colors, verify_proper(d, run.result.colors), ColoringKind::proper, k);
  Json steps = Json::array();
  for (const ProperStep& step : run.steps) steps.push_back({{"residue", step.residue}, {"ear", ear_json(step.ear)}});
  result.report["decomposition"] = {{"seed", cycle_json(run.seed)},
                                    {"seed_residue", run.seed_residue},
                                    {"ears", run.steps.size()},
                                    {"steps", steps}};
  return result;
}

CommandResult cmd_acyclic(const Context& ctx, int k, int r, bool skip_check) {
  require_directed(ctx, "acyclic");
  CommandResult result;
  const Digraph d = ctx.input.file.digraph();
  AcyclicColoringOptions options;
  options.check_hypothesis = !skip_check;
  options.audit = ctx.flags.audit;
  options.census = ctx.census();
  options.ear_limits = ctx.ear_limits();
  result.report["parameters"] = {{"k", k}, {"r", normalize_residue(r, k)}};
  const AcyclicColoringRun run = acyclic_color(d, k, r, options);
  result.report["hypothesis"] = skip_check ? unchecked_hypothesis() : Json{{"checked", true}, {"holds", true}};
  attach_coloring(result, run.result.colors, verify_acyclic(d, run.result.colors), ColoringKind::acyclic, k);
  Json components = Json::array();
  std::size_t ears = 0;
  for (const ComponentRun& component : run.components) {
    Json steps = Json::array();
    for (const AcyclicStep& step : component.steps) {
      Json s{{"branch", to_string(step.branch)}, {"residue", step.residue}, {"ear", ear_json(step.ear)}};
      if (step.backward_pair) s["backward_pair"] = {step.backward_pair->first, step.backward_pair->second};
      if (step.pair_alpha) s["alpha"] = *step.pair_alpha;
      steps.push_back(s);
    }
    ears += component.steps.size();
    components.push_back({{"vertices", component.vertices},
                          {"seed", cycle_json(component.seed)},
                          {"seed_residue", component.seed_residue},
                          {"order", component.order},
                          {"steps", steps}});
  }
  result.report["decomposition"] = {
      {"order", run.order}, {"nontrivial_components", run.components.size()}, {"ears", ears}, {"components", components}};
  return result;
}

CommandResult cmd_undirected(const Context& ctx, int k, int r) {
  require_undirected(ctx, "undirected");
  CommandResult result;
  const UndirectedGraph g = ctx.input.file.undirected();
  result.report["parameters"] = {{"k", k}, {"r", normalize_residue(r, k)}};
  const UndirectedColoring colored = color_undirected(g, k, r, ctx.corollary());
  result.report["hypothesis"] = {{"checked", true}, {"holds", true}};
  result.report["method"] = to_string(colored.method);
  attach_coloring(result, colored.coloring.colors, verify_proper(g, colored.coloring.colors), ColoringKind::proper,
                  colored.bound);
  return result;
}

CommandResult cmd_bound(const Context& ctx, const std::string& theorem_name, std::optional<int> k) {
  const auto theorem = parse_bound_theorem(theorem_name);
  if (!theorem) throw InputError("unknown theorem '" + theorem_name + "'");
  if (takes_undirected_input(*theorem)) require_undirected(ctx, std::string("bound --theorem ") + theorem_name);
  else require_directed(ctx, std::string("bound --theorem ") + theorem_name);
  if (*theorem == BoundTheorem::tuza && !k) throw InputError("bound --theorem tuza needs --k");

  const CorollaryOptions options = ctx.corollary();
  BoundReport report;
  switch (*theorem) {
    case BoundTheorem::odd_circumference: report = color_by_odd_circumference(ctx.input.file.digraph(), options); break;
    case BoundTheorem::circumference: report = color_by_circumference(ctx.input.file.digraph(), options); break;
    case BoundTheorem::longest_path: report = color_by_longest_path(ctx.input.file.digraph(), options); break;
    case BoundTheorem::erdos_hajnal: report = erdos_hajnal(ctx.input.file.undirected(), options); break;
    case BoundTheorem::tuza: report = tuza(ctx.input.file.undirected(), *k, options); break;
    case BoundTheorem::gyarfas: report = gyarfas(ctx.input.file.undirected(), options); break;
    case BoundTheorem::mihok_schiermeyer: report = mihok_schiermeyer(ctx.input.file.undirected(), options); break;
  }
  CommandResult result;
  result.report["parameters"] = {{"theorem", to_string(report.theorem)}, {"k", k ? Json(*k) : Json(nullptr)}};
  result.report["parameter"] = {{"name", report.parameter_name}, {"value", report.parameter}};
  result.report["construction"] = {{"modulus", report.modulus}, {"residue", report.residue}, {"method", report.method}};
  if (report.witness) {
    attach_coloring(result, report.witness->colors, check_proper(ctx, report.witness->colors), ColoringKind::proper,
                    report.bound);
  } else {
    result.report["bound"] = report.bound;
  }
  return result;
}

std::vector<Vertex> parse_vertex_set(const std::string& text) {
  std::vector<Vertex> set;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      set.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + item + "' in --set");
    }
  }
  return set;
}

CommandResult cmd_clique_cycle(const Context& ctx, const std::string& set_text) {
  require_directed(ctx, "clique-cycle");
  CommandResult result;
  const Digraph d = ctx.input.file.digraph();
  const std::vector<Vertex> set = parse_vertex_set(set_text);
  result.report["parameters"] = {{"set", set}};
  const CliqueCycleCertificate cert = cycle_through_clique(d, set);

  Json detours = Json::array();
  for (const VertexPath& p : cert.detours) detours.push_back(p.vertices);
  result.report["certificate"] = {{"cycle", cycle_json(cert.cycle)},
                                  {"covered", cert.covered},
                                  {"components", cert.components},
                                  {"connector", cert.connector.vertices},
                                  {"detours", detours},
                                  {"hamiltonian_core", cycle_json(cert.hamiltonian_core)}};

  // Recheck from scratch: simple, a cycle of d, covers U, long enough.
  const auto& cyc = cert.cycle.vertices;
  std::vector<char> seen(static_cast<std::size_t>(d.vertex_count()), 0);
  bool simple = true;
  for (Vertex v : cyc) {
    if (v < 0 || v >= d.vertex_count() || seen[static_cast<std::size_t>(v)]) simple = false;
    else seen[static_cast<std::size_t>(v)] = 1;
  }
  const bool is_cycle = simple && is_cycle_in(d, cyc);
  bool covers = true;
  for (Vertex v : cert.covered) covers = covers && v >= 0 && v < d.vertex_count() && seen[static_cast<std::size_t>(v)];
  const bool induced_strong = strongly_connected(induced_subdigraph(d, cert.covered).graph);
  const bool long_enough = induced_strong || cyc.size() >= cert.covered.size() + 1;
  result.report["verification"] = {{"valid", is_cycle && covers && long_enough},
                                   {"simple_cycle", is_cycle},
                                   {"covers_set", covers},
                                   {"set_induces_strong", induced_strong},
                                   {"length", cyc.size()}};
  if (!(is_cycle && covers && long_enough)) result.exit_code = kExitFailedCheck;
  return result;
}

CommandResult cmd_verify(const Context& ctx, const std::string& coloring_path, bool acyclic) {
  CommandResult result;
  std::ifstream file(coloring_path);
  if (!file) throw InputError("cannot open coloring file '" + coloring_path + "'");
  const std::vector<int> colors = parse_coloring_file(file, ctx.input.file.vertices);
  const ColoringKind kind = acyclic ? ColoringKind::acyclic : ColoringKind::proper;
  result.report["parameters"] = {{"kind", to_string(kind)}};
  const ColoringVerdict verdict =
      acyclic ? verify_acyclic(ctx.input.file.as_digraph(), colors) : check_proper(ctx, colors);
  attach_coloring(result, colors, verdict, kind, std::nullopt);
  return result;
}

CommandResult cmd_stats(const Context& ctx) {
  CommandResult result;
  const Digraph d = ctx.input.file.as_digraph();
  const CycleStats stats = cycle_stats(d, ctx.min_cycle_length());
  result.report["parameters"] = {{"min_cycle_length", ctx.min_cycle_length()}};
  result.report["stats"] = {{"vertices", d.vertex_count()},
                            {"arcs", d.arc_count()},
                            {"strongly_connected", strongly_connected(d)},
                            {"strong_components", strong_components(d).size()},
                            {"circumference", stats.circumference},
                            {"odd_circumference", stats.odd_circumference},
                            {"longest_path_vertices", stats.longest_path_vertices},
                            {"cycle_lengths", cycle_lengths(d, ctx.min_cycle_length())}};
  return result;
}

// --- output ---------------------------------------------------------------

std::string scalar_text(const Json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "yes" : "no";
  return value.dump();
}

void flatten(const Json& value, const std::string& key, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [name, child] : value.items()) flatten(child, key.empty() ? name : key + "." + name, out);
    return;
  }
  if (value.is_array()) {
    const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); });
    if (scalars) {
      out << key << '\t';
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? " " : "") << scalar_text(value[i]);
      out << '\n';
    } else {
      for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], key + "." + std::to_string(i), out);
    }
    return;
  }
  out << key << '\t' << scalar_text(value) << '\n';
}

void emit(const Json& report, const GlobalFlags& flags, std::ostream& out) {
  if (flags.plain) flatten(report, "", out);
  else out << report.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colorings of digraphs without cycles of prescribed length residues", "earcolor"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--plain", flags.plain, "Tab-separated key/value output instead of JSON");
  app.add_flag("--no-timing", flags.no_timing, "Omit timing from the report");
  app.add_flag("--audit", flags.audit, "Re-check construction invariants after every ear");
  app.add_option("--max-cycles", flags.max_cycles, "Cycle enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--max-ear-paths", flags.max_ear_paths, "Ear search cap per step")->check(CLI::PositiveNumber);
  app.add_option("--max-oracle-vertices", flags.max_oracle_vertices, "Vertex limit for exact searches")
      ->check(CLI::PositiveNumber);

  std::string graph_path;
  int k = 0;
  int r = 0;
  bool skip_check = false;
  std::string theorem;
  std::optional<int> bound_k;
  std::string set_text;
  std::string coloring_path;
  bool acyclic_flag = false;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Graph file, or - for standard input")->required();
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("-k,--k", k, "Modulus k >= 2")->required(); };
  auto add_r = [&](CLI::App* sub) { sub->add_option("-r,--r", r, "Residue r")->required(); };

  auto* census = app.add_subcommand("census", "Realized cycle-length residues mod k");
  add_graph(census);
  add_k(census);
  auto* check = app.add_subcommand("check", "Whether no cycle has length r mod k");
  add_graph(check);
  add_k(check);
  add_r(check);
  auto* color1 = app.add_subcommand("color1", "Proper k-coloring of a strong digraph without cycles of length 1 mod k");
  add_graph(color1);
  add_k(color1);
  color1->add_flag("--skip-check", skip_check, "Do not check the hypothesis first");
  auto* acyclic = app.add_subcommand("acyclic", "Acyclic k-coloring of a digraph without cycles of length r mod k");
  add_graph(acyclic);
  add_k(acyclic);
  add_r(acyclic);
  acyclic->add_flag("--skip-check", skip_check, "Do not check the hypothesis first");
  auto* undirected = app.add_subcommand("undirected", "Proper coloring of a graph without cycles of length r mod k");
  add_graph(undirected);
  add_k(undirected);
  add_r(undirected);
  auto* bound = app.add_subcommand("bound", "Chromatic bound with a constructive witness");
  add_graph(bound);
  bound->add_option("--theorem", theorem, "odd-circ|circ|longest-path|erdos-hajnal|tuza|gyarfas|mihok-schiermeyer")
      ->required();
  bound->add_option("-k,--k", bound_k, "Modulus for tuza");
  auto* clique = app.add_subcommand("clique-cycle", "Cycle through a set of pairwise adjacent vertices");
  add_graph(clique);
  clique->add_option("--set", set_text, "Comma-separated vertices")->required();
  auto* verify = app.add_subcommand("verify", "Check an externally supplied coloring");
  add_graph(verify);
  verify->add_option("--coloring", coloring_path, "File with lines 'vertex color'")->required();
  verify->add_flag("--acyclic", acyclic_flag, "Check color classes for directed cycles instead of arcs");
  auto* stats = app.add_subcommand("stats", "Circumference, odd circumference and longest path");
  add_graph(stats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Json report;
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  int exit_code = kExitOk;

  auto fail = [&](const char* kind, const std::string& message, int code) {
    report["error"] = {{"kind", kind}, {"message", message}};
    err << "earcolor " << command << ": " << message << '\n';
    exit_code = code;
  };

  std::optional<Input> input;
  try {
    input = load_input(graph_path, in);
    report["input"] = {{"digest", input->digest},
                       {"mode", input->file.mode == GraphMode::directed ? "directed" : "undirected"},
                       {"vertices", input->file.vertices},
                       {"pairs", input->file.pairs.size()}};
    const Context ctx{flags, *input};
    std::function<CommandResult()> body;
    if (chosen == census) body = [&] { return cmd_census(ctx, k); };
    else if (chosen == check) body = [&] { return cmd_check(ctx, k, r); };
    else if (chosen == color1) body = [&] { return cmd_color1(ctx, k, skip_check); };
    else if (chosen == acyclic) body = [&] { return cmd_acyclic(ctx, k, r, skip_check); };
    else if (chosen == undirected) body = [&] { return cmd_undirected(ctx, k, r); };
    else if (chosen == bound) body = [&] { return cmd_bound(ctx, theorem, bound_k); };
    else if (chosen == clique) body = [&] { return cmd_clique_cycle(ctx, set_text); };
    else if (chosen == verify) body = [&] { return cmd_verify(ctx, coloring_path, acyclic_flag); };
    else body = [&] { return cmd_stats(ctx); };

    try {
      CommandResult result = body();
      report.update(result.report);
      exit_code = result.exit_code;
    } catch (const DefectError& e) {
      // Without the up-front check a false hypothesis is the expected cause.
      if (!skip_check) throw;
      const int residue = chosen == color1 ? 1 : r;
      const HypothesisVerdict verdict =
          hypothesis_holds(input->file.as_digraph(), k, residue, ctx.census(ctx.min_cycle_length()));
      if (verdict.holds) throw;
      report["hypothesis"] = hypothesis_json(verdict);
      fail("hypothesis", std::string("construction failed on an input violating the hypothesis: ") + e.what(),
           kExitFailedCheck);
    }
  } catch (const HypothesisViolated& e) {
    report["hypothesis"] = {{"checked", true}, {"holds", false}, {"witness", e.witness()}};
    fail("hypothesis", e.what(), kExitFailedCheck);
  } catch (const InputError& e) {
    fail("input", e.what(), kExitInput);
  } catch (const ResourceLimitExceeded& e) {
    fail("resource", e.what(), kExitResource);
  } catch (const DefectError& e) {
    fail("defect", e.what(), kExitDefect);
  } catch (const std::exception& e) {
    fail("defect", e.what(), kExitDefect);
  }

  if (!flags.no_timing) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timing"] = {{"elapsed_ms", elapsed.count()}};
  }
  emit(report, flags, out);
  return exit_code;
}

}  // namespace earcolor::cli
