#include "ocvx/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "ocvx/convexity.hpp"
#include "ocvx/digraph.hpp"
#include "ocvx/error.hpp"
#include "ocvx/generators.hpp"
#include "ocvx/polycases.hpp"
#include "ocvx/reductions.hpp"
#include "ocvx/solvers.hpp"

namespace ocvx::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
}

json labels_of(const OrientedGraph& graph, const VertexSet& s) {
  json list = json::array();
  s.for_each([&](Vertex v) { list.push_back(graph.label(v)); });
  return list;
}

ConvexityKind kind_from(const std::string& name) {
  if (auto kind = parse_kind(name)) return *kind;
  throw Error(ErrorCode::InvalidParams, "unknown convexity '" + name + "'");
}

Parameter parameter_from(const std::string& name) {
  if (auto parameter = parse_parameter(name)) return *parameter;
  throw Error(ErrorCode::InvalidParams, "unknown parameter '" + name + "'");
}

struct LoadedGraph {
  std::string digest;
  OrientedGraph graph;
};

LoadedGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  return {"sha256:" + sha256_hex(text), parse_arclist(text)};
}

json report_header(std::string_view command, const LoadedGraph& input, ConvexityKind kind,
                   Parameter parameter) {
  json r;
  r["schema_version"] = kReportSchemaVersion;
  r["command"] = command;
  r["input_digest"] = input.digest;
  r["n"] = input.graph.n();
  r["m"] = input.graph.m();
  r["kind"] = to_string(kind);
  r["parameter"] = to_string(parameter);
  return r;
}

void finish_report(json& r, const SolveStats& stats, Clock::time_point start) {
  r["stats"] = {{"subsets_examined", stats.subsets_examined},
                {"hull_evaluations", stats.hull_evaluations}};
  r["timing"] = {
      {"wall_ms", std::chrono::duration<double, std::milli>(Clock::now() - start).count()}};
  r["version"] = OCVX_VERSION;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string path;
  std::string kind = "geodetic";
  std::string parameter = "hull";
  bool exact = false;
  std::string poly;
  bool oracle = false;
  double timeout_s = 0.0;
  unsigned jobs = 1;
  std::size_t oracle_cap = 12;
};

struct PolyOutcome {
  SolveResult result;
  std::string graph_class;
  bool exact = true;
  std::optional<std::size_t> bound;
};

PolyOutcome solve_tournament(const OrientedGraph& g, ConvexityKind kind, Parameter parameter,
                             const SolveOptions& options) {
  if (!is_tournament(g)) {
    throw Error(ErrorCode::ClassNotRecognized, "input is not a tournament");
  }
  SolveResult r = parameter == Parameter::Hull ? tournament_hull_number(g, kind)
                                               : tournament_interval_number(g, kind, options);
  return {std::move(r), "tournament", true, std::nullopt};
}

void require_twopath_hull(ConvexityKind kind, Parameter parameter, std::string_view cls) {
  if (kind != ConvexityKind::TwoPath || parameter != Parameter::Hull) {
    throw Error(ErrorCode::InvalidParams,
                "the " + std::string(cls) + " algorithm computes the p3 hull number only");
  }
}

PolyOutcome solve_split(const OrientedGraph& g, ConvexityKind kind, Parameter parameter) {
  require_twopath_hull(kind, parameter, "split");
  std::optional<SplitPartition> partition;
  try {
    partition = recognize_split(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSplit) throw;
    throw Error(ErrorCode::ClassNotRecognized, "underlying graph is not split");
  }
  return {split_twopath_hull(g, *partition), "split", true, std::nullopt};
}

PolyOutcome solve_cobipartite(const OrientedGraph& g, ConvexityKind kind, Parameter parameter,
                              const SolveOptions& options) {
  require_twopath_hull(kind, parameter, "cobipartite");
  std::optional<CobipartiteParts> parts;
  try {
    parts = recognize_cobipartite(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCobipartite) throw;
    throw Error(ErrorCode::ClassNotRecognized, "underlying graph is not cobipartite");
  }
  return {cobipartite_twopath_hull(g, *parts, options), "cobipartite", true, std::nullopt};
}

PolyOutcome solve_ear(const OrientedGraph& g, ConvexityKind kind, Parameter parameter) {
  if (kind != ConvexityKind::Geodetic || parameter != Parameter::Hull) {
    throw Error(ErrorCode::InvalidParams, "the ear bound applies to the geodetic hull number");
  }
  if (g.n() < 2 || !is_strongly_connected(g)) {
    throw Error(ErrorCode::ClassNotRecognized, "input is not strongly connected");
  }
  EarHullSet ear = ear_hull_set(g);
  SolveResult r;
  r.value = ear.witness.size();
  r.witness = std::move(ear.witness);
  r.kind = kind;
  r.parameter = parameter;
  return {std::move(r), "strong", false, ear.bound};
}

PolyOutcome solve_poly(const std::string& cls, const OrientedGraph& g, ConvexityKind kind,
                       Parameter parameter, const SolveOptions& options) {
  if (cls == "tournament") return solve_tournament(g, kind, parameter, options);
  if (cls == "split") return solve_split(g, kind, parameter);
  if (cls == "cobipartite") return solve_cobipartite(g, kind, parameter, options);
  if (cls == "ear") return solve_ear(g, kind, parameter);
  if (cls != "auto") {
    throw Error(ErrorCode::InvalidParams, "unknown class '" + cls + "'");
  }
  if (is_tournament(g) && !(kind == ConvexityKind::TwoPath && parameter == Parameter::Interval)) {
    return solve_tournament(g, kind, parameter, options);
  }
  if (kind == ConvexityKind::TwoPath && parameter == Parameter::Hull) {
    for (const char* candidate : {"split", "cobipartite"}) {
      try {
        return solve_poly(candidate, g, kind, parameter, options);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ClassNotRecognized) throw;
      }
    }
  }
  if (kind == ConvexityKind::Geodetic && parameter == Parameter::Hull && g.n() >= 2 &&
      is_strongly_connected(g)) {
    return solve_ear(g, kind, parameter);
  }
  throw Error(ErrorCode::ClassNotRecognized,
              "no polynomial algorithm applies to this graph, kind and parameter");
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  const LoadedGraph input = load_graph(args.path);
  const OrientedGraph& g = input.graph;
  const ConvexityKind kind = kind_from(args.kind);
  const Parameter parameter = parameter_from(args.parameter);

  SolveOptions options;
  options.jobs = std::max(1u, args.jobs);
  options.oracle_cap = args.oracle_cap;
  if (args.timeout_s > 0) {
    options.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(args.timeout_s));
  }

  json r = report_header("solve", input, kind, parameter);
  try {
    PolyOutcome outcome;
    if (!args.poly.empty()) {
      outcome = solve_poly(args.poly, g, kind, parameter, options);
      r["method"] = "poly";
      r["class"] = outcome.graph_class;
    } else if (args.oracle) {
      outcome.result = brute_min(g, kind, parameter, options);
      r["method"] = "oracle";
    } else {
      outcome.result = solve_min(g, kind, parameter, options);
      r["method"] = "exact";
    }
    r["status"] = "ok";
    r["value"] = outcome.result.value;
    r["exact"] = outcome.exact;
    if (outcome.bound) r["bound"] = *outcome.bound;
    r["witness"] = labels_of(g, outcome.result.witness);
    r["forced"] = labels_of(g, forced_constraints(g, kind).forced);
    finish_report(r, outcome.result.stats, start);
    out << r.dump(2) << '\n';
    return kExitOk;
  } catch (const TimeoutError& e) {
    const VertexSet upper = greedy_upper_bound(g, kind, parameter);
    r["method"] = !args.poly.empty() ? "poly" : args.oracle ? "oracle" : "exact";
    r["status"] = "timeout";
    r["value"] = upper.size();
    r["exact"] = false;
    r["lower_bound"] = e.lower_bound();
    r["witness"] = labels_of(g, upper);
    r["forced"] = labels_of(g, forced_constraints(g, kind).forced);
    finish_report(r, {}, start);
    out << r.dump(2) << '\n';
    return kExitTimeout;
  }
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string path;
  std::string kind = "geodetic";
  std::string parameter = "hull";
  std::vector<std::string> witness;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  const LoadedGraph input = load_graph(args.path);
  const OrientedGraph& g = input.graph;
  const ConvexityKind kind = kind_from(args.kind);
  const Parameter parameter = parameter_from(args.parameter);

  VertexSet s(g.n());
  for (const std::string& label : args.witness) {
    const auto v = g.find(label);
    if (!v) throw Error(ErrorCode::UnknownLabel, "no vertex labelled '" + label + "'");
    s.insert(*v);
  }
  const DistanceMatrix dist = all_pairs_distances(g);
  const HullTrace trace = hull_trace(g, kind, s, dist);
  const bool valid = parameter == Parameter::Hull
                         ? trace.closure().is_full()
                         : (trace.iterates.size() > 1 ? trace.iterates[1] : trace.iterates[0])
                               .is_full();

  json r = report_header("verify", input, kind, parameter);
  r["witness"] = labels_of(g, s);
  r["valid"] = valid;
  json iterates = json::array();
  for (const VertexSet& step : trace.iterates) iterates.push_back(labels_of(g, step));
  r["trace_length"] = trace.iterates.size();
  r["trace"] = std::move(iterates);
  r["forced"] = labels_of(g, forced_constraints(g, kind).forced);
  SolveStats stats;
  stats.hull_evaluations = 1;
  finish_report(r, stats, start);
  out << r.dump(2) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------ transform

struct TransformArgs {
  std::string construction;
  std::string input;
  std::string output;
  std::size_t budget = 0;
};

std::size_t one_based(const json& value, std::size_t limit, std::string_view what) {
  const auto id = value.get<long long>();
  if (id < 1 || static_cast<std::size_t>(id) > limit) {
    throw Error(ErrorCode::InvalidInstance,
                std::string(what) + " id " + std::to_string(id) + " out of range");
  }
  return static_cast<std::size_t>(id - 1);
}

json parse_instance_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInstance, std::string("bad JSON: ") + e.what());
  }
}

template <typename Instance>
Instance read_set_system(const json& j) {
  try {
    Instance instance;
    instance.universe = j.at("universe").get<std::size_t>();
    instance.budget = j.at("k").get<std::size_t>();
    for (const json& set : j.at("sets")) {
      std::vector<std::size_t> members;
      for (const json& e : set) members.push_back(one_based(e, instance.universe, "element"));
      instance.sets.push_back(std::move(members));
    }
    return instance;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInstance, std::string("bad set-system instance: ") + e.what());
  }
}

DominatingSetInstance read_bipartite(const json& j) {
  try {
    DominatingSetInstance instance;
    instance.n = j.at("vertices").get<std::size_t>();
    instance.budget = j.at("k").get<std::size_t>();
    instance.in_a.assign(instance.n, false);
    for (const json& v : j.at("part_a")) instance.in_a[one_based(v, instance.n, "vertex")] = true;
    for (const json& edge : j.at("edges")) {
      if (edge.size() != 2) throw Error(ErrorCode::InvalidInstance, "edge needs two endpoints");
      instance.edges.emplace_back(one_based(edge[0], instance.n, "vertex"),
                                  one_based(edge[1], instance.n, "vertex"));
    }
    return instance;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInstance, std::string("bad bipartite instance: ") + e.what());
  }
}

int cmd_transform(const TransformArgs& args, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(args.input);
  std::optional<ReductionOutput> result;
  const std::string& c = args.construction;
  if (c == "bd") {
    result = bd_transform(parse_arclist(text), args.budget);
  } else if (c == "hitting-set-p3") {
    result = hitting_set_to_twopath_hull(read_set_system<HittingSetInstance>(parse_instance_json(text)));
  } else if (c == "hitting-set-geo") {
    result = hitting_set_to_geodetic_hull(read_set_system<HittingSetInstance>(parse_instance_json(text)));
  } else if (c == "dominating-set") {
    result = dominating_set_to_twopath_interval(read_bipartite(parse_instance_json(text)));
  } else if (c == "set-cover") {
    result = set_cover_to_twopath_interval(read_set_system<SetCoverInstance>(parse_instance_json(text)));
  } else {
    throw Error(ErrorCode::InvalidParams, "unknown construction '" + c + "'");
  }
  if (result->degenerate) {
    err << "warning: some element lies in exactly one set; the gadget is emitted as "
           "constructed but the equivalence is not guaranteed\n";
  }

  const OrientedGraph& g = result->graph;
  json roles = json::object();
  for (Vertex v = 0; v < g.n(); ++v) roles[g.label(v)] = result->roles[v];
  json sidecar;
  sidecar["schema_version"] = kReportSchemaVersion;
  sidecar["construction"] = c;
  sidecar["input_digest"] = "sha256:" + sha256_hex(text);
  sidecar["n"] = g.n();
  sidecar["m"] = g.m();
  sidecar["target_budget"] = result->target_budget;
  sidecar["degenerate"] = result->degenerate;
  sidecar["roles"] = std::move(roles);

  write_file(args.output, serialize_arclist(g));
  write_file(args.output + ".json", sidecar.dump(2) + "\n");

  json r;
  r["schema_version"] = kReportSchemaVersion;
  r["command"] = "transform";
  r["construction"] = c;
  r["output"] = args.output;
  r["sidecar"] = args.output + ".json";
  r["n"] = g.n();
  r["m"] = g.m();
  r["target_budget"] = result->target_budget;
  r["version"] = OCVX_VERSION;
  out << r.dump(2) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family;
  std::size_t n = 8;
  double p = 0.3;
  std::size_t k = 2;
  std::size_t a = 3;
  std::size_t b = 3;
  bool strong = false;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  Rng rng(args.seed);
  std::optional<OrientedGraph> g;
  const std::string& f = args.family;
  if (f == "tournament") {
    g = args.strong ? random_strong_tournament(args.n, rng) : random_tournament(args.n, rng);
  } else if (f == "strong-oriented") {
    g = random_strong_oriented(args.n, args.p, rng);
  } else if (f == "triangle-paths") {
    g = triangle_plus_paths(args.k);
  } else if (f == "bipartite") {
    g = random_bipartite_oriented(args.a, args.b, args.p, rng);
  } else {
    throw Error(ErrorCode::InvalidParams, "unknown family '" + f + "'");
  }
  const std::string text = serialize_arclist(*g);
  if (args.output.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(args.output, text);
  json r;
  r["schema_version"] = kReportSchemaVersion;
  r["command"] = "generate";
  r["family"] = f;
  r["seed"] = args.seed;
  r["output"] = args.output;
  r["n"] = g->n();
  r["m"] = g->m();
  r["version"] = OCVX_VERSION;
  out << r.dump(2) << '\n';
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::Timeout ? kExitTimeout : kExitPrecondition;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convexity parameters of oriented graphs", "ocvx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", OCVX_VERSION);

  const std::vector<std::string> kinds{"geodetic", "p3", "p3star"};
  const std::vector<std::string> parameters{"interval", "hull"};

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an interval or hull number");
  solve_cmd->add_option("graph", solve.path, "Arc-list file")->required();
  solve_cmd->add_option("--kind", solve.kind)->check(CLI::IsMember(kinds));
  solve_cmd->add_option("--parameter", solve.parameter)->check(CLI::IsMember(parameters));
  auto* exact_flag = solve_cmd->add_flag("--exact", solve.exact, "Exact search (default)");
  auto* poly_flag =
      solve_cmd
          ->add_option("--poly", solve.poly,
                       "Polynomial algorithm: auto, tournament, split, cobipartite, ear")
          ->expected(0, 1)
          ->default_str("auto")
          ->check(CLI::IsMember({"auto", "tournament", "split", "cobipartite", "ear"}));
  auto* oracle_flag = solve_cmd->add_flag("--oracle", solve.oracle, "Plain subset enumeration");
  exact_flag->excludes(poly_flag)->excludes(oracle_flag);
  poly_flag->excludes(oracle_flag);
  solve_cmd->add_option("--timeout", solve.timeout_s, "Seconds; 0 disables")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--jobs", solve.jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--oracle-cap", solve.oracle_cap, "Largest n for --oracle");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness set and print its hull trace");
  verify_cmd->add_option("graph", verify.path, "Arc-list file")->required();
  verify_cmd->add_option("--kind", verify.kind)->check(CLI::IsMember(kinds));
  verify_cmd->add_option("--parameter", verify.parameter)->check(CLI::IsMember(parameters));
  verify_cmd->add_option("--witness", verify.witness, "Vertex labels, comma separated")
      ->delimiter(',');

  TransformArgs transform;
  auto* transform_cmd = app.add_subcommand("transform", "Build a reduction instance");
  transform_cmd
      ->add_option("construction", transform.construction,
                   "bd, hitting-set-p3, hitting-set-geo, dominating-set, set-cover")
      ->required()
      ->check(CLI::IsMember(
          {"bd", "hitting-set-p3", "hitting-set-geo", "dominating-set", "set-cover"}));
  transform_cmd->add_option("input", transform.input, "Arc-list (bd) or JSON instance")
      ->required();
  transform_cmd->add_option("output", transform.output, "Arc-list output; sidecar at <output>.json")
      ->required();
  transform_cmd->add_option("--budget", transform.budget, "Budget carried through bd");

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded random instance");
  generate_cmd
      ->add_option("family", generate.family,
                   "tournament, strong-oriented, triangle-paths, bipartite")
      ->required()
      ->check(CLI::IsMember({"tournament", "strong-oriented", "triangle-paths", "bipartite"}));
  generate_cmd->add_option("--n", generate.n, "Vertex count");
  generate_cmd->add_option("--p", generate.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--k", generate.k, "Number of paths (triangle-paths)");
  generate_cmd->add_option("--a", generate.a, "First part size (bipartite)");
  generate_cmd->add_option("--b", generate.b, "Second part size (bipartite)");
  generate_cmd->add_flag("--strong", generate.strong, "Strong tournaments only");
  generate_cmd->add_option("--seed", generate.seed);
  generate_cmd->add_option("-o,--output", generate.output, "Output file (default stdout)");

  std::vector<std::string> argv_storage{"ocvx"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*transform_cmd) return cmd_transform(transform, out, err);
    return cmd_generate(generate, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace ocvx::cli
