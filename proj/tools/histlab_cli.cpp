// Command-line front end: build graphs, run the exact solvers, verify the
// every-tree-has-an-internal-degree-2-vertex property, and emit JSON reports.
//
// Exit codes: 0 success (including budget-truncated indeterminate results),
// 1 usage error, 2 invalid input, 3 internal inconsistency between methods.

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "histlab/histlab.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInconsistent = 3;

struct SourceOpts {
  bool counterexample = false;
  int d = 0;
  int n = 0;
  int complete = 0;
  int path = 0;
  int cycle = 0;
  bool random_regular = false;
  int m = 0;
  std::string in_path;
};

struct CommonOpts {
  std::uint64_t seed = 1;
  std::int64_t budget_nodes = -1;
  double budget_seconds = -1.0;
  int workers = 1;
  bool timings = false;
  std::string out_path;
};

struct LoadedGraph {
  histlab::Graph graph;
  std::optional<histlab::RoleLabels> labels;
};

void add_source_options(CLI::App* cmd, SourceOpts& src, bool allow_file) {
  cmd->add_flag("--counterexample", src.counterexample,
                "pendant-clique counterexample family (needs --d and --n)");
  cmd->add_option("--d", src.d, "core clique size d (counterexample, random-regular, bound)");
  cmd->add_option("--n", src.n, "total vertex count n (counterexample)");
  cmd->add_option("--complete", src.complete, "complete graph on M vertices");
  cmd->add_option("--path", src.path, "path on M vertices");
  cmd->add_option("--cycle", src.cycle, "cycle on M vertices");
  cmd->add_flag("--random-regular", src.random_regular,
                "random d-regular graph (needs --d and --m; uses --seed)");
  cmd->add_option("--m", src.m, "vertex count for --random-regular");
  if (allow_file) cmd->add_option("--in", src.in_path, "input graph6 file");
}

std::string read_first_line(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) return line;
  }
  throw std::invalid_argument("input file is empty: " + path);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

ordered_json roles_to_json(const histlab::RoleLabels& labels) {
  ordered_json roles = ordered_json::array();
  for (int v = 0; v < labels.vertex_count(); ++v) {
    roles.push_back({{"vertex", v},
                     {"role", std::string(histlab::role_name(labels.role[static_cast<std::size_t>(v)]))},
                     {"block", labels.block[static_cast<std::size_t>(v)]}});
  }
  return {{"format", "histlab-roles"},
          {"version", 1},
          {"d", labels.core_size()},
          {"vertex_count", labels.vertex_count()},
          {"roles", roles}};
}

histlab::RoleLabels roles_from_json(const nlohmann::json& doc) {
  if (!doc.contains("roles") || !doc["roles"].is_array())
    throw std::invalid_argument("role file: missing roles array");
  const auto& entries = doc["roles"];
  histlab::RoleLabels labels;
  labels.role.assign(entries.size(), histlab::Role::TailBody);
  labels.block.assign(entries.size(), 0);
  for (const auto& entry : entries) {
    const int v = entry.at("vertex").get<int>();
    if (v < 0 || v >= static_cast<int>(entries.size()))
      throw std::invalid_argument("role file: vertex id out of range");
    const auto role = histlab::role_from_name(entry.at("role").get<std::string>());
    if (!role) throw std::invalid_argument("role file: unknown role name");
    labels.role[static_cast<std::size_t>(v)] = *role;
    labels.block[static_cast<std::size_t>(v)] = entry.value("block", 0);
  }
  return labels;
}

LoadedGraph resolve_source(const SourceOpts& src, std::uint64_t seed, const std::string& labels_path) {
  int chosen = 0;
  chosen += src.counterexample ? 1 : 0;
  chosen += src.complete > 0 ? 1 : 0;
  chosen += src.path > 0 ? 1 : 0;
  chosen += src.cycle > 0 ? 1 : 0;
  chosen += src.random_regular ? 1 : 0;
  chosen += !src.in_path.empty() ? 1 : 0;
  if (chosen != 1)
    throw CLI::ValidationError("graph source",
                               "choose exactly one graph source (--counterexample, --complete, "
                               "--path, --cycle, --random-regular or --in)");

  LoadedGraph out;
  if (src.counterexample) {
    auto built = histlab::build_counterexample({src.d, src.n});
    out.graph = std::move(built.graph);
    out.labels = std::move(built.labels);
  } else if (src.complete > 0) {
    out.graph = histlab::build_complete(src.complete);
  } else if (src.path > 0) {
    out.graph = histlab::build_path(src.path);
  } else if (src.cycle > 0) {
    out.graph = histlab::build_cycle(src.cycle);
  } else if (src.random_regular) {
    out.graph = histlab::build_random_regular(src.d, src.m, seed);
  } else {
    out.graph = histlab::parse_graph6(read_first_line(src.in_path));
  }
  if (!labels_path.empty()) {
    std::ifstream in(labels_path);
    if (!in) throw std::invalid_argument("cannot open role file: " + labels_path);
    nlohmann::json doc;
    in >> doc;
    out.labels = roles_from_json(doc);
  }
  if (out.labels) out.labels->validate(out.graph);
  return out;
}

histlab::SearchBudget make_budget(const CommonOpts& common) {
  histlab::SearchBudget budget;
  if (common.budget_nodes >= 0) budget.node_limit = static_cast<std::uint64_t>(common.budget_nodes);
  if (common.budget_seconds >= 0) budget.time_limit_seconds = common.budget_seconds;
  return budget;
}

ordered_json budget_json(const CommonOpts& common) {
  ordered_json out;
  out["nodes"] = common.budget_nodes >= 0 ? ordered_json(common.budget_nodes) : ordered_json(nullptr);
  out["seconds"] =
      common.budget_seconds >= 0 ? ordered_json(common.budget_seconds) : ordered_json(nullptr);
  return out;
}

ordered_json edges_json(const std::vector<histlab::Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

ordered_json tree_json(const std::optional<histlab::SpanningTree>& tree) {
  if (!tree) return nullptr;
  return edges_json(tree->edges);
}

ordered_json stars_json(const std::optional<histlab::StarFactor>& factor) {
  if (!factor) return nullptr;
  ordered_json out = ordered_json::array();
  for (const auto& star : factor->stars)
    out.push_back({{"center", star.center}, {"leaves", star.leaves}});
  return out;
}

const char* tristate(const std::optional<bool>& value) {
  if (!value) return "indeterminate";
  return *value ? "true" : "false";
}

ordered_json report_shell(const char* command, const histlab::Graph& g) {
  return {{"tool", std::string(histlab::kToolName)},
          {"version", std::string(histlab::kVersion)},
          {"command", command},
          {"input_graph6", histlab::emit_graph6(g)}};
}

void emit_report(ordered_json& report, const CommonOpts& common,
                 std::chrono::steady_clock::time_point started) {
  if (common.timings) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  }
  const std::string text = report.dump(2) + "\n";
  if (!common.out_path.empty())
    write_file(common.out_path, text);
  else
    std::cout << text;
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
  SourceOpts src;
  CommonOpts common;
  std::string dot_path;
  std::string labels_path;
};

int run_generate(const GenerateOpts& opts) {
  LoadedGraph loaded = resolve_source(opts.src, opts.common.seed, "");
  const std::string g6 = histlab::emit_graph6(loaded.graph) + "\n";

  if (!opts.common.out_path.empty())
    write_file(opts.common.out_path, g6);
  else
    std::cout << g6;

  if (!opts.dot_path.empty())
    write_file(opts.dot_path, histlab::emit_dot(loaded.graph, loaded.labels ? &*loaded.labels : nullptr));

  if (loaded.labels) {
    std::string labels_path = opts.labels_path;
    if (labels_path.empty() && !opts.common.out_path.empty())
      labels_path = opts.common.out_path + ".roles.json";
    if (!labels_path.empty())
      write_file(labels_path, roles_to_json(*loaded.labels).dump(2) + "\n");
  }
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
  SourceOpts src;
  CommonOpts common;
  std::string labels_path;
  int k = 3;
  std::uint64_t threshold = 1'000'000;
  int samples = 100;
};

int run_verify(const VerifyOpts& opts) {
  const auto started = std::chrono::steady_clock::now();
  LoadedGraph loaded = resolve_source(opts.src, opts.common.seed, opts.labels_path);
  const histlab::Graph& g = loaded.graph;
  if (!histlab::is_connected(g)) throw std::invalid_argument("input graph is not connected");

  const histlab::BigCount count = histlab::spanning_tree_count(g);
  const bool enumerate = count <= histlab::BigCount(opts.threshold);

  ordered_json report = report_shell("verify", g);
  report["options"] = {{"k", opts.k},
                       {"threshold", opts.threshold},
                       {"budget", budget_json(opts.common)},
                       {"workers", opts.common.workers},
                       {"seed", opts.common.seed},
                       {"samples", opts.samples}};

  ordered_json results;
  results["vertices"] = g.vertex_count();
  results["edges"] = g.edge_count();
  results["min_degree"] = histlab::min_degree(g);
  results["spanning_tree_count"] = count.str();

  // decision method always runs
  const auto decision =
      histlab::exists_tree_all_internal_at_least(g, opts.k, make_budget(opts.common), opts.common.workers);

  ordered_json methods;
  methods["decision"] = {{"ran", true},
                         {"exists_tree_all_internal_at_least_k", tristate(decision.exists)},
                         {"nodes_expanded", decision.nodes_expanded},
                         {"witness_edges", tree_json(decision.witness)}};

  // enumeration method for small counts: full scan with profiles and, when
  // labels are present, a certificate check per tree
  std::optional<bool> enum_exists;
  histlab::BigCount enum_trees = 0;
  histlab::BigCount certificates_checked = 0;
  bool certificates_all_passed = true;
  std::optional<histlab::SpanningTree> enum_witness;
  if (enumerate) {
    std::mutex mutex;
    bool exists = false;
    auto visit = [&](const histlab::SpanningTree& t) {
      const auto profile = histlab::tree_profile(g, t);
      const bool ok = histlab::min_internal_at_least(profile, opts.k);
      std::optional<histlab::CertificateReport> cert;
      if (loaded.labels) cert = histlab::certificate_check(g, *loaded.labels, t);
      const std::lock_guard<std::mutex> lock(mutex);
      ++enum_trees;
      if (ok && !exists) {
        exists = true;
        enum_witness = t;
      }
      if (cert) {
        ++certificates_checked;
        if (!cert->all_passed()) certificates_all_passed = false;
      }
      return true;
    };
    if (opts.common.workers > 1)
      histlab::enumerate_spanning_trees_parallel(g, opts.common.workers, visit);
    else
      histlab::enumerate_spanning_trees(g, visit);
    enum_exists = exists;
    methods["enumeration"] = {{"ran", true},
                              {"trees_enumerated", enum_trees.str()},
                              {"exists_tree_all_internal_at_least_k", tristate(enum_exists)},
                              {"witness_edges", tree_json(enum_witness)}};
  } else {
    methods["enumeration"] = {{"ran", false}};
  }

  // certificate method: full when enumerating, sampled otherwise
  if (loaded.labels) {
    if (!enumerate) {
      std::mt19937_64 rng(opts.common.seed);
      for (int i = 0; i < opts.samples; ++i) {
        const auto tree = histlab::random_spanning_tree(g, rng);
        ++certificates_checked;
        if (!histlab::certificate_check(g, *loaded.labels, tree).all_passed())
          certificates_all_passed = false;
      }
    }
    methods["certificate"] = {{"ran", true},
                              {"mode", enumerate ? "full" : "sampled"},
                              {"trees_checked", certificates_checked.str()},
                              {"all_passed", certificates_all_passed}};
  } else {
    methods["certificate"] = {{"ran", false}};
  }
  results["methods"] = methods;

  // cross-method consistency
  bool inconsistent = false;
  std::string inconsistency;
  if (enumerate && enum_trees != count) {
    inconsistent = true;
    inconsistency = "enumeration count disagrees with matrix-tree determinant";
  }
  if (enumerate && decision.exists.has_value() && *decision.exists != *enum_exists) {
    inconsistent = true;
    inconsistency = "decision solver disagrees with exhaustive enumeration";
  }
  if (loaded.labels && certificates_checked > 0 && !certificates_all_passed) {
    inconsistent = true;
    inconsistency = "certificate check failed on a spanning tree";
  }
  results["methods_agree"] = !inconsistent;

  std::optional<bool> exists = decision.exists;
  if (!exists && enum_exists) exists = enum_exists;  // enumeration is exact
  std::string verdict = "INDETERMINATE";
  if (inconsistent)
    verdict = "INTERNAL-INCONSISTENCY";
  else if (exists.has_value())
    verdict = *exists ? "REFUTED-FOR-THIS-GRAPH" : "CONFIRMED";
  results["verdict"] = verdict;

  report["results"] = results;
  emit_report(report, opts.common, started);
  if (inconsistent) {
    std::cerr << "INTERNAL INCONSISTENCY: " << inconsistency << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

// ------------------------------------------------------------------- solve

struct SolveOpts {
  SourceOpts src;
  CommonOpts common;
  std::string labels_path;
  bool mmid = false;
  bool count = false;
  bool starfactor = false;
  bool maxleaf = false;
  double c = 1.0;
};

int run_solve(const SolveOpts& opts) {
  const auto started = std::chrono::steady_clock::now();
  const int chosen = (opts.mmid ? 1 : 0) + (opts.count ? 1 : 0) + (opts.starfactor ? 1 : 0) +
                     (opts.maxleaf ? 1 : 0);
  if (chosen != 1)
    throw CLI::ValidationError("solver",
                               "choose exactly one of --mmid, --count, --starfactor, --maxleaf");

  LoadedGraph loaded = resolve_source(opts.src, opts.common.seed, opts.labels_path);
  const histlab::Graph& g = loaded.graph;

  ordered_json report = report_shell("solve", g);
  report["options"] = {{"budget", budget_json(opts.common)},
                       {"workers", opts.common.workers},
                       {"seed", opts.common.seed},
                       {"c", opts.c}};
  ordered_json results;

  if (opts.count) {
    results["solver"] = "count";
    results["spanning_tree_count"] = histlab::spanning_tree_count(g).str();
    results["status"] = "exact";
  } else if (opts.mmid) {
    results["solver"] = "mmid";
    const auto r = histlab::max_min_internal_degree(g, make_budget(opts.common), opts.common.workers);
    if (r.no_internal)
      results["value"] = "no_internal";
    else if (r.value)
      results["value"] = *r.value;
    else
      results["value"] = nullptr;
    results["exhaustive"] = r.exhaustive;
    results["witness_edges"] = tree_json(r.witness);
    results["nodes_expanded"] = r.nodes_expanded;
    results["status"] = r.exhaustive ? "exact" : "indeterminate";
  } else if (opts.starfactor) {
    results["solver"] = "starfactor";
    const auto r = histlab::max_min_star_size(g, make_budget(opts.common), opts.common.workers);
    results["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
    results["exhaustive"] = r.exhaustive;
    results["witness_stars"] = stars_json(r.witness);
    results["nodes_expanded"] = r.nodes_expanded;
    const int d = histlab::min_degree(g);
    ordered_json bound;
    bound["c"] = opts.c;
    bound["d"] = d;
    bound["log"] = "natural";  // base change is absorbed into c
    bound["value"] = d >= 2 ? ordered_json(histlab::star_size_bound_real(opts.c, d)) : ordered_json(nullptr);
    results["star_size_bound"] = bound;
    results["status"] = r.exhaustive ? "exact" : "indeterminate";
  } else {
    results["solver"] = "maxleaf";
    const auto r = histlab::max_leaf_greedy(g);
    results["leaf_count"] = r.leaf_count;
    results["leaf_fraction"] =
        g.vertex_count() > 0 ? static_cast<double>(r.leaf_count) / g.vertex_count() : 0.0;
    results["tree_edges"] = edges_json(r.tree.edges);
    results["status"] = "heuristic";
  }

  report["results"] = results;
  emit_report(report, opts.common, started);
  return kExitOk;
}

// ------------------------------------------------------------------ report

struct ReportOpts {
  SourceOpts src;
  CommonOpts common;
};

int run_report(const ReportOpts& opts) {
  const auto started = std::chrono::steady_clock::now();
  LoadedGraph loaded = resolve_source(opts.src, opts.common.seed, "");
  const histlab::Graph& g = loaded.graph;

  ordered_json report = report_shell("report", g);
  ordered_json results;
  results["vertices"] = g.vertex_count();
  results["edges"] = g.edge_count();
  if (g.vertex_count() > 0) {
    results["min_degree"] = histlab::min_degree(g);
    results["max_degree"] = histlab::max_degree(g);
  } else {
    results["min_degree"] = nullptr;
    results["max_degree"] = nullptr;
  }
  results["connected"] = histlab::is_connected(g);
  const auto bridges = histlab::find_bridges(g);
  results["bridge_count"] = bridges.size();
  results["bridges"] = edges_json(bridges);
  results["spanning_tree_count"] = histlab::spanning_tree_count(g).str();
  report["results"] = results;
  emit_report(report, opts.common, started);
  return kExitOk;
}

void add_common_options(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--seed", common.seed, "seed for randomized construction and sampling");
  cmd->add_option("--budget-nodes", common.budget_nodes, "search node budget (absent = unbounded)");
  cmd->add_option("--budget-seconds", common.budget_seconds,
                  "wall-clock budget in seconds (absent = unbounded)");
  cmd->add_option("--workers", common.workers, "solver worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--timings", common.timings, "include wall_time_ms in the report");
  cmd->add_option("--out", common.out_path, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"histlab: exact solvers for spanning-tree internal degrees and star factors"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* generate = app.add_subcommand("generate", "build a graph and write graph6/DOT/role files");
  add_source_options(generate, gen.src, false);
  add_common_options(generate, gen.common);
  generate->add_option("--dot", gen.dot_path, "also write DOT to this file");
  generate->add_option("--labels", gen.labels_path, "write the role sidecar to this file");

  VerifyOpts ver;
  auto* verify = app.add_subcommand(
      "verify", "check whether every spanning tree has an internal vertex of degree 2");
  add_source_options(verify, ver.src, true);
  add_common_options(verify, ver.common);
  verify->add_option("--labels", ver.labels_path, "role sidecar for the certificate check");
  verify->add_option("--k", ver.k, "internal-degree threshold for the decision solver");
  verify->add_option("--threshold", ver.threshold,
                     "enumerate exhaustively when the tree count is at most this");
  verify->add_option("--samples", ver.samples,
                     "random trees to certificate-check when not enumerating");

  SolveOpts sol;
  auto* solve = app.add_subcommand("solve", "run one exact solver and report the optimum");
  add_source_options(solve, sol.src, true);
  add_common_options(solve, sol.common);
  solve->add_option("--labels", sol.labels_path, "role sidecar (optional)");
  solve->add_flag("--mmid", sol.mmid, "max over spanning trees of the min internal degree");
  solve->add_flag("--count", sol.count, "exact spanning-tree count (matrix-tree determinant)");
  solve->add_flag("--starfactor", sol.starfactor, "max over star factors of the min star size");
  solve->add_flag("--maxleaf", sol.maxleaf, "greedy max-leaf spanning tree heuristic");
  solve->add_option("--c", sol.c, "constant for the star-size bound juxtaposition");

  ReportOpts rep;
  auto* report = app.add_subcommand("report", "structural report: degrees, bridges, tree count");
  add_source_options(report, rep.src, true);
  add_common_options(report, rep.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (verify->parsed()) return run_verify(ver);
    if (solve->parsed()) return run_solve(sol);
    if (report->parsed()) return run_report(rep);
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
