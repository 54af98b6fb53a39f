// Command-line front end: solve single instances, run benchmark sweeps from
// a manifest, compare root relaxations, and generate instance families.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "indpath/bnb.hpp"
#include "indpath/cliques.hpp"
#include "indpath/graph.hpp"
#include "indpath/oracle.hpp"
#include "indpath/report.hpp"

namespace {

using namespace indpath;

double default_time_limit() {
  if (const char* env = std::getenv("INDPATH_TIME_LIMIT")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable INDPATH_TIME_LIMIT\n";
    }
  }
  return 1200.0;
}

struct LoadedInstance {
  std::string name;
  Graph graph;
  std::uint64_t seed = 0;
};

// An instance is either an edge-list file or an inline generator spec such
// as gen:ba:20:3:7, gen:theta:4, gen:star:3, gen:complete:5, gen:path:6,
// gen:tripartite:3.
LoadedInstance load_instance(const std::string& spec) {
  LoadedInstance li;
  if (spec.rfind("gen:", 0) == 0) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(spec.substr(4));
    while (std::getline(in, token, ':')) parts.push_back(token);
    if (parts.empty()) throw Error("empty generator spec");
    const auto arg = [&](std::size_t i) {
      if (i >= parts.size()) throw Error("generator spec '" + spec + "' is missing parameters");
      return std::stoi(parts[i]);
    };
    FamilySpec fs;
    if (parts[0] == "ba") {
      fs = FamilySpec::ba(arg(1), arg(2), parts.size() > 3 ? std::stoull(parts[3]) : 0);
      li.seed = fs.seed;
    } else if (parts[0] == "theta") {
      fs = FamilySpec::theta(arg(1));
    } else if (parts[0] == "star") {
      fs = FamilySpec::star(arg(1));
    } else if (parts[0] == "complete") {
      fs = FamilySpec::complete(arg(1));
    } else if (parts[0] == "path") {
      fs = FamilySpec::path(arg(1));
    } else if (parts[0] == "tripartite") {
      fs = FamilySpec::tripartite(arg(1));
    } else {
      throw Error("unknown family '" + parts[0] + "'");
    }
    li.graph = generate_family(fs);
    li.name = spec;
    return li;
  }

  ParseResult parsed = parse_edge_list_file(spec);
  if (parsed.duplicate_edges > 0)
    std::cerr << "warning: " << spec << ": collapsed " << parsed.duplicate_edges
              << " duplicate edge(s)\n";
  li.graph = std::move(parsed.graph);
  bool has_isolated = false;
  for (int v = 0; v < li.graph.num_nodes(); ++v)
    if (li.graph.degree(v) == 0) has_isolated = true;
  if (has_isolated && li.graph.num_nodes() > 1) {
    CompactResult compact = compact_ids(li.graph);
    std::cerr << "note: " << spec << ": remapped sparse node ids; kept "
              << compact.graph.num_nodes() << " of " << li.graph.num_nodes() << " ids (";
    for (std::size_t i = 0; i < compact.old_ids.size() && i < 8; ++i)
      std::cerr << (i ? " " : "") << i << "<-" << compact.old_ids[i];
    std::cerr << (compact.old_ids.size() > 8 ? " ...)\n" : ")\n");
    li.graph = std::move(compact.graph);
  }
  li.name = std::filesystem::path(spec).stem().string();
  return li;
}

ModelConfig config_from_flags(const std::string& model, bool frac_sep, bool node_vars,
                              bool cliques, int clique_bound) {
  ModelConfig cfg;
  if (model == "walk")
    cfg.formulation = ModelConfig::Formulation::walk;
  else if (model == "cut")
    cfg.formulation = ModelConfig::Formulation::cut;
  else if (model == "flow")
    cfg.formulation = ModelConfig::Formulation::flow;
  else
    throw Error("unknown model '" + model + "'");
  cfg.fractional_separation = frac_sep;
  cfg.node_variables = node_vars;
  cfg.clique_constraints = cliques || clique_bound > 0;
  if (clique_bound > 0) cfg.clique_size_bound = clique_bound;
  cfg.validate();
  return cfg;
}

int cmd_solve(const std::string& instance_spec, const ModelConfig& cfg, double time_limit,
              const std::string& format, const std::string& dump_lp) {
  LoadedInstance li = load_instance(instance_spec);
  if (li.graph.num_nodes() > 2 && !is_connected(li.graph)) {
    const auto [a, b] = find_separated_pair(li.graph);
    throw Error("instance is disconnected (nodes " + std::to_string(a) + " and " +
                std::to_string(b) + " are separated); solve each component separately");
  }
  if (!dump_lp.empty() && li.graph.num_nodes() >= 2) {
    std::ofstream out(dump_lp);
    if (!out) throw Error("cannot write '" + dump_lp + "'");
    if (cfg.formulation == ModelConfig::Formulation::walk) {
      write_lp_text(build_walk(li.graph, diameter(li.graph)).lp, out);
    } else {
      const AugmentedGraph ag(li.graph);
      const ModelInstance mi = cfg.formulation == ModelConfig::Formulation::cut
                                   ? build_cut(ag, cfg)
                                   : build_flow(ag, cfg);
      write_lp_text(mi.lp, out);
    }
  }
  SolveLimits limits;
  limits.time_limit_seconds = time_limit;
  const SolveResult result = solve(li.graph, cfg, limits);
  const RunRecord record = make_record(li.name, li.graph, cfg, result, li.seed);
  if (format == "json")
    std::cout << to_json(record) << '\n';
  else if (format == "csv")
    std::cout << csv_header() << '\n' << to_csv_row(record) << '\n';
  else
    print_text(record, std::cout);
  return result.status == SolveOutcome::timeout ? 2 : 0;
}

struct BenchTask {
  std::string instance;
  std::string config;
};

int cmd_bench(const std::string& manifest_path, int jobs, double time_limit) {
  std::ifstream in(manifest_path);
  if (!in) throw Error("cannot open manifest '" + manifest_path + "'");
  std::vector<std::string> instances, configs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind, rest;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (!(ls >> rest))
      throw Error("manifest line " + std::to_string(line_no) + ": expected a value");
    if (kind == "instance")
      instances.push_back(rest);
    else if (kind == "config")
      configs.push_back(rest);
    else
      throw Error("manifest line " + std::to_string(line_no) + ": unknown directive '" +
                  kind + "'");
  }

  std::vector<BenchTask> tasks;
  for (const std::string& inst : instances)
    for (const std::string& cfg : configs) tasks.push_back({inst, cfg});

  std::vector<RunRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex io_mutex;
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      RunRecord& r = results[i];
      r.instance = tasks[i].instance;
      r.config = tasks[i].config;
      try {
        const ModelConfig cfg = config_from_string(tasks[i].config);
        LoadedInstance li = load_instance(tasks[i].instance);
        SolveLimits limits;
        limits.time_limit_seconds = time_limit;
        const SolveResult result = solve(li.graph, cfg, limits);
        r = make_record(li.name, li.graph, cfg, result, li.seed);
      } catch (const std::exception& e) {
        r.status = "error";
        const std::lock_guard<std::mutex> lock(io_mutex);
        std::cerr << "error: " << tasks[i].instance << " / " << tasks[i].config << ": "
                  << e.what() << '\n';
      }
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::cout << csv_header() << '\n';
  for (const RunRecord& r : results) {
    RunRecord flat = r;
    flat.path.clear();
    std::cout << to_csv_row(flat) << '\n';
  }
  return 0;
}

int cmd_analyze(const std::vector<std::string>& instance_specs, int clique_bound,
                double time_limit) {
  std::cout << "instance,n,m,opt,root_lp,root_lp_cliques,improvement_pct,max_clique,flag\n";
  for (const std::string& spec : instance_specs) {
    LoadedInstance li = load_instance(spec);
    ModelConfig plain;
    plain.formulation = ModelConfig::Formulation::cut;
    ModelConfig with_cliques = plain;
    with_cliques.clique_constraints = true;
    if (clique_bound > 0) with_cliques.clique_size_bound = clique_bound;

    const RootRelaxation root_plain = root_relaxation(li.graph, plain);
    const RootRelaxation root_cl = root_relaxation(li.graph, with_cliques);

    ModelConfig solve_cfg = plain;
    solve_cfg.node_variables = true;
    SolveLimits limits;
    limits.time_limit_seconds = time_limit;
    const SolveResult result = solve(li.graph, solve_cfg, limits);

    std::size_t max_clique = 0;
    for (const Clique& q : enumerate_maximal_cliques(li.graph))
      max_clique = std::max(max_clique, q.nodes.size());

    const double improvement =
        root_plain.lp_value > 0
            ? 100.0 * (root_plain.lp_value - root_cl.lp_value) / root_plain.lp_value
            : 0.0;
    std::cout << li.name << ',' << li.graph.num_nodes() << ',' << li.graph.num_edges() << ','
              << result.opt_value << ',' << root_plain.lp_value << ',' << root_cl.lp_value
              << ',' << improvement << ',' << max_clique << ','
              << (root_plain.hit_round_cap || root_cl.hit_round_cap
                      ? "capped"
                      : (result.status == SolveOutcome::optimal ? "ok" : "timeout"))
              << '\n';
  }
  return 0;
}

int cmd_generate(const std::string& kind, int n, int d, int k, int l, int parts,
                 const std::string& seeds, const std::string& out_dir) {
  std::uint64_t seed_lo = 0, seed_hi = 0;
  if (!seeds.empty()) {
    const auto dots = seeds.find("..");
    if (dots == std::string::npos) {
      seed_lo = seed_hi = std::stoull(seeds);
    } else {
      seed_lo = std::stoull(seeds.substr(0, dots));
      seed_hi = std::stoull(seeds.substr(dots + 2));
    }
  }
  std::filesystem::create_directories(out_dir);
  const auto emit = [&](const FamilySpec& fs, const std::string& name) {
    const Graph g = generate_family(fs);
    const std::string path = out_dir + "/" + name + ".edgelist";
    write_edge_list_file(g, path);
    std::cout << path << " n=" << g.num_nodes() << " m=" << g.num_edges() << '\n';
  };
  if (kind == "ba") {
    if (n <= 0 || d <= 0) throw Error("ba needs --n and --d");
    for (std::uint64_t s = seed_lo; s <= seed_hi; ++s)
      emit(FamilySpec::ba(n, d, s),
           "ba_" + std::to_string(n) + "_" + std::to_string(d) + "_" + std::to_string(s));
  } else if (kind == "theta") {
    if (l <= 0) throw Error("theta needs --l");
    emit(FamilySpec::theta(l), "theta_" + std::to_string(l));
  } else if (kind == "star") {
    if (l <= 0) throw Error("star needs --l");
    emit(FamilySpec::star(l), "star_" + std::to_string(l));
  } else if (kind == "complete") {
    if (k <= 0) throw Error("complete needs --k");
    emit(FamilySpec::complete(k), "complete_" + std::to_string(k));
  } else if (kind == "path") {
    if (n <= 0) throw Error("path needs --n");
    emit(FamilySpec::path(n), "path_" + std::to_string(n));
  } else if (kind == "tripartite") {
    if (parts <= 0) throw Error("tripartite needs --parts");
    emit(FamilySpec::tripartite(parts), "tripartite_" + std::to_string(parts));
  } else {
    throw Error("unknown family '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for longest induced paths"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance to optimality");
  std::string model = "cut", format = "text", instance, dump_lp;
  bool frac_sep = false, node_vars = false, cliques = false;
  int clique_bound = 0;
  double time_limit = default_time_limit();
  solve_cmd->add_option("--model", model, "walk|cut|flow")->default_val("cut");
  solve_cmd->add_flag("--frac-sep", frac_sep, "fractional separation (cut model)");
  solve_cmd->add_flag("--node-vars", node_vars, "branch on node variables");
  solve_cmd->add_flag("--cliques", cliques, "add maximal clique constraints");
  solve_cmd->add_option("--clique-bound", clique_bound, "all cliques up to this size");
  solve_cmd->add_option("--time-limit", time_limit, "seconds");
  solve_cmd->add_option("--format", format, "text|json|csv")->default_val("text");
  solve_cmd->add_option("--dump-lp", dump_lp, "write the model as LP text");
  solve_cmd->add_option("instance", instance, "edge-list file or gen: spec")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run a manifest of instances x configs");
  std::string manifest;
  int jobs = 1;
  double bench_limit = default_time_limit();
  bench_cmd->add_option("manifest", manifest, "manifest file")->required();
  bench_cmd->add_option("--jobs", jobs, "parallel workers");
  bench_cmd->add_option("--time-limit", bench_limit, "seconds per run");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Root relaxation strength per instance");
  std::vector<std::string> analyze_instances;
  int analyze_bound = 0;
  double analyze_limit = default_time_limit();
  analyze_cmd->add_option("instances", analyze_instances, "edge-list files or gen: specs")
      ->required();
  analyze_cmd->add_option("--clique-bound", analyze_bound, "all cliques up to this size");
  analyze_cmd->add_option("--time-limit", analyze_limit, "seconds per solve");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Write instance files");
  std::string kind, seeds, out_dir = ".";
  int gen_n = 0, gen_d = 0, gen_k = 0, gen_l = 0, gen_parts = 0;
  gen_cmd->add_option("kind", kind, "ba|theta|star|complete|path|tripartite")->required();
  gen_cmd->add_option("--n", gen_n, "node count");
  gen_cmd->add_option("--d", gen_d, "attachment degree (ba)");
  gen_cmd->add_option("--k", gen_k, "clique size (complete)");
  gen_cmd->add_option("--l", gen_l, "parameter (theta/star)");
  gen_cmd->add_option("--parts", gen_parts, "parts of size 3 (tripartite)");
  gen_cmd->add_option("--seeds", seeds, "seed or range a..b (ba)");
  gen_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (solve_cmd->parsed())
      return cmd_solve(instance,
                       config_from_flags(model, frac_sep, node_vars, cliques, clique_bound),
                       time_limit, format, dump_lp);
    if (bench_cmd->parsed()) return cmd_bench(manifest, jobs, bench_limit);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_instances, analyze_bound, analyze_limit);
    if (gen_cmd->parsed())
      return cmd_generate(kind, gen_n, gen_d, gen_k, gen_l, gen_parts, seeds, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
