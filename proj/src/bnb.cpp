#include "indpath/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <set>

namespace indpath {

namespace {

constexpr double kIntTol = 1e-6;
constexpr int kMaxFracRoundsPerNode = 10;
constexpr int kRootRoundCap = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_integral(double v) { return std::fabs(v - std::round(v)) <= kIntTol; }

int floor_bound(double lp_value) {
  return static_cast<int>(std::floor(lp_value + kIntTol));
}

struct TreeNode {
  long id = 0;
  double bound = lp::kInfinity;
  int depth = 0;
  std::vector<std::pair<int, int>> fixes;  // (variable, 0/1)
};

struct NodeOrder {
  // Best bound first, then deeper, then earlier-created.
  bool operator()(const TreeNode& a, const TreeNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

// Deduplication of cut rows by (W, witness).
using CutKey = std::pair<std::vector<int>, int>;

// The active support of a rounded point, as adjacency over V*.
std::vector<std::vector<int>> active_adjacency(const AugmentedGraph& ag,
                                               const std::vector<double>& x_edges,
                                               int* num_active) {
  std::vector<std::vector<int>> active(ag.base().num_nodes() + 1);
  *num_active = 0;
  for (int e = 0; e < ag.num_edges(); ++e) {
    if (std::round(x_edges[e]) != 1.0) continue;
    const auto [u, v] = ag.edge_at(e);
    active[u].push_back(v);
    active[v].push_back(u);
    ++*num_active;
  }
  return active;
}

bool is_single_s_cycle(const AugmentedGraph& ag, const std::vector<double>& x_edges) {
  int num_active = 0;
  const auto active = active_adjacency(ag, x_edges, &num_active);
  const int s = ag.s();
  if (active[s].size() != 2) return false;
  int prev = s;
  int cur = std::min(active[s][0], active[s][1]);
  int steps = 0;
  while (cur != s) {
    if (active[cur].size() != 2) return false;
    if (++steps > ag.base().num_nodes()) return false;
    const int next = active[cur][0] == prev ? active[cur][1] : active[cur][0];
    prev = cur;
    cur = next;
  }
  return steps + 1 == num_active;
}

class BranchAndCut {
 public:
  BranchAndCut(const Graph& g, const ModelConfig& cfg, const SolveLimits& limits)
      : g_(g), cfg_(cfg), limits_(limits), start_(Clock::now()) {
    cfg_.validate();
  }

  SolveResult run() {
    SolveResult result;
    if (short_circuit(result)) return result;
    if (!is_connected(g_)) {
      const auto [a, b] = find_separated_pair(g_);
      throw Error("graph is disconnected (nodes " + std::to_string(a) + " and " +
                  std::to_string(b) + " are separated); solve each component separately");
    }
    if (cfg_.formulation == ModelConfig::Formulation::walk) return run_walk_loop();

    ag_.emplace(g_);
    ModelInstance mi = cfg_.formulation == ModelConfig::Formulation::cut
                           ? build_cut(*ag_, cfg_)
                           : build_flow(*ag_, cfg_);
    lp_ = std::move(mi.lp);
    vm_ = std::move(mi.vm);
    return branch_and_bound();
  }

  SolveResult run_fixed_walk(int horizon) {
    SolveResult result;
    ModelInstance mi = build_walk(g_, horizon);
    lp_ = std::move(mi.lp);
    vm_ = std::move(mi.vm);
    return branch_and_bound();
  }

 private:
  bool short_circuit(SolveResult& result) const {
    if (g_.num_nodes() == 0) {
      result = {SolveOutcome::optimal, 0, 0.0, {}, {}};
      return true;
    }
    if (g_.num_nodes() == 1) {
      result = {SolveOutcome::optimal, 0, 0.0, {0}, {}};
      return true;
    }
    if (g_.num_nodes() == 2 && g_.num_edges() == 1) {
      result = {SolveOutcome::optimal, 1, 1.0, {0, 1}, {}};
      return true;
    }
    return false;
  }

  SolveResult run_walk_loop() {
    SolveResult total;
    int horizon = cfg_.walk_horizon ? *cfg_.walk_horizon : diameter(g_);
    const int n = g_.num_nodes();
    while (true) {
      BranchAndCut inner(g_, cfg_, remaining_limits());
      SolveResult res = inner.run_fixed_walk(horizon);
      total.stats.bnb_nodes += res.stats.bnb_nodes;
      total.stats.lp_pivots += res.stats.lp_pivots;
      total.stats.root_lp_value = res.stats.root_lp_value;
      total.stats.wall_time_seconds = seconds_since(start_);
      if (res.status != SolveOutcome::optimal) {
        total.status = SolveOutcome::timeout;
        if (res.opt_value > total.opt_value && !res.path.empty()) {
          total.opt_value = res.opt_value;
          total.path = std::move(res.path);
        }
        total.dual_bound = horizon;
        return total;
      }
      if (res.opt_value > total.opt_value || total.path.empty()) {
        total.opt_value = res.opt_value;
        total.path = std::move(res.path);
      }
      const bool used_all = res.opt_value == horizon;
      if (cfg_.walk_horizon || !used_all || horizon + 1 > n - 1) {
        total.status = SolveOutcome::optimal;
        total.dual_bound = total.opt_value;
        total.stats.wall_time_seconds = seconds_since(start_);
        return total;
      }
      ++horizon;
    }
  }

  SolveLimits remaining_limits() const {
    SolveLimits lim = limits_;
    lim.time_limit_seconds = std::max(0.0, limits_.time_limit_seconds - seconds_since(start_));
    return lim;
  }

  bool out_of_time() const {
    return seconds_since(start_) > limits_.time_limit_seconds;
  }

  // ---- tree search ----

  SolveResult branch_and_bound() {
    SolveResult result;
    std::priority_queue<TreeNode, std::vector<TreeNode>, NodeOrder> open;
    open.push(TreeNode{next_node_id_++, lp::kInfinity, 0, {}});

    while (!open.empty()) {
      if (out_of_time() || (limits_.node_limit > 0 && stats_.bnb_nodes >= limits_.node_limit)) {
        finish(result, SolveOutcome::timeout, open.empty() ? -lp::kInfinity : open.top().bound);
        return result;
      }
      TreeNode node = open.top();
      open.pop();
      if (have_incumbent() && floor_bound(node.bound) <= incumbent_value_) continue;

      ++stats_.bnb_nodes;
      process_node(node, open);
    }
    finish(result, SolveOutcome::optimal, -lp::kInfinity);
    return result;
  }

  void finish(SolveResult& result, SolveOutcome status, double best_open_bound) {
    result.stats = stats_;
    result.stats.wall_time_seconds = seconds_since(start_);
    result.path = incumbent_path_;
    result.opt_value = std::max(incumbent_value_, 0);
    // A path never has more than n-1 edges; this also tames the untouched
    // root's infinite bound.
    double bound = std::min(best_open_bound, static_cast<double>(g_.num_nodes() - 1));
    if (have_incumbent()) bound = std::max(bound, static_cast<double>(incumbent_value_));
    if (status == SolveOutcome::optimal) {
      if (!have_incumbent()) {
        result.status = SolveOutcome::infeasible;
        return;
      }
      result.status = SolveOutcome::optimal;
      result.dual_bound = incumbent_value_;
      return;
    }
    result.dual_bound = floor_bound(bound);
    // The tree may have closed the gap exactly when the limit struck.
    result.status = (have_incumbent() && result.dual_bound <= incumbent_value_)
                        ? SolveOutcome::optimal
                        : status;
  }

  bool have_incumbent() const { return incumbent_value_ >= 0; }

  void process_node(TreeNode& node,
                    std::priority_queue<TreeNode, std::vector<TreeNode>, NodeOrder>& open) {
    // Apply this node's branching fixes, restoring on exit.
    std::vector<std::pair<int, std::pair<double, double>>> saved;
    saved.reserve(node.fixes.size());
    const auto apply_fix = [&](int var, int val) {
      saved.emplace_back(var, std::make_pair(lp_.lower[var], lp_.upper[var]));
      lp_.lower[var] = lp_.upper[var] = val;
    };
    for (const auto& [var, val] : node.fixes) apply_fix(var, val);
    struct Restore {
      lp::LinearProgram& lp;
      std::vector<std::pair<int, std::pair<double, double>>>& saved;
      ~Restore() {
        for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
          lp.lower[it->first] = it->second.first;
          lp.upper[it->first] = it->second.second;
        }
      }
    } restore{lp_, saved};

    int frac_rounds = 0;
    bool fixed_node_vars = false;
    const bool is_root = node.id == 0;
    while (true) {
      lp::SolveOptions lp_opts;
      lp_opts.time_limit_seconds =
          std::max(0.01, limits_.time_limit_seconds - seconds_since(start_));
      lp::LpSolution sol = lp::lp_solve(lp_, nullptr, lp_opts);
      stats_.lp_pivots += sol.pivots;
      if (sol.status == lp::SolveStatus::infeasible) return;
      if (sol.status == lp::SolveStatus::iteration_limit) {
        if (out_of_time()) {
          // Requeue so the final dual bound still covers this subtree.
          open.push(node);
          return;
        }
        throw Error("LP iteration limit hit inside branch and bound");
      }
      node.bound = sol.objective_value;
      if (is_root) stats_.root_lp_value = sol.objective_value;
      if (have_incumbent() && floor_bound(node.bound) <= incumbent_value_) return;

      const bool walk = cfg_.formulation == ModelConfig::Formulation::walk;
      std::vector<double> branch_values(vm_.branch_vars.size());
      for (std::size_t i = 0; i < branch_values.size(); ++i)
        branch_values[i] = sol.primal[vm_.branch_vars[i]];
      const bool branch_integral =
          std::all_of(branch_values.begin(), branch_values.end(), is_integral);

      if (branch_integral) {
        if (walk) {
          accept_walk_incumbent(sol);
          return;
        }
        // With node variables the edge values are implied; re-solve with the
        // node variables pinned if roundoff left an x fractional.
        std::vector<double> x(sol.primal.begin(), sol.primal.begin() + vm_.num_x);
        if (!std::all_of(x.begin(), x.end(), is_integral)) {
          if (!vm_.y_offset || fixed_node_vars)
            throw Error("integral branching variables left fractional edges");
          fixed_node_vars = true;
          for (std::size_t i = 0; i < branch_values.size(); ++i)
            apply_fix(vm_.branch_vars[i],
                      static_cast<int>(std::round(branch_values[i])));
          continue;
        }
        for (double& v : x) v = std::round(v);
        ++stats_.separation_calls;
        std::vector<CutConstraint> cuts = separate_integral(*ag_, x);
        if (!cuts.empty()) {
          const long added = add_cuts(cuts);
          if (added == 0)
            throw Error("integral point violates a cut already in the pool");
          if (cfg_.formulation == ModelConfig::Formulation::flow)
            throw Error("flow solution is disconnected from s");
          continue;
        }
        if (!is_single_s_cycle(*ag_, x)) {
          // Connected through s but not one clean cycle (a mid-path star
          // edge can hide a dangling piece from the component check). The
          // exact flow-based separation still sees any violated cut; a
          // clean point with a malformed support can only be the
          // zero-objective two-star degenerate case, which no optimum of a
          // connected graph on three or more nodes lives below.
          ++stats_.separation_calls;
          std::vector<CutConstraint> fcuts = separate_fractional(*ag_, x);
          if (!fcuts.empty() && add_cuts(fcuts) > 0) continue;
          if (std::round(sol.objective_value) != 0.0)
            throw Error("pathless integral point with nonzero objective survived separation");
          return;
        }
        accept_cycle_incumbent(x, sol.objective_value);
        return;
      }

      if (cfg_.formulation == ModelConfig::Formulation::cut && cfg_.fractional_separation &&
          frac_rounds < kMaxFracRoundsPerNode && !out_of_time()) {
        std::vector<double> x(sol.primal.begin(), sol.primal.begin() + vm_.num_x);
        ++stats_.separation_calls;
        std::vector<CutConstraint> cuts = separate_fractional(*ag_, x);
        if (!cuts.empty() && add_cuts(cuts) > 0) {
          ++frac_rounds;
          continue;
        }
      }

      // Branch on the most fractional variable.
      const int local = pick_branch_index(branch_values);
      const int var = vm_.branch_vars[local];
      for (int val : {1, 0}) {
        TreeNode child;
        child.id = next_node_id_++;
        child.bound = node.bound;
        child.depth = node.depth + 1;
        child.fixes = node.fixes;
        child.fixes.emplace_back(var, val);
        open.push(std::move(child));
      }
      return;
    }
  }

  long add_cuts(const std::vector<CutConstraint>& cuts) {
    long added = 0;
    for (const CutConstraint& cut : cuts) {
      CutKey key{cut.node_set, cut.witness};
      if (!cut_pool_.insert(std::move(key)).second) continue;
      lp_.append_row(cut.to_row(*ag_));
      ++added;
    }
    stats_.cuts_added += added;
    return added;
  }

  void accept_cycle_incumbent(const std::vector<double>& x, double objective) {
    std::vector<int> path = extract_path(*ag_, x);
    if (!is_induced_path(g_, path))
      throw Error("internal error: extracted certificate is not an induced path");
    const int value = static_cast<int>(path.size()) - 1;
    if (value != static_cast<int>(std::round(objective)))
      throw Error("internal error: certificate length disagrees with the objective");
    if (value > incumbent_value_) {
      incumbent_value_ = value;
      incumbent_path_ = std::move(path);
    }
  }

  void accept_walk_incumbent(const lp::LpSolution& sol) {
    const int steps = vm_.horizon + 1;
    std::vector<int> path;
    for (int t = 0; t < steps; ++t) {
      int visited = -1;
      for (int v = 0; v < g_.num_nodes(); ++v) {
        if (std::round(sol.primal[*vm_.w_offset + v * steps + t]) == 1.0) {
          visited = v;
          break;
        }
      }
      if (visited == -1) break;  // timesteps are a prefix
      path.push_back(visited);
    }
    if (path.empty()) return;  // the empty walk carries no certificate
    if (!is_induced_path(g_, path))
      throw Error("internal error: walk certificate is not an induced path");
    const int value = static_cast<int>(path.size()) - 1;
    if (value != static_cast<int>(std::round(sol.objective_value)))
      throw Error("internal error: walk certificate disagrees with the objective");
    if (value > incumbent_value_) {
      incumbent_value_ = value;
      incumbent_path_ = std::move(path);
    }
  }

  const Graph& g_;
  ModelConfig cfg_;
  SolveLimits limits_;
  Clock::time_point start_;
  std::optional<AugmentedGraph> ag_;
  lp::LinearProgram lp_;
  VariableMap vm_;
  SolveStats stats_;
  std::set<CutKey> cut_pool_;
  long next_node_id_ = 0;
  int incumbent_value_ = -1;
  std::vector<int> incumbent_path_;
};

}  // namespace

int pick_branch_index(const std::vector<double>& values) {
  int best = -1;
  double best_dist = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (is_integral(values[i])) continue;
    const double dist = std::fabs(values[i] - 0.5);
    if (best == -1 || dist < best_dist - 1e-12) {
      best = static_cast<int>(i);
      best_dist = dist;
    }
  }
  if (best == -1) throw Error("no fractional variable to branch on");
  return best;
}

std::vector<int> extract_path(const AugmentedGraph& ag, const std::vector<double>& x_edges) {
  int num_active = 0;
  const auto active = active_adjacency(ag, x_edges, &num_active);
  const int s = ag.s();
  if (active[s].size() != 2)
    throw Error("active subgraph has " + std::to_string(active[s].size()) +
                " star edges, expected 2");
  std::vector<int> path;
  int prev = s;
  int cur = std::min(active[s][0], active[s][1]);
  while (cur != s) {
    if (active[cur].size() != 2 || static_cast<int>(path.size()) > ag.base().num_nodes())
      throw Error("active subgraph is not a single cycle through s");
    path.push_back(cur);
    const int next = active[cur][0] == prev ? active[cur][1] : active[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(path.size()) + 1 != num_active)
    throw Error("active subgraph has a cycle avoiding s");
  return path;
}

SolveResult solve(const Graph& g, const ModelConfig& cfg, const SolveLimits& limits) {
  BranchAndCut solver(g, cfg, limits);
  return solver.run();
}

SolveResult walk_solve_loop(const Graph& g, const SolveLimits& limits) {
  ModelConfig cfg;
  cfg.formulation = ModelConfig::Formulation::walk;
  return solve(g, cfg, limits);
}

RootRelaxation root_relaxation(const Graph& g, const ModelConfig& cfg) {
  cfg.validate();
  if (cfg.formulation == ModelConfig::Formulation::walk)
    throw Error("root relaxation applies to the cut and flow formulations");
  const AugmentedGraph ag(g);
  RootRelaxation out;
  if (cfg.formulation == ModelConfig::Formulation::flow) {
    ModelInstance mi = build_flow(ag, cfg);
    const lp::LpSolution sol = lp::lp_solve(mi.lp);
    if (sol.status != lp::SolveStatus::optimal) throw Error("flow root LP did not solve");
    out.lp_value = sol.objective_value;
    return out;
  }
  ModelInstance mi = build_cut(ag, cfg);
  std::set<CutKey> pool;
  lp::Basis basis;
  for (out.rounds = 0; out.rounds < kRootRoundCap; ++out.rounds) {
    const lp::LpSolution sol = lp::lp_solve(mi.lp, basis.empty() ? nullptr : &basis);
    if (sol.status != lp::SolveStatus::optimal) throw Error("cut root LP did not solve");
    basis = sol.basis;
    out.lp_value = sol.objective_value;
    std::vector<double> x(sol.primal.begin(), sol.primal.begin() + mi.vm.num_x);
    long added = 0;
    for (const CutConstraint& cut : separate_fractional(ag, x)) {
      CutKey key{cut.node_set, cut.witness};
      if (!pool.insert(std::move(key)).second) continue;
      mi.lp.append_row(cut.to_row(ag));
      ++added;
    }
    if (added == 0) return out;
    out.cuts += added;
  }
  out.hit_round_cap = true;
  return out;
}

}  // namespace indpath
