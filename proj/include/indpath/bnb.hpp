#pragma once

#include <vector>

#include "indpath/graph.hpp"
#include "indpath/model.hpp"
#include "indpath/separation.hpp"

namespace indpath {

struct SolveLimits {
  double time_limit_seconds = 1200.0;
  long node_limit = 0;  // 0: unlimited
};

struct SolveStats {
  double root_lp_value = 0.0;
  long bnb_nodes = 0;
  long cuts_added = 0;
  long separation_calls = 0;
  double wall_time_seconds = 0.0;
  long lp_pivots = 0;
};

enum class SolveOutcome { optimal, timeout, infeasible };

struct SolveResult {
  SolveOutcome status = SolveOutcome::optimal;
  int opt_value = 0;           // edge count; best incumbent on timeout
  double dual_bound = 0.0;     // certified upper bound
  std::vector<int> path;       // certificate, passes is_induced_path
  SolveStats stats;
};

// Exact solve of the given formulation by LP-based best-first branch and
// bound with lazy cut separation. Requires a connected graph.
SolveResult solve(const Graph& g, const ModelConfig& cfg, const SolveLimits& limits = {});

struct RootRelaxation {
  double lp_value = 0.0;
  int rounds = 0;
  long cuts = 0;
  bool hit_round_cap = false;  // value is only an upper bound then
};

// Cutting-plane loop at the root with exact fractional separation until no
// cut of family (2a)-shape remains violated; a flow model is one LP solve.
RootRelaxation root_relaxation(const Graph& g, const ModelConfig& cfg);

// The walk pipeline: start at the diameter and raise the horizon until the
// optimum stays below it.
SolveResult walk_solve_loop(const Graph& g, const SolveLimits& limits = {});

// Recovers the node sequence of the induced path from an integral,
// separation-clean point: walks the unique cycle through s and drops s.
std::vector<int> extract_path(const AugmentedGraph& ag, const std::vector<double>& x_edges);

// Branching rule: index of the entry farthest from integral (closest to
// one half), ties to the lowest index. Throws if everything is integral.
int pick_branch_index(const std::vector<double>& values);

}  // namespace indpath
