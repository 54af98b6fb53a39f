#pragma once

#include <optional>
#include <vector>

#include "indpath/cliques.hpp"
#include "indpath/graph.hpp"
#include "indpath/lp.hpp"

namespace indpath {

struct ModelConfig {
  enum class Formulation { walk, cut, flow };
  Formulation formulation = Formulation::cut;
  bool node_variables = false;
  bool clique_constraints = false;
  std::optional<int> clique_size_bound;  // absent: maximal cliques only
  bool fractional_separation = false;    // cut only
  std::optional<int> walk_horizon;       // walk only
  void validate() const;
};

/// Where each variable family lives inside the LP. x variables are
/// identified with E* edge indices; the other families are appended blocks.
struct VariableMap {
  int num_x = 0;                    // |E*|
  std::optional<int> y_offset;      // y_v at y_offset + v
  std::optional<int> z_offset;      // z^v_a at z_offset + v*num_arcs + a
  int num_arcs = 0;                 // |A*| = 2|E*|
  std::optional<int> w_offset;      // walk variable (v,t) at w_offset + v*(horizon+1) + t
  int horizon = 0;
  std::vector<int> branch_vars;     // the integer variables, ascending
};

struct ModelInstance {
  lp::LinearProgram lp;
  VariableMap vm;
};

// Core cycle model on G*: select exactly two star edges; every edge of E is
// adjacent to at most two selected edges, and to at least two when selected
// itself. Connectivity is not enforced here.
ModelInstance build_base(const AugmentedGraph& ag);

// Base model plus the configured strengthenings. Cut rows are not
// materialized; the separation routines supply them lazily.
ModelInstance build_cut(const AugmentedGraph& ag, const ModelConfig& cfg);

// Base model plus a commodity flow certifying connectivity to s: each
// participating node ships 2 units to s over selected edges.
ModelInstance build_flow(const AugmentedGraph& ag, const ModelConfig& cfg);

// Timed-walk model with horizon T: one variable per (node, timestep).
ModelInstance build_walk(const Graph& g, int horizon);

// One row per clique Q: at most one selected edge inside Q. Cliques must
// have size >= 3 and are re-validated against the graph.
void add_clique_constraints(lp::LinearProgram& lp, const VariableMap& vm,
                            const AugmentedGraph& ag, const std::vector<Clique>& cliques);

// y_v in [0,1] with 2 y_v = sum of selected edges at v; makes y the sole
// branching variables and relaxes x to continuous.
void add_node_variables(lp::LinearProgram& lp, VariableMap& vm, const AugmentedGraph& ag);

}  // namespace indpath
