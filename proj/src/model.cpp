#include "indpath/model.hpp"

#include <algorithm>

namespace indpath {

void ModelConfig::validate() const {
  if (fractional_separation && formulation != Formulation::cut)
    throw Error("fractional separation requires the cut formulation");
  if (walk_horizon && formulation != Formulation::walk)
    throw Error("walk horizon requires the walk formulation");
  if (formulation == Formulation::walk && (node_variables || clique_constraints))
    throw Error("node variables / clique constraints do not apply to the walk formulation");
  if (clique_size_bound && !clique_constraints)
    throw Error("clique size bound requires clique constraints");
  if (clique_size_bound && *clique_size_bound < 2)
    throw Error("clique size bound must be >= 2");
}

ModelInstance build_base(const AugmentedGraph& ag) {
  ModelInstance mi;
  const int n = ag.base().num_nodes();
  const int m = ag.base().num_edges();
  mi.vm.num_x = ag.num_edges();
  for (int e = 0; e < ag.num_edges(); ++e)
    mi.lp.add_variable(e < m ? 1.0 : 0.0, 0.0, 1.0);

  lp::Row star;
  star.rel = lp::Relation::equal;
  star.rhs = 2.0;
  for (int v = 0; v < n; ++v) star.coeffs.emplace_back(ag.star_edge_index(v), 1.0);
  mi.lp.append_row(star);

  for (int e = 0; e < m; ++e) {
    const auto [u, v] = ag.edge_at(e);
    std::vector<std::pair<int, double>> adjacent;
    for (int f : ag.incident_edges(u))
      if (f != e) adjacent.emplace_back(f, 1.0);
    for (int f : ag.incident_edges(v))
      if (f != e) adjacent.emplace_back(f, 1.0);

    lp::Row lower;  // selected edges have two selected neighbors
    lower.rel = lp::Relation::greater_equal;
    lower.rhs = 0.0;
    lower.coeffs = adjacent;
    lower.coeffs.emplace_back(e, -2.0);
    mi.lp.append_row(std::move(lower));

    lp::Row upper;  // nobody is adjacent to more than two selected edges
    upper.rel = lp::Relation::less_equal;
    upper.rhs = 2.0;
    upper.coeffs = std::move(adjacent);
    mi.lp.append_row(std::move(upper));
  }

  mi.vm.branch_vars.resize(mi.vm.num_x);
  for (int e = 0; e < mi.vm.num_x; ++e) mi.vm.branch_vars[e] = e;
  return mi;
}

void add_clique_constraints(lp::LinearProgram& lp, const VariableMap& vm,
                            const AugmentedGraph& ag, const std::vector<Clique>& cliques) {
  for (const Clique& q : cliques) {
    if (q.nodes.size() < 3) throw Error("clique constraint needs at least 3 nodes");
    if (!is_clique(ag.base(), q.nodes)) throw Error("node set is not a clique");
    lp::Row row;
    row.rel = lp::Relation::less_equal;
    row.rhs = 1.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
      for (std::size_t j = i + 1; j < q.nodes.size(); ++j)
        row.coeffs.emplace_back(ag.edge_index(q.nodes[i], q.nodes[j]), 1.0);
    lp.append_row(std::move(row));
  }
  (void)vm;
}

void add_node_variables(lp::LinearProgram& lp, VariableMap& vm, const AugmentedGraph& ag) {
  const int n = ag.base().num_nodes();
  const int y0 = lp.num_vars();
  for (int v = 0; v < n; ++v) lp.add_variable(0.0, 0.0, 1.0);
  for (int v = 0; v < n; ++v) {
    lp::Row row;
    row.rel = lp::Relation::equal;
    row.rhs = 0.0;
    row.coeffs.emplace_back(y0 + v, 2.0);
    for (int e : ag.incident_edges(v)) row.coeffs.emplace_back(e, -1.0);
    lp.append_row(std::move(row));
  }
  vm.y_offset = y0;
  vm.branch_vars.resize(n);
  for (int v = 0; v < n; ++v) vm.branch_vars[v] = y0 + v;
}

namespace {

std::vector<Clique> configured_cliques(const Graph& g, const ModelConfig& cfg) {
  std::vector<Clique> cliques = cfg.clique_size_bound
                                    ? enumerate_cliques_bounded(g, *cfg.clique_size_bound)
                                    : enumerate_maximal_cliques(g);
  // Two-node cliques carry no information beyond the variable bounds.
  std::erase_if(cliques, [](const Clique& q) { return q.nodes.size() < 3; });
  return cliques;
}

}  // namespace

ModelInstance build_cut(const AugmentedGraph& ag, const ModelConfig& cfg) {
  cfg.validate();
  if (cfg.formulation != ModelConfig::Formulation::cut)
    throw Error("build_cut called with a non-cut configuration");
  ModelInstance mi = build_base(ag);
  if (cfg.clique_constraints)
    add_clique_constraints(mi.lp, mi.vm, ag, configured_cliques(ag.base(), cfg));
  if (cfg.node_variables) add_node_variables(mi.lp, mi.vm, ag);
  return mi;
}

ModelInstance build_flow(const AugmentedGraph& ag, const ModelConfig& cfg) {
  cfg.validate();
  if (cfg.formulation != ModelConfig::Formulation::flow)
    throw Error("build_flow called with a non-flow configuration");
  ModelInstance mi = build_base(ag);
  if (cfg.clique_constraints)
    add_clique_constraints(mi.lp, mi.vm, ag, configured_cliques(ag.base(), cfg));
  if (cfg.node_variables) add_node_variables(mi.lp, mi.vm, ag);

  const int n = ag.base().num_nodes();
  const int num_edges = ag.num_edges();
  const int num_arcs = 2 * num_edges;  // arc 2e: u->v, arc 2e+1: v->u
  const int z0 = mi.lp.num_vars();
  mi.vm.z_offset = z0;
  mi.vm.num_arcs = num_arcs;
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < num_arcs; ++a) mi.lp.add_variable(0.0, 0.0, 1.0);

  const auto z_var = [&](int commodity, int arc) { return z0 + commodity * num_arcs + arc; };

  // Flow only over selected edges.
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < num_arcs; ++a) {
      lp::Row row;
      row.rel = lp::Relation::less_equal;
      row.rhs = 0.0;
      row.coeffs.emplace_back(z_var(v, a), 1.0);
      row.coeffs.emplace_back(a / 2, -1.0);
      mi.lp.append_row(std::move(row));
    }
  }

  // Conservation at every node of V; the source v injects its selected
  // degree. No row at s, which absorbs all commodities.
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      lp::Row row;
      row.rel = lp::Relation::equal;
      row.rhs = 0.0;
      for (int e : ag.incident_edges(w)) {
        const auto [a, b] = ag.edge_at(e);
        const int out_arc = (a == w) ? 2 * e : 2 * e + 1;
        const int in_arc = (a == w) ? 2 * e + 1 : 2 * e;
        row.coeffs.emplace_back(z_var(v, out_arc), 1.0);
        row.coeffs.emplace_back(z_var(v, in_arc), -1.0);
      }
      if (w == v)
        for (int e : ag.incident_edges(v)) row.coeffs.emplace_back(e, -1.0);
      mi.lp.append_row(std::move(row));
    }
  }
  return mi;
}

ModelInstance build_walk(const Graph& g, int horizon) {
  if (horizon < 0) throw Error("walk horizon must be nonnegative");
  if (horizon + 1 > g.num_nodes())
    throw Error("walk horizon too large: needs horizon + 1 <= node count");
  const int n = g.num_nodes();
  const int steps = horizon + 1;  // timesteps 0..horizon
  ModelInstance mi;
  mi.vm.w_offset = 0;
  mi.vm.horizon = horizon;
  const auto var = [&](int v, int t) { return v * steps + t; };
  for (int v = 0; v < n; ++v)
    for (int t = 0; t < steps; ++t) mi.lp.add_variable(t >= 1 ? 1.0 : 0.0, 0.0, 1.0);

  // One node per timestep.
  for (int t = 0; t < steps; ++t) {
    lp::Row row;
    row.rel = lp::Relation::less_equal;
    row.rhs = 1.0;
    for (int v = 0; v < n; ++v) row.coeffs.emplace_back(var(v, t), 1.0);
    mi.lp.append_row(std::move(row));
  }
  // Each node visited at most once.
  for (int v = 0; v < n; ++v) {
    lp::Row row;
    row.rel = lp::Relation::less_equal;
    row.rhs = 1.0;
    for (int t = 0; t < steps; ++t) row.coeffs.emplace_back(var(v, t), 1.0);
    mi.lp.append_row(std::move(row));
  }
  // Timesteps are used as a prefix.
  for (int t = 0; t + 1 < steps; ++t) {
    lp::Row row;
    row.rel = lp::Relation::less_equal;
    row.rhs = 0.0;
    for (int v = 0; v < n; ++v) {
      row.coeffs.emplace_back(var(v, t + 1), 1.0);
      row.coeffs.emplace_back(var(v, t), -1.0);
    }
    mi.lp.append_row(std::move(row));
  }
  // Consecutive visits must be adjacent.
  for (int v = 0; v < n; ++v) {
    for (int t = 0; t + 1 < steps; ++t) {
      lp::Row row;
      row.rel = lp::Relation::less_equal;
      row.rhs = 1.0;
      row.coeffs.emplace_back(var(v, t), 1.0);
      for (int w = 0; w < n; ++w)
        if (w != v && !g.adjacent(v, w)) row.coeffs.emplace_back(var(w, t + 1), 1.0);
      mi.lp.append_row(std::move(row));
    }
  }
  // Non-consecutive visits must not be adjacent.
  for (const auto& [u, v] : g.edges()) {
    for (const auto& [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
      for (int t = 0; t + 2 < steps; ++t) {
        lp::Row row;
        row.rel = lp::Relation::less_equal;
        row.rhs = 1.0;
        row.coeffs.emplace_back(var(from, t), 1.0);
        for (int tau = t + 2; tau < steps; ++tau) row.coeffs.emplace_back(var(to, tau), 1.0);
        mi.lp.append_row(std::move(row));
      }
    }
  }

  mi.vm.branch_vars.resize(mi.lp.num_vars());
  for (int j = 0; j < mi.lp.num_vars(); ++j) mi.vm.branch_vars[j] = j;
  return mi;
}

}  // namespace indpath
