#include "indpath/separation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace indpath {

lp::Row CutConstraint::to_row(const AugmentedGraph& ag) const {
  std::vector<char> in_w(ag.num_nodes(), 0);
  for (int v : node_set) in_w[v] = 1;
  std::map<int, double> coeff;
  for (int e : ag.incident_edges(witness)) coeff[e] += 1.0;
  for (int v : node_set)
    for (int e : ag.incident_edges(v)) {
      const auto [a, b] = ag.edge_at(e);
      const int other = a == v ? b : a;
      if (!in_w[other]) coeff[e] -= 1.0;  // crossing edge, counted once
    }
  lp::Row row;
  row.rel = lp::Relation::less_equal;
  row.rhs = 0.0;
  for (const auto& [e, c] : coeff)
    if (c != 0.0) row.coeffs.emplace_back(e, c);
  return row;
}

double CutConstraint::violation(const AugmentedGraph& ag,
                                const std::vector<double>& x_edges) const {
  const lp::Row row = to_row(ag);
  double lhs = 0.0;
  for (const auto& [e, c] : row.coeffs) lhs += c * x_edges[e];
  return lhs - row.rhs;
}

ActiveSubgraph::ActiveSubgraph(const AugmentedGraph& ag, const std::vector<double>& x_edges,
                               double eps) {
  adjacency_.assign(ag.num_nodes(), {});
  for (int e = 0; e < ag.num_edges(); ++e) {
    if (x_edges[e] <= eps) continue;
    const auto [u, v] = ag.edge_at(e);
    const int fwd = static_cast<int>(arcs_.size());
    arcs_.push_back({v, x_edges[e], fwd + 1});
    arcs_.push_back({u, x_edges[e], fwd});
    adjacency_[u].push_back(fwd);
    adjacency_[v].push_back(fwd + 1);
  }
}

MaxFlowResult max_flow(const ActiveSubgraph& asg, int source, int sink) {
  const int n = asg.num_nodes();
  std::vector<double> residual(asg.arcs().size());
  for (std::size_t a = 0; a < residual.size(); ++a) residual[a] = asg.arcs()[a].capacity;

  MaxFlowResult result;
  std::vector<int> via(n);  // arc taken into each node
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    via[source] = -2;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && via[sink] == -1) {
      const int u = q.front();
      q.pop();
      for (int a : asg.arcs_at(u)) {
        const auto& arc = asg.arcs()[a];
        if (residual[a] > 1e-12 && via[arc.to] == -1) {
          via[arc.to] = a;
          q.push(arc.to);
        }
      }
    }
    if (via[sink] == -1) break;
    double push = lp::kInfinity;
    for (int v = sink; v != source;) {
      const int a = via[v];
      push = std::min(push, residual[a]);
      v = asg.arcs()[asg.arcs()[a].reverse].to;
    }
    for (int v = sink; v != source;) {
      const int a = via[v];
      residual[a] -= push;
      residual[asg.arcs()[a].reverse] += push;
      v = asg.arcs()[asg.arcs()[a].reverse].to;
    }
    result.value += push;
  }
  for (int v = 0; v < n; ++v)
    if (via[v] != -1) result.source_side.push_back(v);
  return result;
}

namespace {

// Witness choice within W: active nodes whose cut row is actually violated,
// preferring the highest active degree, then the lowest id.
int choose_witness(const AugmentedGraph& ag, const ActiveSubgraph& asg,
                   const std::vector<double>& x_edges, const std::vector<int>& w_nodes,
                   double rhs_bound) {
  int best = -1;
  for (int v : w_nodes) {
    if (!asg.node_active(v)) continue;
    double lhs = 0.0;
    for (int e : ag.incident_edges(v)) lhs += x_edges[e];
    if (lhs - rhs_bound <= kCutViolationTol) continue;
    if (best == -1 || asg.active_degree(v) > asg.active_degree(best)) best = v;
  }
  return best;
}

}  // namespace

std::vector<CutConstraint> separate_integral(const AugmentedGraph& ag,
                                             const std::vector<double>& x_edges) {
  for (int e = 0; e < ag.num_edges(); ++e)
    if (std::fabs(x_edges[e] - std::round(x_edges[e])) > lp::kFeasTol)
      throw Error("integral separation called on a fractional point");

  const ActiveSubgraph asg(ag, x_edges);
  const int s = ag.s();
  std::vector<int> comp(asg.num_nodes(), -1);
  int num_comp = 0;
  for (int start = 0; start < asg.num_nodes(); ++start) {
    if (comp[start] != -1 || !asg.node_active(start)) continue;
    comp[start] = num_comp;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a : asg.arcs_at(u)) {
        const int w = asg.arcs()[a].to;
        if (comp[w] == -1) {
          comp[w] = num_comp;
          q.push(w);
        }
      }
    }
    ++num_comp;
  }

  std::vector<CutConstraint> cuts;
  const int s_comp = asg.node_active(s) ? comp[s] : -2;
  for (int c = 0; c < num_comp; ++c) {
    if (c == s_comp) continue;
    CutConstraint cut;
    for (int v = 0; v < ag.base().num_nodes(); ++v)
      if (comp[v] == c) cut.node_set.push_back(v);
    if (cut.node_set.empty()) continue;
    cut.witness = choose_witness(ag, asg, x_edges, cut.node_set, 0.0);
    if (cut.witness == -1) cut.witness = cut.node_set.front();
    if (cut.violation(ag, x_edges) > kCutViolationTol) cuts.push_back(std::move(cut));
  }
  return cuts;
}

std::vector<CutConstraint> separate_fractional(const AugmentedGraph& ag,
                                               const std::vector<double>& x_edges) {
  const ActiveSubgraph asg(ag, x_edges);
  const int n = ag.base().num_nodes();
  const int s = ag.s();
  std::vector<char> covered(n, 0);
  std::vector<CutConstraint> cuts;
  for (int v = 0; v < n; ++v) {
    if (covered[v] || !asg.node_active(v)) continue;
    double lhs = 0.0;
    for (int e : ag.incident_edges(v)) lhs += x_edges[e];
    const MaxFlowResult flow = max_flow(asg, v, s);
    if (flow.value >= lhs - kCutViolationTol) continue;

    CutConstraint cut;
    for (int w : flow.source_side)
      if (w < n) cut.node_set.push_back(w);
    std::sort(cut.node_set.begin(), cut.node_set.end());
    cut.witness = choose_witness(ag, asg, x_edges, cut.node_set, flow.value);
    if (cut.witness == -1) cut.witness = v;
    if (cut.violation(ag, x_edges) > kCutViolationTol) {
      for (int w : cut.node_set) covered[w] = 1;
      cuts.push_back(std::move(cut));
    }
  }
  return cuts;
}

}  // namespace indpath
