#pragma once

#include <vector>

#include "indpath/graph.hpp"
#include "indpath/lp.hpp"

namespace indpath {

// Membership threshold for the active subgraph.
inline constexpr double kActiveEps = 1e-7;
// A cut must be violated by more than this to be emitted.
inline constexpr double kCutViolationTol = 1e-6;

/// A violated connectivity cut: edges at the witness cannot outnumber the
/// edges crossing out of W; translates to sum_{e in d*(v)} x_e -
/// sum_{e in d*(W)} x_e <= 0.
struct CutConstraint {
  int witness = -1;
  std::vector<int> node_set;  // W, sorted, subset of V, contains witness

  lp::Row to_row(const AugmentedGraph& ag) const;
  // LHS - RHS at the given point; positive means violated.
  double violation(const AugmentedGraph& ag, const std::vector<double>& x_edges) const;
};

/// The support of an LP point inside G*: edges with value above the
/// threshold, with the values as capacities.
class ActiveSubgraph {
 public:
  ActiveSubgraph(const AugmentedGraph& ag, const std::vector<double>& x_edges,
                 double eps = kActiveEps);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }  // |V*|
  bool node_active(int v) const { return !adjacency_[v].empty(); }
  int active_degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  struct Arc {
    int to;
    double capacity;
    int reverse;  // index of the opposite arc
  };
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& arcs_at(int v) const { return adjacency_[v]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;  // arc indices per node
};

struct MaxFlowResult {
  double value = 0.0;
  std::vector<int> source_side;  // nodes of V* on the source side of a min cut
};

// Exact max flow by shortest augmenting paths; each undirected edge becomes
// a pair of opposite arcs sharing its capacity.
MaxFlowResult max_flow(const ActiveSubgraph& asg, int source, int sink);

// Connected components of the active subgraph; one cut per component not
// containing s. Requires an integral point.
std::vector<CutConstraint> separate_integral(const AugmentedGraph& ag,
                                             const std::vector<double>& x_edges);

// Exact separation over family (2a): a max-flow computation per active node.
// Empty result iff no constraint is violated beyond tolerance.
std::vector<CutConstraint> separate_fractional(const AugmentedGraph& ag,
                                               const std::vector<double>& x_edges);

}  // namespace indpath
