#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on dense node ids 0..n-1. Immutable after
/// construction; the edge list is kept sorted with u < v per edge.
class Graph {
 public:
  Graph() = default;
  Graph(int num_nodes, std::vector<std::pair<int, int>> edges);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct ParseResult {
  Graph graph;
  int duplicate_edges = 0;  // collapsed duplicates, reported as a warning count
};

// Parses "u v" per line, '#' starts a comment line. Node count is
// 1 + max node id. Throws Error with the line number on malformed input
// or self-loops.
ParseResult parse_edge_list(std::istream& in);
ParseResult parse_edge_list_file(const std::string& path);

// One edge per line, u < v, lexicographic, preceded by a "# n m" header.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// Drops isolated nodes and renumbers the rest densely, preserving order.
// old_ids[new_id] gives the original id.
struct CompactResult {
  Graph graph;
  std::vector<int> old_ids;
};
CompactResult compact_ids(const Graph& g);

bool is_connected(const Graph& g);
// Some pair of nodes in different components, for error messages.
std::pair<int, int> find_separated_pair(const Graph& g);

// Longest shortest-path distance, by BFS from every node. Throws on
// disconnected input, naming two separated nodes.
int diameter(const Graph& g);

// True iff the nodes induce exactly a path, visited in the given order:
// consecutive entries adjacent, no other pair adjacent. A single node is a
// path; the empty sequence is not. Throws on duplicate or out-of-range ids.
bool is_induced_path(const Graph& g, const std::vector<int>& nodes);

/// G* = G plus a virtual node s adjacent to every node of G. Edges of E*
/// carry dense variable indices: 0..m-1 the edges of E in lexicographic
/// order, m..m+n-1 the star edges {v,s} ordered by v.
class AugmentedGraph {
 public:
  explicit AugmentedGraph(Graph g);

  const Graph& base() const { return base_; }
  int s() const { return base_.num_nodes(); }
  int num_nodes() const { return base_.num_nodes() + 1; }  // |V*|
  int num_edges() const { return base_.num_edges() + base_.num_nodes(); }  // |E*|
  int star_edge_index(int v) const { return base_.num_edges() + v; }
  bool is_star_edge(int edge) const { return edge >= base_.num_edges(); }
  // Endpoints of an E* edge; star edges come back as (v, s).
  std::pair<int, int> edge_at(int edge) const;
  int edge_index(int u, int v) const;  // -1 if not an E* edge
  // Indices of the E* edges incident to a node of V*; s maps to all star edges.
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

 private:
  Graph base_;
  std::vector<std::vector<int>> incident_;
};

struct FamilySpec {
  enum class Kind { path, star, complete, theta, ba, tripartite };
  Kind kind = Kind::path;
  int a = 0;           // path: n, star: leaves, complete: k, theta: l, ba: n, tripartite: parts
  int b = 0;           // ba: d
  std::uint64_t seed = 0;  // ba only

  static FamilySpec path(int n) { return {Kind::path, n, 0, 0}; }
  static FamilySpec star(int leaves) { return {Kind::star, leaves, 0, 0}; }
  static FamilySpec complete(int k) { return {Kind::complete, k, 0, 0}; }
  static FamilySpec theta(int l) { return {Kind::theta, l, 0, 0}; }
  static FamilySpec ba(int n, int d, std::uint64_t seed) { return {Kind::ba, n, d, seed}; }
  static FamilySpec tripartite(int parts) { return {Kind::tripartite, parts, 0, 0}; }
};

// Instance families used by the benchmarks and the hardness constructions.
//   path(n): P_n.
//   star(l): one center, l leaves.
//   complete(k): K_k.
//   theta(l): nodes v_L=0, midpoints 1..l, v_R=l+1, v'=l+2; the l length-2
//     paths v_L-mid_i-v_R plus the edge v_R-v' (2l+1 edges, l >= 3).
//   ba(n,d): preferential attachment; d seed nodes, every later node picks d
//     distinct existing nodes with probability proportional to degree
//     (uniform while all degrees are zero), redrawing on collision.
//     Exactly (n-d)*d edges; seed determines the graph.
//   tripartite(k): complete multipartite, k parts of size 3.
Graph generate_family(const FamilySpec& spec);

}  // namespace indpath
