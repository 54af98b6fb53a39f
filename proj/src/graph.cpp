#include "indpath/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>

namespace indpath {

Graph::Graph(int num_nodes, std::vector<std::pair<int, int>> edges)
    : n_(num_nodes), edges_(std::move(edges)) {
  if (n_ < 0) throw Error("negative node count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw Error("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") out of range for n=" + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error("duplicate edge in edge list");
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

ParseResult parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v))
      throw Error("parse error at line " + std::to_string(line_no) + ": expected two integers");
    std::string rest;
    if (ls >> rest)
      throw Error("parse error at line " + std::to_string(line_no) + ": trailing token '" + rest + "'");
    if (u < 0 || v < 0)
      throw Error("parse error at line " + std::to_string(line_no) + ": negative node id");
    if (u == v)
      throw Error("self-loop at line " + std::to_string(line_no));
    if (u > v) std::swap(u, v);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max(max_id, static_cast<int>(v));
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  const int duplicates = static_cast<int>(edges.end() - last);
  edges.erase(last, edges.end());
  return {Graph(max_id + 1, std::move(edges)), duplicates};
}

ParseResult parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# " << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_edge_list(g, out);
}

CompactResult compact_ids(const Graph& g) {
  std::vector<int> old_ids;
  std::vector<int> new_id(g.num_nodes(), -1);
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (g.degree(v) > 0) {
      new_id[v] = static_cast<int>(old_ids.size());
      old_ids.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(new_id[u], new_id[v]);
  return {Graph(static_cast<int>(old_ids.size()), std::move(edges)), std::move(old_ids)};
}

namespace {

// Component labels by BFS; returns the label vector.
std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.num_nodes(), -1);
  int next = 0;
  for (int start = 0; start < g.num_nodes(); ++start) {
    if (comp[start] != -1) continue;
    comp[start] = next;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.num_nodes() <= 1) return true;
  const auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::pair<int, int> find_separated_pair(const Graph& g) {
  const auto comp = components(g);
  for (int v = 1; v < g.num_nodes(); ++v)
    if (comp[v] != comp[0]) return {0, v};
  throw Error("graph is connected");
}

int diameter(const Graph& g) {
  if (g.num_nodes() == 0) return 0;
  if (!is_connected(g)) {
    const auto [a, b] = find_separated_pair(g);
    throw Error("graph is disconnected: no path between nodes " + std::to_string(a) +
                " and " + std::to_string(b));
  }
  int diam = 0;
  std::vector<int> dist(g.num_nodes());
  for (int start = 0; start < g.num_nodes(); ++start) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      diam = std::max(diam, dist[u]);
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
  }
  return diam;
}

bool is_induced_path(const Graph& g, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::vector<char> seen(g.num_nodes(), 0);
  for (int v : nodes) {
    if (v < 0 || v >= g.num_nodes())
      throw Error("node " + std::to_string(v) + " out of range");
    if (seen[v]) throw Error("duplicate node " + std::to_string(v) + " in sequence");
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!g.adjacent(nodes[i], nodes[i + 1])) return false;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 2; j < nodes.size(); ++j)
      if (g.adjacent(nodes[i], nodes[j])) return false;
  return true;
}

AugmentedGraph::AugmentedGraph(Graph g) : base_(std::move(g)) {
  if (base_.num_nodes() < 2)
    throw Error("augmentation needs at least 2 nodes (optimum is 0 for smaller graphs)");
  const int n = base_.num_nodes();
  const int m = base_.num_edges();
  incident_.assign(n + 1, {});
  for (int e = 0; e < m; ++e) {
    const auto& [u, v] = base_.edges()[e];
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
  for (int v = 0; v < n; ++v) {
    incident_[v].push_back(m + v);
    incident_[n].push_back(m + v);
  }
}

std::pair<int, int> AugmentedGraph::edge_at(int edge) const {
  const int m = base_.num_edges();
  if (edge < m) return base_.edges()[edge];
  return {edge - m, s()};
}

int AugmentedGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (v == s()) return star_edge_index(u);
  const auto& edges = base_.edges();
  const auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it != edges.end() && *it == std::make_pair(u, v))
    return static_cast<int>(it - edges.begin());
  return -1;
}

namespace {

Graph make_path(int n) {
  if (n < 1) throw Error("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
  if (leaves < 1) throw Error("star needs at least 1 leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph make_complete(int k) {
  if (k < 1) throw Error("complete needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Graph(k, std::move(edges));
}

Graph make_theta(int l) {
  if (l < 3) throw Error("theta needs l >= 3");
  // v_L = 0, midpoints 1..l, v_R = l+1, v' = l+2.
  const int v_left = 0;
  const int v_right = l + 1;
  const int v_tail = l + 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= l; ++i) {
    edges.emplace_back(v_left, i);
    edges.emplace_back(i, v_right);
  }
  edges.emplace_back(v_right, v_tail);
  return Graph(l + 3, std::move(edges));
}

Graph make_ba(int n, int d, std::uint64_t seed) {
  if (d < 1 || d >= n) throw Error("ba needs 1 <= d < n");
  std::mt19937_64 rng(seed);
  std::vector<long long> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int node = d; node < n; ++node) {
    // The d picks draw against the degrees as of this node's arrival,
    // redrawing on collision; all-zero degrees fall back to uniform.
    const std::vector<long long> snapshot(degree.begin(), degree.begin() + node);
    long long total = 0;
    for (long long deg : snapshot) total += deg;
    std::vector<char> picked(node, 0);
    for (int k = 0; k < d; ++k) {
      int target = -1;
      while (target == -1) {
        int cand;
        if (total == 0) {
          cand = std::uniform_int_distribution<int>(0, node - 1)(rng);
        } else {
          long long ticket = std::uniform_int_distribution<long long>(1, total)(rng);
          cand = 0;
          while (ticket > snapshot[cand]) ticket -= snapshot[cand++];
        }
        if (!picked[cand]) target = cand;
      }
      picked[target] = 1;
      edges.emplace_back(target, node);
      ++degree[target];
      ++degree[node];
    }
  }
  return Graph(n, std::move(edges));
}

Graph make_tripartite(int parts) {
  if (parts < 2) throw Error("tripartite needs at least 2 parts");
  const int n = 3 * parts;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / 3 != v / 3) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace

Graph generate_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::path:
      return make_path(spec.a);
    case FamilySpec::Kind::star:
      return make_star(spec.a);
    case FamilySpec::Kind::complete:
      return make_complete(spec.a);
    case FamilySpec::Kind::theta:
      return make_theta(spec.a);
    case FamilySpec::Kind::ba:
      return make_ba(spec.a, spec.b, spec.seed);
    case FamilySpec::Kind::tripartite:
      return make_tripartite(spec.a);
  }
  throw Error("unknown family kind");
}

}  // namespace indpath
