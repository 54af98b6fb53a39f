#include "indpath/cliques.hpp"

#include <algorithm>

namespace indpath {

bool is_clique(const Graph& g, const std::vector<int>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!g.adjacent(nodes[i], nodes[j])) return false;
  return true;
}

namespace {

// Smallest-last ordering; repeatedly removes a minimum-degree node.
std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    removed[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return order;
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : g_(g) {}

  std::vector<Clique> run() {
    const int n = g_.num_nodes();
    const auto order = degeneracy_order(g_);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    for (int i = 0; i < n; ++i) {
      const int v = order[i];
      std::vector<int> p, x;
      for (int w : g_.neighbors(v))
        (rank[w] > i ? p : x).push_back(w);
      clique_.assign(1, v);
      expand(p, x);
    }
    for (auto& c : out_) std::sort(c.nodes.begin(), c.nodes.end());
    std::sort(out_.begin(), out_.end(),
              [](const Clique& a, const Clique& b) { return a.nodes < b.nodes; });
    return std::move(out_);
  }

 private:
  void expand(std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      if (clique_.size() >= 2) out_.push_back({clique_});
      return;
    }
    // Pivot on the candidate covering most of P.
    int pivot = -1, best_cover = -1;
    for (const auto& cand : {p, x})
      for (int u : cand) {
        int cover = 0;
        for (int w : p)
          if (g_.adjacent(u, w)) ++cover;
        if (cover > best_cover) {
          best_cover = cover;
          pivot = u;
        }
      }
    std::vector<int> ext;
    for (int w : p)
      if (!g_.adjacent(pivot, w)) ext.push_back(w);
    for (int v : ext) {
      std::vector<int> p2, x2;
      for (int w : p)
        if (w != v && g_.adjacent(v, w)) p2.push_back(w);
      for (int w : x)
        if (g_.adjacent(v, w)) x2.push_back(w);
      clique_.push_back(v);
      expand(std::move(p2), std::move(x2));
      clique_.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  const Graph& g_;
  std::vector<int> clique_;
  std::vector<Clique> out_;
};

void extend_bounded(const Graph& g, int k, std::vector<int>& cur,
                    std::vector<Clique>& out) {
  const int last = cur.back();
  if (cur.size() >= 2) out.push_back({cur});
  if (static_cast<int>(cur.size()) == k) return;
  for (int w : g.neighbors(last)) {
    if (w <= last) continue;
    bool ok = true;
    for (int u : cur)
      if (u != last && !g.adjacent(u, w)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(w);
    extend_bounded(g, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_maximal_cliques(const Graph& g) {
  return BronKerbosch(g).run();
}

std::vector<Clique> enumerate_cliques_bounded(const Graph& g, int k) {
  if (k < 2) throw Error("clique size bound must be >= 2");
  std::vector<Clique> out;
  std::vector<int> cur;
  for (int v = 0; v < g.num_nodes(); ++v) {
    cur.assign(1, v);
    extend_bounded(g, k, cur, out);
  }
  std::sort(out.begin(), out.end(),
            [](const Clique& a, const Clique& b) { return a.nodes < b.nodes; });
  return out;
}

}  // namespace indpath
