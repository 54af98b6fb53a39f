#include "indpath/oracle.hpp"

namespace indpath {

namespace {

struct Search {
  const Graph& g;
  long budget;
  long explored = 0;
  std::vector<int> path;
  std::vector<char> on_path;
  int best = 0;
  std::vector<int> witness;

  void extend() {
    if (++explored > budget) throw BudgetError("oracle budget exhausted");
    const int tip = path.back();
    // First endpoint smaller than the last: each path is counted once.
    if (static_cast<int>(path.size()) - 1 > best && path.front() < path.back()) {
      best = static_cast<int>(path.size()) - 1;
      witness = path;
    }
    for (int w : g.neighbors(tip)) {
      if (on_path[w]) continue;
      bool legal = true;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (g.adjacent(w, path[i])) {
          legal = false;
          break;
        }
      if (!legal) continue;
      path.push_back(w);
      on_path[w] = 1;
      extend();
      on_path[w] = 0;
      path.pop_back();
    }
  }
};

}  // namespace

OracleResult longest_induced_path_exact(const Graph& g, long budget) {
  OracleResult result;
  if (g.num_nodes() == 0) return result;
  Search search{g, budget, 0, {}, {}, 0, {}};
  search.on_path.assign(g.num_nodes(), 0);
  search.witness.assign(1, 0);
  for (int start = 0; start < g.num_nodes(); ++start) {
    search.path.assign(1, start);
    search.on_path.assign(g.num_nodes(), 0);
    search.on_path[start] = 1;
    search.extend();
  }
  result.opt_value = search.best;
  result.witness = std::move(search.witness);
  result.explored = search.explored;
  return result;
}

}  // namespace indpath
