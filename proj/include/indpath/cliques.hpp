#pragma once

#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

struct Clique {
  std::vector<int> nodes;  // sorted, pairwise adjacent, size >= 2
  bool operator==(const Clique& other) const { return nodes == other.nodes; }
};

// Inclusion-maximal cliques of size >= 2, each exactly once, sorted
// lexicographically. Bron-Kerbosch with a degeneracy-order outer loop and
// greedy pivoting.
std::vector<Clique> enumerate_maximal_cliques(const Graph& g);

// Every clique with 2 <= size <= k, each exactly once, sorted.
std::vector<Clique> enumerate_cliques_bounded(const Graph& g, int k);

bool is_clique(const Graph& g, const std::vector<int>& nodes);

}  // namespace indpath
