#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "indpath/cliques.hpp"
#include "indpath/graph.hpp"

using namespace indpath;

namespace {

// Reference: all maximal cliques by scanning every node subset.
std::vector<std::vector<int>> brute_force_maximal(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<std::vector<int>> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) nodes.push_back(v);
    if (nodes.size() < 2 || !is_clique(g, nodes)) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w) {
      if (mask & (1u << w)) continue;
      bool all = true;
      for (int v : nodes)
        if (!g.adjacent(v, w)) {
          all = false;
          break;
        }
      if (all) maximal = false;
    }
    if (maximal) cliques.push_back(std::move(nodes));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

long brute_force_count_bounded(const Graph& g, int k) {
  const int n = g.num_nodes();
  long count = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) nodes.push_back(v);
    if (nodes.size() >= 2 && static_cast<int>(nodes.size()) <= k && is_clique(g, nodes)) ++count;
  }
  return count;
}

Graph random_graph(std::mt19937& rng, int n, int denom) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % denom) == 0) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("maximal cliques on small named graphs") {
  const Graph k3 = generate_family(FamilySpec::complete(3));
  const auto mk3 = enumerate_maximal_cliques(k3);
  REQUIRE(mk3.size() == 1);
  CHECK(mk3[0].nodes == std::vector<int>{0, 1, 2});

  const Graph p4 = generate_family(FamilySpec::path(4));
  const auto mp4 = enumerate_maximal_cliques(p4);
  REQUIRE(mp4.size() == 3);  // the three edges of a triangle-free graph
  for (const Clique& c : mp4) CHECK(c.nodes.size() == 2);

  // Complete tripartite, parts of size 3: one choice per part.
  const Graph tri = generate_family(FamilySpec::tripartite(3));
  const auto mtri = enumerate_maximal_cliques(tri);
  CHECK(mtri.size() == 27);
  for (const Clique& c : mtri) CHECK(c.nodes.size() == 3);
  const auto ref = brute_force_maximal(tri);
  REQUIRE(ref.size() == mtri.size());
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(ref[i] == mtri[i].nodes);

  CHECK(enumerate_maximal_cliques(Graph(0, {})).empty());
  CHECK(enumerate_maximal_cliques(Graph(3, {})).empty());
}

TEST_CASE("maximal cliques match subset brute force on random graphs") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(rng, n, 1 + static_cast<int>(rng() % 3));
    const auto got = enumerate_maximal_cliques(g);
    const auto expect = brute_force_maximal(g);
    REQUIRE_MESSAGE(got.size() == expect.size(), "trial ", trial);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].nodes == expect[i]);

    // Every returned set is a clique and nothing extends it.
    for (const Clique& c : got) {
      CHECK(is_clique(g, c.nodes));
      for (int w = 0; w < n; ++w) {
        if (std::find(c.nodes.begin(), c.nodes.end(), w) != c.nodes.end()) continue;
        bool extends = true;
        for (int v : c.nodes)
          if (!g.adjacent(v, w)) extends = false;
        CHECK_FALSE(extends);
      }
    }
    // Moon-Moser bound.
    CHECK(static_cast<double>(got.size()) <= std::ceil(std::pow(3.0, n / 3.0)));
  }
}

TEST_CASE("bounded clique enumeration") {
  const Graph k4 = generate_family(FamilySpec::complete(4));
  CHECK(enumerate_cliques_bounded(k4, 3).size() == 10);  // 6 edges + 4 triangles
  CHECK(enumerate_cliques_bounded(k4, 4).size() == 11);

  const Graph theta3 = generate_family(FamilySpec::theta(3));
  const auto t = enumerate_cliques_bounded(theta3, 3);
  CHECK(t.size() == 7);  // triangle-free: edges only
  CHECK(brute_force_count_bounded(theta3, 3) == 7);

  CHECK_THROWS_AS(enumerate_cliques_bounded(k4, 1), Error);
}

TEST_CASE("bounded enumeration counts match brute force") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(rng, n, 1 + static_cast<int>(rng() % 2));
    const int k = 2 + static_cast<int>(rng() % n);
    const auto got = enumerate_cliques_bounded(g, k);
    CHECK(static_cast<long>(got.size()) == brute_force_count_bounded(g, k));
    std::set<std::vector<int>> unique;
    for (const Clique& c : got) {
      CHECK(is_clique(g, c.nodes));
      CHECK(static_cast<int>(c.nodes.size()) <= k);
      CHECK(c.nodes.size() >= 2);
      CHECK(unique.insert(c.nodes).second);  // each clique once
    }
  }
}

TEST_CASE("bounded enumeration restricted to maximal equals the maximal enumerator") {
  std::mt19937 rng(500);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(rng, n, 2);
    const auto all = enumerate_cliques_bounded(g, n);
    std::vector<std::vector<int>> maximal_from_all;
    for (const Clique& c : all) {
      bool maximal = true;
      for (int w = 0; w < n && maximal; ++w) {
        if (std::find(c.nodes.begin(), c.nodes.end(), w) != c.nodes.end()) continue;
        bool extends = true;
        for (int v : c.nodes)
          if (!g.adjacent(v, w)) extends = false;
        if (extends) maximal = false;
      }
      if (maximal) maximal_from_all.push_back(c.nodes);
    }
    const auto direct = enumerate_maximal_cliques(g);
    REQUIRE(direct.size() == maximal_from_all.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
      CHECK(direct[i].nodes == maximal_from_all[i]);
  }
}
