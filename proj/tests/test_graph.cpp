#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rcpoly/graph.hpp"

using namespace rcp;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph6 known records") {
  Graph empty = parse_graph6("?");
  CHECK(empty.n == 0);
  CHECK(empty.edges.empty());

  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("Bg") == path_graph(3));
  CHECK(parse_graph6("A_") == path_graph(2));
  CHECK(parse_graph6("@") == Graph(1));

  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(encode_graph6(path_graph(3)) == "Bg");
  CHECK(encode_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 malformed records") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);    // too short
  CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);  // too long
  CHECK_THROWS_AS(parse_graph6("B "), std::invalid_argument);   // char below 63
  CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // long form
  CHECK_THROWS_AS(parse_graph6("Bx"), std::invalid_argument);   // nonzero padding
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(20240811);
  for (int n : {0, 1, 2, 3, 5, 8, 13, 30, 62}) {
    for (int rep = 0; rep < 8; ++rep) {
      Graph g = random_graph(rng, n, rep / 8.0);
      CHECK(parse_graph6(encode_graph6(g)) == g);
    }
  }
}

TEST_CASE("generators") {
  CHECK(complete_graph(3).edges.size() == 3);
  CHECK(cycle_graph(4).edges.size() == 4);
  CHECK(edgeless_graph(5).edges.empty());
  CHECK(path_graph(1).edges.empty());

  CHECK(tree_from_pruefer(2, {}) == path_graph(2));
  Graph star = tree_from_pruefer(4, {0, 0});
  CHECK(star.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});

  CHECK_THROWS_AS(tree_from_pruefer(4, {0}), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_pruefer(4, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_pruefer(0, {}), std::invalid_argument);
}

TEST_CASE("pruefer decoding always yields a tree") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 8; ++n) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<int> seq(n - 2);
      for (int& s : seq) s = pick(rng);
      Graph t = tree_from_pruefer(n, seq);
      CHECK(t.edges.size() == static_cast<std::size_t>(n - 1));
      CHECK(is_connected(t));
    }
  }
}

TEST_CASE("bipartition") {
  auto p3 = bipartition(path_graph(3));
  REQUIRE(p3.has_value());
  CHECK(p3->first == std::vector<int>{0, 2});
  CHECK(p3->second == std::vector<int>{1});

  CHECK(!bipartition(complete_graph(3)).has_value());
  CHECK(!bipartition(cycle_graph(5)).has_value());

  auto c4 = bipartition(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->first == std::vector<int>{0, 2});
  CHECK(c4->second == std::vector<int>{1, 3});

  // per-component rule: smallest vertex of each component lands in A
  Graph two_paths(4, {{0, 1}, {2, 3}});
  auto parts = bipartition(two_paths);
  REQUIRE(parts.has_value());
  CHECK(parts->first == std::vector<int>{0, 2});
  CHECK(parts->second == std::vector<int>{1, 3});
}

TEST_CASE("bipartition is a proper 2-colouring when present") {
  std::mt19937 rng(99);
  int bipartite_seen = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(rng, 1 + rep % 8, 0.3);
    auto parts = bipartition(g);
    if (!parts) continue;
    ++bipartite_seen;
    std::set<int> a(parts->first.begin(), parts->first.end());
    CHECK(parts->first.size() + parts->second.size() == static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges) CHECK(a.count(u) != a.count(v));
  }
  CHECK(bipartite_seen > 20);
}

TEST_CASE("delete and contract") {
  Graph k3 = complete_graph(3);
  Graph deleted = delete_edge(k3, 0, 1);
  CHECK(deleted.edges.size() == 2);

  auto [k2, mm] = contract_edge(k3, 1, 2);
  CHECK(k2 == complete_graph(2));
  CHECK(mm == std::vector<int>{0, 1, 1});

  auto [p3, mm2] = contract_edge(path_graph(4), 1, 2);
  CHECK(p3 == path_graph(3));
  CHECK(mm2 == std::vector<int>{0, 1, 1, 2});

  CHECK_THROWS_AS(delete_edge(path_graph(3), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(contract_edge(path_graph(3), 0, 2), std::invalid_argument);
}

TEST_CASE("contraction never leaves loops or parallel edges") {
  std::mt19937 rng(4242);
  for (int rep = 0; rep < 100; ++rep) {
    Graph g = random_graph(rng, 2 + rep % 7, 0.5);
    if (g.edges.empty()) continue;
    auto [u, v] = g.edges[rep % g.edges.size()];
    auto [h, mm] = contract_edge(g, u, v);
    CHECK(h.n == g.n - 1);
    std::set<std::pair<int, int>> uniq(h.edges.begin(), h.edges.end());
    CHECK(uniq.size() == h.edges.size());
    for (auto [a, b] : h.edges) {
      CHECK(a != b);
      CHECK(a >= 0);
      CHECK(b < h.n);
    }
    CHECK(mm[v] == mm[u]);
  }
}

TEST_CASE("induced subgraphs and components") {
  auto [k2, ids] = induced_subgraph(complete_graph(3), {0, 1});
  CHECK(k2 == complete_graph(2));
  CHECK(ids == std::vector<int>{0, 1});

  auto comps = connected_components(edgeless_graph(3));
  CHECK(comps == std::vector<std::vector<int>>{{0}, {1}, {2}});

  Graph two_paths(4, {{0, 1}, {2, 3}});
  CHECK(connected_components(two_paths) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  CHECK_THROWS_AS(induced_subgraph(complete_graph(3), {0, 7}), std::invalid_argument);
}
