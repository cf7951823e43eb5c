#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rcp {

// Simple undirected graph on vertices 0..n-1. Edges are kept as a sorted,
// duplicate-free list of (u,v) pairs with u < v; no loops.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  explicit Graph(int n_);
  Graph(int n_, std::vector<std::pair<int, int>> edge_list);

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  int degree(int v) const;
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const Graph&) const = default;
};

// graph6, single-byte order only (n <= 62).
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph edgeless_graph(int n);

// Standard Prüfer decoding; seq entries in [0,n), length n-2 for n >= 2.
// n = 1 with an empty sequence yields the one-vertex tree.
Graph tree_from_pruefer(int n, const std::vector<int>& seq);

Graph delete_edge(const Graph& g, int u, int v);

// Merges the larger endpoint into the smaller one, drops the loop, merges
// parallel edges, and relabels to 0..n-2 preserving order. merge_map[old]
// gives the new vertex id.
std::pair<Graph, std::vector<int>> contract_edge(const Graph& g, int u, int v);

// Subgraph induced by s, relabelled 0..|s|-1 in increasing original order.
// The second member lists the original id of each new vertex.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& s);

// Components sorted by smallest member; members ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// If bipartite, one (A,B) bipartition with each component's smallest vertex
// on the A side; nullopt otherwise. Both sides ascending.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Graph& g);

}  // namespace rcp
