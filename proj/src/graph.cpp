#include "rcpoly/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace rcp {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(g.n));
}

std::pair<int, int> normalized(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

Graph::Graph(int n_) : n(n_) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n_, std::vector<std::pair<int, int>> edge_list) : Graph(n_) {
  for (auto [u, v] : edge_list) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw std::invalid_argument("loop edge rejected");
  auto e = normalized(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e) return;
  edges.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  return std::binary_search(edges.begin(), edges.end(), normalized(u, v));
}

int Graph::degree(int v) const {
  check_vertex(*this, v);
  int d = 0;
  for (auto [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty record");
  for (char ch : line)
    if (ch < 63 || ch > 126)
      throw std::invalid_argument("graph6: character out of range 63..126");
  if (line[0] == 126)
    throw std::invalid_argument("graph6: multi-byte order not supported (n > 62)");
  int n = line[0] - 63;
  int bits = n * (n - 1) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (line.size() < 1 + bytes) throw std::invalid_argument("graph6: record too short");
  if (line.size() > 1 + bytes) throw std::invalid_argument("graph6: record too long");

  Graph g(n);
  int k = 0;  // bit index over the upper triangle, column by column
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < static_cast<int>(bytes) * 6; ++k) {
    int byte = line[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  if (g.n > 62)
    throw std::invalid_argument("graph6: n > 62 not supported");
  int bits = g.n * (g.n - 1) / 2;
  std::size_t bytes = (bits + 5) / 6;
  std::string out(1 + bytes, char(63));
  out[0] = char(63 + g.n);
  int k = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) out[1 + k / 6] += char(1 << (5 - k % 6));
    }
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n < 1) throw std::invalid_argument("pruefer: need n >= 1");
  if (n == 1) {
    if (!seq.empty()) throw std::invalid_argument("pruefer: sequence must be empty for n=1");
    return Graph(1);
  }
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("pruefer: sequence length must be n-2");
  for (int s : seq)
    if (s < 0 || s >= n) throw std::invalid_argument("pruefer: entry out of range");

  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);

  Graph g(n);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, s);
    if (--deg[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: not an edge");
  Graph out(g.n);
  auto e = normalized(u, v);
  for (auto edge : g.edges)
    if (edge != e) out.edges.push_back(edge);
  return out;
}

std::pair<Graph, std::vector<int>> contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: not an edge");
  auto [lo, hi] = normalized(u, v);
  std::vector<int> merge_map(g.n);
  for (int w = 0; w < g.n; ++w)
    merge_map[w] = w == hi ? lo : (w < hi ? w : w - 1);
  Graph out(g.n - 1);
  for (auto [a, b] : g.edges) {
    int ma = merge_map[a], mb = merge_map[b];
    if (ma != mb) out.add_edge(ma, mb);
  }
  return {out, merge_map};
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& s) {
  std::vector<int> ids(s);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids) check_vertex(g, v);

  std::vector<int> new_id(g.n, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) new_id[ids[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(ids.size()));
  for (auto [a, b] : g.edges)
    if (new_id[a] >= 0 && new_id[b] >= 0) out.add_edge(new_id[a], new_id[b]);
  return {out, ids};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<bool> seen(g.n, false);
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.n >= 1 && connected_components(g).size() == 1;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> side(g.n, -1);
  for (int start = 0; start < g.n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;  // the component's smallest vertex lands in A
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < g.n; ++v)
    (side[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

}  // namespace rcp
