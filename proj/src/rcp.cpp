#include "rcpoly/rcp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rcp {

namespace {

void check_pair(const Graph& g, const Restraint& r) {
  if (r.size() != g.n)
    throw std::invalid_argument("restraint has " + std::to_string(r.size()) +
                                " entries for a graph on " + std::to_string(g.n) +
                                " vertices");
}

// Core-first order: reverse of a min-degree peeling.
std::vector<int> counting_order(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<bool> removed(g.n, false);
  std::vector<int> peel;
  peel.reserve(g.n);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    peel.push_back(best);
    for (int w : adj[best])
      if (!removed[w]) --deg[w];
  }
  std::reverse(peel.begin(), peel.end());
  return peel;
}

struct CountContext {
  int n = 0;
  std::uint64_t window = 0;
  std::vector<std::uint64_t> forbid;             // per position
  std::vector<std::vector<int>> back_neighbours;  // positions j < i adjacent to i
};

long count_rec(const CountContext& ctx, std::vector<std::uint64_t>& chosen, int i) {
  std::uint64_t avail = ctx.window & ~ctx.forbid[i];
  for (int j : ctx.back_neighbours[i]) avail &= ~chosen[j];
  if (i + 1 == ctx.n) return std::popcount(avail);
  long total = 0;
  while (avail) {
    std::uint64_t bit = avail & (~avail + 1);
    avail ^= bit;
    chosen[i] = bit;
    total += count_rec(ctx, chosen, i + 1);
  }
  return total;
}

long count_colourings(const Graph& g, const Restraint& r, int x,
                           int fixed_vertex = -1, int fixed_colour = 0) {
  check_pair(g, r);
  if (x < 0) throw std::invalid_argument("negative colour count");
  if (x > 62) throw std::invalid_argument("brute-force counting supports x <= 62");
  if (g.n == 0) return 1;
  if (x == 0) return 0;

  std::vector<int> order = counting_order(g);
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;

  CountContext ctx;
  ctx.n = g.n;
  ctx.window = (x == 62) ? ~std::uint64_t(0) >> 2 : ((std::uint64_t(1) << x) - 1);
  ctx.forbid.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int c : r.forbid[v])
      if (c <= 62) ctx.forbid[pos[v]] |= std::uint64_t(1) << (c - 1);
  if (fixed_vertex >= 0)
    ctx.forbid[pos[fixed_vertex]] =
        ctx.window & ~(std::uint64_t(1) << (fixed_colour - 1));
  ctx.back_neighbours.assign(g.n, {});
  for (auto [u, v] : g.edges) {
    int a = pos[u], b = pos[v];
    if (a > b) std::swap(a, b);
    ctx.back_neighbours[b].push_back(a);
  }

  std::vector<std::uint64_t> chosen(g.n, 0);
  return count_rec(ctx, chosen, 0);
}

std::string memo_key(const Graph& g, const Restraint& r) {
  std::string key;
  key.reserve(8 * g.edges.size() + 4 * g.n);
  key += std::to_string(g.n);
  for (auto [u, v] : g.edges) {
    key += ' ';
    key += std::to_string(u);
    key += ',';
    key += std::to_string(v);
  }
  key += '|';
  for (const auto& s : r.forbid) {
    for (int c : s) {
      key += std::to_string(c);
      key += ',';
    }
    key += ';';
  }
  return key;
}

IntPoly edgeless_poly(const Restraint& r) {
  IntPoly p = IntPoly::constant(1);
  for (const auto& s : r.forbid) {
    IntPoly factor(std::vector<mpz_class>{-mpz_class(s.size()), 1});
    p = p * factor;
  }
  return p;
}

IntPoly delcon_rec(const Graph& g, const Restraint& r,
                   std::unordered_map<std::string, IntPoly>& memo) {
  if (g.edges.empty()) return edgeless_poly(r);
  std::string key = memo_key(g, r);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Edge on a highest-degree vertex keeps the recursion shallow.
  int u = 0;
  {
    int best_deg = -1;
    std::vector<int> deg(g.n, 0);
    for (auto [a, b] : g.edges) {
      ++deg[a];
      ++deg[b];
    }
    for (int v = 0; v < g.n; ++v)
      if (deg[v] > best_deg) {
        best_deg = deg[v];
        u = v;
      }
  }
  int v = -1;
  for (auto [a, b] : g.edges) {
    if (a == u) {
      v = b;
      break;
    }
    if (b == u) {
      v = a;
      break;
    }
  }

  IntPoly deleted = delcon_rec(delete_edge(g, u, v), r, memo);
  auto [contracted, merge_map] = contract_edge(g, u, v);
  IntPoly merged = delcon_rec(contracted, merge_for_contraction(r, merge_map), memo);
  IntPoly result = deleted - merged;
  memo.emplace(std::move(key), result);
  return result;
}

RestrainedPoly make_restrained(IntPoly poly, int n, int threshold) {
  if (poly.degree() != n || (n >= 0 && poly.coeff(n) != 1))
    throw std::logic_error("restrained chromatic polynomial must be monic of degree n");
  for (int i = 0; i <= n; ++i) {
    mpz_class signed_coeff = ((n - i) % 2 == 0) ? poly.coeff(i) : -poly.coeff(i);
    if (signed_coeff < 0)
      throw std::logic_error("restrained chromatic polynomial coefficients must alternate in sign");
  }
  return RestrainedPoly{std::move(poly), threshold};
}

}  // namespace

int restraint_threshold(const Restraint& r) { return r.max_colour(); }

long brute_count(const Graph& g, const Restraint& r, int x) {
  return count_colourings(g, r, x);
}

long count_with_fixed_colour(const Graph& g, const Restraint& r, int v,
                                  int colour, int x) {
  check_pair(g, r);
  if (x < 1) throw std::invalid_argument("need x >= 1");
  if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
  if (colour < 1 || colour > x) throw std::invalid_argument("colour must be in [x]");
  if (std::binary_search(r.forbid[v].begin(), r.forbid[v].end(), colour)) return 0;
  return count_colourings(g, r, x, v, colour);
}

RestrainedPoly rcp_delcon(const Graph& g, const Restraint& r) {
  check_pair(g, r);
  std::unordered_map<std::string, IntPoly> memo;
  return make_restrained(delcon_rec(g, r, memo), g.n, restraint_threshold(r));
}

RestrainedPoly rcp_interpolate(const Graph& g, const Restraint& r) {
  check_pair(g, r);
  int x0 = restraint_threshold(r);
  std::vector<mpz_class> values(g.n + 1);
  for (int i = 0; i <= g.n; ++i)
    values[i] = brute_count(g, r, x0 + i);
  return make_restrained(interpolate_integer_poly(x0, values), g.n, x0);
}

}  // namespace rcp
