#include "rcpoly/extremal.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "rcpoly/parallel.hpp"

namespace rcp {

namespace {

constexpr std::size_t kGridBlock = 4096;
constexpr std::size_t kMaxStoredCounterexamples = 10000;

// Runs item_check over [0, count) in fixed blocks; fail-fast stops at block
// granularity, so reports are identical for any worker count.
template <typename ItemCheck>
Verdict run_grid(std::size_t count, const SearchOptions& opts, ItemCheck&& item_check) {
  Verdict verdict;
  for (std::size_t start = 0; start < count; start += kGridBlock) {
    std::size_t len = std::min(kGridBlock, count - start);
    auto block = parallel_map<std::optional<Counterexample>>(
        len, opts.jobs, [&](std::size_t k) { return item_check(start + k); });
    for (auto& ce : block) {
      ++verdict.checked;
      if (ce) {
        verdict.holds = false;
        if (verdict.counterexamples.size() < kMaxStoredCounterexamples)
          verdict.counterexamples.push_back(std::move(*ce));
      }
    }
    if (opts.fail_fast && !verdict.holds) {
      verdict.stopped_early = start + len < count;
      break;
    }
  }
  return verdict;
}

std::string rgs_string(const Rgs& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(a[i]);
  }
  return s;
}

void check_size_limit(const Graph& g, const SearchOptions& opts) {
  if (g.n < 1) throw std::invalid_argument("extremal search needs n >= 1");
  if (g.n > opts.max_n)
    throw std::invalid_argument("graph order " + std::to_string(g.n) +
                                " exceeds limit " + std::to_string(opts.max_n));
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.n == 0) return 0;
  Restraint none = Restraint::empty(g.n);
  for (int k = 1; k <= g.n; ++k)
    if (brute_count(g, none, k) > 0) return k;
  return g.n;  // unreachable: K_n is n-colourable
}

bool is_minimal_colouring(const Graph& g, const Restraint& r) {
  if (r.size() != g.n || !r.is_standard(1))
    throw std::invalid_argument("is_minimal_colouring needs a standard simple restraint");
  std::set<int> used;
  for (const auto& s : r.forbid) used.insert(s[0]);
  for (auto [u, v] : g.edges)
    if (r.forbid[u][0] == r.forbid[v][0]) return false;
  return static_cast<int>(used.size()) == chromatic_number(g);
}

std::vector<Graph> all_labelled_trees(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n == 1) return {Graph(1)};
  if (n == 2) return {tree_from_pruefer(2, {})};
  std::vector<Graph> trees;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    trees.push_back(tree_from_pruefer(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return trees;
}

namespace {

void lemma_family_rec(int n, int pos, int max_used, bool has_double,
                      std::vector<std::vector<int>>& sets,
                      std::vector<Restraint>& out) {
  if (pos == n) {
    out.emplace_back(sets);
    return;
  }
  auto descend = [&](std::vector<int> set, int new_max, bool new_double) {
    sets.push_back(std::move(set));
    lemma_family_rec(n, pos + 1, new_max, new_double, sets, out);
    sets.pop_back();
  };
  descend({}, max_used, has_double);
  for (int c = 1; c <= std::min(max_used + 1, n); ++c)
    descend({c}, std::max(max_used, c), has_double);
  if (!has_double) {
    // both colours already used
    for (int c1 = 1; c1 <= max_used; ++c1)
      for (int c2 = c1 + 1; c2 <= max_used; ++c2) descend({c1, c2}, max_used, true);
    // one fresh colour
    if (max_used + 1 <= n)
      for (int c1 = 1; c1 <= max_used; ++c1)
        descend({c1, max_used + 1}, max_used + 1, true);
    // two fresh colours
    if (max_used + 2 <= n)
      descend({max_used + 1, max_used + 2}, max_used + 2, true);
  }
}

// When the doubleton introduced two fresh colours they are interchangeable;
// keep the lexicographically smaller of the pair.
bool lemma_keep_representative(const Restraint& r) {
  int double_pos = -1;
  for (int v = 0; v < r.size(); ++v)
    if (r.forbid[v].size() == 2) double_pos = v;
  if (double_pos < 0) return true;
  int a = r.forbid[double_pos][0], b = r.forbid[double_pos][1];
  int before_max = 0;
  for (int v = 0; v < double_pos; ++v)
    if (!r.forbid[v].empty()) before_max = std::max(before_max, r.forbid[v].back());
  if (a <= before_max) return true;  // only b (or neither) is fresh
  Restraint swapped = r;
  for (auto& s : swapped.forbid) {
    for (int& c : s) {
      if (c == a)
        c = b;
      else if (c == b)
        c = a;
    }
    std::sort(s.begin(), s.end());
  }
  return !(swapped.forbid < r.forbid);
}

}  // namespace

std::vector<Restraint> lemma_restraint_family(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<Restraint> raw;
  std::vector<std::vector<int>> sets;
  lemma_family_rec(n, 0, 0, false, sets, raw);
  std::vector<Restraint> out;
  out.reserve(raw.size());
  for (auto& r : raw)
    if (lemma_keep_representative(r)) out.push_back(std::move(r));
  return out;
}

std::vector<Rgs> alternating_rgs_variants(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) return {};
  if (g.n == 0) return {};
  std::vector<char> in_a(g.n, 0);
  for (int v : parts->first) in_a[v] = 1;
  auto comps = connected_components(g);
  std::vector<int> comp_of(g.n, -1);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (int v : comps[k]) comp_of[v] = static_cast<int>(k);

  std::set<Rgs> variants;
  for (unsigned mask = 0; mask < (1u << comps.size()); ++mask) {
    std::vector<std::vector<int>> sets(g.n);
    for (int v = 0; v < g.n; ++v) {
      bool swap_sides = (mask >> comp_of[v]) & 1;
      int colour = (in_a[v] != swap_sides) ? 1 : 2;
      sets[v] = {colour};
    }
    variants.insert(rgs_of_simple_restraint(Restraint(sets)));
  }
  return {variants.begin(), variants.end()};
}

ExtremalReport extremal_restraints(const Graph& g, Direction direction,
                                   const SearchOptions& opts) {
  check_size_limit(g, opts);
  std::vector<Rgs> rgs_list = all_rgs(g.n);
  auto polys = parallel_map<RestrainedPoly>(
      rgs_list.size(), opts.jobs,
      [&](std::size_t i) { return rcp_delcon(g, restraint_from_rgs(rgs_list[i])); });

  Order want = direction == Direction::Max ? Order::Greater : Order::Less;
  std::size_t best = 0;
  std::vector<std::size_t> winner_idx{0};
  for (std::size_t i = 1; i < polys.size(); ++i) {
    auto cmp = eventually_compare(polys[i].poly, polys[best].poly);
    if (cmp.order == want) {
      best = i;
      winner_idx.assign(1, i);
    } else if (cmp.order == Order::Equal) {
      winner_idx.push_back(i);
    }
  }

  ExtremalReport report;
  report.graph6 = encode_graph6(g);
  report.direction = direction;
  report.chromatic_number = chromatic_number(g);
  report.search_space = bell_number(g.n);
  report.witness_bound = 0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto cmp = eventually_compare(polys[best].poly, polys[i].poly);
    if (cmp.witness > report.witness_bound) report.witness_bound = cmp.witness;
  }

  std::vector<Rgs> alternating = alternating_rgs_variants(g);
  for (std::size_t i : winner_idx) {
    WinnerInfo info;
    info.rgs = rgs_list[i];
    info.poly = polys[i];
    info.is_alternating =
        std::binary_search(alternating.begin(), alternating.end(), info.rgs);
    info.is_proper_colouring = true;
    for (auto [u, v] : g.edges)
      if (info.rgs[u] == info.rgs[v]) info.is_proper_colouring = false;
    info.colours_used = *std::max_element(info.rgs.begin(), info.rgs.end()) + 1;
    info.is_minimal_colouring =
        info.is_proper_colouring && info.colours_used == report.chromatic_number;
    report.winners.push_back(std::move(info));
  }
  return report;
}

Verdict verify_theorem1(int n, const SearchOptions& opts) {
  if (n < 2 || n > 7) throw std::invalid_argument("verify_theorem1 needs 2 <= n <= 7");
  Graph g = complete_graph(n);
  std::string g6 = encode_graph6(g);
  Rgs rainbow(n);
  for (int i = 0; i < n; ++i) rainbow[i] = i;
  RestrainedPoly star = rcp_delcon(g, restraint_from_rgs(rainbow));

  std::vector<Rgs> rgs_list = all_rgs(n);
  return run_grid(rgs_list.size(), opts, [&](std::size_t i) -> std::optional<Counterexample> {
    RestrainedPoly p = rcp_delcon(g, restraint_from_rgs(rgs_list[i]));
    auto cmp = eventually_compare(star.poly, p.poly);
    if (cmp.order == Order::Less)
      return Counterexample{g6, format_restraint(restraint_from_rgs(rgs_list[i])),
                            "rainbow restraint eventually below class " + rgs_string(rgs_list[i])};
    for (int x = n; x <= n + 10; ++x) {
      if (star.poly.evaluate(x) < p.poly.evaluate(x))
        return Counterexample{g6, format_restraint(restraint_from_rgs(rgs_list[i])),
                              "rainbow restraint below class " + rgs_string(rgs_list[i]) +
                                  " at x=" + std::to_string(x)};
    }
    return std::nullopt;
  });
}

Verdict verify_theorem2(int n, const SearchOptions& opts) {
  if (n < 2 || n > 7) throw std::invalid_argument("verify_theorem2 needs 2 <= n <= 7");
  std::vector<Graph> trees = all_labelled_trees(n);
  std::vector<Rgs> rgs_list = all_rgs(n);

  struct TreeData {
    std::string g6;
    Rgs alt;
    RestrainedPoly alt_poly;
  };
  auto tree_data = parallel_map<TreeData>(trees.size(), opts.jobs, [&](std::size_t t) {
    Rgs alt = alternating_rgs_variants(trees[t]).at(0);
    return TreeData{encode_graph6(trees[t]), alt,
                    rcp_delcon(trees[t], restraint_from_rgs(alt))};
  });

  std::size_t grid = trees.size() * rgs_list.size();
  return run_grid(grid, opts, [&](std::size_t idx) -> std::optional<Counterexample> {
    std::size_t t = idx / rgs_list.size();
    std::size_t j = idx % rgs_list.size();
    const TreeData& td = tree_data[t];
    RestrainedPoly p = rcp_delcon(trees[t], restraint_from_rgs(rgs_list[j]));
    auto cmp = eventually_compare(td.alt_poly.poly, p.poly);
    auto restraint_text = [&] { return format_restraint(restraint_from_rgs(rgs_list[j])); };
    if (rgs_list[j] == td.alt) {
      if (cmp.order != Order::Equal)
        return std::optional<Counterexample>{Counterexample{
            td.g6, restraint_text(), "alternating class not equal to itself"}};
      return std::optional<Counterexample>{};
    }
    if (cmp.order != Order::Greater)
      return std::optional<Counterexample>{Counterexample{
          td.g6, restraint_text(),
          "alternating restraint not eventually above class " + rgs_string(rgs_list[j])}};
    for (int x = n; x <= n + 10; ++x) {
      if (!(p.poly.evaluate(x) < td.alt_poly.poly.evaluate(x)))
        return std::optional<Counterexample>{Counterexample{
            td.g6, restraint_text(),
            "alternating restraint not strictly above class " + rgs_string(rgs_list[j]) +
                " at x=" + std::to_string(x)}};
    }
    return std::optional<Counterexample>{};
  });
}

Verdict verify_lemma_trees(int n, const SearchOptions& opts) {
  if (n < 1 || n > 6) throw std::invalid_argument("verify_lemma_trees needs 1 <= n <= 6");
  std::vector<Graph> trees = all_labelled_trees(n);
  std::vector<Restraint> family = lemma_restraint_family(n);
  int k = std::max(3, n);

  std::size_t grid = trees.size() * family.size();
  return run_grid(grid, opts, [&](std::size_t idx) -> std::optional<Counterexample> {
    std::size_t t = idx / family.size();
    std::size_t j = idx % family.size();
    if (brute_count(trees[t], family[j], k) > 0) return std::nullopt;
    return Counterexample{encode_graph6(trees[t]), format_restraint(family[j]),
                          "no permitted colouring at k=" + std::to_string(k)};
  });
}

Verdict verify_min_is_constant(const std::vector<Graph>& catalog,
                               const SearchOptions& opts) {
  SearchOptions inner = opts;
  inner.jobs = 1;
  return run_grid(catalog.size(), opts, [&](std::size_t i) -> std::optional<Counterexample> {
    const Graph& g = catalog[i];
    ExtremalReport rep = extremal_restraints(g, Direction::Min, inner);
    Rgs constant(g.n, 0);
    for (const auto& w : rep.winners)
      if (w.rgs == constant) return std::nullopt;
    return Counterexample{rep.graph6, format_restraint(restraint_from_rgs(constant)),
                          "constant restraint not among " +
                              std::to_string(rep.winners.size()) + " minimizers"};
  });
}

Verdict check_conjecture_bipartite(const std::vector<Graph>& catalog,
                                   const SearchOptions& opts) {
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (!bipartition(catalog[i]))
      throw std::invalid_argument("catalog graph " + std::to_string(i) +
                                  " (" + encode_graph6(catalog[i]) + ") is not bipartite");
  SearchOptions inner = opts;
  inner.jobs = 1;
  return run_grid(catalog.size(), opts, [&](std::size_t i) -> std::optional<Counterexample> {
    ExtremalReport rep = extremal_restraints(catalog[i], Direction::Max, inner);
    for (const auto& w : rep.winners)
      if (w.is_alternating) return std::nullopt;
    return Counterexample{rep.graph6, "",
                          "no alternating variant among " +
                              std::to_string(rep.winners.size()) + " maximizers"};
  });
}

std::vector<SurveyFinding> survey_non_minimal_maximizers(
    const std::vector<Graph>& catalog, const SearchOptions& opts) {
  SearchOptions inner = opts;
  inner.jobs = 1;
  auto reports = parallel_map<ExtremalReport>(catalog.size(), opts.jobs, [&](std::size_t i) {
    return extremal_restraints(catalog[i], Direction::Max, inner);
  });
  std::vector<SurveyFinding> findings;
  for (auto& rep : reports) {
    bool any_minimal = false;
    for (const auto& w : rep.winners) any_minimal = any_minimal || w.is_minimal_colouring;
    if (!any_minimal) findings.push_back(SurveyFinding{rep.graph6, std::move(rep)});
  }
  return findings;
}

std::vector<FigureHit> reconstruct_figure_graph(const std::vector<Graph>& catalog,
                                                const SearchOptions& opts) {
  const Restraint base_r1(std::vector<std::vector<int>>{{1}, {2}, {3}, {1}, {2}, {4}});
  const Restraint base_r2(std::vector<std::vector<int>>{{1}, {2}, {3}, {1}, {2}, {3}});
  const IntPoly target(std::vector<mpz_class>{9, -6, 1});  // (x-3)^2

  std::vector<const Graph*> candidates;
  for (const Graph& g : catalog)
    if (g.n == 6 && is_connected(g) && chromatic_number(g) == 3)
      candidates.push_back(&g);

  auto hits = parallel_map<FigureHit>(candidates.size(), opts.jobs, [&](std::size_t i) {
    const Graph& g = *candidates[i];
    FigureHit hit;
    hit.graph6 = encode_graph6(g);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    do {
      Restraint r1 = Restraint::empty(6), r2 = Restraint::empty(6);
      for (int v = 0; v < 6; ++v) {
        r1.forbid[v] = base_r1.forbid[perm[v]];
        r2.forbid[v] = base_r2.forbid[perm[v]];
      }
      // cheap screen before computing polynomials
      if (brute_count(g, r1, 4) - brute_count(g, r2, 4) != 1) continue;
      if (brute_count(g, r1, 5) - brute_count(g, r2, 5) != 4) continue;
      if (rcp_delcon(g, r1).poly - rcp_delcon(g, r2).poly == target)
        hit.labellings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hit;
  });

  std::vector<FigureHit> found;
  for (auto& h : hits)
    if (!h.labellings.empty()) found.push_back(std::move(h));
  return found;
}

}  // namespace rcp
