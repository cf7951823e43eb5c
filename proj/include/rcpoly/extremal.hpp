#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rcpoly/graph.hpp"
#include "rcpoly/rcp.hpp"
#include "rcpoly/restraint.hpp"

namespace rcp {

enum class Direction { Max, Min };

struct SearchOptions {
  int jobs = 1;
  bool fail_fast = false;
  int max_n = 8;
};

struct WinnerInfo {
  Rgs rgs;
  RestrainedPoly poly;
  bool is_alternating = false;
  bool is_proper_colouring = false;
  int colours_used = 0;
  bool is_minimal_colouring = false;
};

struct ExtremalReport {
  std::string graph6;
  Direction direction = Direction::Max;
  int chromatic_number = 0;
  mpz_class search_space;   // Bell(n) canonical simple restraints
  mpz_class witness_bound;  // winners beat every competitor for all x >= this
  std::vector<WinnerInfo> winners;  // lexicographic RGS order
};

struct Counterexample {
  std::string graph6;
  std::string restraint;
  std::string detail;
};

struct Verdict {
  bool holds = true;
  long checked = 0;
  bool stopped_early = false;
  std::vector<Counterexample> counterexamples;
};

int chromatic_number(const Graph& g);

// The standard simple restraint read as a colouring (v gets its forbidden
// colour): proper and using exactly chi(G) colours.
bool is_minimal_colouring(const Graph& g, const Restraint& r);

// All n^(n-2) labelled trees via Prüfer decoding, lexicographic in the
// sequence (isomorphic duplicates included).
std::vector<Graph> all_labelled_trees(int n);

// Canonical 2-restraints for the tree positivity check: colours from [n], at
// most one vertex with two forbidden colours, one representative per
// colour-permutation class.
std::vector<Restraint> lemma_restraint_family(int n);

// Alternating-restraint colour assignments as canonical RGS, one per
// per-component colour swap (single entry for connected bipartite graphs,
// empty if g is not bipartite). Sorted.
std::vector<Rgs> alternating_rgs_variants(const Graph& g);

// Enumerates all Bell(n) canonical simple restraints and returns the
// eventual-order extreme class.
ExtremalReport extremal_restraints(const Graph& g, Direction direction,
                                   const SearchOptions& opts = {});

// Rainbow restraint maximizes on K_n: eventual >= and pointwise <= on
// [n, n+10] against every class.
Verdict verify_theorem1(int n, const SearchOptions& opts = {});

// Alternating restraint strictly maximizes on trees: eventual > and
// pointwise strict < on [n, n+10] for every non-alternating class.
Verdict verify_theorem2(int n, const SearchOptions& opts = {});

// Positivity at k = max(3, n) for every qualifying 2-restraint on every
// labelled tree.
Verdict verify_lemma_trees(int n, const SearchOptions& opts = {});

// The constant restraint 00..0 sits in every eventual-order min class.
Verdict verify_min_is_constant(const std::vector<Graph>& catalog,
                               const SearchOptions& opts = {});

// The best alternating variant sits in the eventual-order max class.
// Every catalog graph must be bipartite.
Verdict check_conjecture_bipartite(const std::vector<Graph>& catalog,
                                   const SearchOptions& opts = {});

struct SurveyFinding {
  std::string graph6;
  ExtremalReport report;
};

// Graphs whose whole max class contains no minimal colouring.
std::vector<SurveyFinding> survey_non_minimal_maximizers(
    const std::vector<Graph>& catalog, const SearchOptions& opts = {});

struct FigureHit {
  std::string graph6;
  // Graph vertex v receives base-restraint entry labelling[v].
  std::vector<std::vector<int>> labellings;
};

// Connected 6-vertex graphs with chi = 3 admitting a labelling under which
// pi_{1;2;3;1;2;4} - pi_{1;2;3;1;2;3} = (x-3)^2.
std::vector<FigureHit> reconstruct_figure_graph(const std::vector<Graph>& catalog,
                                                const SearchOptions& opts = {});

}  // namespace rcp
