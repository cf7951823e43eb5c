#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rcpoly/graph.hpp"

namespace rcp {

// Per-vertex finite sets of forbidden colours. Colours are positive integers;
// each set is kept sorted and duplicate-free (empty sets allowed).
struct Restraint {
  std::vector<std::vector<int>> forbid;

  Restraint() = default;
  explicit Restraint(std::vector<std::vector<int>> sets);

  static Restraint empty(int n);

  int size() const { return static_cast<int>(forbid.size()); }
  // Largest colour named anywhere; 0 when every set is empty.
  int max_colour() const;
  bool is_standard(int m) const;     // |r(v)| == m for all v
  bool is_m_restraint(int m) const;  // |r(v)| <= m for all v

  bool operator==(const Restraint&) const = default;
};

// Restricted growth string: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]). Encodes
// a standard simple restraint up to colour permutation: vertex v forbids
// colour a[v] + 1. Two standard simple restraints are colour-permutation
// equivalent iff they share an RGS.
using Rgs = std::vector<int>;

bool is_valid_rgs(const Rgs& a);
Restraint restraint_from_rgs(const Rgs& a);

// Canonical RGS of a standard simple restraint (colours renumbered by first
// appearance). Throws unless the restraint is standard simple.
Rgs rgs_of_simple_restraint(const Restraint& r);

// In-place lexicographic successor; false once the last RGS was reached.
bool next_rgs(Rgs& a);

// All RGS of length n in lexicographic order; Bell(n) of them.
std::vector<Rgs> all_rgs(int n);

mpz_class bell_number(int n);

// {1} on the A side, {2} on the B side of the deterministic bipartition.
// Throws if g is not bipartite.
Restraint alternating_restraint(const Graph& g);

// Restraint on an induced subgraph: original_ids[i] is the original vertex
// behind new vertex i (as returned by induced_subgraph).
Restraint restrict_restraint(const Restraint& r, const std::vector<int>& original_ids);

// Follows contract_edge: the merged vertex gets the union of the endpoint
// sets, everything else moves along merge_map.
Restraint merge_for_contraction(const Restraint& r, const std::vector<int>& merge_map);

// Complement of per-vertex availability lists within [k]: r(v) = [k] - L(v).
Restraint lists_to_restraint(const std::vector<std::vector<int>>& lists, int k);

// "1,2;3;" syntax: semicolon-separated vertices, comma-separated colours,
// empty segment = empty set.
Restraint parse_restraint(const std::string& text);
std::string format_restraint(const Restraint& r);

}  // namespace rcp
