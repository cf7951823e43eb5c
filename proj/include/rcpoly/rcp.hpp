#pragma once

#include "rcpoly/graph.hpp"
#include "rcpoly/poly.hpp"
#include "rcpoly/restraint.hpp"

namespace rcp {

// The polynomial together with the smallest integer x0 from which it counts
// permitted colourings: poly(x) = #permitted x-colourings for all x >= x0.
// x0 is the largest colour named in the restraint (0 for the empty one).
struct RestrainedPoly {
  IntPoly poly;
  int threshold = 0;

  bool operator==(const RestrainedPoly&) const = default;
};

int restraint_threshold(const Restraint& r);

// Exact number of proper colourings c:V -> [x] with c(v) not in r(v), by
// backtracking over a core-first (reverse degeneracy) vertex order.
// Colour sets are 64-bit masks, so x <= 62.
long brute_count(const Graph& g, const Restraint& r, int x);

// Permitted colourings with c(v) = colour; 0 when colour is forbidden at v.
long count_with_fixed_colour(const Graph& g, const Restraint& r, int v,
                                  int colour, int x);

// Deletion/contraction with memoization on the exact (graph, restraint)
// representation. Base case on edgeless graphs: prod_v (x - |r(v)|).
RestrainedPoly rcp_delcon(const Graph& g, const Restraint& r);

// Independent route: Lagrange interpolation of brute_count through the n+1
// nodes threshold..threshold+n.
RestrainedPoly rcp_interpolate(const Graph& g, const Restraint& r);

}  // namespace rcp
