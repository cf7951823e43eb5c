#pragma once

#include <map>
#include <string>
#include <vector>

#include "rcpoly/graph.hpp"

namespace rcp {

struct CatalogEntry {
  std::string graph6;
  Graph graph;
};

// One graph6 record per line; blank lines and lines starting with '#' are
// skipped. Throws on unreadable files or malformed records.
std::vector<CatalogEntry> load_graph6_file(const std::string& path);

// "n\nu v\nu v\n..." with the same comment/blank-line rules.
Graph parse_edge_list(const std::string& text);
Graph load_edge_list_file(const std::string& path);

struct CatalogReport {
  long long records = 0;
  std::map<int, long long> per_order;
  std::vector<std::string> issues;  // empty means the catalog checks out
  bool ok() const { return issues.empty(); }
};

// Expected number of pairwise non-isomorphic connected graphs of each order
// (1..6); 0 for orders outside the table.
long long expected_connected_count(int order);

// profile "none": parseability and duplicate records only.
// profile "connected-leN" (N in 4..6): additionally every graph connected,
// orders within 1..N, and per-order counts matching the known census.
CatalogReport check_catalog(const std::vector<CatalogEntry>& entries,
                            const std::string& profile);

}  // namespace rcp
