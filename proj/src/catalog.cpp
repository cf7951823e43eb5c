#include "rcpoly/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rcp {

namespace {

std::string strip(const std::string& line) {
  std::size_t b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r\n");
  return line.substr(b, e - b + 1);
}

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::vector<CatalogEntry> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  std::vector<CatalogEntry> entries;
  for (const std::string& line : content_lines(in)) {
    try {
      Graph g = parse_graph6(line);
      entries.push_back(CatalogEntry{line, std::move(g)});
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ": record \"" + line + "\": " + e.what());
    }
  }
  return entries;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines = content_lines(in);
  if (lines.empty()) throw std::invalid_argument("edge list: missing vertex count");
  int n = 0;
  {
    std::istringstream head(lines[0]);
    if (!(head >> n) || n < 0) throw std::invalid_argument("edge list: bad vertex count");
    std::string extra;
    if (head >> extra) throw std::invalid_argument("edge list: bad vertex count line");
  }
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    int u, v;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra))
      throw std::invalid_argument("edge list: bad edge line \"" + lines[i] + "\"");
    g.add_edge(u, v);
  }
  return g;
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

long long expected_connected_count(int order) {
  static const long long counts[] = {0, 1, 1, 2, 6, 21, 112};
  if (order < 1 || order > 6) return 0;
  return counts[order];
}

CatalogReport check_catalog(const std::vector<CatalogEntry>& entries,
                            const std::string& profile) {
  CatalogReport report;
  report.records = static_cast<long long>(entries.size());
  std::set<std::string> seen;
  for (const auto& e : entries) {
    ++report.per_order[e.graph.n];
    if (!seen.insert(e.graph6).second)
      report.issues.push_back("duplicate record " + e.graph6);
  }
  if (profile == "none") return report;

  int max_order = 0;
  if (profile == "connected-le4")
    max_order = 4;
  else if (profile == "connected-le5")
    max_order = 5;
  else if (profile == "connected-le6")
    max_order = 6;
  else
    throw std::invalid_argument("unknown catalog profile: " + profile);

  for (const auto& e : entries) {
    if (e.graph.n < 1 || e.graph.n > max_order)
      report.issues.push_back("record " + e.graph6 + " has order " +
                              std::to_string(e.graph.n) + ", outside 1.." +
                              std::to_string(max_order));
    else if (!is_connected(e.graph))
      report.issues.push_back("record " + e.graph6 + " is not connected");
  }
  for (int order = 1; order <= max_order; ++order) {
    long long have = report.per_order.count(order) ? report.per_order.at(order) : 0;
    long long want = expected_connected_count(order);
    if (have != want)
      report.issues.push_back("order " + std::to_string(order) + ": found " +
                              std::to_string(have) + " graphs, census says " +
                              std::to_string(want));
  }
  return report;
}

}  // namespace rcp
