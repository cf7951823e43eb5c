#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rcpoly/catalog.hpp"
#include "rcpoly/extremal.hpp"

using namespace rcp;

namespace {

const std::string kCatalogPath = std::string(RCPOLY_DATA_DIR) + "/connected_le6.g6";

}  // namespace

TEST_CASE("bundled catalog loads and matches the census") {
  auto entries = load_graph6_file(kCatalogPath);
  CHECK(entries.size() == 143);

  CatalogReport report = check_catalog(entries, "connected-le6");
  for (const auto& issue : report.issues) MESSAGE(issue);
  CHECK(report.ok());
  CHECK(report.per_order.at(6) == 112);
  CHECK(report.per_order.at(5) == 21);

  for (const auto& e : entries) CHECK(encode_graph6(e.graph) == e.graph6);
}

TEST_CASE("catalog filtered to order 5 matches the smaller census") {
  auto entries = load_graph6_file(kCatalogPath);
  std::vector<CatalogEntry> le5;
  for (auto& e : entries)
    if (e.graph.n <= 5) le5.push_back(e);
  CHECK(le5.size() == 31);
  CHECK(check_catalog(le5, "connected-le5").ok());
  // the same records fail the order-6 profile
  CHECK(!check_catalog(le5, "connected-le6").ok());
}

TEST_CASE("catalog issue detection") {
  std::vector<CatalogEntry> dup{{"Bw", parse_graph6("Bw")}, {"Bw", parse_graph6("Bw")}};
  CatalogReport report = check_catalog(dup, "none");
  CHECK(!report.ok());

  std::vector<CatalogEntry> disconnected{{"B?", parse_graph6("B?")}};
  CHECK(!check_catalog(disconnected, "connected-le6").ok());

  CHECK_THROWS_AS(check_catalog({}, "connected-le99"), std::invalid_argument);
  CHECK_THROWS_AS(load_graph6_file("/nonexistent/path.g6"), std::runtime_error);
}

TEST_CASE("graph6 file comments and blank lines are skipped") {
  const char* path = "test_catalog_tmp.g6";
  {
    std::ofstream out(path);
    out << "# header\n\nBw\n  \n# trailing comment\nBg\n";
  }
  auto entries = load_graph6_file(path);
  std::remove(path);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].graph == complete_graph(3));
  CHECK(entries[1].graph == path_graph(3));
}

TEST_CASE("malformed records carry file context") {
  const char* path = "test_catalog_bad.g6";
  {
    std::ofstream out(path);
    out << "Bw\nBx\n";  // second record has padding garbage
  }
  CHECK_THROWS_AS(load_graph6_file(path), std::runtime_error);
  std::remove(path);
}

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("3\n0 1\n1 2\n") == path_graph(3));
  CHECK(parse_edge_list("# comment\n4\n\n0 1\n2 3\n") == Graph(4, {{0, 1}, {2, 3}}));
  CHECK(parse_edge_list("2\n") == edgeless_graph(2));

  CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("two\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), std::invalid_argument);
}

TEST_CASE("expected census values") {
  CHECK(expected_connected_count(1) == 1);
  CHECK(expected_connected_count(4) == 6);
  CHECK(expected_connected_count(6) == 112);
  CHECK(expected_connected_count(7) == 0);
}
