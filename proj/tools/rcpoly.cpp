#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rcpoly/catalog.hpp"
#include "rcpoly/extremal.hpp"
#include "rcpoly/rcp.hpp"

using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kCatalogEnv = "RCPOLY_CATALOG_DIR";
constexpr const char* kDefaultCatalogFile = "connected_le6.g6";

ordered_json mpz_json(const mpz_class& v) {
  // JSON numbers are only exact up to 2^53; fall back to strings beyond that.
  if (v.fits_slong_p()) {
    long x = v.get_si();
    if (x <= (1L << 53) && x >= -(1L << 53)) return x;
  }
  return v.get_str();
}

ordered_json poly_json(const rcp::RestrainedPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.poly.coeffs()) coeffs.push_back(mpz_json(c));
  return ordered_json{{"coeffs", coeffs},
                      {"threshold", p.threshold},
                      {"text", p.poly.to_string()}};
}

std::string rgs_text(const rcp::Rgs& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(a[i]);
  }
  return s;
}

std::string coeffs_text(const rcp::IntPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ' ';
    s += p.coeffs()[i].get_str();
  }
  return s;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

ordered_json winner_json(const rcp::WinnerInfo& w) {
  return ordered_json{{"rgs", rgs_text(w.rgs)},
                      {"restraint", format_restraint(rcp::restraint_from_rgs(w.rgs))},
                      {"poly", poly_json(w.poly)},
                      {"is_alternating", w.is_alternating},
                      {"is_proper_colouring", w.is_proper_colouring},
                      {"colours_used", w.colours_used},
                      {"is_minimal_colouring", w.is_minimal_colouring}};
}

ordered_json report_json(const rcp::ExtremalReport& rep) {
  ordered_json winners = ordered_json::array();
  for (const auto& w : rep.winners) winners.push_back(winner_json(w));
  return ordered_json{
      {"graph6", rep.graph6},
      {"direction", rep.direction == rcp::Direction::Max ? "max" : "min"},
      {"chromatic_number", rep.chromatic_number},
      {"search_space", mpz_json(rep.search_space)},
      {"witness_bound", mpz_json(rep.witness_bound)},
      {"winners", winners}};
}

ordered_json verdict_json(const rcp::Verdict& v) {
  ordered_json ces = ordered_json::array();
  for (const auto& ce : v.counterexamples)
    ces.push_back(ordered_json{
        {"graph6", ce.graph6}, {"restraint", ce.restraint}, {"detail", ce.detail}});
  return ordered_json{{"verdict", v.holds ? "holds" : "fails"},
                      {"checked", v.checked},
                      {"stopped_early", v.stopped_early},
                      {"counterexamples", ces}};
}

struct Emission {
  ordered_json results = ordered_json::array();
  std::vector<std::string> csv;   // first line is the header
  std::vector<std::string> text;
};

void emit(const std::string& subcommand, const ordered_json& inputs,
          const Emission& out, const std::string& format,
          std::chrono::steady_clock::time_point started) {
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (format == "json") {
    ordered_json envelope{{"subcommand", subcommand},
                          {"inputs", inputs},
                          {"results", out.results},
                          {"timing", ordered_json{{"seconds", seconds}}},
                          {"tool_version", kVersion}};
    std::cout << envelope.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& line : out.csv) std::cout << line << "\n";
  } else {
    for (const auto& line : out.text) std::cout << line << "\n";
  }
}

struct GraphInput {
  std::string graph6;
  std::string edges_file;

  rcp::Graph load(ordered_json& inputs) const {
    if (!graph6.empty() && !edges_file.empty())
      throw std::invalid_argument("give either --graph6 or --edges-file, not both");
    if (!graph6.empty()) {
      inputs["graph6"] = graph6;
      return rcp::parse_graph6(graph6);
    }
    if (!edges_file.empty()) {
      inputs["edges_file"] = edges_file;
      return rcp::load_edge_list_file(edges_file);
    }
    throw std::invalid_argument("a graph is required (--graph6 or --edges-file)");
  }
};

rcp::Restraint restraint_for(const rcp::Graph& g, const std::string& text) {
  rcp::Restraint r = text.empty() ? rcp::Restraint::empty(g.n) : rcp::parse_restraint(text);
  if (r.size() != g.n)
    throw std::invalid_argument("restraint has " + std::to_string(r.size()) +
                                " entries but the graph has " + std::to_string(g.n) +
                                " vertices");
  return r;
}

std::pair<long, long> parse_window(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("window must look like LO:HI");
  long lo = std::stol(text.substr(0, colon));
  long hi = std::stol(text.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument("window needs LO <= HI");
  return {lo, hi};
}

std::string default_catalog_path() {
  const char* dir = std::getenv(kCatalogEnv);
  if (!dir || !*dir)
    throw std::invalid_argument(std::string("no --graph6-file given and ") + kCatalogEnv +
                                " is not set");
  return std::string(dir) + "/" + kDefaultCatalogFile;
}

std::vector<rcp::Graph> load_catalog(const std::string& file, int max_n, bool allow_any,
                                     ordered_json& inputs) {
  std::string path = file.empty() ? default_catalog_path() : file;
  inputs["graph6_file"] = path;
  auto entries = rcp::load_graph6_file(path);
  std::vector<rcp::CatalogEntry> kept;
  for (auto& e : entries)
    if (e.graph.n <= max_n) kept.push_back(std::move(e));
  if (!allow_any) {
    std::string profile = "connected-le" + std::to_string(max_n);
    rcp::CatalogReport report = rcp::check_catalog(kept, profile);
    if (!report.ok()) {
      std::string msg = "catalog failed validation (" + profile + ")";
      for (const auto& issue : report.issues) msg += "; " + issue;
      throw std::invalid_argument(msg);
    }
  }
  std::vector<rcp::Graph> graphs;
  graphs.reserve(kept.size());
  for (auto& e : kept) graphs.push_back(std::move(e.graph));
  return graphs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact restrained chromatic polynomials for small graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format = "json";
  int jobs = 1;
  int max_n = 8;
  bool fail_fast = false;

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "restrained chromatic polynomial of one graph");
  GraphInput poly_graph;
  std::string poly_restraint, poly_window;
  poly_cmd->add_option("--graph6", poly_graph.graph6, "graph6 record");
  poly_cmd->add_option("--edges-file", poly_graph.edges_file, "edge list file");
  poly_cmd->add_option("--restraint", poly_restraint, "forbidden colours, e.g. \"1,2;3;\"");
  poly_cmd->add_option("--x-window", poly_window, "also evaluate on LO:HI");
  poly_cmd->add_option("--format", format, "json|csv|text");
  poly_cmd->add_option("--max-n", max_n, "size limit");

  // count
  auto* count_cmd = app.add_subcommand("count", "permitted colourings at one x");
  GraphInput count_graph;
  std::string count_restraint;
  int count_x = -1;
  count_cmd->add_option("--graph6", count_graph.graph6, "graph6 record");
  count_cmd->add_option("--edges-file", count_graph.edges_file, "edge list file");
  count_cmd->add_option("--restraint", count_restraint, "forbidden colours");
  count_cmd->add_option("--x", count_x, "number of colours")->required();
  count_cmd->add_option("--format", format, "json|csv|text");
  count_cmd->add_option("--max-n", max_n, "size limit");

  // extremal
  auto* ext_cmd = app.add_subcommand("extremal", "extremal simple restraints of one graph");
  GraphInput ext_graph;
  std::string ext_direction = "max";
  ext_cmd->add_option("--graph6", ext_graph.graph6, "graph6 record");
  ext_cmd->add_option("--edges-file", ext_graph.edges_file, "edge list file");
  ext_cmd->add_option("--direction", ext_direction, "max|min")
      ->check(CLI::IsMember({"max", "min"}));
  ext_cmd->add_option("--jobs", jobs, "worker threads");
  ext_cmd->add_option("--format", format, "json|csv|text");
  ext_cmd->add_option("--max-n", max_n, "size limit");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run one verifier");
  std::string which;
  verify_cmd
      ->add_option("which", which,
                   "theorem1|theorem2|lemma|min-constant|conjecture|survey|figure1")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemma", "min-constant",
                             "conjecture", "survey", "figure1"}));
  int verify_n = 0;
  std::string verify_file;
  std::optional<int> verify_max_n;
  bool allow_any_catalog = false;
  verify_cmd->add_option("--n", verify_n, "order for theorem1|theorem2|lemma");
  verify_cmd->add_option("--graph6-file", verify_file,
                         "catalog file (default $RCPOLY_CATALOG_DIR/connected_le6.g6)");
  verify_cmd->add_option("--max-n", verify_max_n,
                         "catalog order cap (min-constant: 5, others: 6)");
  verify_cmd->add_flag("--allow-any-catalog", allow_any_catalog,
                       "skip the census validation of the catalog");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_flag("--fail-fast", fail_fast, "stop at the first counterexample");
  verify_cmd->add_option("--format", format, "json|csv|text");

  // catalog-check
  auto* cat_cmd = app.add_subcommand("catalog-check", "validate a graph6 catalog file");
  std::string cat_file, cat_profile = "none";
  cat_cmd->add_option("--graph6-file", cat_file, "graph6 file")->required();
  cat_cmd->add_option("--profile", cat_profile, "none|connected-le4|connected-le5|connected-le6")
      ->check(CLI::IsMember({"none", "connected-le4", "connected-le5", "connected-le6"}));
  cat_cmd->add_option("--format", format, "json|csv|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    if (format != "json" && format != "csv" && format != "text")
      throw std::invalid_argument("unknown format: " + format);

    ordered_json inputs;
    Emission out;
    int exit_code = 0;

    if (poly_cmd->parsed()) {
      rcp::Graph g = poly_graph.load(inputs);
      if (g.n > max_n) throw std::invalid_argument("graph order exceeds --max-n");
      rcp::Restraint r = restraint_for(g, poly_restraint);
      inputs["restraint"] = format_restraint(r);
      rcp::RestrainedPoly p = rcp_delcon(g, r);

      ordered_json result{{"graph6", rcp::encode_graph6(g)},
                          {"restraint", format_restraint(r)},
                          {"poly", poly_json(p)}};
      out.text.push_back("pi_r = " + p.poly.to_string() + "   (threshold " +
                         std::to_string(p.threshold) + ")");
      if (!poly_window.empty()) {
        auto [lo, hi] = parse_window(poly_window);
        inputs["x_window"] = poly_window;
        ordered_json values = ordered_json::array();
        for (long x = lo; x <= hi; ++x) {
          mpz_class v = p.poly.evaluate(x);
          values.push_back(ordered_json::array({x, mpz_json(v)}));
          out.text.push_back("  x=" + std::to_string(x) + ": " + v.get_str());
        }
        result["values"] = values;
      }
      out.results.push_back(result);
      out.csv.push_back("graph6,restraint,threshold,degree,coeffs_low_to_high,text");
      out.csv.push_back(csv_quote(rcp::encode_graph6(g)) + "," +
                        csv_quote(format_restraint(r)) + "," +
                        std::to_string(p.threshold) + "," +
                        std::to_string(p.poly.degree()) + "," +
                        csv_quote(coeffs_text(p.poly)) + "," +
                        csv_quote(p.poly.to_string()));
    } else if (count_cmd->parsed()) {
      rcp::Graph g = count_graph.load(inputs);
      if (g.n > max_n) throw std::invalid_argument("graph order exceeds --max-n");
      rcp::Restraint r = restraint_for(g, count_restraint);
      inputs["restraint"] = format_restraint(r);
      inputs["x"] = count_x;
      long c = rcp::brute_count(g, r, count_x);
      out.results.push_back(ordered_json{{"graph6", rcp::encode_graph6(g)},
                                         {"restraint", format_restraint(r)},
                                         {"x", count_x},
                                         {"count", c}});
      out.csv.push_back("graph6,restraint,x,count");
      out.csv.push_back(csv_quote(rcp::encode_graph6(g)) + "," +
                        csv_quote(format_restraint(r)) + "," + std::to_string(count_x) +
                        "," + std::to_string(c));
      out.text.push_back(std::to_string(c));
    } else if (ext_cmd->parsed()) {
      rcp::Graph g = ext_graph.load(inputs);
      inputs["direction"] = ext_direction;
      inputs["jobs"] = jobs;
      rcp::SearchOptions opts{jobs, false, max_n};
      rcp::Direction dir =
          ext_direction == "max" ? rcp::Direction::Max : rcp::Direction::Min;
      rcp::ExtremalReport rep = extremal_restraints(g, dir, opts);
      out.results.push_back(report_json(rep));
      out.csv.push_back(
          "graph6,direction,rgs,restraint,threshold,coeffs_low_to_high,is_alternating,"
          "is_proper_colouring,colours_used,is_minimal_colouring");
      out.text.push_back(rep.graph6 + " " + ext_direction + ": " +
                         std::to_string(rep.winners.size()) + " winner class(es), chi=" +
                         std::to_string(rep.chromatic_number));
      for (const auto& w : rep.winners) {
        std::string restraint = format_restraint(rcp::restraint_from_rgs(w.rgs));
        out.csv.push_back(csv_quote(rep.graph6) + "," + ext_direction + "," +
                          rgs_text(w.rgs) + "," + csv_quote(restraint) + "," +
                          std::to_string(w.poly.threshold) + "," +
                          csv_quote(coeffs_text(w.poly.poly)) + "," +
                          (w.is_alternating ? "1" : "0") + "," +
                          (w.is_proper_colouring ? "1" : "0") + "," +
                          std::to_string(w.colours_used) + "," +
                          (w.is_minimal_colouring ? "1" : "0"));
        out.text.push_back("  " + restraint + "  ->  " + w.poly.poly.to_string());
      }
    } else if (verify_cmd->parsed()) {
      inputs["which"] = which;
      inputs["jobs"] = jobs;
      inputs["fail_fast"] = fail_fast;
      rcp::SearchOptions opts{jobs, fail_fast, 8};
      ordered_json result;
      bool holds = false;

      if (which == "theorem1" || which == "theorem2" || which == "lemma") {
        if (verify_n <= 0)
          throw std::invalid_argument("--n is required for " + which);
        inputs["n"] = verify_n;
        rcp::Verdict v = which == "theorem1"  ? rcp::verify_theorem1(verify_n, opts)
                         : which == "theorem2" ? rcp::verify_theorem2(verify_n, opts)
                                               : rcp::verify_lemma_trees(verify_n, opts);
        holds = v.holds;
        result = verdict_json(v);
        result["which"] = which;
        out.csv.push_back("graph6,restraint,detail");
        for (const auto& ce : v.counterexamples)
          out.csv.push_back(csv_quote(ce.graph6) + "," + csv_quote(ce.restraint) + "," +
                            csv_quote(ce.detail));
        out.text.push_back(which + " n=" + std::to_string(verify_n) + ": " +
                           (holds ? "holds" : "FAILS") + " (" + std::to_string(v.checked) +
                           " cases)");
        for (const auto& ce : v.counterexamples)
          out.text.push_back("  counterexample " + ce.graph6 + " " + ce.restraint + ": " +
                             ce.detail);
      } else if (which == "min-constant" || which == "conjecture") {
        int cap = verify_max_n.value_or(which == "min-constant" ? 5 : 6);
        inputs["max_n"] = cap;
        auto graphs = load_catalog(verify_file, cap, allow_any_catalog, inputs);
        if (which == "conjecture") {
          std::vector<rcp::Graph> bipartite;
          for (auto& g : graphs)
            if (rcp::bipartition(g)) bipartite.push_back(std::move(g));
          graphs = std::move(bipartite);
          inputs["bipartite_graphs"] = graphs.size();
        }
        rcp::Verdict v = which == "min-constant"
                             ? rcp::verify_min_is_constant(graphs, opts)
                             : rcp::check_conjecture_bipartite(graphs, opts);
        holds = v.holds;
        result = verdict_json(v);
        result["which"] = which;
        out.csv.push_back("graph6,restraint,detail");
        for (const auto& ce : v.counterexamples)
          out.csv.push_back(csv_quote(ce.graph6) + "," + csv_quote(ce.restraint) + "," +
                            csv_quote(ce.detail));
        out.text.push_back(which + ": " + (holds ? "holds" : "FAILS") + " (" +
                           std::to_string(v.checked) + " graphs)");
        for (const auto& ce : v.counterexamples)
          out.text.push_back("  counterexample " + ce.graph6 + ": " + ce.detail);
      } else if (which == "survey") {
        int cap = verify_max_n.value_or(6);
        inputs["max_n"] = cap;
        auto graphs = load_catalog(verify_file, cap, allow_any_catalog, inputs);
        auto findings = rcp::survey_non_minimal_maximizers(graphs, opts);
        holds = findings.size() == 2;  // the known census of exceptions
        result["which"] = which;
        result["verdict"] = holds ? "holds" : "fails";
        result["graphs_scanned"] = graphs.size();
        ordered_json flist = ordered_json::array();
        out.csv.push_back("graph6,chromatic_number,winner_count,winner_rgs");
        for (const auto& f : findings) {
          flist.push_back(report_json(f.report));
          std::string rgs_join;
          for (const auto& w : f.report.winners) {
            if (!rgs_join.empty()) rgs_join += "|";
            rgs_join += rgs_text(w.rgs);
          }
          out.csv.push_back(csv_quote(f.graph6) + "," +
                            std::to_string(f.report.chromatic_number) + "," +
                            std::to_string(f.report.winners.size()) + "," +
                            csv_quote(rgs_join));
          out.text.push_back("  non-minimal maximizer on " + f.graph6 +
                             " (chi=" + std::to_string(f.report.chromatic_number) + ")");
        }
        result["findings"] = flist;
        out.text.insert(out.text.begin(),
                        "survey: " + std::to_string(findings.size()) +
                            " graph(s) whose maximizers are never minimal colourings");
      } else {  // figure1
        int cap = verify_max_n.value_or(6);
        inputs["max_n"] = cap;
        auto graphs = load_catalog(verify_file, cap, allow_any_catalog, inputs);
        auto hits = rcp::reconstruct_figure_graph(graphs, opts);
        holds = !hits.empty();
        result["which"] = which;
        result["verdict"] = holds ? "holds" : "fails";
        ordered_json hlist = ordered_json::array();
        out.csv.push_back("graph6,labellings");
        for (const auto& h : hits) {
          ordered_json labellings = ordered_json::array();
          for (const auto& perm : h.labellings) labellings.push_back(perm);
          hlist.push_back(ordered_json{{"graph6", h.graph6},
                                       {"labellings", labellings}});
          out.csv.push_back(csv_quote(h.graph6) + "," +
                            std::to_string(h.labellings.size()));
          out.text.push_back("  candidate " + h.graph6 + " with " +
                             std::to_string(h.labellings.size()) + " labelling(s)");
        }
        result["hits"] = hlist;
        out.text.insert(out.text.begin(), "figure1: " + std::to_string(hits.size()) +
                                              " graph(s) reproduce the (x-3)^2 gap");
      }
      out.results.push_back(result);
      exit_code = holds ? 0 : 1;
    } else if (cat_cmd->parsed()) {
      inputs["graph6_file"] = cat_file;
      inputs["profile"] = cat_profile;
      auto entries = rcp::load_graph6_file(cat_file);
      rcp::CatalogReport report = rcp::check_catalog(entries, cat_profile);
      ordered_json per_order;
      for (const auto& [order, count] : report.per_order)
        per_order[std::to_string(order)] = count;
      ordered_json issues = ordered_json::array();
      for (const auto& issue : report.issues) issues.push_back(issue);
      out.results.push_back(ordered_json{{"file", cat_file},
                                         {"records", report.records},
                                         {"per_order", per_order},
                                         {"issues", issues},
                                         {"ok", report.ok()}});
      out.csv.push_back("file,records,ok,issues");
      out.csv.push_back(csv_quote(cat_file) + "," + std::to_string(report.records) + "," +
                        (report.ok() ? "1" : "0") + "," +
                        std::to_string(report.issues.size()));
      out.text.push_back(cat_file + ": " + std::to_string(report.records) + " records, " +
                         (report.ok() ? "ok" : "INVALID"));
      for (const auto& issue : report.issues) out.text.push_back("  " + issue);
      exit_code = report.ok() ? 0 : 1;
    }

    std::string subcommand = app.get_subcommands().front()->get_name();
    emit(subcommand, inputs, out, format, started);
    return exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
