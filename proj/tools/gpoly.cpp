#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpoly/equivalence.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/graph6.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/search.hpp"
#include "gpoly/serialization.hpp"
#include "gpoly/verify.hpp"

namespace {

using namespace gpoly;

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

// Edge lists start with "<n> <m>"; graph6 bytes live in 63..126, so the first
// non-blank character tells the two formats apart.
bool starts_with_digit(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    return std::isdigit(static_cast<unsigned char>(line.front())) != 0;
  }
  return false;
}

Multigraph load_graph(const std::string& path) {
  const std::string content = read_input(path);
  try {
    if (starts_with_digit(content)) return Multigraph::parse_edge_list(content);
    std::istringstream in(content);
    std::string line;
    std::vector<std::string> graph_lines;
    while (std::getline(in, line)) {
      while (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) graph_lines.push_back(line);
    }
    if (graph_lines.empty()) throw ParseError(0, "no graph found");
    if (graph_lines.size() > 1)
      throw PreconditionError("input holds " + std::to_string(graph_lines.size()) +
                              " graphs; compute and compare expect exactly one");
    return graph6_decode(graph_lines.front());
  } catch (const ParseError& e) {
    if (path.empty() || path == "-") throw;
    throw ParseError(0, "'" + path + "': " + e.what());
  }
}

std::optional<std::string> first_poly_difference(const SparsePolynomial& a,
                                                 const SparsePolynomial& b) {
  const MonomialOrder before;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && before(ia->first, ib->first)))
      return ia->first.str() + ": " + ia->second.str() + " vs 0";
    if (ia == a.terms().end() || before(ib->first, ia->first))
      return ib->first.str() + ": 0 vs " + ib->second.str();
    if (ia->second != ib->second)
      return ia->first.str() + ": " + ia->second.str() + " vs " + ib->second.str();
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string pair_key_string(const IntegerPairPartition& key) {
  std::string s;
  for (std::size_t i = 0; i < key.size();) {
    std::size_t j = i;
    while (j < key.size() && key[j] == key[i]) ++j;
    if (!s.empty()) s += "*";
    s += "p[" + std::to_string(key[i].first) + "," + std::to_string(key[i].second) + "]";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "1" : s;
}

std::optional<std::string> first_map_difference(const PairedCoefficientMap& a,
                                                const PairedCoefficientMap& b) {
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  while (ia != a.terms.end() || ib != b.terms.end()) {
    if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first))
      return pair_key_string(ia->first) + ": " + ia->second.str() + " vs 0";
    if (ia == a.terms.end() || ib->first < ia->first)
      return pair_key_string(ib->first) + ": 0 vs " + ib->second.str();
    if (ia->second != ib->second)
      return pair_key_string(ia->first) + ": " + ia->second.str() + " vs " + ib->second.str();
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

int run_compute(const std::string& name, const std::string& path, const std::string& format,
                int truncate, const Guards& guards) {
  Multigraph g = load_graph(path);
  if (name == "ybar") {
    PairedCoefficientMap map = ybar_coefficients(g, guards);
    if (format == "json")
      std::cout << paired_map_to_json(map).dump(2) << "\n";
    else
      std::cout << paired_map_to_string(map) << "\n";
    return 0;
  }
  InvariantResult result = compute_invariant(name, g, truncate, guards);
  if (format == "json")
    std::cout << polynomial_to_json(result.value).dump(2) << "\n";
  else
    std::cout << canonical_string(result.value) << "\n";
  return 0;
}

int run_compare(const std::string& name, const std::string& path1, const std::string& path2,
                int truncate, const Guards& guards) {
  Multigraph g1 = load_graph(path1);
  Multigraph g2 = load_graph(path2);
  std::optional<std::string> diff;
  if (name == "ybar") {
    diff = first_map_difference(ybar_coefficients(g1, guards), ybar_coefficients(g2, guards));
  } else {
    diff = first_poly_difference(compute_invariant(name, g1, truncate, guards).value,
                                 compute_invariant(name, g2, truncate, guards).value);
  }
  if (!diff) {
    std::cout << "EQUAL\n";
    return 0;
  }
  std::cout << "DIFFER at " << *diff << "\n";
  return 1;
}

int run_verify(const std::string& suite, const VerifyOptions& options) {
  VerifyResult result = run_suite(suite, options);
  std::cout << "suite: " << result.suite << "\n"
            << "instances: " << result.instances << "\n"
            << "result: " << (result.passed ? "PASS" : "FAIL") << "\n";
  if (!result.passed) std::cout << result.failure;
  std::cerr << "elapsed: " << result.elapsed_seconds << "s\n";
  return result.passed ? 0 : 1;
}

int run_search_cmd(const SearchOptions& options, const std::string& format) {
  SearchReport report = run_search(options);
  for (const auto& warning : report.warnings) std::cerr << "warning: " << warning << "\n";
  std::cout << (format == "json" ? search_report_json(report) : search_report_text(report));
  std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
  return 0;
}

int run_convert(const std::string& from, const std::string& to, const std::string& path,
                const std::string& format) {
  const std::string content = read_input(path);
  nlohmann::json input = nlohmann::json::parse(content);

  auto emit_poly = [&](const SparsePolynomial& poly) {
    if (format == "text")
      std::cout << canonical_string(poly) << "\n";
    else
      std::cout << polynomial_to_json(poly).dump(2) << "\n";
  };
  auto emit_map = [&](const PairedCoefficientMap& map) {
    if (format == "text")
      std::cout << paired_map_to_string(map) << "\n";
    else
      std::cout << paired_map_to_json(map).dump(2) << "\n";
  };

  if (from == "ubar") {
    PairedCoefficientMap ybar = ubar_to_ybar(polynomial_from_json(input));
    if (to == "ybar-p") {
      emit_map(ybar);
    } else if (to == "ybar-m") {
      emit_map(paired_map_p_to_m(ybar));
    } else if (to == "ext-polychromate") {
      emit_poly(ybar_to_extended_polychromate(ybar));
    } else {
      throw PreconditionError("cannot convert ubar to '" + to + "'");
    }
    return 0;
  }
  if (from == "ybar-p") {
    PairedCoefficientMap map = paired_map_from_json(input);
    if (to == "ubar") {
      emit_poly(ybar_to_ubar(map));
    } else if (to == "ybar-m") {
      emit_map(paired_map_p_to_m(map));
    } else if (to == "ext-polychromate") {
      emit_poly(ybar_to_extended_polychromate(map));
    } else {
      throw PreconditionError("cannot convert ybar-p to '" + to + "'");
    }
    return 0;
  }
  if (from == "u") {
    if (to == "polychromate") {
      emit_poly(u_to_polychromate(polynomial_from_json(input)));
      return 0;
    }
    throw PreconditionError("cannot convert u to '" + to + "'");
  }
  throw PreconditionError("unknown source form '" + from + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph polynomial toolkit"};
  app.require_subcommand(1);

  std::string invariant, graph_path, graph_path2, format = "text";
  int truncate = -1;
  Guards guards;

  std::string invariant_help = "one of:";
  for (const auto& name : invariant_names()) invariant_help += " " + name;

  auto add_guard_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--force", guards.force, "bypass the size guards");
    cmd->add_option("--jobs", guards.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* compute = app.add_subcommand("compute", "compute an invariant of one graph");
  compute->add_option("invariant", invariant, invariant_help)->required();
  compute->add_option("graph", graph_path, "edge-list or graph6 file ('-' for stdin)")->required();
  compute->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--truncate", truncate, "variable count for symmetric-function output");
  add_guard_flags(compute);

  CLI::App* compare = app.add_subcommand("compare", "compare an invariant across two graphs");
  compare->add_option("invariant", invariant, invariant_help)->required();
  compare->add_option("graph1", graph_path, "first graph file")->required();
  compare->add_option("graph2", graph_path2, "second graph file")->required();
  compare->add_option("--truncate", truncate, "variable count for symmetric-function output");
  add_guard_flags(compare);

  std::string suite;
  VerifyOptions verify_options;
  std::string suite_help = "one of:";
  for (const auto& name : suite_names()) suite_help += " " + name;
  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--max-vertices", verify_options.max_vertices, "vertex bound override")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-edges", verify_options.max_edges, "edge bound override")
      ->check(CLI::PositiveNumber);
  add_guard_flags(verify);

  SearchOptions search_options;
  CLI::App* search = app.add_subcommand(
      "search", "bucket graphs by u polynomial, split buckets by extended u polynomial");
  CLI::Option* opt_enumerate =
      search->add_option("--enumerate", search_options.enumerate_n,
                         "all connected simple graphs on up to N vertices (N <= 7)");
  CLI::Option* opt_graphs =
      search->add_option("--graphs", search_options.graph_files,
                         "graph6 files (one graph per line) or edge-list files (one per file)");
  opt_enumerate->excludes(opt_graphs);
  search->add_flag("--loopless", search_options.loopless, "drop file graphs that carry loops");
  search->add_flag("--lenient", search_options.lenient,
                   "skip malformed graph6 lines with a warning");
  search->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_guard_flags(search);

  std::string from, to, convert_input;
  CLI::App* convert = app.add_subcommand("convert", "convert between polynomial forms");
  convert->add_option("--from", from, "ubar, ybar-p, or u")
      ->required()
      ->check(CLI::IsMember({"ubar", "ybar-p", "u"}));
  convert->add_option("--to", to, "ybar-p, ybar-m, ext-polychromate, ubar, or polychromate")
      ->required()
      ->check(CLI::IsMember({"ybar-p", "ybar-m", "ext-polychromate", "ubar", "polychromate"}));
  convert->add_option("input", convert_input, "JSON file ('-' or omitted for stdin)");
  std::string convert_format = "json";
  convert->add_option("--format", convert_format, "json or text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(invariant, graph_path, format, truncate, guards);
    if (compare->parsed()) return run_compare(invariant, graph_path, graph_path2, truncate, guards);
    if (verify->parsed()) {
      verify_options.guards = guards;
      return run_verify(suite, verify_options);
    }
    if (search->parsed()) {
      search_options.guards = guards;
      return run_search_cmd(search_options, format);
    }
    if (convert->parsed()) return run_convert(from, to, convert_input, convert_format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "rerun with --force to override the guard\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
