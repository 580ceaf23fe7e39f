#include "gpoly/search.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gpoly/enumerate.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/graph6.hpp"

namespace gpoly {

namespace {

std::string graph_id(const Multigraph& g) {
  if (g.is_simple() && g.vertex_count() <= 62) return graph6_encode(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : g.to_edge_list()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "el:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// The first non-blank line of an edge list is "<n> <m>"; graph6 lines never
// start with a digit (data bytes live in 63..126).
bool looks_like_edge_list(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    return std::isdigit(static_cast<unsigned char>(line.front())) != 0;
  }
  return false;
}

void ingest_file(const std::string& path, const SearchOptions& options, SearchReport& report,
                 const std::function<void(Multigraph)>& admit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  if (looks_like_edge_list(content)) {
    try {
      admit(Multigraph::parse_edge_list(content));
    } catch (const ParseError& e) {
      throw ParseError(0, "'" + path + "': " + e.what());
    }
    return;
  }

  std::istringstream lines(content);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    while (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      admit(graph6_decode(line));
    } catch (const ParseError& e) {
      if (!options.lenient) throw ParseError(line_no, "'" + path + "': " + e.what());
      ++report.skipped_malformed;
      report.warnings.push_back(path + " line " + std::to_string(line_no) + ": skipped (" +
                                e.what() + ")");
    }
  }
}

struct Fingerprint {
  std::string u;
  std::string ubar;
};

void verify_counterexample(const Multigraph& a, const Multigraph& b, const Guards& guards) {
  if (!(u_poly(a, guards) == u_poly(b, guards)))
    throw std::logic_error("counterexample re-verification failed: u differs after recomputation");
  if (ubar(a, guards) == ubar(b, guards))
    throw std::logic_error("counterexample re-verification failed: ubar agrees after recomputation");
}

}  // namespace

SearchReport run_search(const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const bool enumerating = options.enumerate_n != 0;
  if (enumerating == !options.graph_files.empty())
    throw PreconditionError("search needs exactly one source: --enumerate N or --graphs FILE...");
  if (enumerating && (options.enumerate_n < 1 || options.enumerate_n > 7))
    throw PreconditionError("search enumeration covers 1 to 7 vertices");

  SearchReport report;
  std::vector<Multigraph> graphs;
  std::vector<std::string> ids;
  std::set<std::string> seen;

  const bool filter_loops = options.loopless && !enumerating;
  auto admit = [&](Multigraph g) {
    if (filter_loops && g.has_loops()) {
      ++report.skipped_loops;
      return;
    }
    if (!seen.insert(g.to_edge_list()).second) {
      ++report.duplicates_skipped;
      return;
    }
    ids.push_back(graph_id(g));
    graphs.push_back(std::move(g));
  };

  if (enumerating) {
    for (int n = 1; n <= options.enumerate_n; ++n)
      for_each_connected_simple_graph(n, [&](const Multigraph& g) { admit(g); });
  } else {
    for (const std::string& path : options.graph_files) ingest_file(path, options, report, admit);
  }
  seen.clear();
  report.graphs = static_cast<long long>(graphs.size());

  Guards inner = options.guards;
  inner.jobs = 1;
  std::vector<Fingerprint> prints(graphs.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      SparsePolynomial ub = ubar(graphs[i], inner);
      prints[i].ubar = canonical_string(ub);
      prints[i].u = canonical_string(u_from_ubar(ub));
    }
  };
  const std::size_t jobs = std::min<std::size_t>(std::max(1, options.guards.jobs),
                                                 std::max<std::size_t>(graphs.size(), 1));
  if (jobs <= 1) {
    work(0, graphs.size());
  } else {
    const std::size_t chunk = (graphs.size() + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t lo = j * chunk;
      const std::size_t hi = std::min(graphs.size(), lo + chunk);
      workers.emplace_back([&, j, lo, hi] {
        try {
          work(lo, hi);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& error : errors)
      if (error) std::rethrow_exception(error);
  }

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i) buckets[prints[i].u].push_back(i);
  report.groups = static_cast<long long>(buckets.size());

  for (const auto& [u_string, members] : buckets) {
    report.largest_group = std::max<long long>(report.largest_group,
                                               static_cast<long long>(members.size()));
    if (members.size() < 2) continue;
    ++report.multi_groups;

    SearchGroup group;
    group.u_string = u_string;
    std::vector<std::size_t> class_first;  // graph index of each ubar class representative
    for (std::size_t idx : members) {
      int cls = -1;
      for (std::size_t c = 0; c < class_first.size(); ++c)
        if (prints[class_first[c]].ubar == prints[idx].ubar) {
          cls = static_cast<int>(c);
          break;
        }
      if (cls < 0) {
        cls = static_cast<int>(class_first.size());
        class_first.push_back(idx);
      }
      group.members.push_back({ids[idx], cls});
    }
    group.ubar_classes = static_cast<int>(class_first.size());
    if (group.ubar_classes == 1) {
      ++report.ubar_consistent_groups;
    } else {
      for (std::size_t a = 0; a < class_first.size(); ++a)
        for (std::size_t b = a + 1; b < class_first.size(); ++b) {
          const std::size_t i = class_first[a];
          const std::size_t j = class_first[b];
          verify_counterexample(graphs[i], graphs[j], inner);
          report.counterexamples.push_back(
              {ids[i], ids[j], u_string, prints[i].ubar, prints[j].ubar});
        }
    }
    report.multi_group_detail.push_back(std::move(group));
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string search_report_text(const SearchReport& report) {
  std::ostringstream out;
  out << "graphs processed:        " << report.graphs << "\n"
      << "duplicates skipped:      " << report.duplicates_skipped << "\n"
      << "loop graphs skipped:     " << report.skipped_loops << "\n"
      << "malformed lines skipped: " << report.skipped_malformed << "\n"
      << "u fingerprint groups:    " << report.groups << "\n"
      << "groups with >= 2 graphs: " << report.multi_groups << "\n"
      << "largest group:           " << report.largest_group << "\n"
      << "groups sharing one ubar: " << report.ubar_consistent_groups << "\n"
      << "counterexamples:         " << report.counterexamples.size() << "\n";
  for (const auto& group : report.multi_group_detail) {
    out << "group (" << group.members.size() << " graphs, " << group.ubar_classes
        << (group.ubar_classes == 1 ? " ubar class):" : " ubar classes):");
    for (const auto& member : group.members) {
      out << " " << member.id;
      if (group.ubar_classes > 1) out << "[" << member.ubar_class << "]";
    }
    out << "\n";
  }
  for (const auto& pair : report.counterexamples) {
    out << "counterexample: " << pair.first_id << " vs " << pair.second_id << "\n"
        << "  shared u:    " << pair.u_string << "\n"
        << "  first ubar:  " << pair.first_ubar << "\n"
        << "  second ubar: " << pair.second_ubar << "\n";
  }
  return out.str();
}

std::string search_report_json(const SearchReport& report) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& group : report.multi_group_detail) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& member : group.members)
      members.push_back({{"id", member.id}, {"ubar_class", member.ubar_class}});
    groups.push_back(
        {{"u", group.u_string}, {"ubar_classes", group.ubar_classes}, {"members", members}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pair : report.counterexamples)
    pairs.push_back({{"first", pair.first_id},
                     {"second", pair.second_id},
                     {"u", pair.u_string},
                     {"first_ubar", pair.first_ubar},
                     {"second_ubar", pair.second_ubar}});
  nlohmann::json j{{"graphs", report.graphs},
                   {"duplicates_skipped", report.duplicates_skipped},
                   {"skipped_loops", report.skipped_loops},
                   {"skipped_malformed", report.skipped_malformed},
                   {"groups", report.groups},
                   {"multi_groups", report.multi_groups},
                   {"largest_group", report.largest_group},
                   {"ubar_consistent_groups", report.ubar_consistent_groups},
                   {"multi_group_detail", groups},
                   {"counterexamples", pairs}};
  return j.dump(2) + "\n";
}

}  // namespace gpoly
