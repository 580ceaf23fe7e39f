#pragma once

/* Harness for hunting a pair of loopless graphs with equal U polynomial but
 * distinct extended U polynomial.  Graphs come from an internal enumeration
 * of connected simple graphs or from files (graph6 lines or one edge list per
 * file); they are fingerprinted by the canonical string of the U polynomial,
 * bucketed, and every bucket of two or more graphs is split by the extended
 * U polynomial.  Buckets that split yield counterexample pairs, which are
 * re-verified from scratch before being reported.
 */

#include <string>
#include <vector>

#include "gpoly/invariants.hpp"

namespace gpoly {

struct SearchOptions {
  int enumerate_n = 0;  // > 0: all connected simple graphs on 1..enumerate_n vertices
  std::vector<std::string> graph_files;
  bool loopless = false;  // drop file graphs that carry loops
  bool lenient = false;   // skip malformed graph6 lines instead of failing
  Guards guards;          // jobs drives graph-level parallelism
};

struct SearchGroupMember {
  std::string id;      // graph6 string, or "el:<hash>" for non-simple graphs
  int ubar_class = 0;  // 0-based, in order of first appearance within the group
};

struct SearchGroup {
  std::string u_string;
  std::vector<SearchGroupMember> members;  // input order
  int ubar_classes = 1;
};

struct CounterexamplePair {
  std::string first_id;
  std::string second_id;
  std::string u_string;
  std::string first_ubar;
  std::string second_ubar;
};

struct SearchReport {
  long long graphs = 0;
  long long duplicates_skipped = 0;
  long long skipped_loops = 0;
  long long skipped_malformed = 0;
  long long groups = 0;
  long long multi_groups = 0;
  long long largest_group = 0;
  long long ubar_consistent_groups = 0;
  std::vector<SearchGroup> multi_group_detail;  // ordered by u_string
  std::vector<CounterexamplePair> counterexamples;
  std::vector<std::string> warnings;  // lenient-mode skips, for stderr
  double elapsed_seconds = 0.0;       // not rendered: reports stay byte-stable
};

SearchReport run_search(const SearchOptions& options);

std::string search_report_text(const SearchReport& report);
std::string search_report_json(const SearchReport& report);

}  // namespace gpoly
