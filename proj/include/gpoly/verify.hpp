#pragma once

/* Property suites: each one checks a family of identities over exhaustively
 * generated small graphs (or basis elements) and reports the first failing
 * instance in full.
 *
 * Suites:
 *   recurrence        deletion/contraction recurrence == subset expansion for
 *                     wbar, all small multigraphs, all {1,2} weightings
 *   specializations   every derived invariant == its direct definition
 *   equivalence-chain ubar -> ybar (p basis) -> m basis -> extended
 *                     polychromate == direct computation, plus round trips
 *   bases             paired and classical power-sum to augmented-monomial
 *                     expansions checked at random rational points
 *   examples          worked golden values, including the 11-vertex pair
 *                     with equal polychromate and equal ubar
 */

#include <string>
#include <string_view>
#include <vector>

#include "gpoly/invariants.hpp"

namespace gpoly {

struct VerifyOptions {
  int max_vertices = 0;  // 0 picks the suite default
  int max_edges = 0;     // 0 picks the suite default
  Guards guards;
};

struct VerifyResult {
  std::string suite;
  bool passed = true;
  long long instances = 0;  // identities checked
  std::string failure;      // first failing instance, empty when passed
  double elapsed_seconds = 0.0;
};

VerifyResult run_suite(std::string_view suite, const VerifyOptions& options = {});
const std::vector<std::string>& suite_names();

}  // namespace gpoly
