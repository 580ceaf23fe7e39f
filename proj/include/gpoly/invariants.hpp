#pragma once

/* Exact graph invariants: the extended U polynomial (ubar), the weighted
 * polynomial (wbar, by subset expansion and by deletion/contraction), the
 * U polynomial, the Tutte and chromatic polynomials, the polychromate and
 * extended polychromate, the coefficient form and colouring oracle of the
 * extended Tutte symmetric function, the Tutte symmetric function itself,
 * Stanley's chromatic symmetric function, the stability polynomial, the
 * 2-polymatroid rank generating polynomial, and Tutte's V-functions.
 *
 * Everything exponential is guarded: subset expansions refuse more than
 * Guards::max_subset_bits edges (or vertices), partition sums refuse more
 * than Guards::max_partition_vertices vertices, and colouring sums refuse
 * more than Guards::max_colourings colourings, unless force is set.
 */

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "gpoly/equivalence.hpp"
#include "gpoly/multigraph.hpp"
#include "gpoly/partitions.hpp"
#include "gpoly/polyring.hpp"

namespace gpoly {

struct Guards {
  int max_subset_bits = 26;        // 2^m edge-subset / 2^n vertex-subset scans
  int max_partition_vertices = 13; // Bell(n) vertex-partition scans
  long long max_colourings = 20'000'000;  // N^n colouring sums
  bool force = false;              // bypass the three limits above
  int jobs = 1;                    // worker threads for subset scans
};

// Number of edge subsets inducing each component signature (vertex count,
// edge count per component).  The common core of ubar, u_poly, ybar, tutte
// and chromatic.
std::map<IntegerPairPartition, long long> component_signature_counts(const Multigraph& g,
                                                                     const Guards& guards = {});

SparsePolynomial ubar(const Multigraph& g, const Guards& guards = {});

SparsePolynomial wbar_expansion(const Multigraph& g, const Guards& guards = {});

enum class PivotPolicy { LowestIndex, HighestIndex };
SparsePolynomial wbar_recurrence(const Multigraph& g, PivotPolicy policy = PivotPolicy::LowestIndex);

SparsePolynomial u_poly(const Multigraph& g, const Guards& guards = {});
// z[i,j] -> x[i] (y-1)^j, turning ubar into u.
SparsePolynomial u_from_ubar(const SparsePolynomial& ubar_poly);

SparsePolynomial tutte(const Multigraph& g, const Guards& guards = {});
// Substitute x[i] -> X - 1, y -> Y in u, then divide by (X-1)^k exactly.
SparsePolynomial tutte_from_u(const SparsePolynomial& u, int component_count);

SparsePolynomial chromatic(const Multigraph& g, const Guards& guards = {});
// lambda^k T(1 - lambda, 0).
SparsePolynomial chromatic_from_tutte(const SparsePolynomial& tutte_poly, int component_count);

SparsePolynomial polychromate(const Multigraph& g, const Guards& guards = {});
SparsePolynomial extended_polychromate(const Multigraph& g, const Guards& guards = {});

// Extended Tutte symmetric function, as the exact coefficient map of its
// paired power-sum expansion (one term per component signature).
PairedCoefficientMap ybar_coefficients(const Multigraph& g, const Guards& guards = {});
// Direct colouring-sum evaluation with colours 1..N, x_i and t_i given.
Rational ybar_evaluate_oracle(const Multigraph& g, std::span<const Rational> xs,
                              std::span<const Rational> ts, const Guards& guards = {});

// Tutte symmetric function: exact polynomial in x[1..N] and scalar t derived
// from u (denominator-free), and a brute-force colouring oracle.
SparsePolynomial tutte_symmetric_from_u(const Multigraph& g, int truncation,
                                        const Guards& guards = {});
Rational tutte_symmetric_oracle(const Multigraph& g, std::span<const Rational> xs,
                                const Rational& t, const Guards& guards = {});

SparsePolynomial chromatic_symmetric_direct(const Multigraph& g, int truncation,
                                            const Guards& guards = {});
SparsePolynomial chromatic_symmetric_from_u(const Multigraph& g, int truncation,
                                            const Guards& guards = {});

// Stability polynomial of a loopless graph.
SparsePolynomial stability_direct(const Multigraph& g, const Guards& guards = {});
SparsePolynomial stability_from_u(const Multigraph& g, const Guards& guards = {});

// 2-polymatroid rank generating polynomial of a loopless graph without
// isolated vertices.
SparsePolynomial two_polymatroid_direct(const Multigraph& g, const Guards& guards = {});
SparsePolynomial two_polymatroid_from_u(const Multigraph& g, const Guards& guards = {});

SparsePolynomial v_function_recursive(const Multigraph& g);
SparsePolynomial v_function_from_ubar(const Multigraph& g, const Guards& guards = {});

struct InvariantResult {
  std::string name;
  SparsePolynomial value;
  std::string method;
};

// Dispatcher for the polynomial-valued invariants exposed on the command
// line (ybar is handled separately since it yields a coefficient map).
// truncation < 0 picks the default (vertex count) where it applies.
InvariantResult compute_invariant(std::string_view name, const Multigraph& g, int truncation = -1,
                                  const Guards& guards = {});
const std::vector<std::string>& invariant_names();

}  // namespace gpoly
