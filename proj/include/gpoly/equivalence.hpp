#pragma once

/* Symmetric-function bases in finitely many variables, their paired
 * (two-index) analogues over x_i / t_i, and the conversions that realize the
 * equivalences between the extended U polynomial, the paired-coefficient form
 * of the Tutte symmetric function, the extended polychromate, and the plain
 * polychromate.
 *
 * A PairedCoefficientMap stores a function expanded in either the paired
 * power-sum basis (p) or the paired augmented monomial basis (m), keyed by
 * integer pair partitions of a reference pair (n, m).
 */

#include <map>
#include <string>

#include "gpoly/partitions.hpp"
#include "gpoly/polyring.hpp"

namespace gpoly {

struct PairedCoefficientMap {
  enum class Basis { PowerSum, AugmentedMonomial };

  Basis basis = Basis::PowerSum;
  int n = 0;  // sum of first entries in every key
  int m = 0;  // upper bound for the sum of second entries
  std::map<IntegerPairPartition, Integer> terms;

  bool operator==(const PairedCoefficientMap&) const = default;
};

std::string paired_map_to_string(const PairedCoefficientMap& map);

// Classical bases in x_1..x_N.
SparsePolynomial power_sum(int r, int truncation);
SparsePolynomial power_sum_product(const IntegerPartition& tau, int truncation);
SparsePolynomial augmented_monomial(const IntegerPartition& tau, int truncation);

// Paired bases: each pair (a, b) contributes x_i^a t_i^b (power sums) or
// x_i^a (1 + t_i)^b over distinct indices (augmented monomials).
SparsePolynomial paired_power_sum(const IntegerPairPartition& pairs, int truncation);
SparsePolynomial paired_augmented_monomial(const IntegerPairPartition& pairs, int truncation);

// Expansion of one paired power-sum basis element in the paired augmented
// monomial basis (exact, integral).
PairedCoefficientMap paired_p_to_m(const IntegerPairPartition& pairs);
// Linear extension to a whole p-basis map.
PairedCoefficientMap paired_map_p_to_m(const PairedCoefficientMap& map);

// The extended U polynomial and the paired power-sum expansion of the
// extended Tutte symmetric function carry the same information:
//   z[r,s]  <->  pair (r, r + s - 1).
PairedCoefficientMap ubar_to_ybar(const SparsePolynomial& ubar);
SparsePolynomial ybar_to_ubar(const PairedCoefficientMap& map);

// Reading the paired augmented monomial expansion as x2-monomials yields the
// extended polychromate.
SparsePolynomial ybar_to_extended_polychromate(const PairedCoefficientMap& map);

// Coarsening expansion of U into the plain polychromate:
//   x_tau y^j -> sum_tau' a(tau, tau') x_tau' y^j (y-1)^(n - k(tau)).
SparsePolynomial u_to_polychromate(const SparsePolynomial& u);

// Specialization x2[i,j] -> x[i] y^j.
SparsePolynomial extended_to_plain_polychromate(const SparsePolynomial& ext);

}  // namespace gpoly
