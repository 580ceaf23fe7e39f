#pragma once

/* Exact sparse multivariate polynomials over a fixed set of variable
 * families.  Coefficients are arbitrary-precision integers; evaluation is
 * exact rational.  Monomials are kept in a canonical order (total degree
 * descending, then the flattened variable sequence lexicographically
 * ascending), so iteration order, printing and JSON serialization are all
 * deterministic.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer binomial(int n, int k);
Rational rational_pow(const Rational& base, int exp);

// Variable families.  Enum order fixes the canonical variable order used for
// monomial sorting and printing.  `t` is the indexed per-colour family; the
// scalar that appears in the Tutte symmetric function is `t_scalar` and
// prints as plain "t" (the two are distinguished by arity everywhere).
enum class Family : std::uint8_t {
  z,         // z[i,j], i >= 1, j >= 0: per-component (size or weight, nullity)
  x2,        // x2[i,j], i >= 1, j >= 0: per-block (size, inner edge count)
  x,         // x[i], i >= 1
  t,         // t[i], i >= 1
  yk,        // yk[k], k >= 0: one variable per loop count
  y,         // scalar
  t_scalar,  // scalar, prints "t"
  lambda,    // scalar
  p,         // scalar
  u,         // scalar
  v,         // scalar
  X,         // scalar
  Y,         // scalar
};

int family_arity(Family f);
std::string_view family_name(Family f);

struct Variable {
  Family family;
  int i = 0;
  int j = 0;

  explicit Variable(Family f);        // scalar families
  Variable(Family f, int i_);         // singly indexed families
  Variable(Family f, int i_, int j_); // doubly indexed families

  auto operator<=>(const Variable&) const = default;
  std::string str() const;  // "z[1,0]", "x[3]", "y"
};

// Shorthand constructors, mostly for tests and substitution rules.
namespace var {
inline Variable z(int i, int j) { return {Family::z, i, j}; }
inline Variable x2(int i, int j) { return {Family::x2, i, j}; }
inline Variable x(int i) { return {Family::x, i}; }
inline Variable t(int i) { return {Family::t, i}; }
inline Variable yk(int k) { return {Family::yk, k}; }
inline Variable y() { return Variable{Family::y}; }
inline Variable ts() { return Variable{Family::t_scalar}; }
inline Variable lambda() { return Variable{Family::lambda}; }
inline Variable p() { return Variable{Family::p}; }
inline Variable u() { return Variable{Family::u}; }
inline Variable v() { return Variable{Family::v}; }
inline Variable X() { return Variable{Family::X}; }
inline Variable Y() { return Variable{Family::Y}; }
}  // namespace var

// Product of variable powers.  Factors are sorted by variable, exponents are
// strictly positive, each variable appears once.  The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_unit() const { return factors_.empty(); }
  int exponent_of(const Variable& v) const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

  std::string str() const;  // "z[1,0]^3*z[2,1]"; "1" for the empty monomial

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

// Canonical order: total degree descending, ties broken by comparing the
// flattened variable sequences lexicographically ascending.  This is the
// order terms are printed in.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialOrder>;

  SparsePolynomial() = default;  // zero
  static SparsePolynomial constant(Integer c);
  static SparsePolynomial term(Monomial m, Integer c);
  static SparsePolynomial from_variable(const Variable& v, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;
  int total_degree() const;  // degree of leading term; -1 for the zero polynomial

  void add_term(const Monomial& m, const Integer& c);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const SparsePolynomial& other);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    a += b;
    return a;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    a -= b;
    return a;
  }
  SparsePolynomial operator-() const;
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const Integer& c, SparsePolynomial b);

  bool operator==(const SparsePolynomial&) const = default;

 private:
  TermMap terms_;
};

SparsePolynomial power(const SparsePolynomial& base, int exp);

// Ring-homomorphic substitution: every variable is replaced by the rule's
// polynomial (the identity rule returns the variable itself).
using SubstitutionRule = std::function<SparsePolynomial(const Variable&)>;
SparsePolynomial substitute(const SparsePolynomial& poly, const SubstitutionRule& rule);

using Assignment = std::function<Rational(const Variable&)>;
Rational evaluate(const SparsePolynomial& poly, const Assignment& values);

std::string canonical_string(const SparsePolynomial& poly);

// Exact division by (v - root); throws PreconditionError when the division
// leaves a remainder.
SparsePolynomial divide_exact_linear(const SparsePolynomial& poly, const Variable& v,
                                     const Integer& root);

}  // namespace gpoly
