#include "gpoly/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "gpoly/errors.hpp"

namespace gpoly {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Rational rational_pow(const Rational& base, int exp) {
  if (exp < 0) throw PreconditionError("rational_pow: negative exponent");
  Rational r = 1;
  Rational b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

int family_arity(Family f) {
  switch (f) {
    case Family::z:
    case Family::x2:
      return 2;
    case Family::x:
    case Family::t:
    case Family::yk:
      return 1;
    default:
      return 0;
  }
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::z: return "z";
    case Family::x2: return "x2";
    case Family::x: return "x";
    case Family::t: return "t";
    case Family::yk: return "yk";
    case Family::y: return "y";
    case Family::t_scalar: return "t";
    case Family::lambda: return "lambda";
    case Family::p: return "p";
    case Family::u: return "u";
    case Family::v: return "v";
    case Family::X: return "X";
    case Family::Y: return "Y";
  }
  return "?";
}

namespace {

void check_indices(Family f, int i, int j) {
  // yk admits index 0 (a vertex with no loops); every other indexed family
  // starts at 1.  Second indices count nullities or edges, so >= 0.
  int lo = f == Family::yk ? 0 : 1;
  if (i < lo) throw PreconditionError(std::string(family_name(f)) + ": first index out of range");
  if (family_arity(f) == 2 && j < 0)
    throw PreconditionError(std::string(family_name(f)) + ": second index out of range");
}

}  // namespace

Variable::Variable(Family f) : family(f) {
  if (family_arity(f) != 0) throw PreconditionError("variable family requires indices");
}

Variable::Variable(Family f, int i_) : family(f), i(i_) {
  if (family_arity(f) != 1) throw PreconditionError("variable family is not singly indexed");
  check_indices(f, i_, 0);
}

Variable::Variable(Family f, int i_, int j_) : family(f), i(i_), j(j_) {
  if (family_arity(f) != 2) throw PreconditionError("variable family is not doubly indexed");
  check_indices(f, i_, j_);
}

std::string Variable::str() const {
  std::string s(family_name(family));
  switch (family_arity(family)) {
    case 1:
      s += "[" + std::to_string(i) + "]";
      break;
    case 2:
      s += "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      break;
    default:
      break;
  }
  return s;
}

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> merged;
  for (const Factor& f : factors_) {
    if (f.second < 0) throw PreconditionError("monomial exponents must be non-negative");
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
  degree_ = 0;
  for (const Factor& f : factors_) degree_ += f.second;
}

int Monomial::exponent_of(const Variable& v) const {
  for (const Factor& f : factors_)
    if (f.first == v) return f.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Factor> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return Monomial(std::move(all));
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const Factor& f : factors_) {
    if (!s.empty()) s += "*";
    s += f.first.str();
    if (f.second > 1) s += "^" + std::to_string(f.second);
  }
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  // Walk the two flattened variable sequences (equal length = degree).
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t ia = 0, ib = 0;
  int used_a = 0, used_b = 0;
  while (ia < fa.size() && ib < fb.size()) {
    if (fa[ia].first != fb[ib].first) return fa[ia].first < fb[ib].first;
    int rem_a = fa[ia].second - used_a;
    int rem_b = fb[ib].second - used_b;
    int step = std::min(rem_a, rem_b);
    used_a += step;
    used_b += step;
    if (used_a == fa[ia].second) { ++ia; used_a = 0; }
    if (used_b == fb[ib].second) { ++ib; used_b = 0; }
  }
  return false;
}

SparsePolynomial SparsePolynomial::constant(Integer c) {
  SparsePolynomial p;
  if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
  return p;
}

SparsePolynomial SparsePolynomial::term(Monomial m, Integer c) {
  SparsePolynomial p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

SparsePolynomial SparsePolynomial::from_variable(const Variable& v, int exp) {
  return term(Monomial({{v, exp}}), 1);
}

Integer SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int SparsePolynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void SparsePolynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SparsePolynomial operator*(const Integer& c, SparsePolynomial b) {
  if (c == 0) return {};
  for (auto& [m, coeff] : b.terms_) coeff *= c;
  return b;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& other) {
  *this = *this * other;
  return *this;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SparsePolynomial power(const SparsePolynomial& base, int exp) {
  if (exp < 0) throw PreconditionError("power: negative exponent");
  SparsePolynomial r = SparsePolynomial::constant(1);
  SparsePolynomial b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

SparsePolynomial substitute(const SparsePolynomial& poly, const SubstitutionRule& rule) {
  std::map<Variable, SparsePolynomial> base_cache;
  SparsePolynomial out;
  for (const auto& [m, c] : poly.terms()) {
    SparsePolynomial term = SparsePolynomial::constant(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = base_cache.find(v);
      if (it == base_cache.end()) it = base_cache.emplace(v, rule(v)).first;
      term *= power(it->second, e);
    }
    out += term;
  }
  return out;
}

Rational evaluate(const SparsePolynomial& poly, const Assignment& values) {
  std::map<Variable, Rational> cache;
  Rational sum = 0;
  for (const auto& [m, c] : poly.terms()) {
    Rational term(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, values(v)).first;
      term *= rational_pow(it->second, e);
    }
    sum += term;
  }
  return sum;
}

std::string canonical_string(const SparsePolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : poly.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += mag.str();
    } else if (mag == 1) {
      out += m.str();
    } else {
      out += mag.str() + "*" + m.str();
    }
  }
  return out;
}

SparsePolynomial divide_exact_linear(const SparsePolynomial& poly, const Variable& v,
                                     const Integer& root) {
  if (poly.is_zero()) return {};
  // Slice by the exponent of v; synthetic division top-down.
  std::map<int, SparsePolynomial> slices;
  int top = 0;
  for (const auto& [m, c] : poly.terms()) {
    int e = m.exponent_of(v);
    top = std::max(top, e);
    std::vector<Monomial::Factor> rest;
    for (const auto& f : m.factors())
      if (f.first != v) rest.push_back(f);
    slices[e].add_term(Monomial(std::move(rest)), c);
  }
  // A nonzero polynomial free of v is never divisible by (v - root).
  if (top == 0) throw PreconditionError("divide_exact_linear: not divisible");
  std::map<int, SparsePolynomial> q;
  q[top - 1] = slices[top];
  for (int d = top - 1; d >= 1; --d) {
    SparsePolynomial qd = slices.count(d) ? slices[d] : SparsePolynomial();
    qd += root * q[d];
    q[d - 1] = std::move(qd);
  }
  SparsePolynomial remainder = slices.count(0) ? slices[0] : SparsePolynomial();
  remainder += root * q[0];
  if (!remainder.is_zero()) throw PreconditionError("divide_exact_linear: not divisible");
  SparsePolynomial out;
  for (const auto& [d, slice] : q) {
    SparsePolynomial vd = d == 0 ? SparsePolynomial::constant(1) : SparsePolynomial::from_variable(v, d);
    out += slice * vd;
  }
  return out;
}

}  // namespace gpoly
