#include <doctest.h>

#include "gpoly/errors.hpp"
#include "gpoly/polyring.hpp"

using namespace gpoly;

namespace {

SparsePolynomial pv(const Variable& v) { return SparsePolynomial::from_variable(v); }

}  // namespace

TEST_CASE("binomial values and Pascal identity") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(52, 26) == Integer("495918532948104"));
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("rational_pow computes non-negative powers exactly") {
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(-2, 3), 2) == Rational(4, 9));
  CHECK(rational_pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(rational_pow(Rational(2, 3), -2), PreconditionError);
}

TEST_CASE("variable ordering follows family then indices") {
  CHECK(var::z(1, 0) < var::z(1, 1));
  CHECK(var::z(1, 1) < var::z(2, 0));
  CHECK(var::z(9, 9) < var::x2(1, 0));
  CHECK(var::x2(3, 3) < var::x(1));
  CHECK(var::x(4) < var::t(1));
  CHECK(var::yk(0) < var::y());
  CHECK(var::y() < var::ts());
  CHECK(var::X() < var::Y());
}

TEST_CASE("variable and monomial printing") {
  CHECK(var::z(1, 0).str() == "z[1,0]");
  CHECK(var::x(3).str() == "x[3]");
  CHECK(var::y().str() == "y");
  CHECK(var::ts().str() == "t");
  CHECK(var::t(2).str() == "t[2]");
  CHECK(Monomial().str() == "1");
  Monomial m({{var::z(2, 1), 1}, {var::z(1, 0), 3}});
  CHECK(m.str() == "z[1,0]^3*z[2,1]");
  CHECK(m.degree() == 4);
  CHECK(m.exponent_of(var::z(1, 0)) == 3);
  CHECK(m.exponent_of(var::y()) == 0);
}

TEST_CASE("monomial constructor merges duplicate factors") {
  Monomial m({{var::x(1), 2}, {var::x(1), 1}, {var::y(), 1}});
  CHECK(m.str() == "x[1]^3*y");
  CHECK(m.degree() == 4);
}

TEST_CASE("monomial constructor drops zero exponents and rejects negatives") {
  CHECK(Monomial({{var::x(1), 0}}).is_unit());
  CHECK(Monomial({{var::x(1), 0}, {var::y(), 2}}).str() == "y^2");
  CHECK_THROWS_AS(Monomial({{var::x(1), -2}}), PreconditionError);
}

TEST_CASE("monomial order sorts by degree then flattened variables") {
  MonomialOrder before;
  Monomial unit;
  Monomial x1({{var::x(1), 1}});
  Monomial x1sq({{var::x(1), 2}});
  Monomial x1x2({{var::x(1), 1}, {var::x(2), 1}});
  CHECK(before(x1, unit));
  CHECK(before(x1sq, x1));
  CHECK(before(x1sq, x1x2));
  CHECK(!before(x1x2, x1sq));
  CHECK(!before(x1, x1));
}

TEST_CASE("polynomial arithmetic") {
  SparsePolynomial a = pv(var::x(1)) + SparsePolynomial::constant(2);
  SparsePolynomial b = pv(var::x(1)) - SparsePolynomial::constant(2);
  CHECK(canonical_string(a * b) == "x[1]^2 - 4");
  CHECK(canonical_string(power(a, 2)) == "x[1]^2 + 4*x[1] + 4");
  CHECK((a - a).is_zero());
  CHECK(canonical_string(SparsePolynomial()) == "0");
  CHECK(canonical_string(-b) == "-x[1] + 2");
  CHECK(Integer(3) * a == a + a + a);
  CHECK(a * (b + b) == a * b + a * b);

  SparsePolynomial zero_product = a * SparsePolynomial();
  CHECK(zero_product.is_zero());
  CHECK(a.total_degree() == 1);
  CHECK(SparsePolynomial().total_degree() == -1);
}

TEST_CASE("add_term cancels to zero") {
  SparsePolynomial s;
  Monomial m({{var::y(), 2}});
  s.add_term(m, 5);
  s.add_term(m, -5);
  CHECK(s.is_zero());
  CHECK(s.coefficient(m) == 0);
}

TEST_CASE("canonical string uses degree-descending order with signs") {
  SparsePolynomial s;
  s.add_term(Monomial(), -7);
  s.add_term(Monomial({{var::x(1), 1}}), 1);
  s.add_term(Monomial({{var::x(2), 1}, {var::x(1), 1}}), -3);
  CHECK(canonical_string(s) == "-3*x[1]*x[2] + x[1] - 7");
}

TEST_CASE("substitute is a ring homomorphism") {
  SparsePolynomial f = power(pv(var::x(1)) + pv(var::y()), 2) - pv(var::x(2));
  SparsePolynomial g = pv(var::x(1)) * pv(var::y()) + SparsePolynomial::constant(1);
  SubstitutionRule rule = [](const Variable& v) -> SparsePolynomial {
    if (v == var::x(1)) return SparsePolynomial::constant(2);
    if (v == var::y()) return pv(var::x(3)) + SparsePolynomial::constant(-1);
    return pv(v);
  };
  CHECK(substitute(f + g, rule) == substitute(f, rule) + substitute(g, rule));
  CHECK(substitute(f * g, rule) == substitute(f, rule) * substitute(g, rule));
  CHECK(canonical_string(substitute(SparsePolynomial::from_variable(var::y(), 2), rule)) ==
        "x[3]^2 - 2*x[3] + 1");
}

TEST_CASE("evaluate is exact over rationals") {
  SparsePolynomial f = power(pv(var::x(1)), 3) - pv(var::y());
  Rational value = evaluate(f, [](const Variable& v) {
    if (v == var::x(1)) return Rational(1, 2);
    return Rational(3);
  });
  CHECK(value == Rational(1, 8) - 3);
  CHECK(evaluate(SparsePolynomial(), [](const Variable&) { return Rational(9); }) == 0);
}

TEST_CASE("divide_exact_linear recovers the cofactor") {
  SparsePolynomial quotient =
      power(pv(var::y()), 2) + Integer(3) * pv(var::x(1)) + SparsePolynomial::constant(5);
  SparsePolynomial divisor = pv(var::y()) - SparsePolynomial::constant(2);
  CHECK(divide_exact_linear(quotient * divisor, var::y(), 2) == quotient);
  CHECK_THROWS_AS(divide_exact_linear(quotient * divisor + SparsePolynomial::constant(1),
                                      var::y(), 2),
                  PreconditionError);
}

TEST_CASE("from_variable with exponent") {
  CHECK(canonical_string(SparsePolynomial::from_variable(var::lambda(), 3)) == "lambda^3");
  CHECK(canonical_string(SparsePolynomial::from_variable(var::X(), 0)) == "1");
}
