#include <doctest.h>

#include <array>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/multigraph.hpp"
#include "gpoly/polyring.hpp"

using namespace gpoly;

namespace {

const Multigraph& triangle() {
  static const Multigraph g(3, {{0, 1}, {1, 2}, {2, 0}});
  return g;
}

const Multigraph& path3() {
  static const Multigraph g(3, {{0, 1}, {1, 2}});
  return g;
}

}  // namespace

TEST_CASE("component_signature_counts on the triangle") {
  auto counts = component_signature_counts(triangle());
  // 8 subsets: empty, 3 single edges, 3 pairs (spanning paths), full cycle.
  CHECK(counts.size() == 4);
  CHECK(counts.at({{1, 0}, {1, 0}, {1, 0}}) == 1);
  CHECK(counts.at({{2, 1}, {1, 0}}) == 3);
  CHECK(counts.at({{3, 2}}) == 3);
  CHECK(counts.at({{3, 3}}) == 1);
}

TEST_CASE("ubar golden values") {
  CHECK(canonical_string(ubar(triangle())) ==
        "z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]");

  // Loop placement matters: a loop at a leaf vs at the centre of a path.
  Multigraph g1(3, {{0, 1}, {1, 2}, {0, 0}});
  Multigraph g2(3, {{0, 1}, {1, 2}, {1, 1}});
  CHECK(canonical_string(ubar(g1)) ==
        "z[1,0]^3 + z[1,0]^2*z[1,1] + 2*z[1,0]*z[2,0] + z[1,0]*z[2,1] + "
        "z[1,1]*z[2,0] + z[3,0] + z[3,1]");
  CHECK(canonical_string(ubar(g2)) ==
        "z[1,0]^3 + z[1,0]^2*z[1,1] + 2*z[1,0]*z[2,0] + 2*z[1,0]*z[2,1] + "
        "z[3,0] + z[3,1]");
  CHECK(ubar(g1) != ubar(g2));
  CHECK(u_from_ubar(ubar(g1)) == u_from_ubar(ubar(g2)));
}

TEST_CASE("u polynomial golden values") {
  SparsePolynomial u = u_poly(triangle());
  CHECK(canonical_string(u) == "x[1]^3 + 3*x[1]*x[2] + x[3]*y + 2*x[3]");
  CHECK(u == u_from_ubar(ubar(triangle())));

  // Loop position is invisible to u.
  Multigraph g1(3, {{0, 1}, {1, 2}, {0, 0}});
  CHECK(canonical_string(u_poly(g1)) ==
        "x[1]^3*y + 2*x[1]*x[2]*y + x[3]*y");

  Rational at_ones = evaluate(u, [](const Variable& v) {
    return v.family == Family::y ? Rational(2) : Rational(1);
  });
  CHECK(at_ones == 8);  // 2^{|E| - rank} summed: 7 forests + one cycle at weight 2
}

TEST_CASE("wbar on the weighted triangle") {
  Multigraph w = triangle().with_weights({1, 2, 3});
  const char* golden =
      "z[1,0]*z[2,0]*z[3,0] + z[1,0]*z[5,0] + z[2,0]*z[4,0] + z[3,0]^2 + "
      "3*z[6,0] + z[6,1]";
  CHECK(canonical_string(wbar_expansion(w)) == golden);
  CHECK(canonical_string(wbar_recurrence(w)) == golden);
  CHECK(wbar_recurrence(w, PivotPolicy::HighestIndex) == wbar_expansion(w));
  // With unit weights wbar collapses to ubar.
  CHECK(wbar_expansion(triangle()) == ubar(triangle()));
  CHECK(wbar_recurrence(triangle()) == ubar(triangle()));
}

TEST_CASE("wbar on a doubled edge with a loop") {
  Multigraph g(2, {{0, 1}, {0, 1}, {0, 0}});
  const char* golden = "z[1,0]^2 + z[1,0]*z[1,1] + 2*z[2,0] + 3*z[2,1] + z[2,2]";
  CHECK(canonical_string(wbar_recurrence(g)) == golden);
  CHECK(canonical_string(wbar_expansion(g)) == golden);
}

TEST_CASE("wbar base case is loops only") {
  // Two vertices, no connecting edges, loops: 2 at vertex 1 (weight 2).
  Multigraph g(2, {{0, 0}, {0, 0}}, {2, 5});
  // Vertex 1 contributes z[2,0] + 2 z[2,1] + z[2,2]; vertex 2 contributes z[5,0].
  CHECK(canonical_string(wbar_recurrence(g)) ==
        "z[2,0]*z[5,0] + 2*z[2,1]*z[5,0] + z[2,2]*z[5,0]");
  CHECK(wbar_recurrence(g) == wbar_expansion(g));
}

TEST_CASE("tutte and chromatic golden values") {
  SparsePolynomial t = tutte(triangle());
  CHECK(canonical_string(t) == "X^2 + X + Y");
  CHECK(tutte_from_u(u_poly(triangle()), 1) == t);

  SparsePolynomial c = chromatic(triangle());
  CHECK(canonical_string(c) == "lambda^3 - 3*lambda^2 + 2*lambda");
  CHECK(chromatic_from_tutte(t, 1) == c);

  // Disconnected: two isolated vertices.
  Multigraph e2(2, {});
  CHECK(canonical_string(tutte(e2)) == "1");
  CHECK(canonical_string(chromatic(e2)) == "lambda^2");
  CHECK(chromatic_from_tutte(tutte(e2), 2) == chromatic(e2));

  // A loop kills every proper colouring.
  Multigraph loop(1, {{0, 0}});
  CHECK(canonical_string(tutte(loop)) == "Y");
  CHECK(chromatic(loop).is_zero());
}

TEST_CASE("polychromate golden value") {
  CHECK(canonical_string(polychromate(triangle())) ==
        "x[3]*y^3 + x[1]^3 + 3*x[1]*x[2]*y");
  // Vertex partitions of the path: the middle edge pair differs from the end pair.
  CHECK(canonical_string(polychromate(path3())) ==
        "x[1]^3 + 2*x[1]*x[2]*y + x[3]*y^2 + x[1]*x[2]");
}

TEST_CASE("extended polychromate golden values") {
  CHECK(canonical_string(extended_polychromate(triangle())) ==
        "x2[1,0]^3 + 3*x2[1,0]*x2[2,1] + x2[3,3]");
  CHECK(canonical_string(extended_polychromate(path3())) ==
        "x2[1,0]^3 + x2[1,0]*x2[2,0] + 2*x2[1,0]*x2[2,1] + x2[3,2]");
}

TEST_CASE("ybar coefficients of the triangle") {
  PairedCoefficientMap map = ybar_coefficients(triangle());
  CHECK(map.basis == PairedCoefficientMap::Basis::PowerSum);
  CHECK(map.n == 3);
  CHECK(map.m == 3);
  CHECK(paired_map_to_string(map) ==
        "p[1,0]^3 + 3*p[2,1]*p[1,0] + 3*p[3,2] + p[3,3]");
}

TEST_CASE("ybar oracle matches the coefficient map") {
  Multigraph g(3, {{0, 1}, {1, 2}, {0, 0}});
  std::array<Rational, 3> xs = {Rational(1, 2), Rational(-2), Rational(3, 5)};
  std::array<Rational, 3> ts = {Rational(2), Rational(1, 3), Rational(-1, 2)};
  Rational direct = ybar_evaluate_oracle(g, xs, ts);
  PairedCoefficientMap map = ybar_coefficients(g);
  Rational from_map = 0;
  for (const auto& [key, coeff] : map.terms) {
    Rational basis_value = evaluate(paired_power_sum(key, 3), [&](const Variable& v) {
      if (v.family == Family::x) return xs[v.i - 1];
      if (v.family == Family::t) return ts[v.i - 1];
      throw PreconditionError("unexpected variable");
    });
    from_map += Rational(coeff) * basis_value;
  }
  CHECK(direct == from_map);
}

TEST_CASE("tutte symmetric function at all-ones counts by monochromatic edges") {
  // N = 3 colours, x = 1, t = 1: every colouring contributes 2^{mono edges};
  // the triangle has 6 rainbow, 18 two-colour (one mono edge), 3 mono.
  std::array<Rational, 3> ones = {Rational(1), Rational(1), Rational(1)};
  CHECK(tutte_symmetric_oracle(triangle(), ones, Rational(1)) == 66);

  SparsePolynomial y3 = tutte_symmetric_from_u(triangle(), 3);
  Rational evaluated = evaluate(y3, [](const Variable& v) {
    if (v.family == Family::x || v.family == Family::t_scalar) return Rational(1);
    throw PreconditionError("unexpected variable");
  });
  CHECK(evaluated == 66);

  // At t = -1 only proper colourings survive.
  CHECK(tutte_symmetric_oracle(triangle(), ones, Rational(-1)) == 6);
}

TEST_CASE("chromatic symmetric function golden values") {
  CHECK(canonical_string(chromatic_symmetric_direct(triangle(), 3)) == "6*x[1]*x[2]*x[3]");
  CHECK(chromatic_symmetric_from_u(triangle(), 3) == chromatic_symmetric_direct(triangle(), 3));
  // Truncation below the chromatic number leaves nothing.
  CHECK(chromatic_symmetric_direct(triangle(), 2).is_zero());
  CHECK(chromatic_symmetric_from_u(triangle(), 2).is_zero());
  CHECK(canonical_string(chromatic_symmetric_direct(path3(), 2)) ==
        "x[1]^2*x[2] + x[1]*x[2]^2");
}

TEST_CASE("stability polynomial golden values") {
  CHECK(canonical_string(stability_from_u(triangle())) == "2*p^3 - 3*p^2 + 1");
  CHECK(stability_direct(triangle()) == stability_from_u(triangle()));
  // Edgeless: every subset is stable, so the sum telescopes to 1.
  CHECK(canonical_string(stability_direct(Multigraph(3, {}))) == "1");
  CHECK_THROWS_AS(stability_from_u(Multigraph(1, {{0, 0}})), PreconditionError);
}

TEST_CASE("two-polymatroid polynomial golden values") {
  CHECK(canonical_string(two_polymatroid_direct(triangle())) ==
        "u^3 + v^3 + 3*u + 3*v");
  CHECK(two_polymatroid_from_u(triangle()) == two_polymatroid_direct(triangle()));
  CHECK(two_polymatroid_from_u(path3()) == two_polymatroid_direct(path3()));
  CHECK_THROWS_AS(two_polymatroid_from_u(Multigraph(1, {{0, 0}})), PreconditionError);
  CHECK_THROWS_AS(two_polymatroid_from_u(Multigraph(2, {})), PreconditionError);
}

TEST_CASE("v-function golden values") {
  CHECK(canonical_string(v_function_recursive(Multigraph(1, {{0, 0}}))) == "yk[1]");
  CHECK(canonical_string(v_function_recursive(triangle())) ==
        "yk[0]^3 + 3*yk[0]^2 + 2*yk[0] + yk[1]");
  Multigraph g(3, {{0, 1}, {1, 2}, {0, 0}, {0, 1}});
  CHECK(v_function_recursive(g) == v_function_from_ubar(g));
}

TEST_CASE("guards trip and force bypasses them") {
  Guards tight;
  tight.max_subset_bits = 2;
  CHECK_THROWS_AS(ubar(triangle(), tight), GuardExceeded);
  tight.force = true;
  CHECK(ubar(triangle(), tight) == ubar(triangle()));

  Guards tiny_partitions;
  tiny_partitions.max_partition_vertices = 2;
  CHECK_THROWS_AS(polychromate(triangle(), tiny_partitions), GuardExceeded);
  tiny_partitions.force = true;
  CHECK(polychromate(triangle(), tiny_partitions) == polychromate(triangle()));

  Guards few_colourings;
  few_colourings.max_colourings = 5;
  std::array<Rational, 3> ones = {Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(tutte_symmetric_oracle(triangle(), ones, Rational(1), few_colourings),
                  GuardExceeded);
}

TEST_CASE("parallel scans match the serial result") {
  Multigraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}, {0, 0}});
  Guards parallel;
  parallel.jobs = 4;
  CHECK(ubar(g, parallel) == ubar(g));
  CHECK(wbar_expansion(g.with_weights({1, 2, 1, 3, 1}), parallel) ==
        wbar_expansion(g.with_weights({1, 2, 1, 3, 1})));
}

TEST_CASE("compute_invariant dispatch") {
  InvariantResult r = compute_invariant("tutte", triangle());
  CHECK(r.name == "tutte");
  CHECK(r.value == tutte(triangle()));
  CHECK(!r.method.empty());
  CHECK(compute_invariant("chromatic-symmetric", triangle(), 2).value.is_zero());
  CHECK_THROWS_AS(compute_invariant("ybar", triangle()), PreconditionError);
  CHECK_THROWS_AS(compute_invariant("nope", triangle()), PreconditionError);
  CHECK(invariant_names().size() == 12);
}
