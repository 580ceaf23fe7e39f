#include "gpoly/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "gpoly/enumerate.hpp"
#include "gpoly/equivalence.hpp"
#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

class SuiteRun {
 public:
  explicit SuiteRun(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.suite = std::move(name);
  }

  bool failed() const { return !result_.passed; }

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    if (failed()) return;
    ++result_.instances;
    if (!ok) {
      result_.passed = false;
      result_.failure = describe();
    }
  }

  VerifyResult finish() {
    result_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  VerifyResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string poly_mismatch(const std::string& what, const Multigraph& g,
                          const SparsePolynomial& expected, const SparsePolynomial& got) {
  std::ostringstream out;
  out << what << "\ngraph:\n"
      << g.to_edge_list() << "expected: " << canonical_string(expected)
      << "\ngot: " << canonical_string(got) << "\n";
  return out.str();
}

std::string map_mismatch(const std::string& what, const Multigraph& g,
                         const PairedCoefficientMap& expected, const PairedCoefficientMap& got) {
  std::ostringstream out;
  out << what << "\ngraph:\n"
      << g.to_edge_list() << "expected: " << paired_map_to_string(expected)
      << "\ngot: " << paired_map_to_string(got) << "\n";
  return out.str();
}

long long count_proper_colourings(const Multigraph& g, int colours) {
  const int n = g.vertex_count();
  if (colours == 0) return n == 0 ? 1 : 0;
  std::vector<int> colour(n, 0);
  long long count = 0;
  for (;;) {
    bool proper = true;
    for (const auto& [u, v] : g.edges())
      if (colour[u] == colour[v]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    int i = n - 1;
    while (i >= 0 && colour[i] == colours - 1) colour[i--] = 0;
    if (i < 0) return count;
    ++colour[i];
  }
}

VerifyResult run_recurrence(const VerifyOptions& options) {
  SuiteRun run("recurrence");
  const int max_n = options.max_vertices > 0 ? options.max_vertices : 4;
  const int max_m = options.max_edges > 0 ? options.max_edges : 5;
  for (int n = 1; n <= max_n && !run.failed(); ++n) {
    for_each_multigraph(n, max_m, [&](const Multigraph& g) {
      if (run.failed()) return;
      for_each_assignment(n, {1, 2}, [&](const std::vector<int>& w) {
        if (run.failed()) return;
        Multigraph gw = g.with_weights(w);
        SparsePolynomial expansion = wbar_expansion(gw, options.guards);
        for (PivotPolicy policy : {PivotPolicy::LowestIndex, PivotPolicy::HighestIndex}) {
          SparsePolynomial rec = wbar_recurrence(gw, policy);
          run.check(rec == expansion, [&] {
            return poly_mismatch(policy == PivotPolicy::LowestIndex
                                     ? "wbar recurrence (lowest pivot) != subset expansion"
                                     : "wbar recurrence (highest pivot) != subset expansion",
                                 gw, expansion, rec);
          });
          if (run.failed()) break;
        }
      });
    });
  }
  return run.finish();
}

void check_specializations(SuiteRun& run, const Multigraph& g, const Guards& guards) {
  if (run.failed()) return;
  const int n = g.vertex_count();
  const int k = g.components().count();

  SparsePolynomial ub = ubar(g, guards);
  SparsePolynomial u = u_poly(g, guards);
  {
    SparsePolynomial derived = u_from_ubar(ub);
    run.check(derived == u,
              [&] { return poly_mismatch("u from ubar != direct u", g, u, derived); });
  }

  SparsePolynomial t = tutte(g, guards);
  {
    SparsePolynomial derived = tutte_from_u(u, k);
    run.check(derived == t,
              [&] { return poly_mismatch("tutte from u != subset-expansion tutte", g, t, derived); });
  }

  SparsePolynomial c = chromatic(g, guards);
  {
    SparsePolynomial derived = chromatic_from_tutte(t, k);
    run.check(derived == c, [&] {
      return poly_mismatch("chromatic from tutte != subset-expansion chromatic", g, c, derived);
    });
  }
  for (int colours = 0; colours <= 4 && !run.failed(); ++colours) {
    Rational expected(count_proper_colourings(g, colours));
    Rational got = evaluate(c, [&](const Variable& v) -> Rational {
      if (v.family == Family::lambda) return Rational(colours);
      throw PreconditionError("unexpected variable in the chromatic polynomial");
    });
    run.check(got == expected, [&] {
      std::ostringstream out;
      out << "chromatic polynomial != colouring count at " << colours << " colours\ngraph:\n"
          << g.to_edge_list() << "expected: " << expected << "\ngot: " << got << "\n";
      return out.str();
    });
  }

  {
    SparsePolynomial rec = v_function_recursive(g);
    SparsePolynomial sub = v_function_from_ubar(g, guards);
    run.check(rec == sub,
              [&] { return poly_mismatch("v function from ubar != recursive", g, rec, sub); });
  }

  {
    SparsePolynomial direct = chromatic_symmetric_direct(g, n, guards);
    SparsePolynomial derived = chromatic_symmetric_from_u(g, n, guards);
    run.check(direct == derived, [&] {
      return poly_mismatch("chromatic symmetric function from u != colouring sum", g, direct,
                           derived);
    });
  }

  if (!g.has_loops()) {
    SparsePolynomial direct = stability_direct(g, guards);
    SparsePolynomial derived = stability_from_u(g, guards);
    run.check(direct == derived, [&] {
      return poly_mismatch("stability polynomial from u != stable-set sum", g, direct, derived);
    });

    bool isolated = false;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) isolated = true;
    if (!isolated) {
      SparsePolynomial s_direct = two_polymatroid_direct(g, guards);
      SparsePolynomial s_derived = two_polymatroid_from_u(g, guards);
      run.check(s_direct == s_derived, [&] {
        return poly_mismatch("2-polymatroid polynomial from u != subset expansion", g, s_direct,
                             s_derived);
      });
    }
  }
}

VerifyResult run_specializations(const VerifyOptions& options) {
  SuiteRun run("specializations");
  const int max_simple = options.max_vertices > 0 ? options.max_vertices : 5;
  const int max_multi_edges = options.max_edges > 0 ? options.max_edges : 4;
  const int max_multi_vertices = std::min(max_simple, 4);
  for (int n = 1; n <= max_simple && !run.failed(); ++n)
    for_each_connected_simple_graph(
        n, [&](const Multigraph& g) { check_specializations(run, g, options.guards); });
  for (int n = 1; n <= max_multi_vertices && !run.failed(); ++n)
    for_each_multigraph(n, max_multi_edges,
                        [&](const Multigraph& g) { check_specializations(run, g, options.guards); });
  return run.finish();
}

void check_equivalence_chain(SuiteRun& run, const Multigraph& g, const Guards& guards) {
  if (run.failed()) return;

  SparsePolynomial ub = ubar(g, guards);
  PairedCoefficientMap yb = ybar_coefficients(g, guards);
  {
    PairedCoefficientMap derived = ubar_to_ybar(ub);
    run.check(derived == yb, [&] {
      return map_mismatch("ubar -> ybar != colouring-defined ybar", g, yb, derived);
    });
  }
  {
    SparsePolynomial back = ybar_to_ubar(yb);
    run.check(back == ub,
              [&] { return poly_mismatch("ybar -> ubar round trip broke", g, ub, back); });
  }

  SparsePolynomial ext = extended_polychromate(g, guards);
  {
    SparsePolynomial derived = ybar_to_extended_polychromate(yb);
    run.check(derived == ext, [&] {
      return poly_mismatch("ybar -> extended polychromate != partition expansion", g, ext, derived);
    });
  }

  SparsePolynomial plain = polychromate(g, guards);
  {
    SparsePolynomial derived = extended_to_plain_polychromate(ext);
    run.check(derived == plain, [&] {
      return poly_mismatch("extended -> plain polychromate != partition expansion", g, plain,
                           derived);
    });
  }
  {
    SparsePolynomial derived = u_to_polychromate(u_poly(g, guards));
    run.check(derived == plain, [&] {
      return poly_mismatch("u -> polychromate != partition expansion", g, plain, derived);
    });
  }
}

VerifyResult run_equivalence_chain(const VerifyOptions& options) {
  SuiteRun run("equivalence-chain");
  const int max_simple = options.max_vertices > 0 ? options.max_vertices : 5;
  const int max_multi_edges = options.max_edges > 0 ? options.max_edges : 4;
  const int max_multi_vertices = std::min(max_simple, 3);
  for (int n = 1; n <= max_simple && !run.failed(); ++n)
    for_each_connected_simple_graph(
        n, [&](const Multigraph& g) { check_equivalence_chain(run, g, options.guards); });
  for (int n = 1; n <= max_multi_vertices && !run.failed(); ++n)
    for_each_multigraph(n, max_multi_edges,
                        [&](const Multigraph& g) { check_equivalence_chain(run, g, options.guards); });
  return run.finish();
}

Rational random_rational(std::mt19937_64& rng) {
  int num = static_cast<int>(rng() % 19) - 9;
  int den = static_cast<int>(rng() % 7) + 1;
  return Rational(num, den);
}

std::string point_to_string(const std::vector<Rational>& xs, const std::vector<Rational>& ts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << (i ? ", " : "") << "x" << i + 1 << "=" << xs[i];
  for (std::size_t i = 0; i < ts.size(); ++i) out << ", t" << i + 1 << "=" << ts[i];
  return out.str();
}

VerifyResult run_bases(const VerifyOptions& options) {
  SuiteRun run("bases");
  const int max_n = options.max_vertices > 0 ? options.max_vertices : 5;
  const int max_m = options.max_edges > 0 ? options.max_edges : 4;
  const int points = 20;
  std::mt19937_64 rng(0x70616972ULL);

  for (int n = 1; n <= max_n && !run.failed(); ++n) {
    const int vars = n;
    std::vector<std::vector<Rational>> xs(points), ts(points);
    for (int p = 0; p < points; ++p)
      for (int i = 0; i < vars; ++i) {
        xs[p].push_back(random_rational(rng));
        ts[p].push_back(random_rational(rng));
      }
    auto assignment = [&](int p) {
      return [&xs, &ts, p](const Variable& v) -> Rational {
        if (v.family == Family::x && v.i >= 1 && v.i <= static_cast<int>(xs[p].size()))
          return xs[p][v.i - 1];
        if (v.family == Family::t && v.i >= 1 && v.i <= static_cast<int>(ts[p].size()))
          return ts[p][v.i - 1];
        throw PreconditionError("unexpected variable in a paired basis element");
      };
    };
    std::map<IntegerPairPartition, std::vector<Rational>> m_values;
    auto m_at = [&](const IntegerPairPartition& key) -> const std::vector<Rational>& {
      auto it = m_values.find(key);
      if (it == m_values.end()) {
        SparsePolynomial poly = paired_augmented_monomial(key, vars);
        std::vector<Rational> vals;
        vals.reserve(points);
        for (int p = 0; p < points; ++p) vals.push_back(evaluate(poly, assignment(p)));
        it = m_values.emplace(key, std::move(vals)).first;
      }
      return it->second;
    };
    for (const IntegerPairPartition& pairs : integer_pair_partitions(n, max_m)) {
      if (run.failed()) break;
      PairedCoefficientMap expansion = paired_p_to_m(pairs);
      SparsePolynomial p_poly = paired_power_sum(pairs, vars);
      for (int p = 0; p < points && !run.failed(); ++p) {
        Rational lhs = evaluate(p_poly, assignment(p));
        Rational rhs = 0;
        for (const auto& [key, coeff] : expansion.terms) rhs += Rational(coeff) * m_at(key)[p];
        run.check(lhs == rhs, [&] {
          std::ostringstream out;
          out << "paired power sum != its augmented-monomial expansion\nelement: "
              << pair_partition_to_string(pairs) << "\npoint: " << point_to_string(xs[p], ts[p])
              << "\nexpected: " << lhs << "\ngot: " << rhs << "\n";
          return out.str();
        });
      }
    }
  }

  const int max_classical = max_n + 1;
  for (int n = 1; n <= max_classical && !run.failed(); ++n) {
    const int vars = n;
    std::vector<std::vector<Rational>> xs(points);
    for (int p = 0; p < points; ++p)
      for (int i = 0; i < vars; ++i) xs[p].push_back(random_rational(rng));
    auto assignment = [&](int p) {
      return [&xs, p](const Variable& v) -> Rational {
        if (v.family == Family::x && v.i >= 1 && v.i <= static_cast<int>(xs[p].size()))
          return xs[p][v.i - 1];
        throw PreconditionError("unexpected variable in a basis element");
      };
    };
    std::map<IntegerPartition, std::vector<Rational>> m_values;
    auto m_at = [&](const IntegerPartition& key) -> const std::vector<Rational>& {
      auto it = m_values.find(key);
      if (it == m_values.end()) {
        SparsePolynomial poly = augmented_monomial(key, vars);
        std::vector<Rational> vals;
        vals.reserve(points);
        for (int p = 0; p < points; ++p) vals.push_back(evaluate(poly, assignment(p)));
        it = m_values.emplace(key, std::move(vals)).first;
      }
      return it->second;
    };
    for (const IntegerPartition& tau : integer_partitions(n)) {
      if (run.failed()) break;
      auto row = coarsening_row(tau);
      SparsePolynomial p_poly = power_sum_product(tau, vars);
      for (int p = 0; p < points && !run.failed(); ++p) {
        Rational lhs = evaluate(p_poly, assignment(p));
        Rational rhs = 0;
        for (const auto& [key, coeff] : row) rhs += Rational(coeff) * m_at(key)[p];
        run.check(lhs == rhs, [&] {
          std::ostringstream out;
          out << "power sum != its augmented-monomial expansion\nelement: p_(";
          for (std::size_t i = 0; i < tau.size(); ++i) out << (i ? "," : "") << tau[i];
          out << ")\npoint: " << point_to_string(xs[p], {}) << "\nexpected: " << lhs
              << "\ngot: " << rhs << "\n";
          return out.str();
        });
      }
    }
  }
  return run.finish();
}

VerifyResult run_examples(const VerifyOptions& options) {
  SuiteRun run("examples");
  const Guards& guards = options.guards;
  namespace v = var;
  auto P = [](const Variable& x) { return SparsePolynomial::from_variable(x); };

  const Multigraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  const Multigraph path2(3, {{0, 1}, {1, 2}});
  const Multigraph g1(3, {{0, 1}, {1, 2}, {0, 0}});
  const Multigraph g2(3, {{0, 1}, {1, 2}, {1, 1}});
  const Multigraph figure(2, {{0, 1}, {0, 1}, {0, 0}});
  const Multigraph loop1(1, {{0, 0}});

  {
    SparsePolynomial expected = power(P(v::x(1)), 3) + Integer(3) * P(v::x(1)) * P(v::x(2)) +
                                Integer(2) * P(v::x(3)) + P(v::y()) * P(v::x(3));
    SparsePolynomial got = u_poly(k3, guards);
    run.check(got == expected,
              [&] { return poly_mismatch("u of the triangle", k3, expected, got); });
  }
  {
    SparsePolynomial expected = power(P(v::z(1, 0)), 3) +
                                Integer(3) * P(v::z(1, 0)) * P(v::z(2, 0)) +
                                Integer(3) * P(v::z(3, 0)) + P(v::z(3, 1));
    SparsePolynomial got = ubar(k3, guards);
    run.check(got == expected,
              [&] { return poly_mismatch("ubar of the triangle", k3, expected, got); });
  }
  {
    SparsePolynomial expected = power(P(v::x2(1, 0)), 3) +
                                Integer(3) * P(v::x2(2, 1)) * P(v::x2(1, 0)) + P(v::x2(3, 3));
    SparsePolynomial got = extended_polychromate(k3, guards);
    run.check(got == expected, [&] {
      return poly_mismatch("extended polychromate of the triangle", k3, expected, got);
    });
  }
  {
    SparsePolynomial expected = power(P(v::x2(1, 0)), 3) +
                                Integer(2) * P(v::x2(2, 1)) * P(v::x2(1, 0)) +
                                P(v::x2(2, 0)) * P(v::x2(1, 0)) + P(v::x2(3, 2));
    SparsePolynomial got = extended_polychromate(path2, guards);
    run.check(got == expected, [&] {
      return poly_mismatch("extended polychromate of the two-edge path", path2, expected, got);
    });
  }
  {
    SparsePolynomial expected = P(v::y()) * (P(v::x(3)) + Integer(2) * P(v::x(2)) * P(v::x(1)) +
                                             power(P(v::x(1)), 3));
    SparsePolynomial got1 = u_poly(g1, guards);
    SparsePolynomial got2 = u_poly(g2, guards);
    run.check(got1 == expected, [&] {
      return poly_mismatch("u of the path with a loop at a degree-one vertex", g1, expected, got1);
    });
    run.check(got2 == expected, [&] {
      return poly_mismatch("u of the path with a loop at the degree-two vertex", g2, expected,
                           got2);
    });
  }
  {
    SparsePolynomial expected = P(v::z(3, 1)) + P(v::z(3, 0)) + P(v::z(2, 1)) * P(v::z(1, 0)) +
                                P(v::z(2, 0)) * P(v::z(1, 1)) +
                                Integer(2) * P(v::z(2, 0)) * P(v::z(1, 0)) +
                                power(P(v::z(1, 0)), 2) * P(v::z(1, 1)) + power(P(v::z(1, 0)), 3);
    SparsePolynomial got = ubar(g1, guards);
    run.check(got == expected, [&] {
      return poly_mismatch("ubar of the path with a loop at a degree-one vertex", g1, expected,
                           got);
    });
  }
  {
    SparsePolynomial expected = P(v::z(3, 1)) + P(v::z(3, 0)) +
                                Integer(2) * P(v::z(2, 1)) * P(v::z(1, 0)) +
                                Integer(2) * P(v::z(2, 0)) * P(v::z(1, 0)) +
                                power(P(v::z(1, 0)), 2) * P(v::z(1, 1)) + power(P(v::z(1, 0)), 3);
    SparsePolynomial got = ubar(g2, guards);
    run.check(got == expected, [&] {
      return poly_mismatch("ubar of the path with a loop at the degree-two vertex", g2, expected,
                           got);
    });
    run.check(ubar(g1, guards) != got, [&] {
      return std::string("the two loop placements should have distinct ubar\n");
    });
  }
  {
    Multigraph weighted = k3.with_weights({1, 2, 3});
    SparsePolynomial expected = P(v::z(1, 0)) * P(v::z(2, 0)) * P(v::z(3, 0)) +
                                P(v::z(1, 0)) * P(v::z(5, 0)) + P(v::z(2, 0)) * P(v::z(4, 0)) +
                                power(P(v::z(3, 0)), 2) + Integer(3) * P(v::z(6, 0)) +
                                P(v::z(6, 1));
    SparsePolynomial got = wbar_expansion(weighted, guards);
    run.check(got == expected, [&] {
      return poly_mismatch("wbar of the (1,2,3)-weighted triangle", weighted, expected, got);
    });
    SparsePolynomial rec = wbar_recurrence(weighted);
    run.check(rec == expected, [&] {
      return poly_mismatch("wbar recurrence on the (1,2,3)-weighted triangle", weighted, expected,
                           rec);
    });
    SparsePolynomial unit = wbar_expansion(k3, guards);
    run.check(unit == ubar(k3, guards), [&] {
      return poly_mismatch("wbar with unit weights should equal ubar", k3, ubar(k3, guards), unit);
    });
  }
  {
    SparsePolynomial expected = P(v::z(1, 1)) * P(v::z(1, 0)) + power(P(v::z(1, 0)), 2) +
                                P(v::z(2, 2)) + Integer(3) * P(v::z(2, 1)) +
                                Integer(2) * P(v::z(2, 0));
    SparsePolynomial got = wbar_recurrence(figure);
    run.check(got == expected, [&] {
      return poly_mismatch("worked deletion/contraction example", figure, expected, got);
    });
    SparsePolynomial exp_direct = wbar_expansion(figure, guards);
    run.check(exp_direct == expected, [&] {
      return poly_mismatch("subset expansion of the worked example", figure, expected, exp_direct);
    });
  }
  {
    SparsePolynomial expected = P(v::yk(1));
    SparsePolynomial got = v_function_recursive(loop1);
    run.check(got == expected, [&] {
      return poly_mismatch("v function of a single loop", loop1, expected, got);
    });
  }
  return run.finish();
}

}  // namespace

VerifyResult run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "recurrence") return run_recurrence(options);
  if (suite == "specializations") return run_specializations(options);
  if (suite == "equivalence-chain") return run_equivalence_chain(options);
  if (suite == "bases") return run_bases(options);
  if (suite == "examples") return run_examples(options);
  std::string names;
  for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
  throw PreconditionError("unknown suite '" + std::string(suite) + "'; expected one of " + names);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"recurrence", "specializations",
                                                 "equivalence-chain", "bases", "examples"};
  return names;
}

}  // namespace gpoly
