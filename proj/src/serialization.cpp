#include "gpoly/serialization.hpp"

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

using nlohmann::json;

json variable_to_json(const Variable& v, int exp) {
  json indices = json::array();
  if (family_arity(v.family) >= 1) indices.push_back(v.i);
  if (family_arity(v.family) == 2) indices.push_back(v.j);
  return json::array({std::string(family_name(v.family)), indices, exp});
}

Variable variable_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_string() || !j[1].is_array())
    throw ParseError(0, "variable entry must be [family, [indices], exponent]");
  std::string name = j[0].get<std::string>();
  std::vector<int> idx;
  for (const auto& entry : j[1]) idx.push_back(entry.get<int>());

  static const std::vector<Family> families = {
      Family::z, Family::x2,     Family::x, Family::t, Family::yk, Family::y,
      Family::t_scalar, Family::lambda, Family::p, Family::u, Family::v, Family::X, Family::Y};
  for (Family f : families) {
    if (name != family_name(f) || static_cast<int>(idx.size()) != family_arity(f)) continue;
    switch (family_arity(f)) {
      case 0: return Variable(f);
      case 1: return Variable(f, idx[0]);
      default: return Variable(f, idx[0], idx[1]);
    }
  }
  throw ParseError(0, "unknown variable family '" + name + "' with " +
                          std::to_string(idx.size()) + " indices");
}

Integer integer_from_json(const json& j) {
  try {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long long>());
  } catch (const std::exception&) {
  }
  throw ParseError(0, "coefficients must be decimal strings");
}

int exponent_from_json(const json& j) {
  if (!j.is_number_integer()) throw ParseError(0, "exponents must be integers");
  long long e = j.get<long long>();
  if (e < 1 || e > 1'000'000) throw ParseError(0, "exponent out of range");
  return static_cast<int>(e);
}

}  // namespace

json polynomial_to_json(const SparsePolynomial& poly) {
  json out = json::array();
  for (const auto& [mono, coeff] : poly.terms()) {
    json vars = json::array();
    for (const auto& [v, e] : mono.factors()) vars.push_back(variable_to_json(v, e));
    out.push_back({{"coeff", coeff.str()}, {"vars", vars}});
  }
  return out;
}

SparsePolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError(0, "polynomial JSON must be an array of terms");
  SparsePolynomial out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("vars"))
      throw ParseError(0, "polynomial term must have 'coeff' and 'vars'");
    Integer coeff = integer_from_json(term["coeff"]);
    if (!term["vars"].is_array()) throw ParseError(0, "'vars' must be an array");
    std::vector<Monomial::Factor> factors;
    for (const auto& vj : term["vars"]) {
      Variable v = variable_from_json(vj);
      factors.emplace_back(v, exponent_from_json(vj[2]));
    }
    try {
      out.add_term(Monomial(std::move(factors)), coeff);
    } catch (const PreconditionError& e) {
      throw ParseError(0, e.what());
    }
  }
  return out;
}

json paired_map_to_json(const PairedCoefficientMap& map) {
  json terms = json::array();
  for (const auto& [key, coeff] : map.terms) {
    json pairs = json::array();
    for (const auto& [a, b] : key) pairs.push_back(json::array({a, b}));
    terms.push_back(json::array({pairs, coeff.str()}));
  }
  return json{{"basis", map.basis == PairedCoefficientMap::Basis::PowerSum ? "p" : "m"},
              {"n", map.n},
              {"m", map.m},
              {"terms", terms}};
}

PairedCoefficientMap paired_map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("n") || !j.contains("m") ||
      !j.contains("terms"))
    throw ParseError(0, "paired map JSON must have basis, n, m, terms");
  PairedCoefficientMap out;
  std::string basis = j["basis"].is_string() ? j["basis"].get<std::string>() : "";
  if (basis == "p")
    out.basis = PairedCoefficientMap::Basis::PowerSum;
  else if (basis == "m")
    out.basis = PairedCoefficientMap::Basis::AugmentedMonomial;
  else
    throw ParseError(0, "basis must be \"p\" or \"m\"");
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer())
    throw ParseError(0, "n and m must be integers");
  out.n = j["n"].get<int>();
  out.m = j["m"].get<int>();
  if (out.n < 0 || out.m < 0) throw ParseError(0, "n and m must be >= 0");
  if (!j["terms"].is_array()) throw ParseError(0, "terms must be an array");
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array())
      throw ParseError(0, "each term must be [[pairs...], coefficient]");
    IntegerPairPartition key;
    for (const auto& pj : term[0]) {
      if (!pj.is_array() || pj.size() != 2 || !pj[0].is_number_integer() ||
          !pj[1].is_number_integer())
        throw ParseError(0, "each pair must be [a, b]");
      key.emplace_back(pj[0].get<int>(), pj[1].get<int>());
    }
    Integer coeff = integer_from_json(term[1]);
    try {
      key = canonical_pair_partition(std::move(key));
    } catch (const PreconditionError& e) {
      throw ParseError(0, e.what());
    }
    if (!is_integer_pair_partition_of(key, out.n, out.m))
      throw ParseError(0, "term key " + pair_partition_to_string(key) +
                              " is not a pair partition of (" + std::to_string(out.n) + ", " +
                              std::to_string(out.m) + ")");
    if (coeff == 0) continue;
    auto [it, inserted] = out.terms.emplace(std::move(key), coeff);
    if (!inserted) it->second += coeff;
  }
  std::erase_if(out.terms, [](const auto& entry) { return entry.second == 0; });
  return out;
}

}  // namespace gpoly
