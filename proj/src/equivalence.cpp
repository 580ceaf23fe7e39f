#include "gpoly/equivalence.hpp"

#include <algorithm>

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

const char* basis_letter(PairedCoefficientMap::Basis basis) {
  return basis == PairedCoefficientMap::Basis::PowerSum ? "p" : "m";
}

std::string key_factor_string(const char* letter, const IntegerPairPartition& key) {
  // Pairs arrive in canonical decreasing order; equal pairs group into powers.
  std::string s;
  for (std::size_t i = 0; i < key.size();) {
    std::size_t j = i;
    while (j < key.size() && key[j] == key[i]) ++j;
    if (!s.empty()) s += "*";
    s += std::string(letter) + "[" + std::to_string(key[i].first) + "," +
         std::to_string(key[i].second) + "]";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string paired_map_to_string(const PairedCoefficientMap& map) {
  if (map.terms.empty()) return "0";
  const char* letter = basis_letter(map.basis);
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : map.terms) {
    if (coeff == 0) continue;
    Integer mag = coeff < 0 ? Integer(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out += "-";
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    std::string factor = key_factor_string(letter, key);
    if (factor == "1")
      out += mag.str();
    else if (mag == 1)
      out += factor;
    else
      out += mag.str() + "*" + factor;
  }
  return first ? "0" : out;
}

SparsePolynomial power_sum(int r, int truncation) {
  if (r < 1) throw PreconditionError("power_sum: r must be >= 1");
  if (truncation < 0) throw PreconditionError("power_sum: truncation must be >= 0");
  SparsePolynomial out;
  for (int i = 1; i <= truncation; ++i) out.add_term(Monomial({{var::x(i), r}}), 1);
  return out;
}

SparsePolynomial power_sum_product(const IntegerPartition& tau, int truncation) {
  SparsePolynomial out = SparsePolynomial::constant(1);
  for (int part : tau) out *= power_sum(part, truncation);
  return out;
}

namespace {

// Ordered tuples of distinct indices in 1..N, one per part; fn(index_tuple).
void for_each_injection(int parts, int truncation,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(parts);
  std::vector<bool> used(truncation + 1, false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == parts) {
      fn(tuple);
      return;
    }
    for (int i = 1; i <= truncation; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple[pos] = i;
      self(self, pos + 1);
      used[i] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace

SparsePolynomial augmented_monomial(const IntegerPartition& tau, int truncation) {
  for (int part : tau)
    if (part < 1) throw PreconditionError("augmented_monomial: parts must be >= 1");
  if (truncation < 0) throw PreconditionError("augmented_monomial: truncation must be >= 0");
  SparsePolynomial out;
  for_each_injection(static_cast<int>(tau.size()), truncation, [&](const std::vector<int>& idx) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(tau.size());
    for (std::size_t l = 0; l < tau.size(); ++l) factors.emplace_back(var::x(idx[l]), tau[l]);
    out.add_term(Monomial(std::move(factors)), 1);
  });
  return out;
}

SparsePolynomial paired_power_sum(const IntegerPairPartition& pairs, int truncation) {
  if (truncation < 0) throw PreconditionError("paired_power_sum: truncation must be >= 0");
  SparsePolynomial out = SparsePolynomial::constant(1);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b < 0) throw PreconditionError("paired_power_sum: invalid pair");
    SparsePolynomial factor;
    for (int i = 1; i <= truncation; ++i) {
      std::vector<Monomial::Factor> f{{var::x(i), a}};
      if (b > 0) f.emplace_back(var::t(i), b);
      factor.add_term(Monomial(std::move(f)), 1);
    }
    out *= factor;
  }
  return out;
}

SparsePolynomial paired_augmented_monomial(const IntegerPairPartition& pairs, int truncation) {
  if (truncation < 0)
    throw PreconditionError("paired_augmented_monomial: truncation must be >= 0");
  for (const auto& [a, b] : pairs)
    if (a < 1 || b < 0) throw PreconditionError("paired_augmented_monomial: invalid pair");
  SparsePolynomial out;
  for_each_injection(static_cast<int>(pairs.size()), truncation, [&](const std::vector<int>& idx) {
    SparsePolynomial term = SparsePolynomial::constant(1);
    for (std::size_t l = 0; l < pairs.size(); ++l) {
      // x_i^a (1 + t_i)^b expanded binomially.
      SparsePolynomial factor;
      for (int c = 0; c <= pairs[l].second; ++c) {
        std::vector<Monomial::Factor> f{{var::x(idx[l]), pairs[l].first}};
        if (c > 0) f.emplace_back(var::t(idx[l]), c);
        factor.add_term(Monomial(std::move(f)), binomial(pairs[l].second, c));
      }
      term *= factor;
    }
    out += term;
  });
  return out;
}

PairedCoefficientMap paired_p_to_m(const IntegerPairPartition& pairs) {
  IntegerPairPartition key = canonical_pair_partition(pairs);
  int k = static_cast<int>(key.size());
  PairedCoefficientMap out;
  out.basis = PairedCoefficientMap::Basis::AugmentedMonomial;
  for (const auto& [a, b] : key) {
    out.n += a;
    out.m += b;
  }
  // Group the k factors by a set partition (indices sharing one variable),
  // then rewrite each merged t^B as a signed binomial sum of (1+t)^c.
  for_each_set_partition(k, [&](const std::vector<int>& codes, int blocks) {
    std::vector<int> asum(blocks, 0), bsum(blocks, 0);
    for (int i = 0; i < k; ++i) {
      asum[codes[i]] += key[i].first;
      bsum[codes[i]] += key[i].second;
    }
    std::vector<int> c(blocks, 0);
    auto rec = [&](auto&& self, int block, Integer coeff) -> void {
      if (block == blocks) {
        IntegerPairPartition mkey;
        mkey.reserve(blocks);
        for (int bl = 0; bl < blocks; ++bl) mkey.emplace_back(asum[bl], c[bl]);
        std::sort(mkey.begin(), mkey.end(), std::greater<>());
        auto [it, inserted] = out.terms.emplace(std::move(mkey), coeff);
        if (!inserted) it->second += coeff;
        return;
      }
      for (c[block] = 0; c[block] <= bsum[block]; ++c[block]) {
        Integer factor = binomial(bsum[block], c[block]);
        if ((bsum[block] - c[block]) % 2 != 0) factor = -factor;
        self(self, block + 1, coeff * factor);
      }
    };
    rec(rec, 0, 1);
  });
  std::erase_if(out.terms, [](const auto& entry) { return entry.second == 0; });
  return out;
}

PairedCoefficientMap paired_map_p_to_m(const PairedCoefficientMap& map) {
  if (map.basis != PairedCoefficientMap::Basis::PowerSum)
    throw PreconditionError("paired_map_p_to_m expects a p-basis map");
  PairedCoefficientMap out;
  out.basis = PairedCoefficientMap::Basis::AugmentedMonomial;
  out.n = map.n;
  out.m = map.m;
  for (const auto& [key, coeff] : map.terms) {
    PairedCoefficientMap expanded = paired_p_to_m(key);
    for (const auto& [mkey, mcoeff] : expanded.terms) {
      auto [it, inserted] = out.terms.emplace(mkey, coeff * mcoeff);
      if (!inserted) it->second += coeff * mcoeff;
    }
  }
  std::erase_if(out.terms, [](const auto& entry) { return entry.second == 0; });
  return out;
}

PairedCoefficientMap ubar_to_ybar(const SparsePolynomial& ubar) {
  PairedCoefficientMap out;
  out.basis = PairedCoefficientMap::Basis::PowerSum;
  bool have_n = false;
  for (const auto& [mono, coeff] : ubar.terms()) {
    IntegerPairPartition key;
    int n = 0, edges = 0;
    for (const auto& [v, e] : mono.factors()) {
      if (v.family != Family::z)
        throw PreconditionError("ubar_to_ybar expects a polynomial in z only");
      for (int rep = 0; rep < e; ++rep) {
        key.emplace_back(v.i, v.i + v.j - 1);
        n += v.i;
        edges += v.i + v.j - 1;
      }
    }
    std::sort(key.begin(), key.end(), std::greater<>());
    if (!have_n) {
      out.n = n;
      have_n = true;
    } else if (out.n != n) {
      throw PreconditionError("ubar_to_ybar: inconsistent vertex totals across monomials");
    }
    out.m = std::max(out.m, edges);
    auto [it, inserted] = out.terms.emplace(std::move(key), coeff);
    if (!inserted) it->second += coeff;
  }
  if (!have_n) throw PreconditionError("ubar_to_ybar: zero polynomial is not an extended U polynomial");
  return out;
}

SparsePolynomial ybar_to_ubar(const PairedCoefficientMap& map) {
  if (map.basis != PairedCoefficientMap::Basis::PowerSum)
    throw PreconditionError("ybar_to_ubar expects a p-basis map");
  SparsePolynomial out;
  for (const auto& [key, coeff] : map.terms) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(key.size());
    for (const auto& [r, s] : key) {
      if (s < r - 1)
        throw PreconditionError("ybar_to_ubar: pair (" + std::to_string(r) + "," +
                                std::to_string(s) + ") has no z preimage (needs s >= r-1)");
      factors.emplace_back(var::z(r, s - r + 1), 1);
    }
    out.add_term(Monomial(std::move(factors)), coeff);
  }
  return out;
}

SparsePolynomial ybar_to_extended_polychromate(const PairedCoefficientMap& map) {
  const PairedCoefficientMap& mmap =
      map.basis == PairedCoefficientMap::Basis::AugmentedMonomial ? map : paired_map_p_to_m(map);
  SparsePolynomial out;
  for (const auto& [key, coeff] : mmap.terms) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(key.size());
    for (const auto& [a, b] : key) factors.emplace_back(var::x2(a, b), 1);
    out.add_term(Monomial(std::move(factors)), coeff);
  }
  return out;
}

SparsePolynomial u_to_polychromate(const SparsePolynomial& u) {
  // Derive n from the x-monomials and apply the coarsening expansion.
  int n = -1;
  SparsePolynomial out;
  for (const auto& [mono, coeff] : u.terms()) {
    IntegerPartition tau;
    int ydeg = 0, total = 0;
    for (const auto& [v, e] : mono.factors()) {
      if (v.family == Family::x) {
        for (int rep = 0; rep < e; ++rep) tau.push_back(v.i);
        total += v.i * e;
      } else if (v.family == Family::y) {
        ydeg = e;
      } else {
        throw PreconditionError("u_to_polychromate expects a polynomial in x and y only");
      }
    }
    std::sort(tau.begin(), tau.end(), std::greater<>());
    if (n == -1)
      n = total;
    else if (n != total)
      throw PreconditionError("u_to_polychromate: inconsistent vertex totals across monomials");
    SparsePolynomial row;
    for (const auto& [coarse, count] : coarsening_row(tau)) {
      std::vector<Monomial::Factor> factors;
      factors.reserve(coarse.size());
      for (int part : coarse) factors.emplace_back(var::x(part), 1);
      row.add_term(Monomial(std::move(factors)), count);
    }
    SparsePolynomial ypart = SparsePolynomial::term(
        ydeg > 0 ? Monomial({{var::y(), ydeg}}) : Monomial(), 1);
    SparsePolynomial ydiff =
        SparsePolynomial::from_variable(var::y()) - SparsePolynomial::constant(1);
    out += coeff * (row * ypart * power(ydiff, n - static_cast<int>(tau.size())));
  }
  return out;
}

SparsePolynomial extended_to_plain_polychromate(const SparsePolynomial& ext) {
  return substitute(ext, [](const Variable& v) {
    if (v.family != Family::x2)
      throw PreconditionError("expected a polynomial in x2 only");
    SparsePolynomial out = SparsePolynomial::from_variable(var::x(v.i));
    if (v.j > 0) out *= SparsePolynomial::from_variable(var::y(), v.j);
    return out;
  });
}

}  // namespace gpoly
