#include "gpoly/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

void check_subset_guard(int bits, const Guards& guards, const char* what) {
  if (bits > 62)
    throw GuardExceeded(std::string(what) + ": 2^" + std::to_string(bits) +
                        " states cannot be enumerated");
  if (!guards.force && bits > guards.max_subset_bits)
    throw GuardExceeded(std::string(what) + ": 2^" + std::to_string(bits) +
                        " states exceeds the guard (2^" + std::to_string(guards.max_subset_bits) +
                        "); use force to override");
}

void check_partition_guard(int n, const Guards& guards, const char* what) {
  if (!guards.force && n > guards.max_partition_vertices)
    throw GuardExceeded(std::string(what) + ": partition sum over " + std::to_string(n) +
                        " vertices exceeds the guard (" +
                        std::to_string(guards.max_partition_vertices) + "); use force to override");
}

void check_colouring_guard(int colours, int n, const Guards& guards, const char* what) {
  if (colours < 0) throw PreconditionError("colour count must be >= 0");
  long long total = 1;
  bool huge = false;
  for (int i = 0; i < n && !huge; ++i) {
    if (colours > 1 && total > std::numeric_limits<long long>::max() / colours)
      huge = true;
    else
      total *= colours;
  }
  // Even with force, a colouring count beyond 2^62 cannot be enumerated.
  if (huge || total > (1LL << 62))
    throw GuardExceeded(std::string(what) + ": " + std::to_string(colours) + "^" +
                        std::to_string(n) + " colourings cannot be enumerated");
  if (!guards.force && total > guards.max_colourings)
    throw GuardExceeded(std::string(what) + ": " + std::to_string(colours) + "^" +
                        std::to_string(n) + " colourings exceeds the guard (" +
                        std::to_string(guards.max_colourings) + "); use force to override");
}

// One connected component of a spanning subgraph.
struct CompStat {
  int vertices;
  int edges;
  long long weight;
};

// Calls fn(components, subset_size) for every edge subset mask in [lo, hi).
template <typename Fn>
void scan_subsets(const Multigraph& g, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  int n = g.vertex_count();
  const auto& edges = g.edges();
  const auto& weights = g.weights();
  std::vector<int> parent(n), vert(n), edgc(n);
  std::vector<long long> wsum(n);
  std::vector<CompStat> comps;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    for (int v = 0; v < n; ++v) parent[v] = v;
    int size = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1, ++size) {
      int e = std::countr_zero(rest);
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    for (int v = 0; v < n; ++v) {
      vert[v] = 0;
      edgc[v] = 0;
      wsum[v] = 0;
    }
    for (int v = 0; v < n; ++v) {
      int r = find(v);
      vert[r] += 1;
      wsum[r] += weights[v];
    }
    for (std::uint64_t rest = mask; rest; rest &= rest - 1)
      edgc[find(edges[std::countr_zero(rest)].first)] += 1;
    comps.clear();
    for (int v = 0; v < n; ++v)
      if (parent[v] == v) comps.push_back({vert[v], edgc[v], wsum[v]});
    fn(comps, size);
  }
}

// Runs scan_subsets over [0, 2^m) split across guards.jobs threads.  Each
// thread folds into its own Key -> count map; maps are merged by addition.
template <typename Key, typename MakeKey>
std::map<Key, long long> subset_counts(const Multigraph& g, const Guards& guards,
                                       const char* what, MakeKey&& make_key) {
  int m = g.edge_count();
  check_subset_guard(m, guards, what);
  std::uint64_t total = std::uint64_t(1) << m;
  int jobs = std::max(1, guards.jobs);
  if (std::uint64_t(jobs) > total) jobs = static_cast<int>(total);

  std::vector<std::map<Key, long long>> partial(jobs);
  auto run = [&](int j) {
    std::uint64_t lo = total / jobs * j + std::min<std::uint64_t>(j, total % jobs);
    std::uint64_t hi = lo + total / jobs + (std::uint64_t(j) < total % jobs ? 1 : 0);
    Key key;
    scan_subsets(g, lo, hi, [&](const std::vector<CompStat>& comps, int size) {
      make_key(comps, size, key);
      partial[j][key] += 1;
    });
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int j = 0; j < jobs; ++j) threads.emplace_back(run, j);
    for (auto& t : threads) t.join();
  }
  std::map<Key, long long> merged = std::move(partial[0]);
  for (int j = 1; j < jobs; ++j)
    for (const auto& [key, count] : partial[j]) merged[key] += count;
  return merged;
}

// (y - 1)^j with a process-wide memo; returns a copy so concurrent growth of
// the cache cannot invalidate callers.
SparsePolynomial y_minus_one_power(int j) {
  static std::vector<SparsePolynomial> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  while (static_cast<int>(cache.size()) <= j) {
    if (cache.empty())
      cache.push_back(SparsePolynomial::constant(1));
    else
      cache.push_back(cache.back() * (SparsePolynomial::from_variable(var::y()) -
                                      SparsePolynomial::constant(1)));
  }
  return cache[j];
}

}  // namespace

std::map<IntegerPairPartition, long long> component_signature_counts(const Multigraph& g,
                                                                     const Guards& guards) {
  return subset_counts<IntegerPairPartition>(
      g, guards, "component signature scan",
      [](const std::vector<CompStat>& comps, int, IntegerPairPartition& key) {
        key.clear();
        for (const CompStat& c : comps) key.emplace_back(c.vertices, c.edges);
        std::sort(key.begin(), key.end(), std::greater<>());
      });
}

SparsePolynomial ubar(const Multigraph& g, const Guards& guards) {
  SparsePolynomial out;
  for (const auto& [sig, count] : component_signature_counts(g, guards)) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(sig.size());
    for (const auto& [c, e] : sig) factors.emplace_back(var::z(c, e - c + 1), 1);
    out.add_term(Monomial(std::move(factors)), count);
  }
  return out;
}

SparsePolynomial wbar_expansion(const Multigraph& g, const Guards& guards) {
  if (g.total_weight() > std::numeric_limits<int>::max())
    throw PreconditionError("total weight too large for z indices");
  using Key = std::vector<std::pair<long long, int>>;
  auto counts = subset_counts<Key>(
      g, guards, "weighted subset scan",
      [](const std::vector<CompStat>& comps, int, Key& key) {
        key.clear();
        for (const CompStat& c : comps) key.emplace_back(c.weight, c.edges - c.vertices + 1);
        std::sort(key.begin(), key.end(), std::greater<>());
      });
  SparsePolynomial out;
  for (const auto& [sig, count] : counts) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(sig.size());
    for (const auto& [w, nul] : sig) factors.emplace_back(var::z(static_cast<int>(w), nul), 1);
    out.add_term(Monomial(std::move(factors)), count);
  }
  return out;
}

SparsePolynomial wbar_recurrence(const Multigraph& g, PivotPolicy policy) {
  int pivot = -1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    pivot = e;
    if (policy == PivotPolicy::LowestIndex) break;
  }
  if (pivot == -1) {
    // Loops only: each vertex contributes sum_j C(loops, j) z[w, j].
    SparsePolynomial out = SparsePolynomial::constant(1);
    for (int v = 0; v < g.vertex_count(); ++v) {
      int loops = g.loop_count_at(v);
      SparsePolynomial factor;
      for (int j = 0; j <= loops; ++j)
        factor.add_term(Monomial({{var::z(g.weight(v), j), 1}}), binomial(loops, j));
      out *= factor;
    }
    return out;
  }
  return wbar_recurrence(g.delete_edge(pivot), policy) +
         wbar_recurrence(g.contract_edge(pivot), policy);
}

SparsePolynomial u_poly(const Multigraph& g, const Guards& guards) {
  // Group signatures by (vertex partition, total nullity) first so the
  // (y-1)^j expansion happens once per group.
  std::map<std::pair<IntegerPartition, int>, Integer> grouped;
  for (const auto& [sig, count] : component_signature_counts(g, guards)) {
    IntegerPartition tau;
    tau.reserve(sig.size());
    int nullity = 0;
    for (const auto& [c, e] : sig) {
      tau.push_back(c);
      nullity += e - c + 1;
    }
    grouped[{std::move(tau), nullity}] += count;
  }
  SparsePolynomial out;
  for (const auto& [key, coeff] : grouped) {
    std::vector<Monomial::Factor> factors;
    for (int part : key.first) factors.emplace_back(var::x(part), 1);
    out += coeff * (SparsePolynomial::term(Monomial(std::move(factors)), 1) *
                    y_minus_one_power(key.second));
  }
  return out;
}

SparsePolynomial u_from_ubar(const SparsePolynomial& ubar_poly) {
  return substitute(ubar_poly, [](const Variable& v) {
    if (v.family != Family::z) throw PreconditionError("expected a polynomial in z only");
    return SparsePolynomial::from_variable(var::x(v.i)) * y_minus_one_power(v.j);
  });
}

SparsePolynomial tutte(const Multigraph& g, const Guards& guards) {
  int rank_e = g.rank();
  // Key: (corank, nullity).
  std::map<std::pair<int, int>, long long> counts;
  for (const auto& [sig, count] : component_signature_counts(g, guards)) {
    int k = static_cast<int>(sig.size());
    int edges = 0;
    for (const auto& [c, e] : sig) edges += e;
    int rank_a = g.vertex_count() - k;
    counts[{rank_e - rank_a, edges - rank_a}] += count;
  }
  SparsePolynomial x1 = SparsePolynomial::from_variable(var::X()) - SparsePolynomial::constant(1);
  SparsePolynomial y1 = SparsePolynomial::from_variable(var::Y()) - SparsePolynomial::constant(1);
  SparsePolynomial out;
  for (const auto& [key, count] : counts)
    out += Integer(count) * (power(x1, key.first) * power(y1, key.second));
  return out;
}

SparsePolynomial tutte_from_u(const SparsePolynomial& u, int component_count) {
  SparsePolynomial shifted = substitute(u, [](const Variable& v) {
    if (v.family == Family::x)
      return SparsePolynomial::from_variable(var::X()) - SparsePolynomial::constant(1);
    if (v.family == Family::y) return SparsePolynomial::from_variable(var::Y());
    throw PreconditionError("expected a polynomial in x and y only");
  });
  for (int i = 0; i < component_count; ++i)
    shifted = divide_exact_linear(shifted, var::X(), 1);
  return shifted;
}

SparsePolynomial chromatic(const Multigraph& g, const Guards& guards) {
  // Whitney rank expansion: sum over subsets of (-1)^|A| lambda^k(A).
  std::map<int, long long> by_components;
  for (const auto& [sig, count] : component_signature_counts(g, guards)) {
    int edges = 0;
    for (const auto& [c, e] : sig) edges += e;
    by_components[static_cast<int>(sig.size())] += edges % 2 == 0 ? count : -count;
  }
  SparsePolynomial out;
  for (const auto& [k, coeff] : by_components) {
    if (coeff == 0) continue;
    out.add_term(k == 0 ? Monomial() : Monomial({{var::lambda(), k}}), coeff);
  }
  return out;
}

SparsePolynomial chromatic_from_tutte(const SparsePolynomial& tutte_poly, int component_count) {
  // The rank of the edge set is the X-degree of the Tutte polynomial.
  int rank = 0;
  for (const auto& [mono, coeff] : tutte_poly.terms())
    for (const auto& [v, exp] : mono.factors()) {
      if (v.family == Family::X)
        rank = std::max(rank, exp);
      else if (v.family != Family::Y)
        throw PreconditionError("expected a polynomial in X and Y only");
    }
  SparsePolynomial value = substitute(tutte_poly, [](const Variable& v) {
    if (v.family == Family::X)
      return SparsePolynomial::constant(1) - SparsePolynomial::from_variable(var::lambda());
    return SparsePolynomial();
  });
  SparsePolynomial out = SparsePolynomial::from_variable(var::lambda(), component_count) * value;
  if (rank % 2 != 0) out = -out;
  return out;
}

SparsePolynomial polychromate(const Multigraph& g, const Guards& guards) {
  int n = g.vertex_count();
  check_partition_guard(n, guards, "polychromate");
  const auto& edges = g.edges();
  std::vector<int> sizes(n);
  SparsePolynomial out;
  for_each_set_partition(n, [&](const std::vector<int>& codes, int blocks) {
    std::fill(sizes.begin(), sizes.begin() + blocks, 0);
    for (int v = 0; v < n; ++v) sizes[codes[v]] += 1;
    int inner = 0;
    for (const auto& [a, b] : edges)
      if (codes[a] == codes[b]) ++inner;
    std::vector<Monomial::Factor> factors;
    factors.reserve(blocks + 1);
    for (int b = 0; b < blocks; ++b) factors.emplace_back(var::x(sizes[b]), 1);
    if (inner > 0) factors.emplace_back(var::y(), inner);
    out.add_term(Monomial(std::move(factors)), 1);
  });
  return out;
}

SparsePolynomial extended_polychromate(const Multigraph& g, const Guards& guards) {
  int n = g.vertex_count();
  check_partition_guard(n, guards, "extended polychromate");
  const auto& edges = g.edges();
  std::vector<int> sizes(n), inner(n);
  SparsePolynomial out;
  for_each_set_partition(n, [&](const std::vector<int>& codes, int blocks) {
    std::fill(sizes.begin(), sizes.begin() + blocks, 0);
    std::fill(inner.begin(), inner.begin() + blocks, 0);
    for (int v = 0; v < n; ++v) sizes[codes[v]] += 1;
    for (const auto& [a, b] : edges)
      if (codes[a] == codes[b]) inner[codes[a]] += 1;
    std::vector<Monomial::Factor> factors;
    factors.reserve(blocks);
    for (int b = 0; b < blocks; ++b) factors.emplace_back(var::x2(sizes[b], inner[b]), 1);
    out.add_term(Monomial(std::move(factors)), 1);
  });
  return out;
}

PairedCoefficientMap ybar_coefficients(const Multigraph& g, const Guards& guards) {
  PairedCoefficientMap map;
  map.basis = PairedCoefficientMap::Basis::PowerSum;
  map.n = g.vertex_count();
  map.m = g.edge_count();
  for (const auto& [sig, count] : component_signature_counts(g, guards)) map.terms[sig] = count;
  return map;
}

namespace {

// Shared colouring-sum loop: calls fn(colouring) for every map V -> {0..N-1}.
template <typename Fn>
void for_each_colouring(int n, int colours, Fn&& fn) {
  if (colours == 0) {
    if (n == 0) {
      std::vector<int> empty;
      fn(empty);
    }
    return;
  }
  std::vector<int> colouring(n, 0);
  while (true) {
    fn(colouring);
    int pos = n - 1;
    while (pos >= 0 && colouring[pos] == colours - 1) colouring[pos--] = 0;
    if (pos < 0) return;
    colouring[pos] += 1;
  }
}

}  // namespace

Rational ybar_evaluate_oracle(const Multigraph& g, std::span<const Rational> xs,
                              std::span<const Rational> ts, const Guards& guards) {
  if (xs.size() != ts.size())
    throw PreconditionError("ybar oracle needs matching x and t value lists");
  int n = g.vertex_count();
  int colours = static_cast<int>(xs.size());
  check_colouring_guard(colours, n, guards, "ybar oracle");

  // pow_t[c][k] = (1 + t_c)^k for k up to the edge count.
  int m = g.edge_count();
  std::vector<std::vector<Rational>> pow_t(colours);
  for (int c = 0; c < colours; ++c) {
    pow_t[c].resize(m + 1);
    pow_t[c][0] = 1;
    Rational base = Rational(1) + ts[c];
    for (int k = 1; k <= m; ++k) pow_t[c][k] = pow_t[c][k - 1] * base;
  }

  Rational total = 0;
  std::vector<int> mono(colours);
  for_each_colouring(n, colours, [&](const std::vector<int>& colouring) {
    std::fill(mono.begin(), mono.end(), 0);
    for (const auto& [a, b] : g.edges())
      if (colouring[a] == colouring[b]) mono[colouring[a]] += 1;
    Rational term = 1;
    for (int v = 0; v < n; ++v) term *= xs[colouring[v]];
    for (int c = 0; c < colours; ++c)
      if (mono[c] > 0) term *= pow_t[c][mono[c]];
    total += term;
  });
  return total;
}

Rational tutte_symmetric_oracle(const Multigraph& g, std::span<const Rational> xs,
                                const Rational& t, const Guards& guards) {
  int n = g.vertex_count();
  int colours = static_cast<int>(xs.size());
  check_colouring_guard(colours, n, guards, "tutte symmetric oracle");
  int m = g.edge_count();
  std::vector<Rational> pow_t(m + 1);
  pow_t[0] = 1;
  for (int k = 1; k <= m; ++k) pow_t[k] = pow_t[k - 1] * (Rational(1) + t);

  Rational total = 0;
  for_each_colouring(n, colours, [&](const std::vector<int>& colouring) {
    int mono = 0;
    for (const auto& [a, b] : g.edges())
      if (colouring[a] == colouring[b]) ++mono;
    Rational term = pow_t[mono];
    for (int v = 0; v < n; ++v) term *= xs[colouring[v]];
    total += term;
  });
  return total;
}

SparsePolynomial tutte_symmetric_from_u(const Multigraph& g, int truncation,
                                        const Guards& guards) {
  if (truncation < 0) throw PreconditionError("truncation must be >= 0");
  int n = g.vertex_count();
  // x_tau y^i -> p_tau(x) t^(n - k(tau)) (t + 1)^i, all polynomial.
  SparsePolynomial one_plus_t =
      SparsePolynomial::from_variable(var::ts()) + SparsePolynomial::constant(1);
  std::map<int, SparsePolynomial> psum;   // r -> p_r(x_1..x_N)
  std::map<int, SparsePolynomial> tpow;   // i -> (t+1)^i
  auto p_r = [&](int r) -> const SparsePolynomial& {
    auto it = psum.find(r);
    if (it == psum.end()) {
      SparsePolynomial p;
      for (int a = 1; a <= truncation; ++a) p.add_term(Monomial({{var::x(a), r}}), 1);
      it = psum.emplace(r, std::move(p)).first;
    }
    return it->second;
  };
  auto t1 = [&](int i) -> const SparsePolynomial& {
    auto it = tpow.find(i);
    if (it == tpow.end()) it = tpow.emplace(i, power(one_plus_t, i)).first;
    return it->second;
  };

  SparsePolynomial out;
  const SparsePolynomial u = u_poly(g, guards);
  for (const auto& [mono, coeff] : u.terms()) {
    SparsePolynomial term = SparsePolynomial::constant(coeff);
    int parts = 0;
    for (const auto& [v, e] : mono.factors()) {
      if (v.family == Family::x) {
        parts += e;
        term *= power(p_r(v.i), e);
      } else if (v.family == Family::y) {
        term *= t1(e);
      } else {
        throw PreconditionError("unexpected variable in u polynomial");
      }
    }
    term *= power(SparsePolynomial::from_variable(var::ts()), n - parts);
    out += term;
  }
  return out;
}

SparsePolynomial chromatic_symmetric_direct(const Multigraph& g, int truncation,
                                            const Guards& guards) {
  if (truncation < 0) throw PreconditionError("truncation must be >= 0");
  int n = g.vertex_count();
  check_colouring_guard(truncation, n, guards, "chromatic symmetric sum");
  SparsePolynomial out;
  std::vector<int> mult(truncation);
  for_each_colouring(n, truncation, [&](const std::vector<int>& colouring) {
    for (const auto& [a, b] : g.edges())
      if (colouring[a] == colouring[b]) return;
    std::fill(mult.begin(), mult.end(), 0);
    for (int v = 0; v < n; ++v) mult[colouring[v]] += 1;
    std::vector<Monomial::Factor> factors;
    for (int c = 0; c < truncation; ++c)
      if (mult[c] > 0) factors.emplace_back(var::x(c + 1), mult[c]);
    out.add_term(Monomial(std::move(factors)), 1);
  });
  return out;
}

SparsePolynomial chromatic_symmetric_from_u(const Multigraph& g, int truncation,
                                            const Guards& guards) {
  if (truncation < 0) throw PreconditionError("truncation must be >= 0");
  std::map<int, SparsePolynomial> psum;
  auto p_r = [&](int r) -> const SparsePolynomial& {
    auto it = psum.find(r);
    if (it == psum.end()) {
      SparsePolynomial p;
      for (int a = 1; a <= truncation; ++a) p.add_term(Monomial({{var::x(a), r}}), 1);
      it = psum.emplace(r, std::move(p)).first;
    }
    return it->second;
  };
  SparsePolynomial subbed = substitute(u_poly(g, guards), [&](const Variable& v) {
    if (v.family == Family::x) return -p_r(v.i);
    if (v.family == Family::y) return SparsePolynomial();
    throw PreconditionError("unexpected variable in u polynomial");
  });
  return g.vertex_count() % 2 == 0 ? subbed : -subbed;
}

namespace {

void require_loopless(const Multigraph& g, const char* what) {
  if (g.has_loops()) throw PreconditionError(std::string(what) + " requires a loopless graph");
}

}  // namespace

SparsePolynomial stability_direct(const Multigraph& g, const Guards& guards) {
  require_loopless(g, "stability");
  int n = g.vertex_count();
  check_subset_guard(n, guards, "stable set scan");
  // count stable sets by size
  std::vector<long long> by_size(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool stable = true;
    for (const auto& [a, b] : g.edges())
      if ((mask >> a & 1) && (mask >> b & 1)) {
        stable = false;
        break;
      }
    if (stable) by_size[std::popcount(mask)] += 1;
  }
  SparsePolynomial pvar = SparsePolynomial::from_variable(var::p());
  SparsePolynomial q = SparsePolynomial::constant(1) - pvar;
  SparsePolynomial out;
  for (int s = 0; s <= n; ++s) {
    if (by_size[s] == 0) continue;
    out += Integer(by_size[s]) * (power(pvar, s) * power(q, n - s));
  }
  return out;
}

SparsePolynomial stability_from_u(const Multigraph& g, const Guards& guards) {
  require_loopless(g, "stability");
  return substitute(u_poly(g, guards), [](const Variable& v) {
    if (v.family == Family::x) {
      if (v.i == 1) return SparsePolynomial::constant(1);
      // x_j -> -(-p)^j
      return SparsePolynomial::term(Monomial({{var::p(), v.i}}), v.i % 2 == 0 ? -1 : 1);
    }
    if (v.family == Family::y) return SparsePolynomial();
    throw PreconditionError("unexpected variable in u polynomial");
  });
}

SparsePolynomial two_polymatroid_direct(const Multigraph& g, const Guards& guards) {
  require_loopless(g, "2-polymatroid polynomial");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw PreconditionError("2-polymatroid polynomial requires no isolated vertices");
  int n = g.vertex_count();
  // f(A) = vertices touched by A; components with no edges are untouched.
  std::map<std::pair<int, int>, long long> counts;  // (n - f, 2|A| - f)
  for (const auto& [sig, count] : component_signature_counts(g, guards)) {
    int touched = 0, edges = 0;
    for (const auto& [c, e] : sig) {
      if (e > 0) touched += c;
      edges += e;
    }
    counts[{n - touched, 2 * edges - touched}] += count;
  }
  SparsePolynomial out;
  for (const auto& [key, count] : counts) {
    std::vector<Monomial::Factor> factors;
    if (key.first > 0) factors.emplace_back(var::u(), key.first);
    if (key.second > 0) factors.emplace_back(var::v(), key.second);
    out.add_term(Monomial(std::move(factors)), count);
  }
  return out;
}

SparsePolynomial two_polymatroid_from_u(const Multigraph& g, const Guards& guards) {
  require_loopless(g, "2-polymatroid polynomial");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw PreconditionError("2-polymatroid polynomial requires no isolated vertices");
  SparsePolynomial vsq1 = SparsePolynomial::term(Monomial({{var::v(), 2}}), 1) +
                          SparsePolynomial::constant(1);
  return substitute(u_poly(g, guards), [&](const Variable& w) {
    if (w.family == Family::x) {
      if (w.i == 1) return SparsePolynomial::from_variable(var::u());
      if (w.i == 2) return SparsePolynomial::constant(1);
      return SparsePolynomial::from_variable(var::v(), w.i - 2);
    }
    if (w.family == Family::y) return vsq1;
    throw PreconditionError("unexpected variable in u polynomial");
  });
}

SparsePolynomial v_function_recursive(const Multigraph& g) {
  int pivot = -1;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g.is_loop(e)) {
      pivot = e;
      break;
    }
  if (pivot == -1) {
    std::vector<Monomial::Factor> factors;
    for (int v = 0; v < g.vertex_count(); ++v) factors.emplace_back(var::yk(g.loop_count_at(v)), 1);
    return SparsePolynomial::term(Monomial(std::move(factors)), 1);
  }
  return v_function_recursive(g.delete_edge(pivot)) + v_function_recursive(g.contract_edge(pivot));
}

SparsePolynomial v_function_from_ubar(const Multigraph& g, const Guards& guards) {
  return substitute(ubar(g, guards), [](const Variable& v) {
    if (v.family != Family::z) throw PreconditionError("expected a polynomial in z only");
    // z[i,j] -> sum_k (-1)^(j-k) C(j,k) yk[k]
    SparsePolynomial out;
    for (int k = 0; k <= v.j; ++k) {
      Integer c = binomial(v.j, k);
      out.add_term(Monomial({{var::yk(k), 1}}), (v.j - k) % 2 == 0 ? c : -c);
    }
    return out;
  });
}

InvariantResult compute_invariant(std::string_view name, const Multigraph& g, int truncation,
                                  const Guards& guards) {
  int n = g.vertex_count();
  if (truncation < 0) truncation = n;
  if (name == "tutte") return {"tutte", tutte(g, guards), "subset-expansion"};
  if (name == "chromatic") return {"chromatic", chromatic(g, guards), "subset-expansion"};
  if (name == "u") return {"u", u_poly(g, guards), "subset-expansion"};
  if (name == "ubar") return {"ubar", ubar(g, guards), "subset-expansion"};
  if (name == "wbar") return {"wbar", wbar_expansion(g, guards), "subset-expansion"};
  if (name == "polychromate") return {"polychromate", polychromate(g, guards), "partition-expansion"};
  if (name == "ext-polychromate")
    return {"ext-polychromate", extended_polychromate(g, guards), "partition-expansion"};
  if (name == "chromatic-symmetric")
    return {"chromatic-symmetric", chromatic_symmetric_from_u(g, truncation, guards),
            "substitution-from-u"};
  if (name == "stability") return {"stability", stability_from_u(g, guards), "substitution-from-u"};
  if (name == "two-polymatroid")
    return {"two-polymatroid", two_polymatroid_direct(g, guards), "subset-expansion"};
  if (name == "v-function") return {"v-function", v_function_recursive(g), "recurrence"};
  throw PreconditionError("unknown invariant '" + std::string(name) + "'");
}

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "tutte",   "chromatic",       "u",        "ubar",          "wbar",
      "polychromate", "ext-polychromate", "ybar", "chromatic-symmetric", "stability",
      "two-polymatroid", "v-function"};
  return names;
}

}  // namespace gpoly
