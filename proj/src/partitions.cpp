#include "gpoly/partitions.hpp"

#include <algorithm>

#include "gpoly/errors.hpp"
#include "gpoly/multigraph.hpp"

namespace gpoly {

namespace {

void partitions_rec(int remaining, int max_part, IntegerPartition& cur,
                    std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void pair_partitions_rec(int a_rem, int b_rem, std::pair<int, int> bound,
                         IntegerPairPartition& cur, std::vector<IntegerPairPartition>& out) {
  if (a_rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int c = std::min(a_rem, bound.first); c >= 1; --c) {
    int d_top = c == bound.first ? std::min(b_rem, bound.second) : b_rem;
    for (int d = d_top; d >= 0; --d) {
      cur.emplace_back(c, d);
      pair_partitions_rec(a_rem - c, b_rem - d, {c, d}, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<IntegerPartition> integer_partitions(int n) {
  if (n < 0) throw PreconditionError("integer_partitions: n must be >= 0");
  std::vector<IntegerPartition> out;
  IntegerPartition cur;
  partitions_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

std::vector<IntegerPairPartition> integer_pair_partitions(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("integer_pair_partitions: negative input");
  std::vector<IntegerPairPartition> out;
  IntegerPairPartition cur;
  pair_partitions_rec(a, b, {a, b}, cur, out);
  return out;
}

bool is_integer_pair_partition_of(const IntegerPairPartition& pairs, int a, int b) {
  long long suma = 0, sumb = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first < 1 || pairs[i].second < 0) return false;
    if (i > 0 && pairs[i - 1] < pairs[i]) return false;  // must be non-increasing
    suma += pairs[i].first;
    sumb += pairs[i].second;
  }
  return suma == a && sumb <= b;
}

IntegerPairPartition canonical_pair_partition(IntegerPairPartition pairs) {
  for (const auto& [a, b] : pairs)
    if (a < 1 || b < 0) throw PreconditionError("pair partition entries must have a >= 1, b >= 0");
  std::sort(pairs.begin(), pairs.end(), std::greater<>());
  return pairs;
}

std::string pair_partition_to_string(const IntegerPairPartition& pairs) {
  std::string s = "(";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  return s + ")";
}

SetPartitionGenerator::SetPartitionGenerator(int k) : k_(k) {
  if (k < 0) throw PreconditionError("set partitions: k must be >= 0");
  codes_.assign(k_, 0);
  prefix_max_.assign(k_, 0);
  block_count_ = k_ == 0 ? 0 : 1;
}

VertexPartition SetPartitionGenerator::blocks() const {
  VertexPartition out(block_count_);
  for (int v = 0; v < k_; ++v) out[codes_[v]].push_back(v);
  return out;
}

bool SetPartitionGenerator::advance() {
  // Lexicographic successor of the restricted growth string.
  for (int i = k_ - 1; i >= 1; --i) {
    if (codes_[i] <= prefix_max_[i - 1]) {
      ++codes_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], codes_[i]);
      for (int j = i + 1; j < k_; ++j) {
        codes_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      block_count_ = prefix_max_[k_ - 1] + 1;
      return true;
    }
  }
  return false;
}

void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& f) {
  SetPartitionGenerator gen(k);
  do {
    f(gen.codes(), gen.block_count());
  } while (gen.advance());
}

IntegerPartition partition_type(const VertexPartition& pi) {
  IntegerPartition type;
  type.reserve(pi.size());
  for (const auto& block : pi) type.push_back(static_cast<int>(block.size()));
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

IntegerPairPartition pair_type_of_vertex_partition(const Multigraph& g, const VertexPartition& pi) {
  int n = g.vertex_count();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < pi.size(); ++b) {
    if (pi[b].empty()) throw PreconditionError("vertex partition has an empty block");
    for (int v : pi[b]) {
      if (v < 0 || v >= n) throw PreconditionError("vertex partition element out of range");
      if (block_of[v] != -1) throw PreconditionError("vertex partition blocks overlap");
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of[v] == -1) throw PreconditionError("vertex partition does not cover V(G)");

  std::vector<int> inner(pi.size(), 0);
  for (const auto& [a, b] : g.edges())
    if (block_of[a] == block_of[b]) ++inner[block_of[a]];

  IntegerPairPartition type;
  type.reserve(pi.size());
  for (std::size_t b = 0; b < pi.size(); ++b)
    type.emplace_back(static_cast<int>(pi[b].size()), inner[b]);
  return canonical_pair_partition(std::move(type));
}

namespace {

IntegerPartition merged_type(const IntegerPartition& tau, const std::vector<int>& codes,
                             int block_count) {
  IntegerPartition sums(block_count, 0);
  for (std::size_t i = 0; i < tau.size(); ++i) sums[codes[i]] += tau[i];
  std::sort(sums.begin(), sums.end(), std::greater<>());
  return sums;
}

IntegerPartition checked_type(IntegerPartition tau) {
  for (int part : tau)
    if (part < 1) throw PreconditionError("partition parts must be >= 1");
  std::sort(tau.begin(), tau.end(), std::greater<>());
  return tau;
}

}  // namespace

Integer coarsening_count(const IntegerPartition& tau, const IntegerPartition& tau_prime) {
  IntegerPartition a = checked_type(tau), b = checked_type(tau_prime);
  long long total_a = 0, total_b = 0;
  for (int part : a) total_a += part;
  for (int part : b) total_b += part;
  if (total_a != total_b) throw PreconditionError("coarsening_count: partitions of different totals");
  Integer count = 0;
  for_each_set_partition(static_cast<int>(a.size()), [&](const std::vector<int>& codes, int blocks) {
    if (merged_type(a, codes, blocks) == b) ++count;
  });
  return count;
}

std::vector<std::pair<IntegerPartition, Integer>> coarsening_row(const IntegerPartition& tau) {
  IntegerPartition a = checked_type(tau);
  std::map<IntegerPartition, Integer> row;
  for_each_set_partition(static_cast<int>(a.size()), [&](const std::vector<int>& codes, int blocks) {
    row[merged_type(a, codes, blocks)] += 1;
  });
  return {row.begin(), row.end()};
}

}  // namespace gpoly
