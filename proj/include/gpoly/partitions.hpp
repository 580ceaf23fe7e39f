#pragma once

/* Integer partitions, integer pair partitions, set partitions (as a
 * restricted-growth-string generator), and partition coarsening counts.
 *
 * Conventions:
 *   - IntegerPartition: parts in non-increasing order.
 *   - IntegerPairPartition: pairs (a_i, b_i) in lexicographically decreasing
 *     order; a_i >= 1, b_i >= 0.  "Partitions (a, b)" when sum a_i = a and
 *     sum b_i <= b.
 *   - VertexPartition: disjoint non-empty blocks covering {0, ..., k-1},
 *     each block sorted, blocks ordered by smallest element.
 */

#include <functional>
#include <utility>
#include <vector>

#include "gpoly/polyring.hpp"

namespace gpoly {

class Multigraph;

using IntegerPartition = std::vector<int>;
using IntegerPairPartition = std::vector<std::pair<int, int>>;
using VertexPartition = std::vector<std::vector<int>>;

// All partitions of n in reverse lexicographic order ([n] first, [1,...,1] last).
std::vector<IntegerPartition> integer_partitions(int n);

// All integer pair partitions of (a, b), largest-first within each key and
// ordered with larger leading pairs first across keys.
std::vector<IntegerPairPartition> integer_pair_partitions(int a, int b);

bool is_integer_pair_partition_of(const IntegerPairPartition& pairs, int a, int b);
IntegerPairPartition canonical_pair_partition(IntegerPairPartition pairs);
std::string pair_partition_to_string(const IntegerPairPartition& pairs);

// Set partitions of {0, ..., k-1} enumerated via restricted growth strings in
// lexicographic order (single block first).  k = 0 yields one empty partition.
class SetPartitionGenerator {
 public:
  explicit SetPartitionGenerator(int k);

  // codes()[v] is the block index of element v; block indices are first-use
  // numbered, so codes() is a restricted growth string.
  const std::vector<int>& codes() const { return codes_; }
  int block_count() const { return block_count_; }
  VertexPartition blocks() const;

  bool advance();  // false once all partitions have been produced

 private:
  std::vector<int> codes_;
  std::vector<int> prefix_max_;
  int k_;
  int block_count_;
};

// f(codes, block_count) for every set partition of {0, ..., k-1}.
void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& f);

// Sorted block sizes of a vertex partition.
IntegerPartition partition_type(const VertexPartition& pi);

// Per-block (size, number of graph edges with both endpoints inside the
// block), as a canonical integer pair partition.  pi must partition V(G).
IntegerPairPartition pair_type_of_vertex_partition(const Multigraph& g, const VertexPartition& pi);

// Number of partitions of type tau_prime obtained by merging blocks of a
// fixed set partition of type tau.  Independent of the representative.
Integer coarsening_count(const IntegerPartition& tau, const IntegerPartition& tau_prime);

// The whole row at once: every coarsening type with its count.
std::vector<std::pair<IntegerPartition, Integer>> coarsening_row(const IntegerPartition& tau);

}  // namespace gpoly
