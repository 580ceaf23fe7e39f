#pragma once

/* Vertex-weighted multigraphs with labelled vertices and an ordered edge
 * list.  Loops and parallel edges are allowed.  Vertices are 0-based
 * internally; the text format is 1-based.
 *
 * Text format ("edge list"):
 *     n m
 *     u v          (m lines, 1 <= u, v <= n; u == v is a loop)
 *     weights w1 ... wn      (optional trailing line, wi >= 1)
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpoly/partitions.hpp"

namespace gpoly {

struct ComponentInfo {
  int vertices = 0;
  int edges = 0;
  long long weight = 0;
};

struct ComponentSummary {
  std::vector<ComponentInfo> components;  // ordered by smallest contained vertex
  int count() const { return static_cast<int>(components.size()); }
};

class Multigraph {
 public:
  Multigraph() = default;  // the empty graph
  Multigraph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> weights = {});

  static Multigraph parse_edge_list(std::string_view text);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int e) const;
  bool is_loop(int e) const;
  bool has_loops() const;
  int loop_count_at(int v) const;
  int degree(int v) const;  // loops count twice

  const std::vector<int>& weights() const { return weights_; }
  int weight(int v) const;
  long long total_weight() const;
  bool unit_weights() const;
  Multigraph with_weights(std::vector<int> weights) const;

  bool is_simple() const;
  bool is_connected() const;

  // Edge subsets are sorted lists of distinct 0-based edge indices.
  Multigraph spanning_subgraph(const std::vector<int>& edge_set) const;
  Multigraph delete_edge(int e) const;
  // Merges the endpoints of a non-loop edge into min(u, v), drops the edge,
  // compacts vertex indices, and adds the endpoint weights.
  Multigraph contract_edge(int e) const;

  ComponentSummary components() const;
  ComponentSummary components(const std::vector<int>& edge_set) const;
  int rank(const std::vector<int>& edge_set) const;    // n - k(G|A)
  int rank() const;

  // Per-component (vertex count, edge count) of the spanning subgraph G|A,
  // as a canonical integer pair partition of (n, |A|).
  IntegerPairPartition component_signature(const std::vector<int>& edge_set) const;

  std::string to_edge_list() const;  // canonical text form, 1-based

  bool operator==(const Multigraph&) const = default;

 private:
  void check_edge_index(int e) const;
  std::vector<int> checked_subset(const std::vector<int>& edge_set) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> weights_;
};

}  // namespace gpoly
