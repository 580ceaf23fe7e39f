#include "gpoly/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

// Plain union-find over vertex indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ < 0) throw PreconditionError("vertex count must be >= 0");
  for (const auto& [u, v] : edges_)
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw PreconditionError("edge endpoint out of range");
  if (weights_.empty()) weights_.assign(n_, 1);
  if (static_cast<int>(weights_.size()) != n_)
    throw PreconditionError("weight count does not match vertex count");
  for (int w : weights_)
    if (w < 1) throw PreconditionError("vertex weights must be >= 1");
}

Multigraph Multigraph::parse_edge_list(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  auto is_blank = [](const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
  };
  while (!lines.empty() && is_blank(lines.back())) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "expected header 'n m'");

  auto parse_ints = [](const std::string& s, int line, std::size_t count,
                       const char* what) -> std::vector<long long> {
    std::istringstream in(s);
    std::vector<long long> vals;
    long long v;
    while (in >> v) vals.push_back(v);
    std::string leftover;
    if (!in.eof()) in.clear();
    if (in >> leftover || vals.size() != count)
      throw ParseError(line, std::string("expected ") + what);
    return vals;
  };

  auto header = parse_ints(lines[0], 1, 2, "header 'n m'");
  long long n = header[0], m = header[1];
  if (n < 0 || m < 0) throw ParseError(1, "vertex and edge counts must be >= 0");
  if (n > 1'000'000 || m > 10'000'000) throw ParseError(1, "graph dimensions out of range");

  std::size_t line_count = lines.size();
  if (line_count < static_cast<std::size_t>(1 + m))
    throw ParseError(static_cast<int>(line_count) + 1,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(line_count - 1) + " edge lines");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    int line = static_cast<int>(e) + 2;
    if (is_blank(lines[e + 1])) throw ParseError(line, "expected edge 'u v'");
    auto uv = parse_ints(lines[e + 1], line, 2, "edge 'u v'");
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
      throw ParseError(line, "endpoint " +
                                 std::to_string(uv[0] < 1 || uv[0] > n ? uv[0] : uv[1]) +
                                 " out of range [1, " + std::to_string(n) + "]");
    edges.emplace_back(static_cast<int>(uv[0]) - 1, static_cast<int>(uv[1]) - 1);
  }

  std::vector<int> weights;
  std::size_t next = static_cast<std::size_t>(1 + m);
  if (next < line_count) {
    int line = static_cast<int>(next) + 1;
    std::istringstream in(lines[next]);
    std::string keyword;
    in >> keyword;
    if (keyword != "weights")
      throw ParseError(line, "unexpected line after edges (expected 'weights w1 ... wn')");
    long long w;
    while (in >> w) {
      if (w < 1 || w > 1'000'000'000) throw ParseError(line, "weights must be in [1, 1e9]");
      weights.push_back(static_cast<int>(w));
    }
    if (!in.eof()) throw ParseError(line, "malformed weight");
    if (weights.size() != static_cast<std::size_t>(n))
      throw ParseError(line, "expected " + std::to_string(n) + " weights, found " +
                                 std::to_string(weights.size()));
    ++next;
  }
  if (next < line_count)
    throw ParseError(static_cast<int>(next) + 1, "unexpected trailing line");

  return Multigraph(static_cast<int>(n), std::move(edges), std::move(weights));
}

std::pair<int, int> Multigraph::edge(int e) const {
  check_edge_index(e);
  return edges_[e];
}

bool Multigraph::is_loop(int e) const {
  check_edge_index(e);
  return edges_[e].first == edges_[e].second;
}

bool Multigraph::has_loops() const {
  for (const auto& [u, v] : edges_)
    if (u == v) return true;
  return false;
}

int Multigraph::loop_count_at(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  int count = 0;
  for (const auto& [a, b] : edges_)
    if (a == v && b == v) ++count;
  return count;
}

int Multigraph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  int d = 0;
  for (const auto& [a, b] : edges_) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

int Multigraph::weight(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  return weights_[v];
}

long long Multigraph::total_weight() const {
  long long sum = 0;
  for (int w : weights_) sum += w;
  return sum;
}

bool Multigraph::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

Multigraph Multigraph::with_weights(std::vector<int> weights) const {
  return Multigraph(n_, edges_, std::move(weights));
}

bool Multigraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges_) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return false;
  }
  return true;
}

bool Multigraph::is_connected() const {
  return n_ <= 1 || components().count() == 1;
}

std::vector<int> Multigraph::checked_subset(const std::vector<int>& edge_set) const {
  std::vector<int> sorted = edge_set;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    check_edge_index(sorted[i]);
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw PreconditionError("edge subset contains a repeated index");
  }
  return sorted;
}

void Multigraph::check_edge_index(int e) const {
  if (e < 0 || e >= edge_count()) throw std::out_of_range("edge index out of range");
}

Multigraph Multigraph::spanning_subgraph(const std::vector<int>& edge_set) const {
  std::vector<std::pair<int, int>> kept;
  for (int e : checked_subset(edge_set)) kept.push_back(edges_[e]);
  return Multigraph(n_, std::move(kept), weights_);
}

Multigraph Multigraph::delete_edge(int e) const {
  check_edge_index(e);
  std::vector<std::pair<int, int>> kept = edges_;
  kept.erase(kept.begin() + e);
  return Multigraph(n_, std::move(kept), weights_);
}

Multigraph Multigraph::contract_edge(int e) const {
  check_edge_index(e);
  auto [u, v] = edges_[e];
  if (u == v) throw PreconditionError("cannot contract a loop");
  int keep = std::min(u, v), drop = std::max(u, v);
  auto remap = [&](int w) { return w == drop ? keep : (w > drop ? w - 1 : w); };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size() - 1);
  for (int idx = 0; idx < edge_count(); ++idx) {
    if (idx == e) continue;
    edges.emplace_back(remap(edges_[idx].first), remap(edges_[idx].second));
  }
  std::vector<int> weights;
  weights.reserve(n_ - 1);
  for (int w = 0; w < n_; ++w) {
    if (w == drop) continue;
    weights.push_back(w == keep ? weights_[keep] + weights_[drop] : weights_[w]);
  }
  return Multigraph(n_ - 1, std::move(edges), std::move(weights));
}

ComponentSummary Multigraph::components() const {
  std::vector<int> all(edges_.size());
  std::iota(all.begin(), all.end(), 0);
  return components(all);
}

ComponentSummary Multigraph::components(const std::vector<int>& edge_set) const {
  std::vector<int> subset = checked_subset(edge_set);
  Dsu dsu(n_);
  for (int e : subset) dsu.unite(edges_[e].first, edges_[e].second);
  // Component order: smallest contained vertex.  With unite() keeping the
  // smaller root this is just ascending root order.
  std::vector<int> index_of_root(n_, -1);
  ComponentSummary out;
  for (int v = 0; v < n_; ++v) {
    int r = dsu.find(v);
    if (index_of_root[r] == -1) {
      index_of_root[r] = static_cast<int>(out.components.size());
      out.components.push_back({});
    }
    ComponentInfo& info = out.components[index_of_root[r]];
    info.vertices += 1;
    info.weight += weights_[v];
  }
  for (int e : subset) out.components[index_of_root[dsu.find(edges_[e].first)]].edges += 1;
  return out;
}

int Multigraph::rank(const std::vector<int>& edge_set) const {
  return n_ - components(edge_set).count();
}

int Multigraph::rank() const {
  return n_ - components().count();
}

IntegerPairPartition Multigraph::component_signature(const std::vector<int>& edge_set) const {
  ComponentSummary summary = components(edge_set);
  IntegerPairPartition sig;
  sig.reserve(summary.components.size());
  for (const ComponentInfo& c : summary.components) sig.emplace_back(c.vertices, c.edges);
  return canonical_pair_partition(std::move(sig));
}

std::string Multigraph::to_edge_list() const {
  std::string out = std::to_string(n_) + " " + std::to_string(edge_count()) + "\n";
  for (const auto& [u, v] : edges_)
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  if (!unit_weights()) {
    out += "weights";
    for (int w : weights_) out += " " + std::to_string(w);
    out += "\n";
  }
  return out;
}

}  // namespace gpoly
