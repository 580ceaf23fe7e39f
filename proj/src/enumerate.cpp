#include "gpoly/enumerate.hpp"

#include <cstdint>

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

using EdgeSlot = std::pair<int, int>;

void multiset_rec(int n, const std::vector<EdgeSlot>& slots, std::size_t slot, int remaining,
                  std::vector<EdgeSlot>& edges, const std::function<void(const Multigraph&)>& fn) {
  if (slot == slots.size()) {
    fn(Multigraph(n, edges));
    return;
  }
  multiset_rec(n, slots, slot + 1, remaining, edges, fn);
  for (int copies = 1; copies <= remaining; ++copies) {
    edges.push_back(slots[slot]);
    multiset_rec(n, slots, slot + 1, remaining - copies, edges, fn);
  }
  edges.resize(edges.size() - remaining);
}

}  // namespace

void for_each_multigraph(int n, int max_edges, const std::function<void(const Multigraph&)>& fn) {
  if (n < 1) throw PreconditionError("for_each_multigraph needs n >= 1");
  if (max_edges < 0) throw PreconditionError("for_each_multigraph needs max_edges >= 0");
  std::vector<EdgeSlot> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) slots.emplace_back(u, v);
  std::vector<EdgeSlot> edges;
  multiset_rec(n, slots, 0, max_edges, edges, fn);
}

void for_each_connected_simple_graph(int n, const std::function<void(const Multigraph&)>& fn) {
  if (n < 1) throw PreconditionError("for_each_connected_simple_graph needs n >= 1");
  if (n > 20) throw PreconditionError("for_each_connected_simple_graph is limited to n <= 20");
  std::vector<EdgeSlot> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<EdgeSlot> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) edges.push_back(slots[s]);
    Multigraph g(n, std::move(edges));
    if (g.is_connected()) fn(g);
  }
}

void for_each_assignment(int slots, const std::vector<int>& choices,
                         const std::function<void(const std::vector<int>&)>& fn) {
  if (slots < 0) throw PreconditionError("for_each_assignment needs slots >= 0");
  if (choices.empty()) throw PreconditionError("for_each_assignment needs at least one choice");
  std::vector<int> picks(slots, 0);
  std::vector<int> values(slots, choices[0]);
  for (;;) {
    fn(values);
    int i = slots - 1;
    while (i >= 0 && picks[i] + 1 == static_cast<int>(choices.size())) {
      picks[i] = 0;
      values[i] = choices[0];
      --i;
    }
    if (i < 0) return;
    ++picks[i];
    values[i] = choices[picks[i]];
  }
}

}  // namespace gpoly
