#include "gpoly/graph6.hpp"

#include "gpoly/errors.hpp"

namespace gpoly {

Multigraph graph6_decode(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError(0, "empty graph6 string");

  for (char c : line)
    if (c < 63 || c > 126) throw ParseError(0, "invalid graph6 character");

  std::size_t pos = 0;
  long long n;
  if (line[0] == 126) {
    if (line.size() >= 2 && line[1] == 126)
      throw ParseError(0, "graph6 input beyond 258047 vertices is not supported");
    if (line.size() < 4) throw ParseError(0, "truncated graph6 vertex count");
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (line[k] - 63);
    pos = 4;
  } else {
    n = line[0] - 63;
    pos = 1;
  }

  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need)
    throw ParseError(0, "graph6 length mismatch (expected " + std::to_string(need) +
                            " data characters, found " + std::to_string(line.size() - pos) + ")");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int value = (line[pos + bit / 6] - 63) >> (5 - bit % 6) & 1;
      if (value) edges.emplace_back(row, col);
    }
  }
  // Padding bits must be zero.
  for (long long padding = bits; padding < static_cast<long long>(need) * 6; ++padding)
    if ((line[pos + padding / 6] - 63) >> (5 - padding % 6) & 1)
      throw ParseError(0, "graph6 padding bits must be zero");

  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string graph6_encode(const Multigraph& g) {
  if (!g.is_simple()) throw PreconditionError("graph6 encodes simple graphs only");
  int n = g.vertex_count();
  if (n > 62) throw PreconditionError("graph6 encoding limited to 62 vertices here");

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

  std::string out;
  out += static_cast<char>(63 + n);
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = acc << 1 | (adj[row][col] ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

}  // namespace gpoly
