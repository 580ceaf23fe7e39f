#pragma once

/* graph6 encoding of simple undirected graphs: a vertex-count header
 * (63 + n for n <= 62, or 126 followed by a 3-byte 18-bit count), then the
 * upper triangle of the adjacency matrix in column-major order packed into
 * 6-bit groups, each offset by 63.  An optional ">>graph6<<" prefix is
 * accepted on decode.
 */

#include <string>
#include <string_view>

#include "gpoly/multigraph.hpp"

namespace gpoly {

Multigraph graph6_decode(std::string_view line);
std::string graph6_encode(const Multigraph& g);  // requires a simple graph, n <= 62

}  // namespace gpoly
