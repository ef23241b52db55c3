#include "mf/graph6.hpp"

#include <vector>

namespace mf {

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw Graph6Error("graph6: character outside 63..126");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw Graph6Error("graph6: malformed size header");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
    if (n < 63) throw Graph6Error("graph6: non-minimal size header");
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw Graph6Error("graph6: more than 64 vertices");

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (pairs + 5) / 6;
  if (text.size() - pos != chars) throw Graph6Error("graph6: wrong payload length");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int ch = text[pos + bit / 6] - 63;
      if ((ch >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (chars > 0) {
    const int pad = static_cast<int>(chars * 6 - pairs);
    const int last = text[pos + chars - 1] - 63;
    if ((last & ((1 << pad) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace mf
