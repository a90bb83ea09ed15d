#include "sturan/graph6.hpp"

#include <stdexcept>

namespace sturan {

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int group = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: character out of range");
  }

  std::size_t n = 0, pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw std::invalid_argument("graph6: unsupported header");
    }
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    if (n <= 62) throw std::invalid_argument("graph6: non-canonical long header");
    pos = 4;
  }
  if (n > kMaxVertices) throw std::length_error("graph6: graph too large");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups) throw std::invalid_argument("graph6: wrong body length");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = text[pos + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw std::invalid_argument("graph6: nonzero padding");
    }
  }
  return g;
}

}  // namespace sturan
