#include "tperf/graph6.hpp"

namespace tperf {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  if (text.front() == '>') throw ParseError("graph6 header '>>graph6<<' not supported", 0);
  const int head = static_cast<unsigned char>(text[0]);
  if (head < 63 || head > 126) throw ParseError("invalid graph6 order byte", 0);
  if (head == 126) throw ParseError("graph6 order above 62 not supported", 0);
  const int n = head - 63;
  if (n < 1 || n > kMaxVertices)
    throw ParseError("graph order " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxVertices),
                     0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != 1 + body)
    throw ParseError("graph6 length " + std::to_string(text.size()) +
                         ", expected " + std::to_string(1 + body),
                     std::min(text.size(), 1 + body));
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t pos = 1; pos < text.size(); ++pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", pos);
    const int v = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (v >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("nonzero graph6 padding", pos);
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: find (i, j) with index k.
      int j = 1;
      std::size_t start = 0;
      while (start + j <= k) start += j++;
      g.add_edge(static_cast<int>(k - start), j);
    }
  }
  return g;
}

}  // namespace tperf
