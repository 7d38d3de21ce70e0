#include "tperf/pattern.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "tperf/canonical.hpp"
#include "tperf/decision.hpp"
#include "tperf/graph6.hpp"

namespace tperf {

std::vector<int> PatternSpec::indices() const {
  std::vector<int> out;
  for (int j = 1; j <= 5; ++j)
    if (has(j)) out.push_back(j);
  return out;
}

bool PatternSpec::has_u_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(u_edges.begin(), u_edges.end(), std::make_pair(a, b));
}

bool PatternSpec::needs_explicit_form() const {
  int deg[6] = {};
  for (auto [a, b] : u_edges) ++deg[a], ++deg[b];
  for (int j = 1; j <= 5; ++j)
    if (deg[j] > 2) return true;
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PatternSpec parse() {
    skip_space();
    const bool paren = peek() == '(';
    if (paren) ++pos_;
    PatternSpec spec;
    if (peek() == 'U') {
      spec = parse_explicit();
    } else if (!(paren && peek() == ')')) {
      spec = parse_components();
    }
    if (paren) expect(')');
    skip_space();
    if (pos_ != s_.size()) throw ParseError("trailing characters after pattern", pos_);
    finish(spec);
    return spec;
  }

  // Parses a pattern prefix and returns the offset after it.
  std::size_t parse_prefix(PatternSpec& spec) {
    skip_space();
    if (peek() != '(') throw ParseError("pattern expressions start with '('", pos_);
    ++pos_;
    if (peek() == 'U') {
      spec = parse_explicit();
    } else if (peek() != ')') {
      spec = parse_components();
    }
    expect(')');
    finish(spec);
    return pos_;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int digit() {
    const char c = peek();
    if (c < '0' || c > '9') throw ParseError("expected an index 1..5", pos_);
    if (c < '1' || c > '5') throw ParseError("index out of range 1..5", pos_);
    ++pos_;
    return c - '0';
  }

  void add_edge(PatternSpec& spec, int a, int b, std::size_t at) {
    if (a == b) throw ParseError("loop on a u-index", at);
    auto e = std::minmax(a, b);
    if (std::find(spec.u_edges.begin(), spec.u_edges.end(), std::pair{e.first, e.second}) !=
        spec.u_edges.end())
      throw ParseError("repeated U-edge", at);
    spec.u_edges.emplace_back(e.first, e.second);
  }

  PatternSpec parse_components() {
    PatternSpec spec;
    for (;;) {
      const std::size_t start = pos_;
      std::vector<int> tokens;
      unsigned local = 0;
      while (peek() >= '0' && peek() <= '9') {
        const std::size_t at = pos_;
        const int j = digit();
        bool ring = false;
        if (peek() == '*') {
          ring = true;
          ++pos_;
        }
        const bool closing = !tokens.empty() && j == tokens.front() && tokens.size() >= 3;
        if ((local >> j) & 1u) {
          if (!closing) throw ParseError("index repeated inside a component", at);
        } else if (spec.has(j)) {
          throw ParseError("index used in two components", at);
        }
        if (closing && peek() >= '0' && peek() <= '9')
          throw ParseError("cycle must close at the end of its component", pos_);
        if (!tokens.empty()) add_edge(spec, tokens.back(), j, at);
        tokens.push_back(j);
        local |= 1u << j;
        if (ring) spec.ring_mask |= 1u << j;
      }
      if (tokens.empty()) throw ParseError("empty component", start);
      spec.index_mask |= local;
      if (peek() != '|') break;
      ++pos_;
    }
    return spec;
  }

  // U=1234;E=12,13,14;R=1   (E and R may be empty)
  PatternSpec parse_explicit() {
    PatternSpec spec;
    expect('U');
    expect('=');
    while (peek() >= '0' && peek() <= '9') {
      const std::size_t at = pos_;
      const int j = digit();
      if (spec.has(j)) throw ParseError("index repeated in U", at);
      spec.index_mask |= 1u << j;
    }
    expect(';');
    expect('E');
    expect('=');
    while (peek() >= '0' && peek() <= '9') {
      const std::size_t at = pos_;
      const int a = digit();
      const int b = digit();
      if (!spec.has(a) || !spec.has(b)) throw ParseError("edge on an index outside U", at);
      add_edge(spec, a, b, at);
      if (peek() != ',') break;
      ++pos_;
    }
    expect(';');
    expect('R');
    expect('=');
    while (peek() >= '0' && peek() <= '9') {
      const std::size_t at = pos_;
      const int j = digit();
      if (!spec.has(j)) throw ParseError("ring on an index outside U", at);
      spec.ring_mask |= 1u << j;
    }
    return spec;
  }

  static void finish(PatternSpec& spec) {
    std::sort(spec.u_edges.begin(), spec.u_edges.end());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PatternSpec parse_pattern(std::string_view text) { return Parser(text).parse(); }

int u_vertex(const PatternSpec& spec, int j) {
  if (j < 1 || j > 5 || !spec.has(j)) return -1;
  return 5 + std::popcount(spec.index_mask & ((1u << j) - 1u));
}

Graph realize_pattern(const PatternSpec& spec) {
  Graph g(5 + std::popcount(spec.index_mask));
  for (int p = 0; p < 5; ++p) g.add_edge(p, (p + 1) % 5);
  for (int j : spec.indices()) {
    const int u = u_vertex(spec, j);
    g.add_edge(u, v_vertex(mod5(j + 2)));
    g.add_edge(u, v_vertex(mod5(j + 3)));
    if (spec.ringed(j)) g.add_edge(u, v_vertex(j));
  }
  for (auto [a, b] : spec.u_edges) g.add_edge(u_vertex(spec, a), u_vertex(spec, b));
  return g;
}

std::string format_pattern(const PatternSpec& spec) {
  auto token = [&](int j) { return std::to_string(j) + (spec.ringed(j) ? "*" : ""); };
  if (spec.needs_explicit_form()) {
    std::string out = "(U=";
    for (int j : spec.indices()) out += std::to_string(j);
    out += ";E=";
    for (std::size_t k = 0; k < spec.u_edges.size(); ++k)
      out += (k ? "," : "") + std::to_string(spec.u_edges[k].first) +
             std::to_string(spec.u_edges[k].second);
    out += ";R=";
    for (int j : spec.indices())
      if (spec.ringed(j)) out += std::to_string(j);
    return out + ")";
  }

  std::vector<int> nbrs[6];
  for (auto [a, b] : spec.u_edges) nbrs[a].push_back(b), nbrs[b].push_back(a);
  for (auto& v : nbrs) std::sort(v.begin(), v.end());

  unsigned done = 0;
  std::vector<std::string> parts;
  for (int j : spec.indices()) {
    if ((done >> j) & 1u) continue;
    // collect the component of j
    unsigned comp = 1u << j;
    for (bool grew = true; grew;) {
      grew = false;
      for (int a = 1; a <= 5; ++a)
        if ((comp >> a) & 1u)
          for (int b : nbrs[a])
            if (!((comp >> b) & 1u)) comp |= 1u << b, grew = true;
    }
    done |= comp;
    std::vector<int> ends;
    for (int a = 1; a <= 5; ++a)
      if (((comp >> a) & 1u) && nbrs[a].size() < 2) ends.push_back(a);
    const bool cycle = ends.empty();
    int start = cycle ? std::countr_zero(comp) : ends.front();
    std::vector<int> walk{start};
    int prev = -1, cur = start;
    for (;;) {
      int next = -1;
      for (int b : nbrs[cur])
        if (b != prev && std::find(walk.begin(), walk.end(), b) == walk.end()) {
          next = b;
          break;
        }
      if (next < 0) break;
      walk.push_back(next);
      prev = cur;
      cur = next;
    }
    std::string text;
    for (int a : walk) text += token(a);
    if (cycle) text += std::to_string(start);
    parts.push_back(text);
  }
  std::string out = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "|" : "") + parts[k];
  return out + ")";
}

Graph realize_expression(std::string_view text) {
  PatternSpec spec;
  Parser parser(text);
  std::size_t pos = parser.parse_prefix(spec);
  const Graph g = realize_pattern(spec);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size()) return g;
  if (text[pos] != '-') throw ParseError("expected '-' before deleted vertices", pos);
  ++pos;
  VertexSet del;
  auto vertex = [&]() {
    if (pos >= text.size()) throw ParseError("expected u<j> or v<j>", pos);
    const char kind = text[pos];
    if (kind != 'u' && kind != 'v') throw ParseError("expected u<j> or v<j>", pos);
    ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '5')
      throw ParseError("index out of range 1..5", pos);
    const int j = text[pos] - '0';
    const int v = kind == 'u' ? u_vertex(spec, j) : v_vertex(j);
    if (v < 0) throw ParseError("u" + std::to_string(j) + " is not in the pattern", pos);
    if (del.contains(v)) throw ParseError("vertex deleted twice", pos);
    del = del.with(v);
    ++pos;
  };
  if (pos < text.size() && text[pos] == '{') {
    ++pos;
    for (;;) {
      vertex();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != '}') throw ParseError("expected '}'", pos);
    ++pos;
  } else {
    vertex();
  }
  if (pos != text.size()) throw ParseError("trailing characters after deletion", pos);
  return delete_vertices(g, del);
}

std::size_t pattern_space_size(unsigned index_mask) {
  const int k = std::popcount(index_mask & 0x3eu);
  return std::size_t{1} << (k * (k - 1) / 2 + k);
}

void enumerate_pattern_graphs(unsigned index_mask, bool dedupe,
                              const std::function<void(const PatternSpec&, const Graph&)>& visit) {
  index_mask &= 0x3eu;
  std::vector<int> idx;
  for (int j = 1; j <= 5; ++j)
    if ((index_mask >> j) & 1u) idx.push_back(j);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) pairs.emplace_back(idx[a], idx[b]);
  const std::size_t bits = pairs.size() + idx.size();
  std::unordered_set<std::string> seen;
  for (std::size_t m = 0; m < (std::size_t{1} << bits); ++m) {
    PatternSpec spec;
    spec.index_mask = index_mask;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if ((m >> p) & 1u) spec.u_edges.push_back(pairs[p]);
    for (std::size_t r = 0; r < idx.size(); ++r)
      if ((m >> (pairs.size() + r)) & 1u) spec.ring_mask |= 1u << idx[r];
    const Graph g = realize_pattern(spec);
    if (dedupe && !seen.insert(canonical_form(g)).second) continue;
    visit(spec, g);
  }
}

}  // namespace tperf
