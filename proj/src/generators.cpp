#include "tperf/generators.hpp"

#include <sstream>
#include <stdexcept>
#include <string_view>

namespace tperf {

namespace detail {
extern const std::string_view kCatalogJson;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph cycle(int l) {
  require(l >= 3 && l <= kMaxVertices, "cycle needs 3 <= l <= 31");
  Graph g(l);
  for (int i = 0; i < l; ++i) g.add_edge(i, (i + 1) % l);
  return g;
}

Graph path(int l) {
  require(l >= 1 && l <= kMaxVertices, "path needs 1 <= l <= 31");
  Graph g(l);
  for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int l) {
  require(l >= 1 && l <= kMaxVertices, "complete graph needs 1 <= l <= 31");
  Graph g(l);
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int l) {
  require(l >= 1 && l <= kMaxVertices, "empty graph needs 1 <= l <= 31");
  return Graph(l);
}

Graph wheel(int l) {
  require(l >= 3 && l < kMaxVertices, "wheel needs 3 <= l <= 30");
  Graph g(l + 1);
  for (int i = 0; i < l; ++i) {
    g.add_edge(i, (i + 1) % l);
    g.add_edge(i, l);
  }
  return g;
}

Graph cycle_power(int l, int k) {
  require(l >= 3 && l <= kMaxVertices, "cycle power needs 3 <= l <= 31");
  require(k >= 1, "cycle power needs k >= 1");
  Graph g(l);
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const int d = std::min(j - i, l - (j - i));
      if (d <= k) g.add_edge(i, j);
    }
  return g;
}

Graph mobius_ladder(int two_k) {
  require(two_k >= 4 && two_k % 2 == 0, "Moebius ladder needs an even size >= 4");
  require(2 * two_k <= kMaxVertices, "Moebius ladder too large");
  return complement(cycle_power(2 * two_k, two_k - 2));
}

const std::string& catalog_text() {
  static const std::string text(detail::kCatalogJson);
  return text;
}

const nlohmann::json& catalog() {
  static const nlohmann::json data = nlohmann::json::parse(catalog_text());
  return data;
}

std::uint64_t catalog_checksum() {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : catalog_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::vector<AnchoredPattern> anchored(const nlohmann::json& list) {
  std::vector<AnchoredPattern> out;
  for (const auto& e : list) out.push_back({e.at("anchor"), e.at("pattern")});
  return out;
}

std::vector<CliqueDeletionRow> deletion_rows(const nlohmann::json& list) {
  std::vector<CliqueDeletionRow> out;
  for (const auto& e : list) {
    CliqueDeletionRow row;
    row.graph = e.at("graph");
    row.clique = e.at("clique").get<std::vector<std::string>>();
    for (const auto& d : e.at("deletions")) {
      const std::string s = d;
      row.deletions.push_back(s == "*" ? DeletionClaim{true, {}} : DeletionClaim{false, s});
    }
    out.push_back(std::move(row));
  }
  return out;
}

GridCell parse_cell(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  GridCell c;
  c.text = text;
  if (kind == "deg") {
    std::string u;
    in >> u >> c.degree;
    c.kind = GridCell::Kind::kDegree;
    c.u = u.at(1) - '0';
  } else if (kind == "obs") {
    c.kind = GridCell::Kind::kObservation;
    in >> c.obs >> c.i;
  } else if (kind == "graph" || kind == "cograph") {
    c.kind = kind == "graph" ? GridCell::Kind::kGraph : GridCell::Kind::kComplementGraph;
    in >> c.graph;
  } else {
    throw std::runtime_error("catalog: unknown grid cell '" + text + "'");
  }
  return c;
}

}  // namespace

std::vector<AnchoredPattern> partitionable_patterns() {
  return anchored(catalog().at("partitionable"));
}

std::vector<AnchoredPattern> self_complementary_patterns() {
  return anchored(catalog().at("self_complementary"));
}

std::vector<std::string> t_perfect_patterns() {
  return catalog().at("t_perfect_list").get<std::vector<std::string>>();
}

std::vector<CliqueDeletionRow> clique_deletion_rows() {
  return deletion_rows(catalog().at("clique_deletion_rows"));
}

std::vector<CliqueDeletionRow> imperfect_pair_rows() {
  return deletion_rows(catalog().at("imperfect_pair").at("rows"));
}

OrderEightGrid order_eight_grid() {
  const auto& j = catalog().at("order8_grid");
  OrderEightGrid grid;
  for (const auto& col : j.at("columns")) {
    std::vector<std::pair<int, int>> edges;
    for (const std::string e : col) edges.emplace_back(e.at(0) - '0', e.at(1) - '0');
    grid.columns.push_back(std::move(edges));
  }
  grid.column_names = j.at("column_names").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    GridRow row;
    for (char c : r.at("rings").get<std::string>()) row.ring_mask |= 1u << (c - '0');
    for (const std::string cell : r.at("cells")) row.cells.push_back(parse_cell(cell));
    grid.rows.push_back(std::move(row));
  }
  grid.named_t_perfect = j.at("named_t_perfect").get<std::vector<std::string>>();
  for (const auto& p : j.at("isomorphisms")) grid.isomorphisms.emplace_back(p.at(0), p.at(1));
  return grid;
}

}  // namespace tperf
