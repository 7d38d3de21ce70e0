#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tperf/graph.hpp"
#include "tperf/rational.hpp"

namespace tperf {

class PolytopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a polytope dimension exceeds the configured cap.
class DimensionCapExceeded : public PolytopeError {
 public:
  DimensionCapExceeded(int dim, int cap);
  int dim() const { return dim_; }
  int cap() const { return cap_; }

 private:
  int dim_, cap_;
};

enum class RowKind { kNonNeg, kUpper, kEdge, kOddCycle, kClique, kOther };

struct RowTag {
  RowKind kind = RowKind::kOther;
  std::vector<int> vertices;

  std::string to_string() const;
  friend bool operator==(const RowTag&, const RowTag&) = default;
};

/// a.x <= b with integer data, scaled so that gcd(a, b) = 1.
struct LinearInequality {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
  RowTag tag;

  static LinearInequality make(std::vector<std::int64_t> coeffs, std::int64_t rhs,
                               RowTag tag = {});

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

struct HPolytope {
  int dim = 0;
  std::vector<LinearInequality> rows;
};

/// Deduplicated vertex list, sorted by exact coordinates.
class VertexList {
 public:
  VertexList() = default;
  explicit VertexList(std::vector<RatVector> vertices);

  const std::vector<RatVector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(const RatVector& x) const;

  friend bool operator==(const VertexList&, const VertexList&) = default;

 private:
  std::vector<RatVector> vertices_;
};

struct EnumerationOptions {
  int dim_cap = 20;
  /// Re-check every output vertex: feasible and tight rows of full rank.
  bool verify_vertices = false;
};

LinearInequality nonneg_row(int n, int v);
LinearInequality upper_row(int n, int v);
LinearInequality edge_row(int n, int u, int v);
LinearInequality odd_cycle_row(int n, const Cycle& cycle);
LinearInequality clique_row(int n, VertexSet clique);

/// Rows in order: x_v >= 0, x_v <= 1 (v ascending), edges (lex), then one
/// row per induced odd cycle (length, then lex).
HPolytope build_tstab_hrep(const Graph& g);

/// Exact vertex enumeration by incremental double description seeded with the
/// 0/1 box. Throws PolytopeError when box rows are missing and
/// DimensionCapExceeded above `opts.dim_cap`.
VertexList enumerate_vertices(const HPolytope& h, const EnumerationOptions& opts = {});

bool contains_point(const HPolytope& h, const RatVector& x);
/// Indices of rows with a.x = b.
std::vector<std::size_t> tight_rows(const HPolytope& h, const RatVector& x);
/// Rank of the coefficient matrix restricted to `rows`, over the rationals.
int row_rank(const HPolytope& h, const std::vector<std::size_t>& rows);
/// Feasible and the tight rows have rank dim.
bool is_vertex_of(const HPolytope& h, const RatVector& x);

/// Every coordinate is 0 or 1.
bool is_integral_point(const RatVector& x);
std::optional<RatVector> first_fractional_vertex(const VertexList& v);
bool all_vertices_integral(const VertexList& v);

/// Characteristic vectors of all independent sets of g.
VertexList stab_vertices(const Graph& g, int dim_cap = 20);
bool polytopes_equal(const VertexList& a, const VertexList& b);

/// One vertex per line, "num/den" coordinates separated by spaces, lines in
/// lexicographic order.
std::string dump_vertices(const VertexList& v);

}  // namespace tperf
