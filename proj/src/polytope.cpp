#include "tperf/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace tperf {

DimensionCapExceeded::DimensionCapExceeded(int dim, int cap)
    : PolytopeError("polytope dimension " + std::to_string(dim) + " exceeds the cap of " +
                    std::to_string(cap) + "; raise the cap (--dim-cap / --allow-large) "
                    "if the run is really intended"),
      dim_(dim),
      cap_(cap) {}

std::string RowTag::to_string() const {
  auto list = [&] {
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      s += (i ? "," : "") + std::to_string(vertices[i]);
    return s;
  };
  switch (kind) {
    case RowKind::kNonNeg: return "nonneg(" + list() + ")";
    case RowKind::kUpper: return "upper(" + list() + ")";
    case RowKind::kEdge: return "edge(" + list() + ")";
    case RowKind::kOddCycle: return "oddcycle(" + list() + ")";
    case RowKind::kClique: return "clique(" + list() + ")";
    case RowKind::kOther: break;
  }
  return "other";
}

LinearInequality LinearInequality::make(std::vector<std::int64_t> coeffs,
                                        std::int64_t rhs, RowTag tag) {
  std::int64_t g = std::abs(rhs);
  for (auto c : coeffs) g = std::gcd(g, std::abs(c));
  if (g > 1) {
    for (auto& c : coeffs) c /= g;
    rhs /= g;
  }
  return {std::move(coeffs), rhs, std::move(tag)};
}

VertexList::VertexList(std::vector<RatVector> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool VertexList::contains(const RatVector& x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

LinearInequality nonneg_row(int n, int v) {
  std::vector<std::int64_t> a(n, 0);
  a[v] = -1;
  return LinearInequality::make(std::move(a), 0, {RowKind::kNonNeg, {v}});
}

LinearInequality upper_row(int n, int v) {
  std::vector<std::int64_t> a(n, 0);
  a[v] = 1;
  return LinearInequality::make(std::move(a), 1, {RowKind::kUpper, {v}});
}

LinearInequality edge_row(int n, int u, int v) {
  std::vector<std::int64_t> a(n, 0);
  a[u] = a[v] = 1;
  return LinearInequality::make(std::move(a), 1, {RowKind::kEdge, {u, v}});
}

LinearInequality odd_cycle_row(int n, const Cycle& cycle) {
  std::vector<std::int64_t> a(n, 0);
  for (int v : cycle) a[v] = 1;
  const auto len = static_cast<std::int64_t>(cycle.size());
  return LinearInequality::make(std::move(a), (len - 1) / 2, {RowKind::kOddCycle, cycle});
}

LinearInequality clique_row(int n, VertexSet clique) {
  std::vector<std::int64_t> a(n, 0);
  clique.for_each([&](int v) { a[v] = 1; });
  return LinearInequality::make(std::move(a), 1, {RowKind::kClique, clique.to_vector()});
}

HPolytope build_tstab_hrep(const Graph& g) {
  const int n = g.order();
  HPolytope h{n, {}};
  for (int v = 0; v < n; ++v) h.rows.push_back(nonneg_row(n, v));
  for (int v = 0; v < n; ++v) h.rows.push_back(upper_row(n, v));
  for (auto [u, v] : g.edges()) h.rows.push_back(edge_row(n, u, v));
  for (const auto& c : enumerate_induced_odd_cycles(g)) h.rows.push_back(odd_cycle_row(n, c));
  return h;
}

namespace {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline bool is_one(std::int64_t a) { return a == 1; }
inline int sign_of(std::int64_t a) { return (a > 0) - (a < 0); }
inline mpz_class to_mpz(std::int64_t a) { return mpz_class(static_cast<long>(a)); }

inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline bool is_one(const mpz_class& a) { return a == 1; }
inline int sign_of(const mpz_class& a) { return sgn(a); }
inline const mpz_class& to_mpz(const mpz_class& a) { return a; }

struct SparseRow {
  std::vector<std::pair<int, std::int64_t>> terms;
  std::int64_t rhs;
};

// Homogenised double description. Each vertex x is stored as an integer ray
// (r0, r1..rn) with x = r/r0, r0 > 0 and gcd 1. Tight sets are bitsets over
// the rows inserted so far.
template <typename Int>
class DoubleDescription {
 public:
  DoubleDescription(const HPolytope& h, std::vector<int> box_lower,
                    std::vector<int> box_upper)
      : h_(h), n_(h.dim), words_((h.rows.size() + 63) / 64),
        box_lower_(std::move(box_lower)), box_upper_(std::move(box_upper)) {
    for (const auto& row : h.rows) {
      SparseRow s{{}, row.rhs};
      for (int j = 0; j < n_; ++j)
        if (row.coeffs[j] != 0) s.terms.emplace_back(j, row.coeffs[j]);
      rows_.push_back(std::move(s));
    }
  }

  std::vector<std::vector<Int>> run() {
    seed_box();
    std::vector<bool> is_box(h_.rows.size(), false);
    for (int v = 0; v < n_; ++v) is_box[box_lower_[v]] = is_box[box_upper_[v]] = true;
    for (std::size_t k = 0; k < h_.rows.size(); ++k)
      if (!is_box[k]) insert(k);
    std::vector<std::vector<Int>> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i)
      out.emplace_back(coords_.begin() + i * (n_ + 1), coords_.begin() + (i + 1) * (n_ + 1));
    return out;
  }

 private:
  std::size_t stride() const { return static_cast<std::size_t>(n_) + 1; }
  Int* ray(std::size_t i) { return coords_.data() + i * stride(); }
  std::uint64_t* tight(std::size_t i) { return tight_.data() + i * words_; }

  void seed_box() {
    count_ = std::size_t{1} << n_;
    coords_.assign(count_ * stride(), Int(0));
    tight_.assign(count_ * words_, 0);
    for (std::size_t m = 0; m < count_; ++m) {
      Int* r = ray(m);
      std::uint64_t* t = tight(m);
      r[0] = Int(1);
      for (int v = 0; v < n_; ++v) {
        const bool one = (m >> v) & 1;
        if (one) r[v + 1] = Int(1);
        const std::size_t row = one ? box_upper_[v] : box_lower_[v];
        t[row / 64] |= std::uint64_t{1} << (row % 64);
      }
    }
  }

  Int slack(std::size_t i, std::size_t k) {
    const Int* r = ray(i);
    Int s = mul(Int(rows_[k].rhs), r[0]);
    for (auto [j, a] : rows_[k].terms) s = add(s, mul(Int(-a), r[j + 1]));
    return s;
  }

  void insert(std::size_t k) {
    std::vector<Int> slacks(count_);
    std::vector<std::size_t> pos, zero, neg;
    for (std::size_t i = 0; i < count_; ++i) {
      slacks[i] = slack(i, k);
      const int sg = sign_of(slacks[i]);
      (sg > 0 ? pos : sg < 0 ? neg : zero).push_back(i);
    }
    const std::uint64_t kbit = std::uint64_t{1} << (k % 64);
    if (neg.empty()) {
      for (auto i : zero) tight(i)[k / 64] |= kbit;
      return;
    }

    // Per-row incidence over current vertices for the adjacency test.
    const std::size_t vwords = (count_ + 63) / 64;
    std::vector<std::uint64_t> incidence(h_.rows.size() * vwords, 0);
    for (std::size_t i = 0; i < count_; ++i) {
      const std::uint64_t* t = tight(i);
      for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t b = t[w]; b; b &= b - 1) {
          const std::size_t row = w * 64 + std::countr_zero(b);
          incidence[row * vwords + i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }

    std::vector<Int> new_coords;
    std::vector<std::uint64_t> new_tight;
    std::vector<std::uint64_t> common(words_);
    std::vector<std::uint64_t> witness(vwords);
    for (auto p : pos) {
      for (auto q : neg) {
        int shared = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          common[w] = tight(p)[w] & tight(q)[w];
          shared += std::popcount(common[w]);
        }
        if (shared < n_ - 1) continue;
        if (!adjacent(common, incidence, vwords, witness)) continue;
        // New vertex on the segment p-q where row k is tight.
        const Int sp = slacks[p];
        const Int sq = Int(0) - slacks[q];
        const Int* rp = ray(p);
        const Int* rq = ray(q);
        const std::size_t base = new_coords.size();
        Int g(0);
        for (std::size_t j = 0; j < stride(); ++j) {
          Int v = add(mul(sp, rq[j]), mul(sq, rp[j]));
          g = gcd_of(g, v < 0 ? Int(0) - v : v);
          new_coords.push_back(std::move(v));
        }
        if (!is_one(g) && g != 0)
          for (std::size_t j = 0; j < stride(); ++j) new_coords[base + j] /= g;
        for (std::size_t w = 0; w < words_; ++w) new_tight.push_back(common[w]);
        new_tight[new_tight.size() - words_ + k / 64] |= kbit;
      }
    }

    std::vector<Int> coords;
    std::vector<std::uint64_t> tights;
    coords.reserve((pos.size() + zero.size()) * stride() + new_coords.size());
    auto keep = [&](std::size_t i, bool on_row) {
      for (std::size_t j = 0; j < stride(); ++j) coords.push_back(std::move(ray(i)[j]));
      for (std::size_t w = 0; w < words_; ++w) tights.push_back(tight(i)[w]);
      if (on_row) tights[tights.size() - words_ + k / 64] |= kbit;
    };
    // Preserve original relative order so the run is deterministic.
    std::size_t a = 0, b = 0;
    while (a < pos.size() || b < zero.size()) {
      if (b == zero.size() || (a < pos.size() && pos[a] < zero[b])) keep(pos[a++], false);
      else keep(zero[b++], true);
    }
    for (auto& c : new_coords) coords.push_back(std::move(c));
    tights.insert(tights.end(), new_tight.begin(), new_tight.end());
    coords_ = std::move(coords);
    tight_ = std::move(tights);
    count_ = coords_.size() / stride();
  }

  // p and q are adjacent iff no third current vertex is tight on every row
  // they share.
  bool adjacent(const std::vector<std::uint64_t>& common,
                const std::vector<std::uint64_t>& incidence, std::size_t vwords,
                std::vector<std::uint64_t>& acc) const {
    bool first = true;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t b = common[w]; b; b &= b - 1) {
        const std::size_t row = w * 64 + std::countr_zero(b);
        const std::uint64_t* inc = incidence.data() + row * vwords;
        int total = 0;
        for (std::size_t x = 0; x < vwords; ++x) {
          acc[x] = first ? inc[x] : (acc[x] & inc[x]);
          total += std::popcount(acc[x]);
        }
        first = false;
        if (total <= 2) return true;
      }
    }
    int total = 0;
    for (std::size_t x = 0; x < vwords; ++x) total += std::popcount(acc[x]);
    return total <= 2;
  }

  const HPolytope& h_;
  int n_;
  std::size_t words_;
  std::vector<int> box_lower_, box_upper_;
  std::vector<SparseRow> rows_;
  std::size_t count_ = 0;
  std::vector<Int> coords_;
  std::vector<std::uint64_t> tight_;
};

template <typename Int>
std::vector<RatVector> to_vertices(const std::vector<std::vector<Int>>& rays) {
  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (const auto& r : rays) {
    RatVector x(r.size() - 1);
    const mpz_class den = to_mpz(r[0]);
    for (std::size_t j = 1; j < r.size(); ++j) x[j - 1] = Rational(to_mpz(r[j]), den);
    out.push_back(std::move(x));
  }
  return out;
}

Rational evaluate(const LinearInequality& row, const RatVector& x) {
  Rational s;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (row.coeffs[j] != 0) s += Rational(static_cast<long>(row.coeffs[j])) * x[j];
  return s;
}

}  // namespace

VertexList enumerate_vertices(const HPolytope& h, const EnumerationOptions& opts) {
  if (h.dim < 1) throw PolytopeError("polytope dimension must be positive");
  if (h.dim > opts.dim_cap) throw DimensionCapExceeded(h.dim, opts.dim_cap);
  for (const auto& row : h.rows)
    if (static_cast<int>(row.coeffs.size()) != h.dim)
      throw PolytopeError("row length does not match polytope dimension");

  std::vector<int> lower(h.dim, -1), upper(h.dim, -1);
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    const auto& row = h.rows[k];
    int nz = -1, count = 0;
    for (int j = 0; j < h.dim; ++j)
      if (row.coeffs[j] != 0) nz = j, ++count;
    if (count != 1) continue;
    if (row.coeffs[nz] == -1 && row.rhs == 0 && lower[nz] < 0) lower[nz] = static_cast<int>(k);
    if (row.coeffs[nz] == 1 && row.rhs == 1 && upper[nz] < 0) upper[nz] = static_cast<int>(k);
  }
  for (int v = 0; v < h.dim; ++v)
    if (lower[v] < 0 || upper[v] < 0)
      throw PolytopeError("unbounded input: box rows 0 <= x_" + std::to_string(v) +
                          " <= 1 missing");

  std::vector<RatVector> verts;
  try {
    verts = to_vertices(DoubleDescription<std::int64_t>(h, lower, upper).run());
  } catch (const Overflow&) {
    verts = to_vertices(DoubleDescription<mpz_class>(h, lower, upper).run());
  }
  VertexList out(std::move(verts));
  if (opts.verify_vertices) {
    for (const auto& x : out.vertices())
      if (!is_vertex_of(h, x))
        throw PolytopeError("internal: enumerated point is not a vertex: " + x.to_string());
  }
  return out;
}

bool contains_point(const HPolytope& h, const RatVector& x) {
  if (static_cast<int>(x.size()) != h.dim) throw PolytopeError("dimension mismatch");
  for (const auto& row : h.rows)
    if (evaluate(row, x) > Rational(static_cast<long>(row.rhs))) return false;
  return true;
}

std::vector<std::size_t> tight_rows(const HPolytope& h, const RatVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < h.rows.size(); ++k)
    if (evaluate(h.rows[k], x) == Rational(static_cast<long>(h.rows[k].rhs))) out.push_back(k);
  return out;
}

int row_rank(const HPolytope& h, const std::vector<std::size_t>& rows) {
  std::vector<std::vector<Rational>> m;
  for (auto k : rows) {
    std::vector<Rational> r;
    for (auto c : h.rows[k].coeffs) r.emplace_back(static_cast<long>(c));
    m.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < h.dim && rank < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][col].sign() != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col].sign() == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (int c = col; c < h.dim; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

bool is_vertex_of(const HPolytope& h, const RatVector& x) {
  return contains_point(h, x) && row_rank(h, tight_rows(h, x)) == h.dim;
}

bool is_integral_point(const RatVector& x) {
  for (const auto& c : x)
    if (!(c == Rational(0) || c == Rational(1))) return false;
  return true;
}

std::optional<RatVector> first_fractional_vertex(const VertexList& v) {
  for (const auto& x : v.vertices())
    if (!is_integral_point(x)) return x;
  return std::nullopt;
}

bool all_vertices_integral(const VertexList& v) { return !first_fractional_vertex(v); }

VertexList stab_vertices(const Graph& g, int dim_cap) {
  if (g.order() > dim_cap) throw DimensionCapExceeded(g.order(), dim_cap);
  std::vector<RatVector> out;
  for (VertexSet s : enumerate_independent_sets(g)) {
    RatVector x(g.order());
    for (int v = 0; v < g.order(); ++v) x[v] = Rational(s.contains(v) ? 1 : 0);
    out.push_back(std::move(x));
  }
  return VertexList(std::move(out));
}

bool polytopes_equal(const VertexList& a, const VertexList& b) { return a == b; }

std::string dump_vertices(const VertexList& v) {
  std::vector<std::string> lines;
  for (const auto& x : v.vertices()) lines.push_back(x.to_string());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace tperf
