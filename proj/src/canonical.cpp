#include "tperf/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <numeric>

namespace tperf {

namespace {

using Code = std::array<std::uint32_t, kMaxVertices>;

struct Partition {
  std::array<std::uint32_t, kMaxVertices> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits();
  }

  CanonicalLabeling run() {
    Partition root;
    root.cells[0] = VertexSet::range(n_).bits();
    root.count = 1;
    refine(root, {root.cells[0]});
    std::vector<int> path;
    search(root, path);

    CanonicalLabeling out;
    out.perm.assign(best_perm_.begin(), best_perm_.begin() + n_);
    out.graph = relabel(g_, out.perm);
    out.form = encode(best_code_);
    return out;
  }

 private:
  // Split every cell by the number of neighbours inside each splitter until
  // the partition is equitable. Fragments keep ascending count order.
  void refine(Partition& p, std::vector<std::uint32_t> queue) const {
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete(n_)) {
      const std::uint32_t splitter = queue[head++];
      for (int c = 0; c < p.count; ++c) {
        const std::uint32_t cell = p.cells[c];
        if (std::popcount(cell) == 1) continue;
        std::array<std::uint32_t, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices, hi = 0;
        for (std::uint32_t b = cell; b; b &= b - 1) {
          const int v = std::countr_zero(b);
          const int k = std::popcount(adj_[v] & splitter);
          by_count[k] |= 1u << v;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        std::array<std::uint32_t, kMaxVertices> frags{};
        int nf = 0;
        for (int k = lo; k <= hi; ++k)
          if (by_count[k]) frags[nf++] = by_count[k];
        // Shift the tail right to make room for the new fragments.
        for (int t = p.count - 1; t > c; --t) p.cells[t + nf - 1] = p.cells[t];
        for (int f = 0; f < nf; ++f) {
          p.cells[c + f] = frags[f];
          queue.push_back(frags[f]);
        }
        p.count += nf - 1;
        c += nf - 1;
      }
    }
  }

  int target_cell(const Partition& p) const {
    int best = -1, best_size = kMaxVertices + 1;
    for (int c = 0; c < p.count; ++c) {
      const int s = std::popcount(p.cells[c]);
      if (s > 1 && s < best_size) best = c, best_size = s;
    }
    return best;
  }

  void search(const Partition& p, std::vector<int>& path) {
    if (p.discrete(n_)) {
      leaf(p);
      return;
    }
    const int c = target_cell(p);
    const std::uint32_t cell = p.cells[c];
    std::uint32_t explored = 0;
    for (std::uint32_t b = cell; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (explored && in_explored_orbit(v, explored, path)) continue;
      explored |= 1u << v;
      Partition child = p;
      for (int t = child.count - 1; t > c; --t) child.cells[t + 1] = child.cells[t];
      child.cells[c] = 1u << v;
      child.cells[c + 1] = cell & ~(1u << v);
      ++child.count;
      refine(child, {1u << v});
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  // True when v shares an orbit with an explored sibling under the stored
  // automorphisms that fix the current path pointwise.
  bool in_explored_orbit(int v, std::uint32_t explored,
                         const std::vector<int>& path) const {
    std::array<int, kMaxVertices> parent;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int x : path) fixes = fixes && gamma[x] == x;
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const int root = find(v);
    for (std::uint32_t b = explored; b; b &= b - 1)
      if (find(std::countr_zero(b)) == root) return true;
    return false;
  }

  void leaf(const Partition& p) {
    std::array<int, kMaxVertices> perm{};
    for (int c = 0; c < n_; ++c) perm[std::countr_zero(p.cells[c])] = c;
    Code code{};
    for (int v = 0; v < n_; ++v) {
      const int i = perm[v];
      for (std::uint32_t b = adj_[v]; b; b &= b - 1) {
        const int j = perm[std::countr_zero(b)];
        if (j > i) code[i] |= 1u << (31 - j);
      }
    }
    if (!have_best_ || code < best_code_) {
      best_code_ = code;
      best_perm_ = perm;
      have_best_ = true;
    } else if (code == best_code_ && automorphisms_.size() < kMaxAutomorphisms) {
      std::array<int, kMaxVertices> inverse{};
      for (int v = 0; v < n_; ++v) inverse[best_perm_[v]] = v;
      std::array<int, kMaxVertices> gamma{};
      for (int v = 0; v < n_; ++v) gamma[v] = inverse[perm[v]];
      automorphisms_.push_back(gamma);
    }
  }

  std::string encode(const Code& code) const {
    std::string out(1, static_cast<char>(n_));
    int acc = 0, nbits = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        acc = (acc << 1) | ((code[i] >> (31 - j)) & 1u);
        if (++nbits == 8) {
          out.push_back(static_cast<char>(acc));
          acc = nbits = 0;
        }
      }
    }
    if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
  }

  static constexpr std::size_t kMaxAutomorphisms = 64;

  const Graph& g_;
  int n_;
  std::array<std::uint32_t, kMaxVertices> adj_{};
  bool have_best_ = false;
  Code best_code_{};
  std::array<int, kMaxVertices> best_perm_{};
  std::vector<std::array<int, kMaxVertices>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

std::string canonical_hex(const Graph& g) { return to_hex(canonical_form(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool is_self_complementary(const Graph& g) {
  return is_isomorphic(g, complement(g));
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("order out of range");
  std::map<std::string, Graph> level{{canonical_form(Graph(1)), Graph(1)}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [form, g] : level) {
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        Graph h(m);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        for (int v = 0; v < m - 1; ++v)
          if ((mask >> v) & 1u) h.add_edge(v, m - 1);
        CanonicalLabeling lab = canonical_labeling(h);
        next.try_emplace(std::move(lab.form), std::move(lab.graph));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [form, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace tperf
