#include "tperf/decision.hpp"

#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "tperf/canonical.hpp"
#include "tperf/graph6.hpp"

namespace tperf {

namespace {

std::optional<RatVector> clique_certificate(const Graph& g, const HPolytope& h) {
  const auto k4 = find_clique_of_size(g, 4);
  if (!k4) return std::nullopt;
  RatVector x(g.order());
  k4->for_each([&](int v) { x[v] = Rational(1, 3); });
  if (!is_vertex_of(h, x)) return std::nullopt;
  return x;
}

TPerfection decide(const Graph& g, const DecisionOptions& opts) {
  if (g.order() > opts.dim_cap) throw DimensionCapExceeded(g.order(), opts.dim_cap);
  const HPolytope h = build_tstab_hrep(g);
  if (opts.certificate_shortcuts) {
    if (auto x = clique_certificate(g, h)) return {false, std::move(x)};
  }
  const VertexList verts = enumerate_vertices(h, {opts.dim_cap, false});
  if (auto x = first_fractional_vertex(verts)) return {false, std::move(x)};
  return {true, std::nullopt};
}

}  // namespace

TPerfection is_t_perfect(const Graph& g, const DecisionOptions& opts) {
  return decide(g, opts);
}

bool can_t_contract(const Graph& g, int v) {
  const VertexSet nv = g.neighbors(v);
  return !nv.empty() && is_independent(g, nv);
}

Graph t_contract(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  const VertexSet nv = g.neighbors(v);
  if (nv.empty())
    throw std::invalid_argument("t-contraction needs a nonempty neighbourhood; delete the vertex instead");
  if (!is_independent(g, nv))
    throw std::invalid_argument("t-contraction needs an independent neighbourhood");

  const VertexSet keep = g.vertices() - nv;
  std::vector<int> index(g.order(), -1);
  int next = 0;
  keep.for_each([&](int w) { index[w] = next++; });
  Graph out(next);
  keep.for_each([&](int a) {
    if (a == v) return;
    (g.neighbors(a) & keep).for_each([&](int b) {
      if (b != v && a < b) out.add_edge(index[a], index[b]);
    });
    if (!(g.neighbors(a) & nv).empty()) out.add_edge(index[a], index[v]);
  });
  return out;
}

std::vector<Graph> one_step_t_minors(const Graph& g) {
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  auto add = [&](Graph h) {
    if (seen.insert(canonical_form(h)).second) out.push_back(std::move(h));
  };
  if (g.order() > 1)
    for (int v = 0; v < g.order(); ++v) add(delete_vertex(g, v));
  for (int v = 0; v < g.order(); ++v)
    if (can_t_contract(g, v)) add(t_contract(g, v));
  return out;
}

bool is_minimally_t_imperfect(const Graph& g, const DecisionOptions& opts) {
  Classifier c(opts);
  return c.minimally_t_imperfect(g);
}

bool is_core(const Graph& g, const DecisionOptions& opts) {
  Classifier c(opts);
  return c.core(g);
}

// ---------------------------------------------------------------------------

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["graph6"] = graph6;
  j["canonical"] = canonical;
  j["n"] = n;
  j["t_perfect"] = t_perfect;
  j["witness"] = witness ? nlohmann::json(witness->to_strings()) : nlohmann::json(nullptr);
  j["minimally_t_imperfect"] =
      minimally_t_imperfect ? nlohmann::json(*minimally_t_imperfect) : nlohmann::json(nullptr);
  j["core"] = core ? nlohmann::json(*core) : nlohmann::json(nullptr);
  return j;
}

std::string Verdict::to_text() const {
  auto opt = [](const std::optional<bool>& b) -> std::string {
    return b ? (*b ? "yes" : "no") : "-";
  };
  std::ostringstream os;
  os << "graph6      " << graph6 << "\n"
     << "canonical   " << canonical << "\n"
     << "order       " << n << "\n"
     << "t-perfect   " << (t_perfect ? "yes" : "no") << "\n";
  if (witness) os << "witness     " << witness->to_string() << "\n";
  os << "minimal     " << opt(minimally_t_imperfect) << "\n"
     << "core        " << opt(core) << "\n";
  return os.str();
}

struct Classifier::Impl {
  struct Slot {
    std::once_flag tp_once, min_once, core_once;
    TPerfection tp;  // canonical vertex order
    bool minimal = false;
    bool core = false;
  };

  std::shared_mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<Slot>> slots;
  std::atomic<std::size_t> runs{0};

  std::shared_ptr<Slot> slot(const std::string& form) {
    {
      std::shared_lock lock(mutex);
      if (auto it = slots.find(form); it != slots.end()) return it->second;
    }
    std::unique_lock lock(mutex);
    auto& s = slots[form];
    if (!s) s = std::make_shared<Slot>();
    return s;
  }
};

Classifier::Classifier(DecisionOptions opts)
    : opts_(opts), impl_(std::make_unique<Impl>()) {}
Classifier::~Classifier() = default;

std::size_t Classifier::polytope_runs() const { return impl_->runs.load(); }

std::size_t Classifier::cached_forms() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->slots.size();
}

TPerfection Classifier::t_perfect(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  auto s = impl_->slot(lab.form);
  std::call_once(s->tp_once, [&] {
    s->tp = decide(lab.graph, opts_);
    ++impl_->runs;
  });
  TPerfection out{s->tp.t_perfect, std::nullopt};
  if (s->tp.witness) {
    RatVector x(g.order());
    for (int v = 0; v < g.order(); ++v) x[v] = (*s->tp.witness)[lab.perm[v]];
    out.witness = std::move(x);
  }
  return out;
}

bool Classifier::minimally_t_imperfect(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  auto s = impl_->slot(lab.form);
  std::call_once(s->min_once, [&] {
    bool minimal = !t_perfect(lab.graph).t_perfect;
    if (minimal)
      for (const Graph& h : one_step_t_minors(lab.graph))
        if (!t_perfect(h).t_perfect) {
          minimal = false;
          break;
        }
    s->minimal = minimal;
  });
  return s->minimal;
}

bool Classifier::core(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  auto s = impl_->slot(lab.form);
  std::call_once(s->core_once, [&] {
    bool core = true;
    for (const Graph& side : {lab.graph, complement(lab.graph)}) {
      for (const Graph& h : one_step_t_minors(side))
        if (!t_perfect(h).t_perfect) {
          core = false;
          break;
        }
      if (!core) break;
    }
    s->core = core;
  });
  return s->core;
}

Verdict Classifier::classify(const Graph& g, Depth depth) {
  const CanonicalLabeling lab = canonical_labeling(g);
  const TPerfection tp = t_perfect(lab.graph);
  Verdict v;
  v.graph6 = graph6_encode(lab.graph);
  v.canonical = to_hex(lab.form);
  v.n = g.order();
  v.t_perfect = tp.t_perfect;
  v.witness = tp.witness;
  if (depth != Depth::kTPerfection) v.minimally_t_imperfect = minimally_t_imperfect(lab.graph);
  if (depth == Depth::kFull) v.core = core(lab.graph);
  return v;
}

// ---------------------------------------------------------------------------

int mod5(int i) { return ((i - 1) % 5 + 5) % 5 + 1; }

bool HoleLabeling::has(int i) const { return u[mod5(i)] >= 0; }
bool HoleLabeling::ringed(int i) const { return (ring_mask >> mod5(i)) & 1u; }

std::vector<int> HoleLabeling::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 5; ++i)
    if (u[i] >= 0) out.push_back(i);
  return out;
}

HoleLabelResult label_five_hole(const Graph& g, const Cycle& hole) {
  if (hole.size() != 5) throw std::invalid_argument("a 5-hole needs five vertices");
  VertexSet on;
  for (int v : hole) {
    if (v < 0 || v >= g.order() || on.contains(v))
      throw std::invalid_argument("hole vertices must be distinct and in range");
    on = on.with(v);
  }
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      const bool consecutive = b == a + 1 || (a == 0 && b == 4);
      if (g.has_edge(hole[a], hole[b]) != consecutive)
        throw std::invalid_argument("not an induced 5-cycle");
    }

  HoleLabeling lab;
  std::copy(hole.begin(), hole.end(), lab.cycle.begin());
  // position p (0-based) on the hole is v_{p+1}
  for (int w = 0; w < g.order(); ++w) {
    if (on.contains(w)) continue;
    unsigned mask = 0;
    for (int p = 0; p < 5; ++p)
      if (g.has_edge(w, hole[p])) mask |= 1u << p;
    const int count = std::popcount(mask);
    int name = -1;
    bool ring = false;
    for (int p = 0; p < 5; ++p) {
      const int i = p + 1;
      const unsigned pair = (1u << p) | (1u << ((p + 1) % 5));
      if (count == 2 && mask == pair) name = mod5(i + 3);
      if (count == 3 && mask == (pair | (1u << ((p + 3) % 5)))) {
        name = mod5(i + 3);
        ring = true;
      }
    }
    if (name < 0) {
      std::string clause =
          count == 2 ? "two hole neighbours that are not consecutive"
          : count == 3 ? "three hole neighbours including a consecutive triple"
                       : std::to_string(count) + " hole neighbours (need 2 or 3)";
      return {std::nullopt, HoleViolation{w, clause}};
    }
    if (lab.u[name] >= 0)
      return {std::nullopt,
              HoleViolation{w, "consecutive hole pair already has a common neighbour (u" +
                                   std::to_string(name) + ")"}};
    lab.u[name] = w;
    if (ring) lab.ring_mask |= 1u << name;
  }
  return {lab, std::nullopt};
}

bool check_observation(const Graph& g, const HoleLabeling& lab, int obs, int i) {
  if (obs < 1 || obs > 6) throw std::invalid_argument("observation must be 1..6");
  if (i < 1 || i > 5) throw std::invalid_argument("rotation must be 1..5");
  auto U = [&](int a, int b) {
    const int x = lab.u[mod5(a)], y = lab.u[mod5(b)];
    return x >= 0 && y >= 0 && g.has_edge(x, y);
  };
  auto R = [&](int a) { return lab.has(a) && lab.ringed(a); };
  auto implies = [](bool p, bool q) { return !p || q; };

  // s = +1 is the statement as written, s = -1 its mirror image.
  auto obs1 = [&](int s) {
    return implies(R(i) && U(i + s, i + 2 * s), U(i, i + s) || U(i, i + 2 * s));
  };
  auto obs2 = [&](int s) {
    return implies(U(i, i + s) && U(i, i + 3 * s), R(i) || U(i + s, i + 3 * s));
  };
  auto obs6 = [&](int s) {
    return implies(R(i + s) && !U(i + 1, i + 2) && !U(i + 2, i - 2) && !U(i - 1, i - 2),
                   !(U(i + 1, i - 2) && U(i + 2, i - 1) && U(i + 1, i - 1)));
  };
  switch (obs) {
    case 1: return obs1(1) && obs1(-1);
    case 2: return obs2(1) && obs2(-1);
    case 3:
      return implies(U(i - 2, i - 1) && U(i - 1, i + 1) && U(i + 1, i + 2) &&
                         (R(i - 1) || R(i + 1)),
                     U(i - 1, i + 2) || U(i - 2, i + 1) || U(i - 2, i + 2));
    case 4:
      return implies(U(i - 1, i + 1) && !R(i - 1) && !R(i + 1),
                     !U(i + 1, i + 2) && !U(i - 1, i - 2) &&
                         (!lab.has(i) || (U(i, i - 1) && U(i, i + 1))));
    case 5:
      return implies(!U(i, i + 1) && (U(i, i + 3) || U(i + 1, i + 3)), !(R(i) && R(i + 1)));
    default: return obs6(1) && obs6(-1);
  }
}

bool degree_bounded(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < 3 || g.degree(v) > 5) return false;
  return true;
}

bool degree_window_ok(const Graph& g, const HoleLabeling& lab) {
  const int n = g.order();
  for (int i = 1; i <= 5; ++i) {
    if (!lab.has(i)) continue;
    const int d = g.degree(lab.u[i]);
    if (!(2 < d && d < n - 3)) return false;
  }
  return true;
}

bool degree_window_ok(const Graph& g) {
  for (const auto& c : find_odd_holes(g)) {
    if (c.size() != 5) continue;
    VertexSet off = g.vertices();
    for (int v : c) off = off.without(v);
    bool ok = true;
    off.for_each([&](int u) {
      const int d = g.degree(u);
      ok = ok && 2 < d && d < g.order() - 3;
    });
    return ok;
  }
  throw std::invalid_argument("graph has no 5-hole");
}

}  // namespace tperf
