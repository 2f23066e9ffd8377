#include "surfcolor/decide.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

#include "decide_internal.hpp"
#include "surfcolor/homotopy.hpp"

namespace surfcolor {

namespace detail {

EmbeddedGraph rebuild(const EmbeddedGraph& g, const std::vector<bool>& keep,
                      const std::vector<std::vector<VertexId>>& cuffs) {
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices()) {
    if (keep[v]) verts.push_back(v);
  }
  std::vector<EdgeSpec> edges;
  std::vector<bool> kept_edge(g.edge_capacity(), false);
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    if (!keep[ed.u] || !keep[ed.v]) continue;
    kept_edge[e] = true;
    edges.push_back({e, ed.u, ed.v, ed.sign});
  }
  std::vector<std::vector<Dart>> rot(g.vertex_capacity());
  for (VertexId v : verts) {
    for (Dart d : g.rotation(v)) {
      if (kept_edge[dart_edge(d)]) rot[v].push_back(d);
    }
  }
  BuildOptions opts;
  opts.allow_multi_edges = !g.is_simple();
  return EmbeddedGraph::build(verts, edges, rot, cuffs, opts);
}

EmbeddedGraph local_copy(const EmbeddedGraph& g) {
  EmbeddedGraph h = g;
  h.vertex_origin.clear();
  h.edge_origin.clear();
  return h;
}

Walk cuff_walk(const EmbeddedGraph& g, int cuff) {
  return walk_from_vertices(g, g.cuffs()[cuff]);
}

std::vector<VertexId> boundary_order(const EmbeddedGraph& g) {
  std::vector<VertexId> out;
  std::vector<bool> seen(g.vertex_capacity(), false);
  for (const auto& c : g.cuffs()) {
    for (VertexId v : c) {
      if (!seen[v]) {
        seen[v] = true;
        out.push_back(v);
      }
    }
  }
  return out;
}

Rational mask_weight(const EmbeddedGraph& g, const std::vector<bool>& edges,
                     const WeightConfig& cfg) {
  return w_eta_total(subgraph_faces(g, edges), cfg);
}

NoCertificate make_certificate(const EmbeddedGraph& g,
                               const std::vector<bool>& vertices,
                               const std::vector<bool>& edges,
                               const Rational& bound, const WeightConfig& cfg) {
  NoCertificate c;
  c.vertices = vertices;
  c.edges = edges;
  c.weight = mask_weight(g, edges, cfg);
  c.bound = bound;
  return c;
}

NoCertificate certificate_of(const EmbeddedGraph& g, const EmbeddedGraph& h,
                             const Rational& bound, const WeightConfig& cfg) {
  std::vector<bool> vs(g.vertex_capacity(), false);
  std::vector<bool> es(g.edge_capacity(), false);
  for (VertexId v : h.vertices()) vs[v] = true;
  for (EdgeId e : h.edges()) es[e] = true;
  return make_certificate(g, vs, es, bound, cfg);
}

bool proper_on_edges(const EmbeddedGraph& g, const Precoloring& psi) {
  auto col = [&](VertexId v) {
    return v < static_cast<int>(psi.size()) ? psi[v] : 0;
  };
  for (EdgeId e : g.edges()) {
    const int a = col(g.edge(e).u), b = col(g.edge(e).v);
    if (a != 0 && a == b) return false;
  }
  return true;
}

ExtensionResult oracle(Ctx& ctx, const EmbeddedGraph& g,
                       const Precoloring& psi) {
  ++ctx.stats.oracle_calls;
  return extension_oracle(g, psi, ctx.cfg.oracle_cap);
}

std::vector<std::int8_t> canonical_key(const std::vector<std::int8_t>& c) {
  std::int8_t map[4] = {0, 0, 0, 0};
  std::int8_t next = 1;
  std::vector<std::int8_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (map[c[i]] == 0) map[c[i]] = next++;
    out[i] = map[c[i]];
  }
  return out;
}

BorderSearch::BorderSearch(int capacity,
                           std::vector<std::vector<VertexId>> borders,
                           std::vector<std::pair<VertexId, VertexId>> h_edges)
    : capacity_(capacity),
      borders_(std::move(borders)),
      h_edges_(std::move(h_edges)),
      shared_(capacity, false) {
  std::vector<int> uses(capacity, 0);
  for (const auto& b : borders_) {
    for (VertexId v : b) ++uses[v];
  }
  for (int v = 0; v < capacity; ++v) shared_[v] = uses[v] >= 2;
}

std::optional<Precoloring> BorderSearch::run(const Precoloring& psi,
                                             const Query& query,
                                             long long* steps) {
  query_ = &query;
  steps_ = steps;
  assign_ = psi;
  assign_.resize(capacity_, 0);
  bool empty = true;
  for (int c : assign_) empty &= c == 0;
  // Open shared vertices part by part, smallest remainder first.
  order_.clear();
  std::vector<bool> placed(capacity_, false);
  std::vector<bool> done(borders_.size(), false);
  for (;;) {
    int best = -1;
    std::size_t best_open = SIZE_MAX;
    for (std::size_t p = 0; p < borders_.size(); ++p) {
      if (done[p]) continue;
      std::size_t open = 0;
      for (VertexId v : borders_[p]) {
        open += (shared_[v] && assign_[v] == 0 && !placed[v]) ? 1 : 0;
      }
      if (open < best_open) {
        best_open = open;
        best = static_cast<int>(p);
      }
    }
    if (best < 0) break;
    done[best] = true;
    for (VertexId v : borders_[best]) {
      if (shared_[v] && assign_[v] == 0 && !placed[v]) {
        placed[v] = true;
        order_.push_back(v);
      }
    }
  }
  std::vector<int> pos(capacity_, -1);
  for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = static_cast<int>(i);
  ready_.assign(order_.size() + 1, {});
  for (std::size_t p = 0; p < borders_.size(); ++p) {
    int r = 0;
    for (VertexId v : borders_[p]) r = std::max(r, pos[v] + 1);
    ready_[r].push_back(static_cast<int>(p));
  }
  symmetric_ = empty;
  if (!search(0)) return std::nullopt;
  return assign_;
}

bool BorderSearch::search(std::size_t i) {
  for (int p : ready_[i]) {
    if (!(*query_)(p, assign_)) return false;
  }
  if (i == order_.size()) return true;
  if (steps_) ++*steps_;
  const VertexId v = order_[i];
  const int top = (symmetric_ && i == 0) ? 1 : 3;
  for (int c = 1; c <= top; ++c) {
    bool ok = true;
    for (auto [a, b] : h_edges_) {
      if ((a == v && assign_[b] == c) || (b == v && assign_[a] == c)) ok = false;
    }
    if (!ok) continue;
    assign_[v] = c;
    if (search(i + 1)) return true;
    assign_[v] = 0;
  }
  return false;
}

}  // namespace detail

using namespace detail;

ExtensionResult extension_oracle(const EmbeddedGraph& g, const Precoloring& psi,
                                 int cap) {
  ExtensionResult out;
  if (auto c = brute_force_3color(g, psi, cap)) {
    out.extends = true;
    out.witness = std::move(*c);
  }
  return out;
}

long long n_sigma_k(const SurfaceClass& surface, int k,
                    const WeightConfig& cfg) {
  Rational w = Rational(std::max(k, 0)) + cfg.eta * s_surface(surface);
  if (w < 0) w = 0;
  const Rational q = Rational(5) / s_face(5) * w;
  long long c = q.numerator() / q.denominator();
  if (c * q.denominator() < q.numerator()) ++c;
  return c + 8;
}

EmbeddedGraph certificate_graph(const EmbeddedGraph& g,
                                const NoCertificate& cert) {
  std::vector<VertexId> dead_v;
  std::vector<EdgeId> dead_e;
  for (VertexId v : g.vertices()) {
    if (!cert.vertices.at(v)) dead_v.push_back(v);
  }
  for (EdgeId e : g.edges()) {
    if (!cert.edges.at(e)) dead_e.push_back(e);
  }
  return g.without(dead_v, dead_e);
}

bool ExtensionTable::contains(const std::vector<std::int8_t>& c) const {
  return std::binary_search(colorings.begin(), colorings.end(), c);
}

ExtensionTable ExtensionTable::compose(const ExtensionTable& a,
                                       const ExtensionTable& b,
                                       const std::vector<VertexId>& keep) {
  std::vector<std::pair<int, int>> shared;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    for (std::size_t j = 0; j < b.vertices.size(); ++j) {
      if (a.vertices[i] == b.vertices[j]) {
        shared.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  // Each kept vertex: (0 = a, 1 = b, index).
  std::vector<std::pair<int, int>> src;
  for (VertexId v : keep) {
    auto ia = std::find(a.vertices.begin(), a.vertices.end(), v);
    if (ia != a.vertices.end()) {
      src.push_back({0, static_cast<int>(ia - a.vertices.begin())});
      continue;
    }
    auto ib = std::find(b.vertices.begin(), b.vertices.end(), v);
    if (ib == b.vertices.end()) {
      fail(ErrorCode::kPreconditionViolated, "kept vertex in neither table");
    }
    src.push_back({1, static_cast<int>(ib - b.vertices.begin())});
  }
  std::set<std::vector<std::int8_t>> rows;
  for (const auto& x : a.colorings) {
    for (const auto& y : b.colorings) {
      bool ok = true;
      for (auto [i, j] : shared) ok &= x[i] == y[j];
      if (!ok) continue;
      std::vector<std::int8_t> r;
      for (auto [t, i] : src) r.push_back(t == 0 ? x[i] : y[i]);
      rows.insert(std::move(r));
    }
  }
  return ExtensionTable{keep, {rows.begin(), rows.end()}};
}

namespace {

// Faces on the side of a cycle that holds `start`, flooding the dual.
std::vector<bool> side_of(const EmbeddedGraph& g, const Walk& c, int start) {
  std::vector<bool> cut(g.edge_capacity(), false);
  for (Dart d : c.darts) cut[dart_edge(d)] = true;
  std::vector<bool> in(g.all_faces().size(), false);
  std::vector<int> stack{start};
  in[start] = true;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (State s : g.all_faces()[f].walk) {
      const EdgeId e = dart_edge(state_dart(s));
      if (cut[e]) continue;
      for (int o : {1, -1}) {
        const int h = g.face_of_state(make_state(2 * e, o));
        if (!in[h]) {
          in[h] = true;
          stack.push_back(h);
        }
      }
    }
  }
  return in;
}

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<Walk> cylinder_decomposition(const EmbeddedGraph& g, int d) {
  if (!g.is_connected() || !g.surface_class().is_cylinder()) {
    fail(ErrorCode::kNotCylinder, "cylinder decomposition needs a cylinder");
  }
  const int h0 = g.cuff_face(0), h1 = g.cuff_face(1);
  for (int i = 0; i < 2; ++i) {
    if (static_cast<int>(g.cuffs()[i].size()) > d) {
      fail(ErrorCode::kPreconditionViolated, "cuff longer than d");
    }
  }
  struct Cand {
    Walk walk;
    std::vector<bool> side;
    int size;
  };
  std::vector<Cand> cands;
  for (Walk& c : simple_cycles(g, d)) {
    std::vector<bool> side = side_of(g, c, h0);
    if (side[h1]) continue;  // does not separate the cuffs
    const int n = static_cast<int>(std::count(side.begin(), side.end(), true));
    cands.push_back({std::move(c), std::move(side), n});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.size < b.size; });
  std::vector<Walk> out{cuff_walk(g, 0)};
  std::vector<bool> cur = side_of(g, out.back(), h0);
  int cur_size = 1;
  for (;;) {
    const Cand* next = nullptr;
    for (const Cand& c : cands) {
      if (c.size > cur_size && subset_of(cur, c.side)) {
        next = &c;
        break;
      }
    }
    if (!next) break;
    out.push_back(next->walk);
    cur = next->side;
    cur_size = next->size;
  }
  const int total = static_cast<int>(g.all_faces().size());
  if (cur_size != total - 1) {
    fail(ErrorCode::kInternal, "decomposition did not reach the far cuff");
  }
  return out;
}

}  // namespace surfcolor
