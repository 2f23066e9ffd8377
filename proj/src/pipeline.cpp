#include <algorithm>
#include <array>
#include <climits>
#include <deque>
#include <functional>
#include <optional>
#include <map>
#include <memory>

#include "decide_internal.hpp"
#include "surfcolor/freedom.hpp"
#include "surfcolor/homotopy.hpp"

namespace surfcolor {

using namespace detail;

namespace {

using Key = std::vector<std::int8_t>;

class Solver {
 public:
  virtual ~Solver() = default;
  // psi colors some boundary vertices of the solver's graph.
  virtual bool extends(const Precoloring& psi) = 0;
};

enum class Kind { kDisk, kCylinder, kCore, kGeneral };

std::unique_ptr<Solver> make_solver(Kind kind, const EmbeddedGraph& g,
                                    Ctx& ctx);

int color_at(const Precoloring& psi, VertexId v) {
  return v < static_cast<int>(psi.size()) ? psi[v] : 0;
}

std::vector<bool> edges_of(const EmbeddedGraph& g, const Walk& w) {
  std::vector<bool> m = walk_edge_mask(g, w);
  m.resize(g.edge_capacity(), false);
  return m;
}

// B plus every edge whose ends psi colors alike.
NoCertificate improper_certificate(const EmbeddedGraph& g,
                                   const Precoloring& psi, const Rational& bound,
                                   const WeightConfig& cfg) {
  std::vector<bool> vs(g.vertex_capacity(), false);
  std::vector<bool> es = g.boundary_edge_mask();
  es.resize(g.edge_capacity(), false);
  for (VertexId v : g.boundary_vertices()) vs[v] = true;
  for (EdgeId e : g.edges()) {
    const int a = color_at(psi, g.edge(e).u);
    if (a != 0 && a == color_at(psi, g.edge(e).v)) {
      es[e] = vs[g.edge(e).u] = vs[g.edge(e).v] = true;
    }
  }
  return make_certificate(g, vs, es, bound, cfg);
}

EmbeddedGraph boundary_graph(const EmbeddedGraph& g) {
  std::vector<bool> keep(g.vertex_capacity(), false);
  for (VertexId v : g.boundary_vertices()) keep[v] = true;
  return rebuild(g, keep, g.cuffs());
}

// ---------------------------------------------------------------------------

class DiskSolver : public Solver {
 public:
  DiskSolver(const EmbeddedGraph& g, Ctx& ctx) : g_(local_copy(g)), ctx_(ctx) {
    if (g_.cuffs().size() != 1 || !g_.is_connected() ||
        !g_.surface_class().is_disk()) {
      fail(ErrorCode::kNotADisk, "expected a graph in the disk");
    }
    b_ = static_cast<int>(g_.cuffs()[0].size());
    r_ = b_ >= 6 ? s_face(b_ - 2) : Rational(0);
  }

  bool extends(const Precoloring& psi) override { return answer(psi).yes; }

  Answer answer(const Precoloring& psi) {
    ++ctx_.stats.disk_calls;
    if (!proper_on_edges(g_, psi)) {
      return {false, improper_certificate(g_, psi, r_, ctx_.cfg.weights)};
    }
    if (b_ >= 6) {
      prepare();
      if (lib_.total_weight <= r_) {
        if (oracle(ctx_, lib_.graph, psi).extends) return {true, {}};
        return {false, certificate_of(g_, lib_.graph, r_, ctx_.cfg.weights)};
      }
      ++ctx_.stats.free_set_yes;
    }
    // Every proper coloring of the boundary extends.
    if (!rim_) rim_ = std::make_unique<EmbeddedGraph>(boundary_graph(g_));
    if (oracle(ctx_, *rim_, psi).extends) return {true, {}};
    return {false, certificate_of(g_, *rim_, r_, ctx_.cfg.weights)};
  }

 private:
  void prepare() {
    if (prepared_) return;
    lib_ = liberate(g_, b_ - 2, r_);
    prepared_ = true;
  }

  EmbeddedGraph g_;
  Ctx& ctx_;
  int b_ = 0;
  Rational r_{0};
  bool prepared_ = false;
  LiberateResult lib_;
  std::unique_ptr<EmbeddedGraph> rim_;
};

// ---------------------------------------------------------------------------

class SpecialSolver : public Solver {
 public:
  SpecialSolver(const EmbeddedGraph& g, Ctx& ctx) : g_(local_copy(g)), ctx_(ctx) {
    if (!g_.is_connected()) {
      fail(ErrorCode::kPreconditionViolated, "special case needs 2-cell input");
    }
    sphere_ = g_.surface_class().is_sphere();
    children_.resize(g_.cuffs().size());
    std::vector<bool> b = g_.boundary_edge_mask();
    b.resize(g_.edge_capacity(), false);
    r_ = mask_weight(g_, b, ctx_.cfg.weights);
    order_ = boundary_order(g_);
  }

  bool extends(const Precoloring& psi) override { return answer(psi).yes; }

  Answer answer(const Precoloring& psi) {
    Key key;
    for (VertexId v : order_) key.push_back(static_cast<std::int8_t>(color_at(psi, v)));
    key = canonical_key(key);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Answer a = compute(psi);
    memo_.emplace(std::move(key), a);
    return a;
  }

 private:
  Answer compute(const Precoloring& psi) {
    ++ctx_.stats.special_calls;
    if (sphere_) return {true, {}};
    if (!proper_on_edges(g_, psi)) {
      return {false, improper_certificate(g_, psi, r_, ctx_.cfg.weights)};
    }
    for (std::size_t i = 0; i < g_.cuffs().size(); ++i) {
      Precoloring rest = psi;
      for (VertexId v : g_.cuffs()[i]) {
        if (v < static_cast<int>(rest.size())) rest[v] = 0;
      }
      Answer a = child(i).answer(rest);
      if (a.yes) continue;
      NoCertificate c = std::move(*a.certificate);
      c.vertices.resize(g_.vertex_capacity(), false);
      c.edges.resize(g_.edge_capacity(), false);
      for (VertexId v : g_.cuffs()[i]) c.vertices[v] = true;
      const auto cm = edges_of(g_, cuff_walk(g_, static_cast<int>(i)));
      for (EdgeId e = 0; e < g_.edge_capacity(); ++e) {
        if (cm[e]) c.edges[e] = true;
      }
      return {false, make_certificate(g_, c.vertices, c.edges, r_,
                                      ctx_.cfg.weights)};
    }
    if (!lib_) {
      const Rational fl(r_.numerator() / r_.denominator());
      const int k = static_cast<int>(std::max<long long>(4, fl.numerator()));
      lib_ = std::make_unique<LiberateResult>(liberate(g_, k, r_));
    }
    if (lib_->total_weight <= r_) {
      if (oracle(ctx_, lib_->graph, psi).extends) return {true, {}};
      return {false, certificate_of(g_, lib_->graph, r_, ctx_.cfg.weights)};
    }
    ++ctx_.stats.free_set_yes;
    return {true, {}};
  }

  SpecialSolver& child(std::size_t i) {
    if (!children_[i]) {
      auto cuffs = g_.cuffs();
      cuffs.erase(cuffs.begin() + static_cast<long>(i));
      std::vector<bool> all(g_.vertex_capacity(), true);
      children_[i] = std::make_unique<SpecialSolver>(rebuild(g_, all, cuffs), ctx_);
    }
    return *children_[i];
  }

  EmbeddedGraph g_;
  Ctx& ctx_;
  bool sphere_ = false;
  Rational r_{0};
  std::vector<VertexId> order_;
  std::vector<std::unique_ptr<SpecialSolver>> children_;
  std::unique_ptr<LiberateResult> lib_;
  std::map<Key, Answer> memo_;
};

// ---------------------------------------------------------------------------

// Inserts a vertex into edge (a, b); returns the new graph and its id.
std::pair<EmbeddedGraph, VertexId> subdivide(const EmbeddedGraph& g,
                                             VertexId a, VertexId b) {
  const EdgeId e = g.find_edge(a, b);
  const VertexId x = g.vertex_capacity();
  const EdgeId e2 = g.edge_capacity();
  const Edge& ed = g.edge(e);
  std::vector<VertexId> verts = g.vertices();
  verts.push_back(x);
  std::vector<EdgeSpec> edges;
  for (EdgeId f : g.edges()) {
    const Edge& fd = g.edge(f);
    if (f == e) {
      edges.push_back({e, ed.u, x, ed.sign});
    } else {
      edges.push_back({f, fd.u, fd.v, fd.sign});
    }
  }
  edges.push_back({e2, x, ed.v, 1});
  std::vector<std::vector<Dart>> rot(x + 1);
  for (VertexId v : g.vertices()) {
    for (Dart d : g.rotation(v)) rot[v].push_back(d == 2 * e + 1 ? 2 * e2 + 1 : d);
  }
  rot[x] = {2 * e + 1, 2 * e2};
  auto cuffs = g.cuffs();
  for (auto& c : cuffs) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
      const VertexId p = c[i], q = c[(i + 1) % n];
      if ((p == a && q == b) || (p == b && q == a)) {
        c.insert(c.begin() + i + 1, x);
        break;
      }
    }
  }
  BuildOptions opts;
  opts.allow_multi_edges = !g.is_simple();
  return {EmbeddedGraph::build(verts, edges, rot, cuffs, opts), x};
}

// Subdivides each cuff of length 4 and hands full boundary colorings to the
// special case.
class CoreSolver : public Solver {
 public:
  CoreSolver(const EmbeddedGraph& g, Ctx& ctx) : ctx_(ctx) {
    EmbeddedGraph h = local_copy(g);
    order_ = boundary_order(h);
    for (VertexId u : order_) {
      for (VertexId v : h.neighbors(u)) {
        if (h.is_boundary_vertex(v)) adj_.push_back({u, v});
      }
    }
    const auto cuffs = h.cuffs();
    for (const auto& c : cuffs) {
      if (c.size() != 4) continue;
      auto [next, x] = subdivide(h, c[0], c[1]);
      added_.push_back({x, c[0], c[1]});
      h = std::move(next);
    }
    capacity_ = static_cast<std::size_t>(h.vertex_capacity());
    special_ = std::make_unique<SpecialSolver>(h, ctx_);
  }

  bool extends(const Precoloring& psi) override {
    Precoloring full = psi;
    full.resize(capacity_, 0);
    int open = 0;
    for (VertexId v : order_) open += full[v] == 0 ? 1 : 0;
    if (open > ctx_.cfg.dp_cut_cap) {
      fail(ErrorCode::kTableCapExceeded, "too many uncolored cuff vertices");
    }
    return complete(full, 0);
  }

 private:
  bool complete(Precoloring& psi, std::size_t i) {
    if (i == order_.size()) {
      for (const auto& [x, a, b] : added_) psi[x] = 6 - psi[a] - psi[b];
      return special_->answer(psi).yes;
    }
    const VertexId v = order_[i];
    if (psi[v] != 0) return complete(psi, i + 1);
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (auto [p, q] : adj_) ok &= !(p == v && psi[q] == c);
      if (!ok) continue;
      psi[v] = c;
      if (complete(psi, i + 1)) {
        psi[v] = 0;
        return true;
      }
    }
    psi[v] = 0;
    return false;
  }

  Ctx& ctx_;
  std::vector<VertexId> order_;
  std::vector<std::pair<VertexId, VertexId>> adj_;
  std::vector<std::array<VertexId, 3>> added_;
  std::size_t capacity_ = 0;
  std::unique_ptr<SpecialSolver> special_;
};

// ---------------------------------------------------------------------------

// Colorings of H (an edge mask containing B) combined with one solver per
// face of H. Vertices shared between pieces, or repeated along a piece
// boundary, are enumerated; the rest is left to the pieces.
class Skeleton {
 public:
  using KindFn = std::function<Kind(const SurfaceClass&)>;

  Skeleton(const EmbeddedGraph& g, const std::vector<bool>& mask,
           const KindFn& kind, Ctx& ctx)
      : g_(local_copy(g)), ctx_(ctx) {
    std::vector<bool> m = mask;
    m.resize(g_.edge_capacity(), false);
    const SubgraphFaces an = subgraph_faces(g_, m);
    std::vector<std::vector<VertexId>> borders;
    for (std::size_t r = 0; r < an.regions.size(); ++r) {
      if (an.regions[r].is_hole) continue;
      FacePiece piece = face_subsurface(g_, m, an, static_cast<int>(r));
      Part p;
      p.border = boundary_order(piece.graph);
      for (VertexId v : p.border) p.parent.push_back(piece.graph.origin_of(v));
      p.capacity = piece.graph.vertex_capacity();
      p.solver = make_solver(kind(piece.surface), piece.graph, ctx_);
      borders.push_back(p.parent);
      parts_.push_back(std::move(p));
      ++ctx_.stats.pieces;
    }
    std::vector<std::pair<VertexId, VertexId>> h_adj;
    for (EdgeId e : g_.edges()) {
      if (m[e]) h_adj.push_back({g_.edge(e).u, g_.edge(e).v});
    }
    search_.emplace(g_.vertex_capacity(), std::move(borders), std::move(h_adj));
  }

  bool extends(const Precoloring& psi) {
    const BorderSearch::Query q = [this](int p, const Precoloring& a) {
      return query(parts_[p], a);
    };
    return search_->run(psi, q, &ctx_.stats.skeleton_colorings).has_value();
  }

 private:
  struct Part {
    std::vector<VertexId> border;  // piece ids
    std::vector<VertexId> parent;  // matching ids in g
    int capacity = 0;
    std::unique_ptr<Solver> solver;
    std::map<Key, bool> memo;
  };

  bool query(Part& p, const Precoloring& assign) {
    Key key;
    for (VertexId v : p.parent) key.push_back(static_cast<std::int8_t>(assign[v]));
    key = canonical_key(key);
    auto it = p.memo.find(key);
    if (it != p.memo.end()) return it->second;
    Precoloring local(p.capacity, 0);
    for (std::size_t i = 0; i < p.border.size(); ++i) {
      local[p.border[i]] = assign[p.parent[i]];
    }
    const bool ok = p.solver->extends(local);
    p.memo.emplace(std::move(key), ok);
    return ok;
  }

  EmbeddedGraph g_;
  Ctx& ctx_;
  std::vector<Part> parts_;
  std::optional<BorderSearch> search_;
};

// ---------------------------------------------------------------------------

long long cut_distance(const EmbeddedGraph& g, const Walk& a, const Walk& b,
                       std::vector<VertexId>* path) {
  std::vector<bool> in_a(g.vertex_capacity(), false), in_b(g.vertex_capacity(), false);
  for (VertexId v : walk_vertices(g, a)) in_a[v] = true;
  for (VertexId v : walk_vertices(g, b)) in_b[v] = true;
  std::vector<int> dist(g.vertex_capacity(), -1);
  std::vector<VertexId> from(g.vertex_capacity(), kNone);
  std::deque<VertexId> q;
  for (VertexId v : g.vertices()) {
    if (in_a[v]) {
      dist[v] = 0;
      q.push_back(v);
    }
  }
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop_front();
    if (in_b[v]) {
      if (path) {
        path->clear();
        for (VertexId x = v; x != kNone; x = from[x]) path->push_back(x);
      }
      return dist[v];
    }
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      from[w] = v;
      q.push_back(w);
    }
  }
  return LLONG_MAX;
}

class CylinderSolver : public Solver {
 public:
  CylinderSolver(const EmbeddedGraph& g, Ctx& ctx) : ctx_(ctx) {
    EmbeddedGraph h = local_copy(g);
    int d = 0;
    for (const auto& c : h.cuffs()) d = std::max(d, static_cast<int>(c.size()));
    const auto cycles = cylinder_decomposition(h, d);
    const long long near = ctx_.cfg.n_override > 0
                               ? ctx_.cfg.n_override
                               : n_sigma_k(h.surface_class(), 2 * d,
                                           ctx_.cfg.weights);
    // far[i]: the band between cycles i-1 and i.
    const std::size_t m = cycles.size();
    std::vector<bool> far(m + 1, false);
    for (std::size_t i = 1; i < m; ++i) {
      far[i] = cut_distance(h, cycles[i - 1], cycles[i], nullptr) > near;
    }
    // Runs of near bands are solved as one band.
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == 0 || i + 1 == m || far[i] || far[i + 1]) kept.push_back(i);
    }
    std::vector<bool> mask(h.edge_capacity(), false);
    for (std::size_t t = 0; t < kept.size(); ++t) {
      const std::size_t i = kept[t];
      if (t > 0 && t + 1 < kept.size() &&
          static_cast<int>(cycles[i].length()) > ctx_.cfg.dp_cut_cap) {
        fail(ErrorCode::kTableCapExceeded, "cylinder cut exceeds the cap");
      }
      const auto cm = walk_edge_mask(h, cycles[i]);
      for (std::size_t e = 0; e < cm.size(); ++e) {
        if (cm[e]) mask[e] = true;
      }
      if (t == 0 || (kept[t - 1] + 1 == i && far[i])) continue;
      std::vector<VertexId> path;
      if (cut_distance(h, cycles[kept[t - 1]], cycles[i], &path) == 0) continue;
      for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        mask[h.find_edge(path[j], path[j + 1])] = true;
      }
    }
    skeleton_ = std::make_unique<Skeleton>(
        h, mask,
        [](const SurfaceClass& s) {
          if (s.is_disk()) return Kind::kDisk;
          if (s.is_cylinder()) return Kind::kCore;
          fail(ErrorCode::kInternal, "band is neither a disk nor a cylinder");
        },
        ctx_);
  }

  bool extends(const Precoloring& psi) override {
    ++ctx_.stats.cylinder_calls;
    return skeleton_->extends(psi);
  }

 private:
  Ctx& ctx_;
  std::unique_ptr<Skeleton> skeleton_;
};

// ---------------------------------------------------------------------------

// Tightens each cuff to a 4-free walk, then splits into bands and a core.
class GeneralSolver : public Solver {
 public:
  GeneralSolver(const EmbeddedGraph& g, Ctx& ctx) : ctx_(ctx) {
    EmbeddedGraph h = local_copy(g);
    surface_ = h.surface_class();
    if (surface_.is_sphere()) {
      always_ = true;
      return;
    }
    if (surface_.is_disk()) {
      direct_ = make_solver(Kind::kDisk, h, ctx_);
      return;
    }
    if (surface_.is_cylinder()) {
      direct_ = make_solver(Kind::kCylinder, h, ctx_);
      return;
    }
    std::vector<bool> mask = h.boundary_edge_mask();
    mask.resize(h.edge_capacity(), false);
    const std::vector<bool> b = mask;
    std::vector<int> owner(h.vertex_capacity(), -1);
    std::vector<bool> all(h.vertex_capacity(), true);
    for (std::size_t i = 0; i < h.cuffs().size(); ++i) {
      auto cuffs = h.cuffs();
      cuffs.erase(cuffs.begin() + static_cast<long>(i));
      const EmbeddedGraph patched = rebuild(h, all, cuffs);
      const int hole = h.cuff_face(static_cast<int>(i));
      const int f = patched.face_of_state(h.all_faces()[hole].walk.front());
      auto cert = test_free_single(patched, f, 4);
      std::vector<VertexId> closure = h.cuffs()[i];
      if (cert) {
        for (int face : cert->disk) {
          for (State s : patched.all_faces()[face].walk) {
            closure.push_back(patched.origin(state_dart(s)));
          }
        }
        add(mask, walk_edge_mask(h, cert->walk));
      }
      for (VertexId v : closure) {
        if (owner[v] >= 0 && owner[v] != static_cast<int>(i)) {
          fail(ErrorCode::kPreconditionViolated,
               "tightened cuff disks are not disjoint");
        }
        owner[v] = static_cast<int>(i);
      }
    }
    if (mask == b) {
      direct_ = make_solver(Kind::kCore, h, ctx_);
      return;
    }
    const SurfaceClass whole = surface_;
    skeleton_ = std::make_unique<Skeleton>(
        h, mask,
        [whole](const SurfaceClass& s) {
          if (s == whole) return Kind::kCore;
          if (s.is_disk()) return Kind::kDisk;
          if (s.is_cylinder()) return Kind::kCylinder;
          fail(ErrorCode::kInternal, "unexpected piece around a cuff");
        },
        ctx_);
  }

  bool extends(const Precoloring& psi) override {
    if (always_) return true;
    if (direct_) return direct_->extends(psi);
    return skeleton_->extends(psi);
  }

 private:
  static void add(std::vector<bool>& mask, const std::vector<bool>& m) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (m[e]) mask[e] = true;
    }
  }

  Ctx& ctx_;
  SurfaceClass surface_;
  bool always_ = false;
  std::unique_ptr<Solver> direct_;
  std::unique_ptr<Skeleton> skeleton_;
};

std::unique_ptr<Solver> make_solver(Kind kind, const EmbeddedGraph& g,
                                    Ctx& ctx) {
  switch (kind) {
    case Kind::kDisk:
      return std::make_unique<DiskSolver>(g, ctx);
    case Kind::kCylinder:
      return std::make_unique<CylinderSolver>(g, ctx);
    case Kind::kCore:
      return std::make_unique<CoreSolver>(g, ctx);
    case Kind::kGeneral:
      return std::make_unique<GeneralSolver>(g, ctx);
  }
  fail(ErrorCode::kInternal, "unknown piece kind");
}

// ---------------------------------------------------------------------------

// Smallest essential subgraph found among cuff-to-cuff paths and cycles
// through BFS trees; exact search when the limit is tiny.
std::optional<std::vector<EdgeId>> find_essential(const EmbeddedGraph& g,
                                                  long long limit) {
  std::vector<EdgeId> best;
  bool found = false;
  const auto& cuffs = g.cuffs();
  if (cuffs.size() >= 2) {
    std::vector<int> label(g.vertex_capacity(), -1);
    for (std::size_t i = 0; i < cuffs.size(); ++i) {
      for (VertexId v : cuffs[i]) label[v] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < cuffs.size(); ++i) {
      std::vector<int> dist(g.vertex_capacity(), -1);
      std::vector<VertexId> from(g.vertex_capacity(), kNone);
      std::deque<VertexId> q;
      for (VertexId v : cuffs[i]) {
        dist[v] = 0;
        q.push_back(v);
      }
      while (!q.empty()) {
        const VertexId v = q.front();
        q.pop_front();
        if (label[v] >= 0 && label[v] != static_cast<int>(i)) {
          if (!found || dist[v] < static_cast<int>(best.size())) {
            best.clear();
            for (VertexId x = v; from[x] != kNone; x = from[x]) {
              best.push_back(g.find_edge(x, from[x]));
            }
            found = true;
          }
          break;
        }
        for (VertexId w : g.neighbors(v)) {
          if (dist[w] >= 0 || label[w] == static_cast<int>(i)) continue;
          dist[w] = dist[v] + 1;
          from[w] = v;
          q.push_back(w);
        }
      }
    }
  }
  for (VertexId root : g.vertices()) {
    std::vector<int> depth(g.vertex_capacity(), -1);
    std::vector<EdgeId> up(g.vertex_capacity(), kNone);
    std::deque<VertexId> q{root};
    depth[root] = 0;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop_front();
      for (Dart d : g.rotation(v)) {
        const VertexId w = g.head(d);
        if (depth[w] >= 0) continue;
        depth[w] = depth[v] + 1;
        up[w] = dart_edge(d);
        q.push_back(w);
      }
    }
    auto parent = [&](VertexId v) {
      const Edge& e = g.edge(up[v]);
      return e.u == v ? e.v : e.u;
    };
    for (EdgeId e : g.edges()) {
      VertexId a = g.edge(e).u, b = g.edge(e).v;
      if (depth[a] < 0 || up[a] == e || up[b] == e) continue;
      std::vector<EdgeId> cyc{e};
      while (a != b) {
        if (depth[a] >= depth[b]) {
          cyc.push_back(up[a]);
          a = parent(a);
        } else {
          cyc.push_back(up[b]);
          b = parent(b);
        }
      }
      if (found && cyc.size() >= best.size()) continue;
      std::vector<bool> m(g.edge_capacity(), false);
      for (EdgeId x : cyc) m[x] = true;
      if (is_essential(g, m)) {
        best = std::move(cyc);
        found = true;
      }
    }
  }
  if (found && static_cast<long long>(best.size()) <= limit) return best;
  if (limit <= 6 && limit > 0) {
    if (auto exact = smallest_essential_subgraph(g, static_cast<int>(limit))) {
      return exact;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<bool> sparsify_essential(const EmbeddedGraph& g,
                                     const NuFunction& nu) {
  const EmbeddedGraph h = local_copy(g);
  std::vector<bool> mask = h.boundary_edge_mask();
  mask.resize(h.edge_capacity(), false);
  for (int round = 0; round <= h.edge_count(); ++round) {
    const SubgraphFaces an = subgraph_faces(h, mask);
    bool grew = false;
    for (std::size_t r = 0; r < an.regions.size() && !grew; ++r) {
      const Region& reg = an.regions[r];
      const SurfaceClass& s = reg.surface;
      if (reg.is_hole || s.is_sphere() || s.is_disk() || s.is_cylinder()) {
        continue;
      }
      const long long bound = nu(s, reg.length());
      if (bound <= 1) continue;
      const FacePiece piece = face_subsurface(h, mask, an, static_cast<int>(r));
      auto k = find_essential(piece.graph, bound - 1);
      if (!k) continue;
      for (EdgeId e : *k) {
        const EdgeId o = piece.graph.edge_origin[e];
        if (!mask[o]) {
          mask[o] = true;
          grew = true;
        }
      }
      if (!grew) fail(ErrorCode::kInternal, "essential subgraph already in H");
    }
    if (!grew) return mask;
  }
  fail(ErrorCode::kInternal, "sparsification did not terminate");
}

namespace {

Ctx context(const DecideConfig& cfg, DecideStats* stats, DecideStats& local) {
  return Ctx{cfg, stats ? *stats : local};
}

void require_triangle_free(const EmbeddedGraph& g) {
  if (g.has_triangle()) fail(ErrorCode::kNotTriangleFree, "graph has a triangle");
}

// A whole connected component, after sparsification.
class TopSolver : public Solver {
 public:
  TopSolver(const EmbeddedGraph& g, Ctx& ctx) {
    EmbeddedGraph h = local_copy(g);
    if (h.surface_class().is_sphere()) {
      always_ = true;  // Grötzsch
      return;
    }
    const DecideConfig& cfg = ctx.cfg;
    const auto mask = sparsify_essential(h, [&](const SurfaceClass& s, int k) {
      if (s.is_disk() || s.is_cylinder()) return 0LL;
      return cfg.n_override > 0 ? cfg.n_override : n_sigma_k(s, k, cfg.weights);
    });
    skeleton_ = std::make_unique<Skeleton>(
        h, mask,
        [](const SurfaceClass& s) {
          if (s.is_disk()) return Kind::kDisk;
          if (s.is_cylinder()) return Kind::kCylinder;
          return Kind::kGeneral;
        },
        ctx);
  }

  bool extends(const Precoloring& psi) override {
    return always_ || skeleton_->extends(psi);
  }

 private:
  bool always_ = false;
  std::unique_ptr<Skeleton> skeleton_;
};

}  // namespace

Answer decide_disk(const EmbeddedGraph& g, const Precoloring& psi,
                   const DecideConfig& cfg, DecideStats* stats) {
  require_triangle_free(g);
  DecideStats local;
  Ctx ctx = context(cfg, stats, local);
  return DiskSolver(g, ctx).answer(psi);
}

bool decide_cylinder(const EmbeddedGraph& g, const Precoloring& psi,
                     const DecideConfig& cfg, DecideStats* stats) {
  DecideStats local;
  Ctx ctx = context(cfg, stats, local);
  return CylinderSolver(g, ctx).extends(psi);
}

Answer decide_special(const EmbeddedGraph& g, const Precoloring& psi,
                      const DecideConfig& cfg, DecideStats* stats) {
  DecideStats local;
  Ctx ctx = context(cfg, stats, local);
  return SpecialSolver(g, ctx).answer(psi);
}

bool decide_no_small_essential(const EmbeddedGraph& g, const Precoloring& psi,
                               const DecideConfig& cfg, DecideStats* stats) {
  DecideStats local;
  Ctx ctx = context(cfg, stats, local);
  return GeneralSolver(g, ctx).extends(psi);
}

ExtensionTable extension_table(const EmbeddedGraph& g, const DecideConfig& cfg,
                               DecideStats* stats) {
  require_triangle_free(g);
  DecideStats local;
  Ctx ctx = context(cfg, stats, local);
  ExtensionTable t;
  t.vertices = boundary_order(g);
  if (static_cast<int>(t.vertices.size()) > cfg.dp_cut_cap) {
    fail(ErrorCode::kTableCapExceeded, "boundary exceeds the table cap");
  }
  TopSolver solver(g, ctx);
  Precoloring psi(g.vertex_capacity(), 0);
  std::vector<std::int8_t> row(t.vertices.size(), 1);
  for (;;) {
    for (std::size_t i = 0; i < row.size(); ++i) psi[t.vertices[i]] = row[i];
    if (proper_on_edges(g, psi) && solver.extends(psi)) t.colorings.push_back(row);
    std::size_t i = 0;
    while (i < row.size() && row[i] == 3) row[i++] = 1;
    if (i == row.size()) break;
    ++row[i];
  }
  std::sort(t.colorings.begin(), t.colorings.end());
  return t;
}

Decision decide(const EmbeddedGraph& g, const Precoloring& psi,
                const DecideConfig& cfg) {
  require_triangle_free(g);
  Decision out;
  Ctx ctx{cfg, out.stats};
  for (VertexId v = 0; v < static_cast<int>(psi.size()); ++v) {
    if (psi[v] == 0) continue;
    if (psi[v] < 0 || psi[v] > 3 || !g.vertex_alive(v) ||
        !g.is_boundary_vertex(v)) {
      fail(ErrorCode::kValidationError, "precoloring outside the boundary");
    }
  }
  if (!proper_on_edges(g, psi)) return out;
  for (const auto& comp : g.components()) {
    std::vector<bool> keep(g.vertex_capacity(), false);
    for (VertexId v : comp) keep[v] = true;
    std::vector<std::vector<VertexId>> cuffs;
    for (const auto& c : g.cuffs()) {
      if (keep[c[0]]) cuffs.push_back(c);
    }
    const EmbeddedGraph part = rebuild(g, keep, cuffs);
    if (part.edge_count() == 0) continue;
    Precoloring p(g.vertex_capacity(), 0);
    for (VertexId v : comp) p[v] = color_at(psi, v);
    if (!TopSolver(part, ctx).extends(p)) return out;
  }
  out.yes = true;
  return out;
}

}  // namespace surfcolor
