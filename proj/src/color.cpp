#include "surfcolor/color.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <deque>
#include <map>
#include <tuple>

#include "color_internal.hpp"
#include "decide_internal.hpp"
#include "surfcolor/homotopy.hpp"

namespace surfcolor {

using namespace detail;

// ---------------------------------------------------------------------------
// Surgery.

namespace detail {

namespace {

std::vector<EdgeSpec> edge_specs(const EmbeddedGraph& g) {
  std::vector<EdgeSpec> out;
  for (EdgeId e : g.edges()) {
    out.push_back({e, g.edge(e).u, g.edge(e).v, g.sign(e)});
  }
  return out;
}

EmbeddedGraph assemble(const EmbeddedGraph& g, std::vector<EdgeSpec> edges,
                       std::vector<std::vector<Dart>> rot,
                       const std::vector<bool>& dead_vertex,
                       const std::vector<bool>& dead_edge,
                       std::vector<std::vector<VertexId>> cuffs) {
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices()) {
    if (!dead_vertex[v]) verts.push_back(v);
  }
  std::vector<EdgeSpec> live;
  for (const EdgeSpec& e : edges) {
    if (!dead_edge[e.id]) live.push_back(e);
  }
  for (auto& r : rot) {
    std::erase_if(r, [&](Dart d) { return dead_edge[dart_edge(d)]; });
  }
  for (VertexId v = 0; v < static_cast<int>(rot.size()); ++v) {
    if (dead_vertex[v]) rot[v].clear();
  }
  return EmbeddedGraph::build(verts, live, rot, cuffs);
}

// Rotation of v read with orientation +1 from `start` through `last`.
std::vector<Dart> arc(const EmbeddedGraph& g, Dart start, Dart last) {
  std::vector<Dart> out{start};
  for (Dart d = start; d != last;) {
    d = g.rotate(d, 1);
    out.push_back(d);
  }
  return out;
}

}  // namespace

EmbeddedGraph delete_vertices(const EmbeddedGraph& g,
                              const std::vector<VertexId>& vs) {
  return g.without(vs, {});
}

std::optional<FaceCorners> four_face(const EmbeddedGraph& g, int face) {
  const Face& f = g.all_faces()[face];
  if (f.is_cuff || f.length() != 4) return std::nullopt;
  FaceCorners out;
  out.face = face;
  for (int i = 0; i < 4; ++i) out.v[i] = g.origin(state_dart(f.walk[i]));
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (out.v[i] == out.v[j]) return std::nullopt;
    }
  }
  return out;
}

EmbeddedGraph identify_across_face(const EmbeddedGraph& g, int face,
                                   VertexId kept, VertexId merged) {
  EmbeddedGraph h = g;
  h.vertex_origin.clear();
  h.edge_origin.clear();
  // Corner of the face at x: out = rotate(in, o).
  struct Corner {
    Dart in = kNone, out = kNone;
    int o = 1;
  };
  auto corner = [&](VertexId x) {
    const auto& walk = g.all_faces()[face].walk;
    const int m = static_cast<int>(walk.size());
    for (int i = 0; i < m; ++i) {
      const Dart out = state_dart(walk[i]);
      if (g.origin(out) != x) continue;
      return Corner{twin(state_dart(walk[(i + m - 1) % m])), out,
                    state_orientation(walk[i])};
    }
    fail(ErrorCode::kInternal, "vertex not on the face");
  };
  const Corner ck = corner(kept), cm = corner(merged);
  // Switching reverses the rotation, so both corners read with +1.
  if (ck.o < 0) switch_vertex(h, kept);
  if (cm.o < 0) switch_vertex(h, merged);
  const Dart in_k = ck.in, out_k = ck.out, in_m = cm.in, out_m = cm.out;
  if (h.rotate(in_k, 1) != out_k || h.rotate(in_m, 1) != out_m) {
    fail(ErrorCode::kInternal, "face corner orientation");
  }
  // The two neighbors of `kept` on the face.
  const VertexId a = h.head(out_k);
  const VertexId b = h.origin(twin(in_k));
  std::vector<EdgeSpec> edges = edge_specs(h);
  std::vector<bool> dead_edge(h.edge_capacity(), false);
  std::vector<bool> dead_vertex(h.vertex_capacity(), false);
  dead_vertex[merged] = true;
  // Edges merged-a and merged-b close digons with kept-a and kept-b.
  for (VertexId y : {a, b}) dead_edge[h.find_edge(merged, y)] = true;
  for (EdgeSpec& e : edges) {
    if (e.u == merged) e.u = kept;
    if (e.v == merged) e.v = kept;
  }
  std::vector<std::vector<Dart>> rot(h.vertex_capacity());
  for (VertexId v : h.vertices()) rot[v] = h.rotation(v);
  std::vector<Dart> joined = arc(h, out_k, in_k);
  const std::vector<Dart> other = arc(h, out_m, in_m);
  joined.insert(joined.end(), other.begin(), other.end());
  rot[kept] = joined;
  return assemble(h, edges, rot, dead_vertex, dead_edge, h.cuffs());
}

EmbeddedGraph contract_boundary_pair(const EmbeddedGraph& g, VertexId v1,
                                     VertexId v2) {
  EmbeddedGraph h = g;
  h.vertex_origin.clear();
  h.edge_origin.clear();
  const EdgeId e12 = h.find_edge(v1, v2);
  if (h.sign(e12) < 0) switch_vertex(h, v2);
  // v2 keeps one other dart; it moves to v1 in place of the dart to v2.
  Dart to_v2 = h.edge(e12).u == v1 ? 2 * e12 : 2 * e12 + 1;
  Dart onward = kNone;
  for (Dart d : h.rotation(v2)) {
    if (dart_edge(d) != e12) onward = d;
  }
  std::vector<EdgeSpec> edges = edge_specs(h);
  for (EdgeSpec& e : edges) {
    if (e.id != e12 && e.u == v2) e.u = v1;
    if (e.id != e12 && e.v == v2) e.v = v1;
  }
  std::vector<std::vector<Dart>> rot(h.vertex_capacity());
  for (VertexId v : h.vertices()) rot[v] = h.rotation(v);
  for (Dart& d : rot[v1]) {
    if (d == to_v2) d = onward;
  }
  std::vector<bool> dead_edge(h.edge_capacity(), false);
  std::vector<bool> dead_vertex(h.vertex_capacity(), false);
  dead_edge[e12] = true;
  dead_vertex[v2] = true;
  auto cuffs = h.cuffs();
  for (auto& c : cuffs) std::erase(c, v2);
  return assemble(h, edges, rot, dead_vertex, dead_edge, cuffs);
}

bool short_path_avoiding(const EmbeddedGraph& g, VertexId from, VertexId to,
                         const std::vector<VertexId>& avoid, int max_len) {
  std::vector<int> dist(g.vertex_capacity(), -1);
  for (VertexId v : avoid) dist[v] = INT_MAX;
  std::deque<VertexId> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop_front();
    if (dist[v] >= max_len) continue;
    for (VertexId w : g.neighbors(v)) {
      if (w == to) return true;
      if (dist[w] != -1) continue;
      dist[w] = dist[v] + 1;
      q.push_back(w);
    }
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lifting.

namespace {

bool color_removed(const LiftLink& link, Coloring& phi, std::size_t i) {
  if (i == link.removed.size()) return true;
  const VertexId v = link.removed[i];
  for (int c = 1; c <= 3; ++c) {
    bool ok = true;
    for (VertexId w : link.neighbors[i]) ok &= phi[w] != c;
    if (!ok) continue;
    phi[v] = c;
    if (color_removed(link, phi, i + 1)) return true;
  }
  phi[v] = 0;
  return false;
}

}  // namespace

Coloring lift_coloring(const std::vector<LiftLink>& chain,
                       const Coloring& reduced) {
  Coloring phi = reduced;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const LiftLink& link = *it;
    if (static_cast<int>(phi.size()) < link.capacity) phi.resize(link.capacity, 0);
    switch (link.kind) {
      case LiftLink::Kind::kDelete:
        for (VertexId v : link.removed) phi[v] = 0;
        if (!color_removed(link, phi, 0)) {
          fail(ErrorCode::kBrokenCertificate, "deleted configuration has no lift");
        }
        break;
      case LiftLink::Kind::kIdentify:
        phi[link.merged] = phi[link.kept];
        break;
      case LiftLink::Kind::kFix:
        for (auto [v, c] : link.fixed) phi[v] = c;
        break;
    }
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Reducible configurations.

namespace {

std::vector<bool> boundary_mask(const EmbeddedGraph& g) {
  std::vector<bool> b(g.vertex_capacity(), false);
  for (VertexId v : g.boundary_vertices()) b[v] = true;
  return b;
}

// Cycles of length <= 9 through allowed vertices, each listed once from its
// smallest vertex, sorted by length.
std::vector<std::vector<VertexId>> short_cycles(const EmbeddedGraph& g,
                                                const std::vector<bool>& allowed) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  std::vector<bool> on(g.vertex_capacity(), false);
  std::function<void(VertexId)> grow = [&](VertexId v) {
    for (VertexId w : g.neighbors(v)) {
      if (w == path[0] && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
      }
      if (w <= path[0] || !allowed[w] || on[w] || path.size() == 9) continue;
      on[w] = true;
      path.push_back(w);
      grow(w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (VertexId s : g.vertices()) {
    if (!allowed[s]) continue;
    path = {s};
    on[s] = true;
    grow(s);
    on[s] = false;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  return out;
}

Reduction delete_configuration(const EmbeddedGraph& g, Reduction::Kind kind,
                               std::vector<VertexId> config,
                               const std::vector<VertexId>& removed) {
  Reduction r;
  r.kind = kind;
  r.configuration = std::move(config);
  r.lift.kind = LiftLink::Kind::kDelete;
  r.lift.capacity = g.vertex_capacity();
  for (VertexId v : removed) {
    r.script.push_back({SurgeryStep::Op::kDeleteVertex, v, kNone});
    r.lift.removed.push_back(v);
    r.lift.neighbors.push_back(g.neighbors(v));
  }
  r.reduced = delete_vertices(g, removed);
  return r;
}

}  // namespace

std::optional<Reduction> find_reduction(const EmbeddedGraph& g) {
  const std::vector<bool> in_b = boundary_mask(g);
  for (VertexId v : g.vertices()) {
    if (!in_b[v] && g.degree(v) <= 2) {
      return delete_configuration(g, Reduction::Kind::kLowDegree, {v}, {v});
    }
  }
  std::vector<bool> cubic(g.vertex_capacity(), false);
  for (VertexId v : g.vertices()) {
    cubic[v] = !in_b[v] && g.degree(v) == 3 && g.neighbors(v).size() == 3;
  }
  const auto cycles = short_cycles(g, cubic);
  auto chordless = [&](const std::vector<VertexId>& c, std::vector<bool>& on) {
    on.assign(g.vertex_capacity(), false);
    for (VertexId v : c) on[v] = true;
    for (VertexId v : c) {
      int inside = 0;
      for (VertexId w : g.neighbors(v)) inside += on[w] ? 1 : 0;
      if (inside != 2) return false;
    }
    return true;
  };
  std::vector<bool> on;
  for (const auto& c : cycles) {
    if (c.size() % 2 == 0 && chordless(c, on)) {
      return delete_configuration(g, Reduction::Kind::kEvenCycle, c, c);
    }
  }
  for (const auto& c : cycles) {
    if (c.size() % 2 == 0 || !chordless(c, on)) continue;
    std::vector<bool> sees(g.vertex_capacity(), false);
    for (VertexId v : c) {
      for (VertexId w : g.neighbors(v)) {
        if (!on[w]) sees[w] = true;
      }
    }
    for (VertexId x : g.vertices()) {
      if (!sees[x]) continue;
      for (VertexId y : g.neighbors(x)) {
        if (y <= x || !sees[y]) continue;
        std::vector<VertexId> config = c;
        config.push_back(x);
        config.push_back(y);
        return delete_configuration(g, Reduction::Kind::kOddCycle, config, c);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Near-planar graphs and clearable cycles.

std::optional<NearPlanarCheck> near_planar(const EmbeddedGraph& g, int cuff) {
  if (cuff < 0 || cuff >= static_cast<int>(g.cuffs().size())) return std::nullopt;
  const auto& c = g.cuffs()[cuff];
  NearPlanarCheck out;
  out.cuff = cuff;
  for (const auto& comp : g.components()) {
    if (std::find(comp.begin(), comp.end(), c[0]) != comp.end()) {
      out.main_component = comp;
      continue;
    }
    // Any other component is a cuff on its own.
    bool is_cuff = false;
    for (const auto& k : g.cuffs()) {
      if (k.size() != comp.size()) continue;
      std::vector<VertexId> a = k, b = comp;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      int edges = 0;
      for (VertexId v : comp) edges += g.degree(v);
      is_cuff |= a == b && edges == 2 * static_cast<int>(comp.size());
    }
    if (!is_cuff) return std::nullopt;
  }
  std::vector<bool> keep(g.vertex_capacity(), false);
  for (VertexId v : out.main_component) keep[v] = true;
  for (const auto& k : g.cuffs()) {
    if (&k == &c) continue;
    for (VertexId v : k) {
      if (keep[v]) return std::nullopt;
    }
  }
  const EmbeddedGraph main = rebuild(g, keep, {c});
  if (main.surface_class().euler_genus != 0) return std::nullopt;
  for (const Face& f : main.all_faces()) {
    if (!f.is_cuff) out.max_face = std::max(out.max_face, static_cast<int>(f.length()));
  }
  return out;
}

namespace {

// The main component of a near-planar graph with the given cuff only.
EmbeddedGraph main_part(const EmbeddedGraph& g, int cuff) {
  const auto np = near_planar(g, cuff);
  if (!np) fail(ErrorCode::kNotNearPlanar, "graph is not near-planar");
  std::vector<bool> keep(g.vertex_capacity(), false);
  for (VertexId v : np->main_component) keep[v] = true;
  return rebuild(g, keep, {g.cuffs()[cuff]});
}

}  // namespace

bool is_very_exceptional(const EmbeddedGraph& g, int cuff) {
  const EmbeddedGraph m = main_part(g, cuff);
  const auto& c = m.cuffs()[0];
  std::vector<bool> on_c(m.vertex_capacity(), false);
  for (VertexId v : c) on_c[v] = true;
  const std::vector<bool> base = [&] {
    auto b = m.boundary_edge_mask();
    b.resize(m.edge_capacity(), false);
    return b;
  }();
  auto two_cell_lengths = [&](const std::vector<EdgeId>& extra) {
    std::vector<bool> mask = base;
    for (EdgeId e : extra) mask[e] = true;
    std::vector<int> out;
    for (const Region& r : subgraph_faces(m, mask).regions) {
      if (!r.is_hole && r.two_cell()) out.push_back(r.length());
    }
    return out;
  };
  for (EdgeId e : m.edges()) {
    if (base[e] || !on_c[m.edge(e).u] || !on_c[m.edge(e).v]) continue;
    for (int len : two_cell_lengths({e})) {
      if (len <= 6) return true;
    }
  }
  for (VertexId v : m.vertices()) {
    if (on_c[v]) continue;
    std::vector<EdgeId> legs;
    for (VertexId w : m.neighbors(v)) {
      if (on_c[w]) legs.push_back(m.find_edge(v, w));
    }
    for (std::size_t i = 0; i < legs.size(); ++i) {
      for (std::size_t j = i + 1; j < legs.size(); ++j) {
        for (std::size_t k = j + 1; k < legs.size(); ++k) {
          const auto lens = two_cell_lengths({legs[i], legs[j], legs[k]});
          if (std::count(lens.begin(), lens.end(), 5) >= 2) return true;
        }
      }
    }
  }
  return false;
}

namespace detail {

DiskPiece disk_piece(const EmbeddedGraph& g, const Walk& c,
                     const std::vector<int>& disk_faces) {
  const EmbeddedGraph lg = local_copy(g);
  std::vector<bool> mask = walk_edge_mask(lg, c);
  mask.resize(lg.edge_capacity(), false);
  // Cuffs met by C go into H whole.
  std::vector<bool> on_c(lg.vertex_capacity(), false);
  for (VertexId v : walk_vertices(lg, c)) on_c[v] = true;
  for (std::size_t i = 0; i < lg.cuffs().size(); ++i) {
    bool meets = false;
    for (VertexId v : lg.cuffs()[i]) meets |= on_c[v];
    if (!meets) continue;
    const auto& k = lg.cuffs()[i];
    for (std::size_t j = 0; j < k.size(); ++j) {
      mask[lg.find_edge(k[j], k[(j + 1) % k.size()])] = true;
    }
  }
  const SubgraphFaces an = subgraph_faces(lg, mask);
  const int region = an.region_of_face[disk_faces.at(0)];
  FacePiece piece = face_subsurface(lg, mask, an, region);
  if (!piece.surface.is_disk()) {
    fail(ErrorCode::kNotContractible, "cycle does not bound a disk");
  }
  DiskPiece out;
  out.graph = std::move(piece.graph);
  const DiskInterior in = disk_interior(lg, disk_faces);
  out.interior = in.vertices;
  out.outside = lg.without(in.vertices, in.edges);
  return out;
}

}  // namespace detail

bool is_clearable(const EmbeddedGraph& g, const Walk& c) {
  std::vector<int> disk;
  if (!is_cycle(g, c) || !is_contractible(g, c, &disk)) {
    fail(ErrorCode::kNotContractible, "not a contractible cycle");
  }
  if (c.length() > 9) return false;
  const DiskPiece piece = disk_piece(g, c, disk);
  return !is_very_exceptional(piece.graph, 0);
}

// ---------------------------------------------------------------------------
// Extension into small disks.

namespace {

// Backtracking with forward checking, most constrained vertex first.
bool extend_search(const SimpleGraph& s, Coloring& phi) {
  int best = -1, best_count = 4;
  for (int v = 0; v < s.n; ++v) {
    if (phi[v] != 0 || s.adj[v].empty()) continue;
    int used = 0;
    for (int w : s.adj[v]) {
      if (phi[w] != 0) used |= 1 << phi[w];
    }
    const int count = 3 - std::popcount(static_cast<unsigned>(used));
    if (count < best_count) {
      best_count = count;
      best = v;
    }
  }
  if (best < 0) return true;
  if (best_count == 0) return false;
  for (int c = 1; c <= 3; ++c) {
    bool ok = true;
    for (int w : s.adj[best]) ok &= phi[w] != c;
    if (!ok) continue;
    phi[best] = c;
    if (extend_search(s, phi)) return true;
  }
  phi[best] = 0;
  return false;
}

}  // namespace

Coloring extend_in_small_disk(const EmbeddedGraph& g, const Precoloring& psi,
                              DiskMode mode) {
  auto need = [](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::kPreconditionViolated, what);
  };
  need(g.is_connected() && g.surface_class().is_disk(), "graph is not in the disk");
  const auto& b = g.cuffs()[0];
  std::vector<bool> on_b(g.vertex_capacity(), false);
  for (VertexId v : b) {
    on_b[v] = true;
    need(v < static_cast<int>(psi.size()) && psi[v] >= 1 && psi[v] <= 3,
         "cuff is not fully colored");
  }
  need(proper_on_edges(g, psi), "precoloring is not proper");
  if (mode == DiskMode::kFaceAtMost5) {
    need(b.size() <= 5, "cuff longer than 5");
    need(!g.has_triangle(), "graph has a triangle");
  } else {
    need(b.size() <= 9, "cuff longer than 9");
    need(girth(g) >= 5, "girth below 5");
    for (VertexId v : g.vertices()) {
      int seen = 0;
      for (VertexId w : g.neighbors(v)) seen += on_b[w] ? 1 : 0;
      need(!on_b[v] || seen == 2, "cuff is not induced");
      need(on_b[v] || seen <= 2, "vertex with three neighbors on the cuff");
    }
  }
  const SimpleGraph s = abstract_graph(g);
  Coloring phi(g.vertex_capacity(), 0);
  for (VertexId v : b) phi[v] = psi[v];
  need(extend_search(s, phi), "no extension");
  for (VertexId v : g.vertices()) {
    if (phi[v] == 0) phi[v] = 1;  // isolated
  }
  return phi;
}

int q_value(const EmbeddedGraph& g) {
  int q = 0;
  for (const auto& c : g.cuffs()) q += std::max<int>(7, static_cast<int>(c.size()));
  return q;
}

// ---------------------------------------------------------------------------
// The recursion.

namespace {

using Key = std::vector<std::int8_t>;

bool bounds_face(const EmbeddedGraph& g, const Walk& c) {
  std::vector<EdgeId> ce;
  for (Dart d : c.darts) ce.push_back(dart_edge(d));
  std::sort(ce.begin(), ce.end());
  for (const Face& f : g.all_faces()) {
    if (f.length() != c.length()) continue;
    std::vector<EdgeId> fe;
    for (State st : f.walk) fe.push_back(dart_edge(state_dart(st)));
    std::sort(fe.begin(), fe.end());
    if (fe == ce) return true;
  }
  return false;
}

bool is_cuff_cycle(const EmbeddedGraph& g, const Walk& c) {
  std::vector<VertexId> vs = walk_vertices(g, c);
  std::sort(vs.begin(), vs.end());
  for (auto k : g.cuffs()) {
    std::sort(k.begin(), k.end());
    if (k == vs) return true;
  }
  return false;
}

std::vector<bool> cuff_edges(const EmbeddedGraph& g) {
  auto b = g.boundary_edge_mask();
  b.resize(g.edge_capacity(), false);
  return b;
}

// Hypotheses of the girth-5 small-disk extension on a disk piece.
bool girth5_disk_ok(const EmbeddedGraph& d) {
  const auto& b = d.cuffs()[0];
  if (b.size() > 9 || girth(d) < 5) return false;
  std::vector<bool> on_b(d.vertex_capacity(), false);
  for (VertexId v : b) on_b[v] = true;
  for (VertexId v : d.vertices()) {
    int seen = 0;
    for (VertexId w : d.neighbors(v)) seen += on_b[w] ? 1 : 0;
    if (on_b[v] ? seen != 2 : seen > 2) return false;
  }
  return true;
}

enum class Flow { kGeneral, kGirth5 };

class Colorer {
 public:
  Colorer(const ColorConfig& cfg, ColorStats& stats) : cfg_(cfg), stats_(stats) {}

  bool decides(const EmbeddedGraph& g, const Precoloring& psi) {
    ++stats_.decide_calls;
    return decide(g, psi, cfg_.decide).yes;
  }

  // psi extends; the result is indexed like g.
  Coloring run(Flow flow, const EmbeddedGraph& g, Precoloring psi) {
    psi.resize(g.vertex_capacity(), 0);
    complete_boundary(g, psi);
    const auto comps = g.components();
    if (comps.size() > 1) {
      Coloring phi(g.vertex_capacity(), 0);
      for (const auto& comp : comps) {
        std::vector<bool> keep(g.vertex_capacity(), false);
        for (VertexId v : comp) keep[v] = true;
        std::vector<std::vector<VertexId>> cuffs;
        for (const auto& c : g.cuffs()) {
          if (keep[c[0]]) cuffs.push_back(c);
        }
        const Coloring part = run(flow, rebuild(g, keep, cuffs), psi);
        for (VertexId v : comp) phi[v] = part[v];
      }
      return phi;
    }
    if (g.edge_count() == 0) {
      Coloring phi = psi;
      for (VertexId v : g.vertices()) {
        if (phi[v] == 0) phi[v] = 1;
      }
      return phi;
    }
    return flow == Flow::kGeneral ? general(g, psi) : girth5(g, psi);
  }

 private:
  // Colors every cuff vertex, one at a time, keeping an extension alive.
  void complete_boundary(const EmbeddedGraph& g, Precoloring& psi) {
    for (VertexId v : boundary_order(g)) {
      if (psi[v] != 0) continue;
      for (int c = 1; c <= 3 && psi[v] == 0; ++c) {
        bool ok = true;
        for (VertexId w : g.neighbors(v)) ok &= psi[w] != c;
        if (!ok) continue;
        psi[v] = c;
        if (!decides(g, psi)) psi[v] = 0;
      }
      if (psi[v] == 0) fail(ErrorCode::kInternal, "boundary completion failed");
    }
  }

  Coloring general(const EmbeddedGraph& g, const Precoloring& psi) {
    const std::vector<bool> in_b = boundary_mask(g);
    const std::vector<bool> b_edges = cuff_edges(g);
    if (auto k = shortest_noncontractible_cycle(g, 5, true)) {
      return split(Flow::kGeneral, g, psi, with_walk(g, b_edges, *k));
    }
    if (auto m = boundary_shortcut(g, in_b, b_edges)) {
      return split(Flow::kGeneral, g, psi, *m);
    }
    for (const Walk& c : simple_cycles(g, 5)) {
      if (is_cuff_cycle(g, c) || bounds_face(g, c)) continue;
      std::vector<int> disk;
      if (!is_contractible(g, c, &disk)) continue;
      return clear_disk(Flow::kGeneral, g, psi, c, disk, DiskMode::kFaceAtMost5);
    }
    for (VertexId v : g.vertices()) {
      if (!in_b[v] && g.degree(v) <= 2) {
        LiftLink link;
        link.kind = LiftLink::Kind::kDelete;
        link.capacity = g.vertex_capacity();
        link.removed = {v};
        link.neighbors = {g.neighbors(v)};
        ++stats_.reductions;
        return lift_coloring({link}, run(Flow::kGeneral, delete_vertices(g, {v}), psi));
      }
    }
    for (int f = 0; f < static_cast<int>(g.all_faces().size()); ++f) {
      auto fc = four_face(g, f);
      if (!fc) continue;
      int r = 0;
      while (r < 4 && in_b[fc->v[r]]) ++r;
      if (r == 4) continue;
      const VertexId v2 = fc->v[r], v1 = fc->v[(r + 3) % 4];
      const VertexId v3 = fc->v[(r + 1) % 4], v4 = fc->v[(r + 2) % 4];
      if (in_b[v1] && in_b[v3]) {
        std::vector<bool> m = b_edges;
        m[g.find_edge(v1, v2)] = true;
        m[g.find_edge(v2, v3)] = true;
        return split(Flow::kGeneral, g, psi, m);
      }
      return eliminate_face(g, psi, f, {v1, v2, v3, v4}, in_b);
    }
    return girth5(g, psi);
  }

  // A chord of the cuffs, or a path of length two between different cuffs.
  std::optional<std::vector<bool>> boundary_shortcut(
      const EmbeddedGraph& g, const std::vector<bool>& in_b,
      const std::vector<bool>& b_edges) {
    std::vector<int> cuff_of(g.vertex_capacity(), -1);
    for (std::size_t i = 0; i < g.cuffs().size(); ++i) {
      for (VertexId v : g.cuffs()[i]) cuff_of[v] = static_cast<int>(i);
    }
    for (EdgeId e : g.edges()) {
      if (!b_edges[e] && in_b[g.edge(e).u] && in_b[g.edge(e).v]) {
        std::vector<bool> m = b_edges;
        m[e] = true;
        return m;
      }
    }
    for (VertexId x : g.vertices()) {
      if (in_b[x]) continue;
      for (VertexId a : g.neighbors(x)) {
        for (VertexId b : g.neighbors(x)) {
          if (!in_b[a] || !in_b[b] || cuff_of[a] == cuff_of[b]) continue;
          std::vector<bool> m = b_edges;
          m[g.find_edge(x, a)] = true;
          m[g.find_edge(x, b)] = true;
          return m;
        }
      }
    }
    return std::nullopt;
  }

  std::vector<bool> with_walk(const EmbeddedGraph& g, std::vector<bool> m,
                              const Walk& w) {
    for (Dart d : w.darts) m[dart_edge(d)] = true;
    (void)g;
    return m;
  }

  Coloring eliminate_face(const EmbeddedGraph& g, const Precoloring& psi,
                          int f, std::array<VertexId, 4> v,
                          const std::vector<bool>& in_b) {
    // psi' on B + f, tested with f as an extra cuff.
    auto cuffs = g.cuffs();
    cuffs.push_back({v[0], v[1], v[2], v[3]});
    std::vector<bool> all(g.vertex_capacity(), false);
    for (VertexId x : g.vertices()) all[x] = true;
    const EmbeddedGraph gf = rebuild(g, all, cuffs);
    Precoloring best;
    Precoloring trial = psi;
    std::function<bool(int)> pick = [&](int i) {
      if (i == 4) return decides(gf, trial);
      if (trial[v[i]] != 0) return pick(i + 1);
      for (int c = 1; c <= 3; ++c) {
        bool ok = true;
        for (VertexId w : g.neighbors(v[i])) ok &= trial[w] != c;
        if (!ok) continue;
        trial[v[i]] = c;
        if (pick(i + 1)) return true;
      }
      trial[v[i]] = 0;
      return false;
    };
    if (!pick(0)) fail(ErrorCode::kInternal, "no coloring of the 4-face extends");
    VertexId kept, merged, o1, o2;
    if (trial[v[0]] == trial[v[2]]) {
      kept = in_b[v[2]] ? v[2] : v[0];
      merged = kept == v[0] ? v[2] : v[0];
      o1 = v[1];
      o2 = v[3];
    } else {
      kept = in_b[v[3]] ? v[3] : v[1];
      merged = kept == v[1] ? v[3] : v[1];
      o1 = v[0];
      o2 = v[2];
    }
    if (short_path_avoiding(g, kept, merged, {o1, o2}, 3)) {
      return fallback(g, psi);
    }
    const EmbeddedGraph h = identify_across_face(g, f, kept, merged);
    if (h.has_triangle()) fail(ErrorCode::kInternal, "identification made a triangle");
    ++stats_.identifications;
    LiftLink link;
    link.kind = LiftLink::Kind::kIdentify;
    link.kept = kept;
    link.merged = merged;
    link.capacity = g.vertex_capacity();
    return lift_coloring({link}, run(Flow::kGeneral, h, psi));
  }

  Coloring girth5(const EmbeddedGraph& g, const Precoloring& psi) {
    const std::vector<bool> in_b = boundary_mask(g);
    const std::vector<bool> b_edges = cuff_edges(g);
    const SurfaceClass sc = g.surface_class();
    int b_edge_count = 0;
    for (bool x : b_edges) b_edge_count += x ? 1 : 0;
    const long long r = 8LL * sc.euler_genus + 8LL * sc.cuff_count + 9LL * b_edge_count;
    if (g.vertex_count() < r) {
      ++stats_.brute_force;
      const int cap = static_cast<int>(std::max<long long>(cfg_.decide.oracle_cap, r));
      auto phi = brute_force_3color(g, psi, cap);
      if (!phi) fail(ErrorCode::kInternal, "brute force found no extension");
      return *phi;
    }
    {
      const Rational w = mask_weight(g, b_edges, cfg_.decide.weights);
      const Rational q = Rational(5) / s_face(5) * w;
      long long nu = q.numerator() / q.denominator();
      if (nu * q.denominator() < q.numerator()) ++nu;
      nu += 18;
      std::vector<bool> h = sparsify_essential(
          g, [nu](const SurfaceClass&, int) { return nu; });
      h.resize(g.edge_capacity(), false);
      if (h != b_edges) return split(Flow::kGirth5, g, psi, h);
    }
    if (auto m = short_boundary_path(g, in_b, b_edges)) {
      return split(Flow::kGirth5, g, psi, *m);
    }
    if (auto k = shortest_noncontractible_cycle(g, 7, true)) {
      return split(Flow::kGirth5, g, psi, with_walk(g, b_edges, *k));
    }
    if (auto phi = contract_degree_two(g, psi, in_b)) return *phi;
    if (auto red = find_reduction(g)) {
      ++stats_.reductions;
      return lift_coloring({red->lift}, run(Flow::kGirth5, red->reduced, psi));
    }
    for (const Walk& c : simple_cycles(g, 9)) {
      if (is_cuff_cycle(g, c) || bounds_face(g, c)) continue;
      std::vector<int> disk;
      if (!is_contractible(g, c, &disk)) continue;
      if (disk_interior(g, disk).vertices.size() > 30) continue;
      const DiskPiece piece = disk_piece(g, c, disk);
      if (!girth5_disk_ok(piece.graph) || is_very_exceptional(piece.graph, 0)) continue;
      ++stats_.clearable;
      return clear_disk(Flow::kGirth5, g, psi, c, disk, DiskMode::kGirth5AtMost9);
    }
    return fallback(g, psi);
  }

  // A path of length <= 4 between cuffs, or along one cuff shorter than the
  // cuff's own route between its ends.
  std::optional<std::vector<bool>> short_boundary_path(
      const EmbeddedGraph& g, const std::vector<bool>& in_b,
      const std::vector<bool>& b_edges) {
    std::vector<int> cuff_of(g.vertex_capacity(), -1), pos(g.vertex_capacity(), -1);
    for (std::size_t i = 0; i < g.cuffs().size(); ++i) {
      const auto& c = g.cuffs()[i];
      for (std::size_t j = 0; j < c.size(); ++j) {
        cuff_of[c[j]] = static_cast<int>(i);
        pos[c[j]] = static_cast<int>(j);
      }
    }
    for (VertexId s : g.vertices()) {
      if (!in_b[s]) continue;
      std::vector<int> dist(g.vertex_capacity(), -1);
      std::vector<VertexId> from(g.vertex_capacity(), kNone);
      std::deque<VertexId> q{s};
      dist[s] = 0;
      while (!q.empty()) {
        const VertexId v = q.front();
        q.pop_front();
        if (dist[v] == 4) continue;
        for (VertexId w : g.neighbors(v)) {
          if (dist[w] != -1) continue;
          if (v == s && in_b[w] && b_edges[g.find_edge(v, w)]) continue;
          dist[w] = dist[v] + 1;
          from[w] = v;
          if (!in_b[w]) {
            q.push_back(w);
            continue;
          }
          bool bad = cuff_of[w] != cuff_of[s];
          if (!bad) {
            const int n = static_cast<int>(g.cuffs()[cuff_of[s]].size());
            const int d = std::abs(pos[w] - pos[s]);
            bad = std::min(d, n - d) > dist[w];
          }
          if (!bad) continue;
          std::vector<bool> m = b_edges;
          for (VertexId x = w; x != s; x = from[x]) m[g.find_edge(x, from[x])] = true;
          return m;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Coloring> contract_degree_two(const EmbeddedGraph& g,
                                              const Precoloring& psi,
                                              const std::vector<bool>& in_b) {
    for (const auto& c : g.cuffs()) {
      const int n = static_cast<int>(c.size());
      for (int i = 0; i < n; ++i) {
        const VertexId v1 = c[i], v2 = c[(i + 1) % n];
        if (g.degree(v1) != 2 || g.degree(v2) != 2) continue;
        if (g.surface_class().is_disk() && n <= 5) {
          ++stats_.small_disks;
          return extend_in_small_disk(g, psi, DiskMode::kFaceAtMost5);
        }
        if (n <= 4) continue;
        const VertexId a = c[(i + n - 1) % n], b = c[(i + 2) % n];
        if (g.find_edge(a, b) != kNone) continue;
        bool clash = false;
        for (VertexId x : g.neighbors(a)) {
          if (x == v1) continue;
          const auto nb = g.neighbors(b);
          const bool on_cuff = n == 5 && x == c[(i + 3) % n];
          clash |= !on_cuff && std::find(nb.begin(), nb.end(), x) != nb.end();
        }
        if (clash) continue;
        Precoloring p2 = psi;
        p2[v2] = 0;
        p2[v1] = 0;
        for (int col = 1; col <= 3 && p2[v1] == 0; ++col) {
          if (col != psi[a] && col != psi[b]) p2[v1] = col;
        }
        ++stats_.contractions;
        LiftLink link;
        link.kind = LiftLink::Kind::kFix;
        link.fixed = {{v1, psi[v1]}, {v2, psi[v2]}};
        link.capacity = g.vertex_capacity();
        return lift_coloring({link}, run(Flow::kGirth5, contract_boundary_pair(g, v1, v2), p2));
      }
    }
    (void)in_b;
    return std::nullopt;
  }

  Coloring clear_disk(Flow flow, const EmbeddedGraph& g, const Precoloring& psi,
                      const Walk& c, const std::vector<int>& disk, DiskMode mode) {
    const DiskPiece piece = disk_piece(g, c, disk);
    Coloring phi = run(flow, piece.outside, psi);
    const EmbeddedGraph& d = piece.graph;
    Precoloring inner(d.vertex_capacity(), 0);
    for (VertexId v : d.cuffs()[0]) inner[v] = phi[d.origin_of(v)];
    Coloring in;
    if (piece.interior.size() <= 30) {
      ++stats_.small_disks;
      in = extend_in_small_disk(d, inner, mode);
    } else {
      in = run(flow, d, inner);
    }
    for (VertexId v : d.vertices()) phi[d.origin_of(v)] = in[v];
    return phi;
  }

  Coloring split(Flow flow, const EmbeddedGraph& g, const Precoloring& psi,
                 const std::vector<bool>& h) {
    ++stats_.splits;
    const EmbeddedGraph lg = local_copy(g);
    const SubgraphFaces an = subgraph_faces(lg, h);
    std::vector<EmbeddedGraph> pieces;
    std::vector<std::vector<VertexId>> borders, parents;
    for (std::size_t r = 0; r < an.regions.size(); ++r) {
      if (an.regions[r].is_hole) continue;
      FacePiece piece = face_subsurface(lg, h, an, static_cast<int>(r));
      borders.push_back(boundary_order(piece.graph));
      parents.emplace_back();
      for (VertexId v : borders.back()) parents.back().push_back(piece.graph.origin_of(v));
      pieces.push_back(std::move(piece.graph));
    }
    std::vector<std::pair<VertexId, VertexId>> h_adj;
    for (EdgeId e : lg.edges()) {
      if (h[e]) h_adj.push_back({lg.edge(e).u, lg.edge(e).v});
    }
    std::vector<std::map<Key, bool>> memo(pieces.size());
    auto local = [&](std::size_t p, const Precoloring& a) {
      Precoloring out(pieces[p].vertex_capacity(), 0);
      for (std::size_t i = 0; i < borders[p].size(); ++i) {
        out[borders[p][i]] = a[parents[p][i]];
      }
      return out;
    };
    const BorderSearch::Query query = [&](int p, const Precoloring& a) {
      Key key;
      for (VertexId v : parents[p]) key.push_back(static_cast<std::int8_t>(a[v]));
      key = canonical_key(key);
      auto it = memo[p].find(key);
      if (it != memo[p].end()) return it->second;
      const bool ok = decides(pieces[p], local(p, a));
      memo[p].emplace(std::move(key), ok);
      return ok;
    };
    BorderSearch search(lg.vertex_capacity(), parents, h_adj);
    const auto assign = search.run(psi, query);
    if (!assign) fail(ErrorCode::kInternal, "no coloring of the skeleton extends");
    Coloring phi = *assign;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      const Coloring part = run(flow, pieces[p], local(p, *assign));
      for (VertexId v : pieces[p].vertices()) phi[pieces[p].origin_of(v)] = part[v];
    }
    return phi;
  }

  Coloring fallback(const EmbeddedGraph& g, const Precoloring& psi) {
    ++stats_.oracle_fallbacks;
    auto phi = brute_force_3color(g, psi, cfg_.decide.oracle_cap);
    if (!phi) fail(ErrorCode::kInternal, "oracle found no extension");
    return *phi;
  }

  const ColorConfig& cfg_;
  ColorStats& stats_;
};

ColorResult finish(const EmbeddedGraph& g, const Precoloring& psi,
                   const ColorConfig& cfg, Flow flow) {
  ColorResult out;
  Colorer c(cfg, out.stats);
  if (!c.decides(g, psi)) fail(ErrorCode::kNonExtendable, "precoloring does not extend");
  out.coloring = c.run(flow, g, psi);
  if (!verify_coloring(g, out.coloring, psi)) {
    fail(ErrorCode::kInternal, "coloring failed verification");
  }
  return out;
}

}  // namespace

ColorResult color(const EmbeddedGraph& g, const Precoloring& psi,
                  const ColorConfig& cfg) {
  return finish(g, psi, cfg, Flow::kGeneral);
}

ColorResult color_girth5(const EmbeddedGraph& g, const Precoloring& psi,
                         const ColorConfig& cfg) {
  for (const Walk& c : simple_cycles(g, 4)) {
    if (!is_cuff_cycle(g, c)) {
      fail(ErrorCode::kPreconditionViolated, "a 4-cycle that is not a cuff");
    }
  }
  return finish(g, psi, cfg, Flow::kGirth5);
}

}  // namespace surfcolor
