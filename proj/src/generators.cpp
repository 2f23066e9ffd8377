#include <algorithm>
#include <random>

#include "surfcolor/oracle.hpp"

namespace surfcolor {

namespace {

// Editable rotation system used while growing instances.
struct Mesh {
  int n = 0;
  std::vector<EdgeSpec> edges;  // u == kNone marks a deleted edge
  std::vector<std::vector<Dart>> rot;
  std::vector<std::vector<VertexId>> cuffs;

  static Mesh from(const EmbeddedGraph& g) {
    Mesh m;
    m.n = g.vertex_capacity();
    m.rot.resize(m.n);
    for (int e = 0; e < g.edge_capacity(); ++e) {
      if (g.edge_alive(e)) {
        m.edges.push_back({e, g.edge(e).u, g.edge(e).v, g.sign(e)});
      } else {
        m.edges.push_back({e, kNone, kNone, 1});
      }
    }
    for (VertexId v : g.vertices()) m.rot[v] = g.rotation(v);
    m.cuffs = g.cuffs();
    return m;
  }

  VertexId add_vertex() {
    rot.emplace_back();
    return n++;
  }

  EdgeId add_edge(VertexId u, VertexId v, int sign) {
    const EdgeId e = static_cast<EdgeId>(edges.size());
    edges.push_back({e, u, v, sign});
    return e;
  }

  // Appends the darts in order; for lattice construction.
  void push(VertexId v, Dart d) { rot[v].push_back(d); }

  EmbeddedGraph build() const {
    std::vector<int> new_id(edges.size(), kNone);
    std::vector<EdgeSpec> live;
    for (const EdgeSpec& s : edges) {
      if (s.u == kNone) continue;
      new_id[s.id] = static_cast<int>(live.size());
      live.push_back({new_id[s.id], s.u, s.v, s.sign});
    }
    std::vector<std::vector<Dart>> r(n);
    for (int v = 0; v < n; ++v) {
      for (Dart d : rot[v]) r[v].push_back(2 * new_id[dart_edge(d)] + (d & 1));
    }
    std::vector<VertexId> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    return EmbeddedGraph::build(verts, live, r, cuffs);
  }
};

enum class Wrap { kNone, kPlain, kTwisted };

// w x h lattice; vertex (i, j) has id j * w + i. Rotation order is right,
// down, left, up.
Mesh lattice(int w, int h, Wrap horizontal, bool vertical_wrap) {
  Mesh m;
  for (int k = 0; k < w * h; ++k) m.add_vertex();
  auto id = [w](int i, int j) { return j * w + i; };
  std::vector<Dart> right(w * h, kNone), down(w * h, kNone),
      left(w * h, kNone), up(w * h, kNone);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      if (i + 1 < w) {
        const EdgeId e = m.add_edge(id(i, j), id(i + 1, j), 1);
        right[id(i, j)] = 2 * e;
        left[id(i + 1, j)] = 2 * e + 1;
      } else if (horizontal != Wrap::kNone) {
        const bool tw = horizontal == Wrap::kTwisted;
        const int j2 = tw ? h - 1 - j : j;
        const EdgeId e = m.add_edge(id(i, j), id(0, j2), tw ? -1 : 1);
        right[id(i, j)] = 2 * e;
        left[id(0, j2)] = 2 * e + 1;
      }
      if (j + 1 < h) {
        const EdgeId e = m.add_edge(id(i, j), id(i, j + 1), 1);
        down[id(i, j)] = 2 * e;
        up[id(i, j + 1)] = 2 * e + 1;
      } else if (vertical_wrap) {
        const EdgeId e = m.add_edge(id(i, j), id(i, 0), 1);
        down[id(i, j)] = 2 * e;
        up[id(i, 0)] = 2 * e + 1;
      }
    }
  }
  for (int v = 0; v < w * h; ++v) {
    for (Dart d : {right[v], down[v], left[v], up[v]}) {
      if (d != kNone) m.push(v, d);
    }
  }
  return m;
}

// Inserts a new vertex into face `face` of g, adjacent to the corners at the
// given walk positions. Returns nullopt if no consistent insertion exists.
std::optional<EmbeddedGraph> insert_in_face(const EmbeddedGraph& g,
                                            int face,
                                            const std::vector<int>& corners) {
  const auto& walk = g.all_faces()[face].walk;
  const int len = static_cast<int>(walk.size());
  const int expected_faces =
      static_cast<int>(g.all_faces().size()) - 1 +
      static_cast<int>(corners.size());
  for (int attempt = 0; attempt < 4; ++attempt) {
    Mesh m = Mesh::from(g);
    const VertexId x = m.add_vertex();
    std::vector<Dart> hub;
    for (int c : corners) {
      const State s = walk[c % len];
      const Dart d = state_dart(s);
      const int o = state_orientation(s);
      const VertexId a = g.origin(d);
      const int sign = (attempt & 2) ? -o : o;
      const EdgeId e = m.add_edge(a, x, sign);
      auto& r = m.rot[a];
      auto it = std::find(r.begin(), r.end(), d);
      if (o > 0) {
        r.insert(it, 2 * e);
      } else {
        r.insert(it + 1, 2 * e);
      }
      hub.push_back(2 * e + 1);
    }
    if (attempt & 1) std::reverse(hub.begin(), hub.end());
    m.rot[x] = hub;
    try {
      EmbeddedGraph out = m.build();
      if (static_cast<int>(out.all_faces().size()) == expected_faces &&
          out.surface_class() == g.surface_class()) {
        return out;
      }
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

int longest_face(const EmbeddedGraph& g) {
  int best = kNone;
  for (const Face& f : g.all_faces()) {
    if (f.is_cuff) continue;
    if (best == kNone || f.length() > g.all_faces()[best].length()) best = f.id;
  }
  return best;
}

EmbeddedGraph cap_longest_face(const EmbeddedGraph& g) {
  const int f = longest_face(g);
  std::vector<int> corners;
  for (std::size_t i = 0; i < g.all_faces()[f].length(); i += 2) {
    corners.push_back(static_cast<int>(i));
  }
  auto out = insert_in_face(g, f, corners);
  if (!out) fail(ErrorCode::kInternal, "could not cap face");
  return *out;
}

std::vector<VertexId> row(int w, int j) {
  std::vector<VertexId> r;
  for (int i = 0; i < w; ++i) r.push_back(j * w + i);
  return r;
}

void check_instance(const EmbeddedGraph& g, const SurfaceClass& want) {
  if (!(g.surface_class() == want) || !check_triangle_free(g) ||
      !g.is_simple()) {
    fail(ErrorCode::kInternal, "generator produced an invalid instance");
  }
}

}  // namespace

EmbeddedGraph cube() { return lattice(4, 2, Wrap::kPlain, false).build(); }

EmbeddedGraph grid_disk(int w, int h) {
  if (w < 2 || h < 2) fail(ErrorCode::kPreconditionViolated, "grid too small");
  Mesh m = lattice(w, h, Wrap::kNone, false);
  std::vector<VertexId> cyc;
  for (int i = 0; i < w; ++i) cyc.push_back(i);
  for (int j = 1; j < h; ++j) cyc.push_back(j * w + w - 1);
  for (int i = w - 2; i >= 0; --i) cyc.push_back((h - 1) * w + i);
  for (int j = h - 2; j >= 1; --j) cyc.push_back(j * w);
  m.cuffs.push_back(cyc);
  return m.build();
}

EmbeddedGraph grid_sphere(int w, int h) {
  if (w < 3 || h < 3) fail(ErrorCode::kPreconditionViolated, "grid too small");
  return cap_longest_face(lattice(w, h, Wrap::kNone, false).build());
}

EmbeddedGraph grid_cylinder(int w, int h) {
  if (w < 4 || h < 2) fail(ErrorCode::kPreconditionViolated, "grid too small");
  Mesh m = lattice(w, h, Wrap::kPlain, false);
  m.cuffs.push_back(row(w, 0));
  m.cuffs.push_back(row(w, h - 1));
  return m.build();
}

EmbeddedGraph grid_torus(int w, int h) {
  if (w < 4 || h < 4) fail(ErrorCode::kPreconditionViolated, "grid too small");
  return lattice(w, h, Wrap::kPlain, true).build();
}

EmbeddedGraph grid_klein(int w, int h) {
  if (w < 4 || h < 4) fail(ErrorCode::kPreconditionViolated, "grid too small");
  return lattice(w, h, Wrap::kTwisted, true).build();
}

EmbeddedGraph grid_projective(int w, int h) {
  if (w < 4 || h < 3) fail(ErrorCode::kPreconditionViolated, "grid too small");
  return cap_longest_face(lattice(w, h, Wrap::kTwisted, false).build());
}

EmbeddedGraph cycle_disk(int n) {
  if (n < 3) fail(ErrorCode::kPreconditionViolated, "cycle too short");
  std::vector<std::vector<VertexId>> nb(n);
  std::vector<VertexId> cyc(n);
  for (int i = 0; i < n; ++i) {
    nb[i] = {(i + n - 1) % n, (i + 1) % n};
    cyc[i] = i;
  }
  return EmbeddedGraph::from_neighbor_rotation(nb, {cyc});
}

std::vector<SurfaceClass> supported_surfaces() {
  return {SurfaceClass{0, 0, true}, SurfaceClass{0, 1, true},
          SurfaceClass{0, 2, true}, SurfaceClass{1, 0, false},
          SurfaceClass{2, 0, true}, SurfaceClass{2, 0, false}};
}

namespace {

EmbeddedGraph base_mesh(const SurfaceClass& s, int n, std::mt19937_64& rng) {
  auto pick = [&](int lo_w, int lo_h, int extra) {
    // Choose w x h + extra close to n with both sides at least the minimum.
    int w = lo_w, h = lo_h;
    while ((w + 1) * h + extra <= n || w * (h + 1) + extra <= n) {
      if (rng() % 2 ? (w + 1) * h + extra <= n : w * (h + 1) + extra > n) {
        ++w;
      } else {
        ++h;
      }
    }
    return std::pair{w, h};
  };
  if (s == SurfaceClass{0, 0, true}) {
    auto [w, h] = pick(3, 3, 1);
    return grid_sphere(w, h);
  }
  if (s == SurfaceClass{0, 1, true}) {
    auto [w, h] = pick(2, 2, 0);
    return grid_disk(w, h);
  }
  if (s == SurfaceClass{0, 2, true}) {
    auto [w, h] = pick(4, 2, 0);
    return grid_cylinder(w, h);
  }
  if (s == SurfaceClass{1, 0, false}) {
    auto [w, h] = pick(4, 3, 1);
    return grid_projective(w, h);
  }
  if (s == SurfaceClass{2, 0, true}) {
    auto [w, h] = pick(4, 4, 0);
    return grid_torus(w, h);
  }
  if (s == SurfaceClass{2, 0, false}) {
    auto [w, h] = pick(4, 4, 0);
    return grid_klein(w, h);
  }
  fail(ErrorCode::kUnsupportedSurface, s.name());
}

bool acceptable(const EmbeddedGraph& g, const SurfaceClass& s) {
  return g.is_simple() && check_triangle_free(g) && g.is_connected() &&
         g.surface_class() == s;
}

std::optional<EmbeddedGraph> subdivide(const EmbeddedGraph& g, EdgeId e) {
  Mesh m = Mesh::from(g);
  const VertexId x = m.add_vertex();
  const EdgeSpec old = m.edges[e];
  const EdgeId f = m.add_edge(x, old.v, 1);
  m.edges[e].v = x;
  auto& rv = m.rot[old.v];
  *std::find(rv.begin(), rv.end(), 2 * e + 1) = 2 * f + 1;
  m.rot[x] = {2 * e + 1, 2 * f};
  for (auto& c : m.cuffs) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
      const VertexId a = c[i], b = c[(i + 1) % k];
      if ((a == old.u && b == old.v) || (a == old.v && b == old.u)) {
        c.insert(c.begin() + i + 1, x);
        break;
      }
    }
  }
  try {
    return m.build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<EmbeddedGraph> delete_edge(const EmbeddedGraph& g, EdgeId e) {
  if (g.face_of_state(make_state(2 * e, 1)) ==
      g.face_of_state(make_state(2 * e, -1))) {
    return std::nullopt;
  }
  if (g.boundary_edge_mask()[e]) return std::nullopt;
  if (g.degree(g.edge(e).u) <= 1 || g.degree(g.edge(e).v) <= 1) {
    return std::nullopt;
  }
  Mesh m = Mesh::from(g);
  for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
    auto& r = m.rot[v];
    r.erase(std::remove_if(r.begin(), r.end(),
                           [e](Dart d) { return dart_edge(d) == e; }),
            r.end());
  }
  m.edges[e].u = m.edges[e].v = kNone;
  try {
    return m.build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

EmbeddedGraph random_instance(const SurfaceClass& surface, int n,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int base_target = std::max(4, n * 2 / 3);
  EmbeddedGraph g = base_mesh(surface, base_target, rng);
  const SurfaceClass s = g.surface_class();
  int deletions = std::max(1, n / 5);
  for (int tries = 0; tries < 40 * n && g.vertex_count() < n; ++tries) {
    const int op = static_cast<int>(rng() % 3);
    std::optional<EmbeddedGraph> next;
    if (op == 0) {
      const auto es = g.edges();
      next = subdivide(g, es[rng() % es.size()]);
    } else if (op == 1) {
      const auto& faces = g.all_faces();
      const Face& f = faces[rng() % faces.size()];
      if (f.is_cuff || f.length() < 4) continue;
      const int len = static_cast<int>(f.length());
      const int a = static_cast<int>(rng() % len);
      const int b = a + 2 + static_cast<int>(rng() % (len - 3));
      const VertexId va = g.origin(state_dart(f.walk[a]));
      const VertexId vb = g.origin(state_dart(f.walk[b % len]));
      if (va == vb || g.find_edge(va, vb) != kNone) continue;
      next = insert_in_face(g, f.id, {a, b % len});
    } else if (deletions > 0) {
      const auto es = g.edges();
      next = delete_edge(g, es[rng() % es.size()]);
      if (next && acceptable(*next, s)) --deletions;
    }
    if (next && acceptable(*next, s)) g = std::move(*next);
  }
  check_instance(g, s);
  return g;
}

}  // namespace surfcolor
