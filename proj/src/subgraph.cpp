#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "surfcolor/embedding.hpp"

namespace surfcolor {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Rotation of H at each vertex: G's rotation restricted to H darts.
struct SubRotation {
  const EmbeddedGraph* g;
  std::vector<int> pos;  // dart -> index within restricted rotation
  std::vector<std::vector<Dart>> rot;

  SubRotation(const EmbeddedGraph& graph, const std::vector<bool>& h_edges)
      : g(&graph),
        pos(graph.dart_capacity(), kNone),
        rot(graph.vertex_capacity()) {
    for (VertexId v : graph.vertices()) {
      for (Dart d : graph.rotation(v)) {
        if (!h_edges[dart_edge(d)]) continue;
        pos[d] = static_cast<int>(rot[v].size());
        rot[v].push_back(d);
      }
    }
  }

  State next(State s) const {
    const Dart d = state_dart(s);
    const int o = state_orientation(s) * g->sign(dart_edge(d));
    const Dart t = twin(d);
    const auto& r = rot[g->origin(t)];
    const int n = static_cast<int>(r.size());
    const int i = pos[t];
    return make_state(r[o > 0 ? (i + 1) % n : (i + n - 1) % n], o);
  }
};

}  // namespace

int Region::length() const {
  int n = 0;
  for (const auto& w : walks) n += static_cast<int>(w.size());
  return n;
}

SubgraphFaces subgraph_faces(const EmbeddedGraph& g,
                             const std::vector<bool>& h_edges_in) {
  SubgraphFaces out;
  out.in_h_edge.assign(g.edge_capacity(), false);
  out.in_h_vertex.assign(g.vertex_capacity(), false);
  for (EdgeId e : g.edges()) {
    if (e < static_cast<int>(h_edges_in.size()) && h_edges_in[e]) {
      out.in_h_edge[e] = true;
      out.in_h_vertex[g.edge(e).u] = true;
      out.in_h_vertex[g.edge(e).v] = true;
    }
  }
  const auto& faces = g.all_faces();
  const int nf = static_cast<int>(faces.size());
  UnionFind uf(nf);
  for (EdgeId e : g.edges()) {
    if (out.in_h_edge[e]) continue;
    uf.unite(g.face_of_state(make_state(2 * e, 1)),
             g.face_of_state(make_state(2 * e, -1)));
  }
  std::map<int, int> root_region;
  out.region_of_face.assign(nf, kNone);
  for (int f = 0; f < nf; ++f) {
    if (faces[f].walk.empty()) continue;  // isolated vertex
    const int r = uf.find(f);
    auto [it, inserted] =
        root_region.emplace(r, static_cast<int>(out.regions.size()));
    if (inserted) out.regions.emplace_back();
    out.region_of_face[f] = it->second;
    out.regions[it->second].g_faces.push_back(f);
    if (faces[f].is_cuff) ++out.regions[it->second].cuff_holes;
  }
  for (EdgeId e : g.edges()) {
    if (out.in_h_edge[e]) continue;
    ++out.regions[out.region_of_face[g.face_of_dart(2 * e)]].interior_edges;
  }
  for (VertexId v : g.vertices()) {
    if (out.in_h_vertex[v] || g.degree(v) == 0) continue;
    ++out.regions[out.region_of_face[g.face_of_dart(g.rotation(v)[0])]]
          .interior_vertices;
  }

  // Boundary walks: orbits of H's own face tracing, one per mirror pair.
  SubRotation sub(g, out.in_h_edge);
  std::vector<bool> visited(2 * g.dart_capacity(), false);
  for (EdgeId e : g.edges()) {
    if (!out.in_h_edge[e]) continue;
    for (Dart d : {2 * e, 2 * e + 1}) {
      for (int o : {1, -1}) {
        const State start = make_state(d, o);
        if (visited[start]) continue;
        std::vector<State> walk;
        State s = start;
        do {
          visited[s] = true;
          walk.push_back(s);
          s = sub.next(s);
        } while (s != start);
        for (State t : walk) visited[g.mirror_state(t)] = true;
        const int r = out.region_of_face[g.face_of_state(start)];
        out.regions[r].walks.push_back(std::move(walk));
      }
    }
  }

  // Orientability: choose an orbit per G face so that every interior edge is
  // crossed once in each direction.
  std::vector<std::vector<std::pair<int, Dart>>> occurrences(
      g.edge_capacity());
  for (const Face& f : faces) {
    for (State s : f.walk) {
      const Dart d = state_dart(s);
      occurrences[dart_edge(d)].push_back({f.id, d});
    }
  }
  std::vector<int> flip(nf, 0);
  std::vector<bool> region_orientable(out.regions.size(), true);
  std::vector<std::vector<std::pair<int, int>>> constraints(nf);
  for (EdgeId e : g.edges()) {
    if (out.in_h_edge[e]) continue;
    const auto& occ = occurrences[e];
    if (occ.size() != 2) fail(ErrorCode::kInternal, "edge occurrence count");
    // parity: flip_a xor flip_b must equal (d_a == d_b)
    const int parity = occ[0].second == occ[1].second ? 1 : 0;
    if (occ[0].first == occ[1].first) {
      if (parity) {
        region_orientable[out.region_of_face[occ[0].first]] = false;
      }
      continue;
    }
    constraints[occ[0].first].push_back({occ[1].first, parity});
    constraints[occ[1].first].push_back({occ[0].first, parity});
  }
  std::vector<bool> seen(nf, false);
  for (int f = 0; f < nf; ++f) {
    if (seen[f] || out.region_of_face[f] == kNone) continue;
    seen[f] = true;
    std::vector<int> stack{f};
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (auto [b, parity] : constraints[a]) {
        const int want = flip[a] ^ parity;
        if (!seen[b]) {
          seen[b] = true;
          flip[b] = want;
          stack.push_back(b);
        } else if (flip[b] != want) {
          region_orientable[out.region_of_face[a]] = false;
        }
      }
    }
  }

  for (std::size_t r = 0; r < out.regions.size(); ++r) {
    Region& reg = out.regions[r];
    const int b = static_cast<int>(reg.walks.size());
    reg.is_hole = reg.g_faces.size() == 1 && faces[reg.g_faces[0]].is_cuff &&
                  b == 1 && reg.interior_edges == 0 &&
                  reg.interior_vertices == 0;
    if (reg.is_hole) {
      reg.cuff_holes = 0;
      reg.surface = SurfaceClass{0, 1, true};
      continue;
    }
    const int chi_open = static_cast<int>(reg.g_faces.size()) -
                         reg.interior_edges + reg.interior_vertices;
    const int chi_closed = chi_open + b;
    reg.surface.euler_genus = 2 - chi_closed;
    reg.surface.cuff_count = b + reg.cuff_holes;
    reg.surface.orientable = region_orientable[r];
  }
  return out;
}

FacePiece face_subsurface(const EmbeddedGraph& g,
                          const std::vector<bool>& h_edges,
                          const SubgraphFaces& an, int region) {
  const Region& reg = an.regions.at(region);
  if (reg.is_hole) {
    fail(ErrorCode::kPreconditionViolated, "region is a cuff hole");
  }
  for (const auto& c : g.cuffs()) {
    int touched = 0;
    for (VertexId v : c) touched += an.in_h_vertex[v] ? 1 : 0;
    if (touched == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      EdgeId e = g.find_edge(c[j], c[(j + 1) % c.size()]);
      if (!an.in_h_edge[e]) {
        fail(ErrorCode::kPreconditionViolated,
             "a cuff meets H without lying in H");
      }
    }
  }
  (void)h_edges;
  std::vector<bool> in_region_face(g.all_faces().size(), false);
  for (int f : reg.g_faces) in_region_face[f] = true;

  std::vector<VertexId> new_id(g.vertex_capacity(), kNone);
  std::vector<VertexId> vorigin;
  std::vector<int> eps;
  for (VertexId v : g.vertices()) {
    if (an.in_h_vertex[v] || g.degree(v) == 0) continue;
    if (!in_region_face[g.face_of_dart(g.rotation(v)[0])]) continue;
    new_id[v] = static_cast<VertexId>(vorigin.size());
    vorigin.push_back(v);
    eps.push_back(1);
  }
  // Corners: one copy per walk position.
  struct Corner {
    VertexId copy;
    std::vector<Dart> inner;  // G darts strictly inside the corner
    int walk, pos;
  };
  std::vector<Corner> corners;
  std::vector<std::vector<int>> corner_index(reg.walks.size());
  std::vector<VertexId> dart_copy(g.dart_capacity(), kNone);
  for (std::size_t w = 0; w < reg.walks.size(); ++w) {
    const auto& walk = reg.walks[w];
    const int m = static_cast<int>(walk.size());
    for (int i = 0; i < m; ++i) {
      const State prev = walk[(i + m - 1) % m];
      const Dart din = state_dart(prev);
      const Dart dout = state_dart(walk[i]);
      const int o = state_orientation(walk[i]);
      Corner c;
      c.copy = static_cast<VertexId>(vorigin.size());
      c.walk = static_cast<int>(w);
      c.pos = i;
      vorigin.push_back(g.origin(dout));
      eps.push_back(o);
      for (Dart x = g.rotate(twin(din), o); x != dout; x = g.rotate(x, o)) {
        c.inner.push_back(x);
        dart_copy[x] = c.copy;
      }
      corner_index[w].push_back(static_cast<int>(corners.size()));
      corners.push_back(std::move(c));
    }
  }
  auto endpoint = [&](Dart d) -> VertexId {
    const VertexId v = g.origin(d);
    if (an.in_h_vertex[v]) return dart_copy[d];
    return new_id[v];
  };

  std::vector<EdgeSpec> edges;
  std::vector<EdgeId> eorigin;
  std::vector<EdgeId> new_edge(g.edge_capacity(), kNone);
  for (EdgeId e : g.edges()) {
    if (an.in_h_edge[e]) continue;
    if (!in_region_face[g.face_of_dart(2 * e)]) continue;
    const VertexId a = endpoint(2 * e), b = endpoint(2 * e + 1);
    if (a == kNone || b == kNone) {
      fail(ErrorCode::kInternal, "interior edge endpoint without copy");
    }
    new_edge[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({new_edge[e], a, b, g.sign(e) * eps[a] * eps[b]});
    eorigin.push_back(e);
  }
  // Boundary edge for walk w position i joins corner i to corner i+1.
  std::vector<std::vector<EdgeId>> boundary_edge(reg.walks.size());
  for (std::size_t w = 0; w < reg.walks.size(); ++w) {
    const int m = static_cast<int>(reg.walks[w].size());
    for (int i = 0; i < m; ++i) {
      const EdgeId id = static_cast<EdgeId>(edges.size());
      edges.push_back({id, corners[corner_index[w][i]].copy,
                       corners[corner_index[w][(i + 1) % m]].copy, 1});
      eorigin.push_back(dart_edge(state_dart(reg.walks[w][i])));
      boundary_edge[w].push_back(id);
    }
  }
  auto new_dart = [&](Dart x) {
    return 2 * new_edge[dart_edge(x)] + (x & 1);
  };
  const int nv = static_cast<int>(vorigin.size());
  std::vector<std::vector<Dart>> rot(nv);
  for (VertexId v : g.vertices()) {
    if (new_id[v] == kNone) continue;
    for (Dart x : g.rotation(v)) rot[new_id[v]].push_back(new_dart(x));
  }
  for (const Corner& c : corners) {
    const int m = static_cast<int>(reg.walks[c.walk].size());
    const EdgeId in = boundary_edge[c.walk][(c.pos + m - 1) % m];
    const EdgeId out_e = boundary_edge[c.walk][c.pos];
    auto& r = rot[c.copy];
    r.push_back(2 * in + 1);
    for (Dart x : c.inner) r.push_back(new_dart(x));
    r.push_back(2 * out_e);
  }
  std::vector<std::vector<VertexId>> cuffs;
  FacePiece piece;
  for (std::size_t w = 0; w < reg.walks.size(); ++w) {
    std::vector<VertexId> cyc;
    for (int ci : corner_index[w]) cyc.push_back(corners[ci].copy);
    piece.walk_cuffs.push_back(static_cast<int>(cuffs.size()));
    cuffs.push_back(std::move(cyc));
  }
  for (std::size_t i = 0; i < g.cuffs().size(); ++i) {
    if (!in_region_face[g.cuff_face(static_cast<int>(i))]) continue;
    if (an.in_h_vertex[g.cuffs()[i][0]]) continue;
    std::vector<VertexId> cyc;
    for (VertexId v : g.cuffs()[i]) cyc.push_back(new_id[v]);
    cuffs.push_back(std::move(cyc));
  }
  std::vector<VertexId> verts(nv);
  std::iota(verts.begin(), verts.end(), 0);
  BuildOptions opts;
  opts.allow_multi_edges = true;
  piece.graph = EmbeddedGraph::build(verts, edges, rot, cuffs, opts);
  piece.graph.vertex_origin.resize(nv);
  for (int i = 0; i < nv; ++i) piece.graph.vertex_origin[i] = g.origin_of(vorigin[i]);
  piece.graph.edge_origin.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeId oe = eorigin[i];
    piece.graph.edge_origin[i] =
        oe < static_cast<int>(g.edge_origin.size()) && g.edge_origin[oe] != kNone
            ? g.edge_origin[oe]
            : oe;
  }
  piece.surface = reg.surface;
  return piece;
}

DiskInterior disk_interior(const EmbeddedGraph& g,
                           const std::vector<int>& disk_faces) {
  std::vector<bool> in(g.all_faces().size(), false);
  for (int f : disk_faces) in.at(f) = true;
  DiskInterior out;
  std::vector<bool> inner_edge(g.edge_capacity(), false);
  for (EdgeId e : g.edges()) {
    if (in[g.face_of_state(make_state(2 * e, 1))] &&
        in[g.face_of_state(make_state(2 * e, -1))]) {
      inner_edge[e] = true;
      out.edges.push_back(e);
    }
  }
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) continue;
    bool all = true;
    for (Dart d : g.rotation(v)) all = all && inner_edge[dart_edge(d)];
    if (all) out.vertices.push_back(v);
  }
  return out;
}

EmbeddedGraph delete_disk_interior(const EmbeddedGraph& g,
                                   const std::vector<int>& disk_faces) {
  if (disk_faces.empty()) fail(ErrorCode::kNotADisk, "empty region");
  const auto interior = disk_interior(g, disk_faces);
  std::vector<bool> h(g.edge_capacity(), false);
  for (EdgeId e : g.edges()) h[e] = true;
  for (EdgeId e : interior.edges) h[e] = false;
  const auto an = subgraph_faces(g, h);
  const int r = an.region_of_face[disk_faces[0]];
  std::set<int> want(disk_faces.begin(), disk_faces.end());
  const Region& reg = an.regions[r];
  std::set<int> got(reg.g_faces.begin(), reg.g_faces.end());
  if (want != got || !reg.two_cell() || reg.is_hole) {
    fail(ErrorCode::kNotADisk, "faces do not form an open disk");
  }
  int outside = 0;
  for (const Face& f : g.all_faces()) outside += want.count(f.id) ? 0 : 1;
  if (outside == 1 && g.cuffs().empty()) {
    fail(ErrorCode::kNotADisk,
         "complement is a single face; delete that face instead");
  }
  return g.without(interior.vertices, interior.edges);
}

std::vector<VertexId> walk_vertices(const EmbeddedGraph& g, const Walk& w) {
  std::vector<VertexId> out;
  std::set<VertexId> seen;
  for (Dart d : w.darts) {
    if (seen.insert(g.origin(d)).second) out.push_back(g.origin(d));
  }
  return out;
}

bool is_closed_walk(const EmbeddedGraph& g, const Walk& w) {
  if (w.darts.empty()) return false;
  for (std::size_t i = 0; i < w.darts.size(); ++i) {
    const Dart d = w.darts[i];
    if (!g.edge_alive(dart_edge(d))) return false;
    if (g.head(d) != g.origin(w.darts[(i + 1) % w.darts.size()])) return false;
  }
  return true;
}

bool is_cycle(const EmbeddedGraph& g, const Walk& w) {
  if (!is_closed_walk(g, w) || w.length() < 2) return false;
  if (w.length() == 2 && dart_edge(w.darts[0]) == dart_edge(w.darts[1])) {
    return false;
  }
  return walk_vertices(g, w).size() == w.length();
}

std::vector<bool> walk_edge_mask(const EmbeddedGraph& g, const Walk& w) {
  std::vector<bool> mask(g.edge_capacity(), false);
  for (Dart d : w.darts) mask[dart_edge(d)] = true;
  return mask;
}

Walk walk_from_vertices(const EmbeddedGraph& g,
                        const std::vector<VertexId>& cyc) {
  Walk w;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    Dart found = kNone;
    for (Dart d : g.rotation(a)) {
      if (g.head(d) == b) {
        found = d;
        break;
      }
    }
    if (found == kNone) {
      fail(ErrorCode::kValidationError, "vertex sequence is not a walk");
    }
    w.darts.push_back(found);
  }
  return w;
}

}  // namespace surfcolor
