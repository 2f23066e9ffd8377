#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "surfcolor/embedding.hpp"

namespace surfcolor {

namespace {

// Cut graph: complement of a dual spanning tree over the graph faces, with
// pendant non-cuff vertices pruned away.
std::vector<bool> cut_graph(const EmbeddedGraph& g) {
  const auto& faces = g.all_faces();
  const auto cuff_edge = g.boundary_edge_mask();
  std::vector<bool> in_tree(g.edge_capacity(), false);
  std::vector<bool> reached(faces.size(), false);
  for (const Face& root : faces) {
    if (root.is_cuff || root.walk.empty() || reached[root.id]) continue;
    reached[root.id] = true;
    std::queue<int> q;
    q.push(root.id);
    while (!q.empty()) {
      const int f = q.front();
      q.pop();
      for (State s : faces[f].walk) {
        const EdgeId e = dart_edge(state_dart(s));
        if (cuff_edge[e]) continue;
        const int a = g.face_of_state(make_state(2 * e, 1));
        const int b = g.face_of_state(make_state(2 * e, -1));
        const int other = a == f ? b : a;
        if (reached[other] || faces[other].is_cuff) continue;
        reached[other] = true;
        in_tree[e] = true;
        q.push(other);
      }
    }
  }
  std::vector<bool> h(g.edge_capacity(), false);
  std::vector<int> deg(g.vertex_capacity(), 0);
  for (EdgeId e : g.edges()) {
    if (in_tree[e]) continue;
    h[e] = true;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<VertexId> stack;
  for (VertexId v : g.vertices()) {
    if (deg[v] == 1 && !g.is_boundary_vertex(v)) stack.push_back(v);
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (deg[v] != 1) continue;
    for (Dart d : g.rotation(v)) {
      const EdgeId e = dart_edge(d);
      if (!h[e]) continue;
      h[e] = false;
      --deg[v];
      const VertexId w = g.head(d);
      if (--deg[w] == 1 && !g.is_boundary_vertex(w)) stack.push_back(w);
      break;
    }
  }
  return h;
}

struct Segment {
  int begin = 0, end = 0;  // boundary positions, begin < end (no wrap)
  std::vector<VertexId> path;  // G vertices along the segment
};

}  // namespace

NormalRepresentation normal_representation(const EmbeddedGraph& g) {
  NormalRepresentation rep;
  rep.surface = g.surface_class();
  rep.cut_edges = cut_graph(g);
  bool any = false;
  for (EdgeId e : g.edges()) any = any || rep.cut_edges[e];
  if (!any) {
    // Sphere: the cut graph is a point; the disk is the whole sphere.
    rep.disk_graph = g;
    return rep;
  }
  const auto an = subgraph_faces(g, rep.cut_edges);
  int region = kNone;
  for (std::size_t r = 0; r < an.regions.size(); ++r) {
    if (an.regions[r].is_hole) continue;
    if (region != kNone || an.regions[r].walks.size() != 1) {
      fail(ErrorCode::kInternal, "cut graph does not have a single face");
    }
    region = static_cast<int>(r);
  }
  auto piece = face_subsurface(g, rep.cut_edges, an, region);
  rep.disk_graph = std::move(piece.graph);
  const auto& poly = rep.disk_graph.cuffs()[piece.walk_cuffs[0]];

  std::vector<int> hdeg(g.vertex_capacity(), 0);
  for (EdgeId e : g.edges()) {
    if (!rep.cut_edges[e]) continue;
    ++hdeg[g.edge(e).u];
    ++hdeg[g.edge(e).v];
  }
  for (VertexId v : g.vertices()) rep.cut_branch_vertices += hdeg[v] >= 3;

  const auto cuff_edge = g.boundary_edge_mask();
  const int m = static_cast<int>(poly.size());
  auto orig = [&](int pos) {
    return rep.disk_graph.origin_of(poly[((pos % m) + m) % m]);
  };
  // G edge along polygon edge i (from position i to i+1).
  std::vector<EdgeId> poly_edge(m);
  const auto& walk = an.regions[region].walks[0];
  for (int i = 0; i < m; ++i) poly_edge[i] = dart_edge(state_dart(walk[i]));

  std::set<VertexId> anchors;
  for (VertexId v : g.vertices()) {
    if (hdeg[v] >= 3 || hdeg[v] == 1 ||
        (hdeg[v] > 0 && g.is_boundary_vertex(v))) {
      anchors.insert(v);
    }
  }
  if (anchors.empty()) anchors.insert(orig(0));

  std::vector<Segment> segs;
  int shift = 0;
  for (int guard = 0; guard < 4 * m + 4; ++guard) {
    shift = 0;
    while (!anchors.count(orig(shift))) ++shift;
    segs.clear();
    bool split = false;
    int start = 0;
    for (int i = 1; i <= m; ++i) {
      if (!anchors.count(orig(shift + i))) continue;
      // positions start..i (relative to shift)
      if (!cuff_edge[poly_edge[(shift + start) % m]]) {
        Segment s;
        s.begin = start;
        s.end = i;
        for (int j = start; j <= i; ++j) s.path.push_back(orig(shift + j));
        if (s.path.front() == s.path.back()) {
          anchors.insert(s.path[s.path.size() / 2]);
          split = true;
          break;
        }
        segs.push_back(std::move(s));
      }
      start = i;
    }
    if (!split) break;
  }

  rep.boundary.resize(m);
  for (int i = 0; i < m; ++i) rep.boundary[i] = poly[(shift + i) % m];
  std::map<std::vector<VertexId>, int> open;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto key = segs[i].path;
    auto rkey = key;
    std::reverse(rkey.begin(), rkey.end());
    auto canon = std::min(key, rkey);
    auto it = open.find(canon);
    if (it == open.end()) {
      open.emplace(canon, static_cast<int>(i));
      continue;
    }
    const Segment& a = segs[it->second];
    const Segment& b = segs[i];
    ArcPair p;
    p.a_begin = a.begin;
    p.a_end = a.end;
    p.b_begin = b.begin;
    p.b_end = b.end;
    p.same_direction = a.path == b.path;
    rep.arc_pairs.push_back(p);
    open.erase(it);
  }
  if (!open.empty()) fail(ErrorCode::kInternal, "unpaired boundary arc");
  return rep;
}

EmbeddedGraph reglue(const NormalRepresentation& rep) {
  const EmbeddedGraph& d = rep.disk_graph;
  if (rep.boundary.empty()) return d;
  const int m = static_cast<int>(rep.boundary.size());
  std::vector<int> pos_of(d.vertex_capacity(), kNone);
  for (int i = 0; i < m; ++i) pos_of[rep.boundary[i]] = i;
  // Polygon edge i joins boundary[i] and boundary[i+1]; it is the last dart
  // of boundary[i]'s rotation.
  std::vector<EdgeId> poly_edge(m);
  std::vector<int> poly_index(d.edge_capacity(), kNone);
  for (int i = 0; i < m; ++i) {
    poly_edge[i] = dart_edge(d.rotation(rep.boundary[i]).back());
    poly_index[poly_edge[i]] = i;
  }
  std::vector<int> partner(m, kNone);
  std::vector<int> same(m, 0);
  for (const ArcPair& p : rep.arc_pairs) {
    const int len = p.a_end - p.a_begin;
    for (int k = 0; k < len; ++k) {
      const int i = (p.a_begin + k) % m;
      const int j = (p.same_direction ? p.b_begin + k : p.b_end - 1 - k) % m;
      partner[i] = j;
      partner[j] = i;
      same[i] = same[j] = p.same_direction;
    }
  }
  std::vector<int> cls(m);
  std::iota(cls.begin(), cls.end(), 0);
  auto find = [&](int x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  auto unite = [&](int a, int b) { cls[find(b)] = find(a); };
  for (int i = 0; i < m; ++i) {
    const int j = partner[i];
    if (j == kNone) continue;
    if (same[i]) {
      unite(i, j);
      unite((i + 1) % m, (j + 1) % m);
    } else {
      unite(i, (j + 1) % m);
      unite((i + 1) % m, j);
    }
  }
  auto new_vertex = [&](VertexId x) {
    return pos_of[x] == kNone ? d.origin_of(x)
                              : d.origin_of(rep.boundary[find(pos_of[x])]);
  };
  // Representative D edge for each G edge.
  auto rep_edge = [&](EdgeId e) {
    const int i = poly_index[e];
    if (i != kNone && partner[i] != kNone && partner[i] < i) {
      return poly_edge[partner[i]];
    }
    return e;
  };

  std::vector<int> eps(d.vertex_capacity(), 1);
  std::map<VertexId, std::vector<EdgeId>> order;  // G vertex -> D rep edges
  std::vector<bool> done(m, false);
  auto chain = [&](int start, int dir) {
    auto& out = order[new_vertex(rep.boundary[start])];
    int p = start, o = dir;
    bool first = true;
    while (true) {
      done[p] = true;
      eps[rep.boundary[p]] = o;
      const auto& r = d.rotation(rep.boundary[p]);
      const int n = static_cast<int>(r.size());
      for (int k = first ? 0 : 1; k < n; ++k) {
        out.push_back(rep_edge(dart_edge(r[o > 0 ? k : n - 1 - k])));
      }
      first = false;
      const int exit_edge = o > 0 ? p : (p + m - 1) % m;
      const int j = partner[exit_edge];
      if (j == kNone) break;
      const bool q_start = same[exit_edge] ? o > 0 : o < 0;
      const int q = q_start ? j : (j + 1) % m;
      if (q == start) {
        out.pop_back();
        break;
      }
      if (done[q]) fail(ErrorCode::kInternal, "inconsistent gluing");
      p = q;
      o = q_start ? -1 : 1;
    }
  };
  for (int i = 0; i < m; ++i) {
    if (done[i]) continue;
    if (partner[(i + m - 1) % m] == kNone) {
      chain(i, 1);
    } else if (partner[i] == kNone) {
      chain(i, -1);
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!done[i]) chain(i, 1);
  }

  std::map<EdgeId, EdgeSpec> gedges;  // keyed by rep D edge
  for (EdgeId e : d.edges()) {
    if (rep_edge(e) != e) continue;
    const Edge& de = d.edge(e);
    const int sign = d.sign(e) * eps[de.u] * eps[de.v];
    gedges[e] = {d.edge_origin[e], new_vertex(de.u), new_vertex(de.v), sign};
  }
  std::map<VertexId, std::vector<EdgeId>> plain;
  for (VertexId v : d.vertices()) {
    if (pos_of[v] != kNone) continue;
    for (Dart x : d.rotation(v)) plain[new_vertex(v)].push_back(dart_edge(x));
  }
  for (auto& [v, es] : plain) order[v] = es;

  int vcap = 0, ecap = 0;
  for (auto& [v, es] : order) vcap = std::max(vcap, v + 1);
  for (auto& [e, s] : gedges) ecap = std::max(ecap, s.id + 1);
  std::vector<std::vector<Dart>> rotation(vcap);
  std::vector<VertexId> verts;
  for (auto& [v, es] : order) {
    verts.push_back(v);
    for (EdgeId e : es) {
      const EdgeSpec& s = gedges.at(e);
      rotation[v].push_back(2 * s.id + (s.u == v ? 0 : 1));
    }
  }
  std::vector<EdgeSpec> specs;
  for (auto& [e, s] : gedges) specs.push_back(s);

  // Unglued polygon edges trace the cuffs.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (int i = 0; i < m; ++i) {
    if (partner[i] != kNone) continue;
    const VertexId a = new_vertex(rep.boundary[i]);
    const VertexId b = new_vertex(rep.boundary[(i + 1) % m]);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<VertexId>> cuffs;
  std::set<VertexId> used;
  for (auto& [v0, nb] : adj) {
    if (used.count(v0)) continue;
    std::vector<VertexId> cyc{v0};
    used.insert(v0);
    VertexId prev = kNone, cur = v0;
    while (true) {
      const auto& ns = adj[cur];
      VertexId nxt = ns[0] != prev ? ns[0] : ns[1];
      if (nxt == v0) break;
      cyc.push_back(nxt);
      used.insert(nxt);
      prev = cur;
      cur = nxt;
    }
    cuffs.push_back(std::move(cyc));
  }
  return EmbeddedGraph::build(verts, specs, rotation, cuffs);
}

}  // namespace surfcolor
