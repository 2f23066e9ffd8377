#include "surfcolor/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <queue>

namespace surfcolor {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + a, r.begin() + b);
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

namespace {

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

bool is_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Word aa = a;
  aa.insert(aa.end(), a.begin(), a.end());
  return std::search(aa.begin(), aa.end(), b.begin(), b.end()) != aa.end();
}

// Dehn's algorithm; valid when the relator has small cancellation C'(1/6),
// which holds for one-vertex surface words of length at least 8.
bool dehn_trivial(Word w, const Word& relator) {
  const int n = static_cast<int>(relator.size());
  std::vector<Word> rots;
  for (const Word& base : {relator, inverse(relator)}) {
    for (int i = 0; i < n; ++i) {
      Word r(base.begin() + i, base.end());
      r.insert(r.end(), base.begin(), base.begin() + i);
      rots.push_back(std::move(r));
    }
  }
  for (;;) {
    w = cyclic_reduce(w);
    if (w.empty()) return true;
    const int m = static_cast<int>(w.size());
    bool changed = false;
    for (const Word& rho : rots) {
      for (int p = 0; p < m && !changed; ++p) {
        int len = 0;
        while (len < n && len < m && w[(p + len) % m] == rho[len]) ++len;
        if (2 * len <= n) continue;
        Word next = inverse(Word(rho.begin() + len, rho.end()));
        for (int i = len; i < m; ++i) next.push_back(w[(p + i) % m]);
        w = std::move(next);
        changed = true;
      }
      if (changed) break;
    }
    if (!changed) return false;
  }
}

}  // namespace

HomotopyGroup::HomotopyGroup(const EmbeddedGraph& g, std::vector<bool> holes)
    : g_(&g) {
  const auto& faces = g.all_faces();
  const int nf = static_cast<int>(faces.size());
  if (holes.empty()) {
    holes.assign(nf, false);
    for (int f = 0; f < nf; ++f) holes[f] = faces[f].is_cuff;
  }
  SurfaceClass sc = g.surface_class();
  closed_ = {sc.euler_genus, 0, sc.orientable};

  // Spanning forest.
  in_tree_.assign(g.edge_capacity(), false);
  std::vector<bool> seen(g.vertex_capacity(), false);
  for (VertexId r : g.vertices()) {
    if (seen[r]) continue;
    seen[r] = true;
    std::queue<VertexId> q;
    q.push(r);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (Dart d : g.rotation(v)) {
        const VertexId w = g.head(d);
        if (seen[w]) continue;
        seen[w] = true;
        in_tree_[dart_edge(d)] = true;
        q.push(w);
      }
    }
  }

  // Dual spanning tree over the remaining edges, rooted at a hole if any.
  auto side = [&](EdgeId e, int o) {
    return g.face_of_state(make_state(2 * e, o));
  };
  int root = 0;
  for (int f = 0; f < nf; ++f) {
    if (holes[f]) {
      root = f;
      break;
    }
  }
  std::vector<std::vector<EdgeId>> dual(nf);
  for (EdgeId e : g.edges()) {
    if (in_tree_[e]) continue;
    const int a = side(e, 1), b = side(e, -1);
    if (a == b) continue;
    dual[a].push_back(e);
    dual[b].push_back(e);
  }
  std::vector<EdgeId> parent_edge(nf, kNone);
  std::vector<bool> in_cotree(g.edge_capacity(), false);
  std::vector<int> order{root};
  std::vector<bool> reached(nf, false);
  reached[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int f = order[i];
    for (EdgeId e : dual[f]) {
      const int h = side(e, 1) == f ? side(e, -1) : side(e, 1);
      if (reached[h]) continue;
      reached[h] = true;
      parent_edge[h] = e;
      in_cotree[e] = true;
      order.push_back(h);
    }
  }

  edge_word_.assign(g.edge_capacity(), Word{});
  for (EdgeId e : g.edges()) {
    if (!in_tree_[e] && !in_cotree[e]) edge_word_[e] = {++generators_};
  }
  for (int f = 0; f < nf; ++f) {
    if (f != root && holes[f] && parent_edge[f] != kNone) {
      edge_word_[parent_edge[f]] = {++generators_};
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int f = *it;
    if (f == root || holes[f]) continue;
    const EdgeId p = parent_edge[f];
    const auto& walk = faces[f].walk;
    const int len = static_cast<int>(walk.size());
    int at = 0;
    while (dart_edge(state_dart(walk[at])) != p) ++at;
    Word rest;
    for (int i = 1; i < len; ++i) {
      append(rest, dart_word(state_dart(walk[(at + i) % len])));
    }
    // x^eps * rest = 1
    const bool forward = (state_dart(walk[at]) & 1) == 0;
    edge_word_[p] = free_reduce(forward ? inverse(rest) : rest);
  }
  if (!holes[root]) {
    has_relator_ = true;
    Word r;
    for (State s : faces[root].walk) append(r, dart_word(state_dart(s)));
    relator_ = cyclic_reduce(r);
  }
}

HomotopyGroup HomotopyGroup::patched(const EmbeddedGraph& g,
                                     const std::vector<int>& patched_cuffs,
                                     const std::vector<int>& drilled_faces) {
  const auto& faces = g.all_faces();
  std::vector<bool> holes(faces.size(), false);
  for (std::size_t f = 0; f < faces.size(); ++f) holes[f] = faces[f].is_cuff;
  for (int c : patched_cuffs) holes[g.cuff_face(c)] = false;
  for (int f : drilled_faces) holes[f] = true;
  return HomotopyGroup(g, std::move(holes));
}

Word HomotopyGroup::dart_word(Dart d) const {
  const Word& w = edge_word_[dart_edge(d)];
  return (d & 1) ? inverse(w) : w;
}

Word HomotopyGroup::word(const Walk& w) const {
  Word out;
  for (Dart d : w.darts) append(out, dart_word(d));
  return free_reduce(out);
}

bool HomotopyGroup::is_trivial(const Word& w) const {
  Word r = cyclic_reduce(w);
  if (r.empty()) return true;
  if (!has_relator_) return false;
  if (closed_.euler_genus == 0) return true;
  if (closed_.orientable && closed_.euler_genus == 2) {
    std::map<int, int> sum;
    for (int x : r) sum[std::abs(x)] += x > 0 ? 1 : -1;
    return std::all_of(sum.begin(), sum.end(),
                       [](const auto& kv) { return kv.second == 0; });
  }
  if (closed_.euler_genus >= 4) return dehn_trivial(r, relator_);
  fail(ErrorCode::kPreconditionViolated,
       "word problem on this closed surface needs the walk (double cover)");
}

bool HomotopyGroup::is_trivial(const Walk& w) const {
  if (has_relator_ && !closed_.orientable && closed_.euler_genus < 4) {
    auto lifted = lift_walk(*g_, w);
    if (!lifted) return false;
    if (!cover_group_) {
      cover_ = std::make_shared<EmbeddedGraph>(orientation_cover(*g_));
      cover_group_ = std::make_shared<HomotopyGroup>(
          *cover_, std::vector<bool>(cover_->all_faces().size(), false));
    }
    return cover_group_->is_trivial(cover_group_->word(*lifted));
  }
  return is_trivial(word(w));
}

bool HomotopyGroup::freely_homotopic(const Word& a, const Word& b,
                                     bool allow_inverse) const {
  if (has_relator_) {
    fail(ErrorCode::kPreconditionViolated,
         "free homotopy is only decided with a hole present");
  }
  const Word ra = cyclic_reduce(a), rb = cyclic_reduce(b);
  return is_rotation(ra, rb) || (allow_inverse && is_rotation(ra, inverse(rb)));
}

EmbeddedGraph orientation_cover(const EmbeddedGraph& g) {
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices()) {
    verts.push_back(2 * v);
    verts.push_back(2 * v + 1);
  }
  std::vector<EdgeSpec> edges;
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    const int flip = ed.sign < 0 ? 1 : 0;
    for (int s = 0; s < 2; ++s) {
      edges.push_back({2 * e + s, 2 * ed.u + s, 2 * ed.v + (s ^ flip), 1});
    }
  }
  std::vector<std::vector<Dart>> rot(2 * g.vertex_capacity());
  for (VertexId v : g.vertices()) {
    for (int t = 0; t < 2; ++t) {
      auto& out = rot[2 * v + t];
      for (Dart d : g.rotation(v)) {
        const EdgeId e = dart_edge(d);
        const int flip = g.sign(e) < 0 ? 1 : 0;
        out.push_back((d & 1) ? 2 * (2 * e + (t ^ flip)) + 1 : 2 * (2 * e + t));
      }
      if (t == 1) std::reverse(out.begin(), out.end());
    }
  }
  BuildOptions opt;
  opt.allow_multi_edges = true;
  return EmbeddedGraph::build(verts, edges, rot, {}, opt);
}

std::optional<Walk> lift_walk(const EmbeddedGraph& g, const Walk& w) {
  Walk out;
  int t = 0;
  for (Dart d : w.darts) {
    const EdgeId e = dart_edge(d);
    const int flip = g.sign(e) < 0 ? 1 : 0;
    if ((d & 1) == 0) {
      out.darts.push_back(2 * (2 * e + t));
      t ^= flip;
    } else {
      const int s = t ^ flip;
      out.darts.push_back(2 * (2 * e + s) + 1);
      t = s;
    }
  }
  if (t != 0) return std::nullopt;
  return out;
}


namespace {

Walk walk_of_states(const std::vector<State>& states) {
  Walk w;
  for (State s : states) w.darts.push_back(state_dart(s));
  return w;
}

bool same_closed_walk(const Walk& a, const Walk& b) {
  if (a.length() != b.length()) return false;
  std::vector<Dart> rev(b.darts.rbegin(), b.darts.rend());
  for (Dart& d : rev) d = twin(d);
  auto rot = [&](const std::vector<Dart>& x) {
    std::vector<Dart> xx = a.darts;
    xx.insert(xx.end(), a.darts.begin(), a.darts.end());
    return std::search(xx.begin(), xx.end(), x.begin(), x.end()) != xx.end();
  };
  return a.empty() || rot(b.darts) || rot(rev);
}

// Every non-backtracking closed walk of exactly `len` darts from v, until
// `visit` returns true.
bool closed_walks_from(const EmbeddedGraph& g, VertexId v, int len,
                       const std::function<bool(const Walk&)>& visit) {
  Walk w;
  std::function<bool(VertexId)> go = [&](VertexId at) {
    if (static_cast<int>(w.length()) == len) return at == v && visit(w);
    for (Dart d : g.rotation(at)) {
      if (!w.empty() && d == twin(w.darts.back())) continue;
      w.darts.push_back(d);
      if (go(g.head(d))) return true;
      w.darts.pop_back();
    }
    return false;
  };
  return go(v);
}


bool is_cuff_cycle(const EmbeddedGraph& g, const Walk& c) {
  auto mask = walk_edge_mask(g, c);
  auto cuff_mask = g.boundary_edge_mask();
  for (const auto& cuff : g.cuffs()) {
    if (cuff.size() != c.length()) continue;
    bool all = true;
    for (std::size_t i = 0; i < cuff.size() && all; ++i) {
      const EdgeId e = g.find_edge(cuff[i], cuff[(i + 1) % cuff.size()]);
      all = e != kNone && mask[e];
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> bounded_disks(const EmbeddedGraph& g,
                                            const Walk& w) {
  std::vector<std::vector<int>> out;
  if (w.empty() || !is_closed_walk(g, w)) return out;
  SubgraphFaces sf = subgraph_faces(g, walk_edge_mask(g, w));
  for (const Region& r : sf.regions) {
    if (r.is_hole || !r.two_cell()) continue;
    // A one-sided cycle has a disk complement whose walk runs it twice.
    if (!same_closed_walk(walk_of_states(r.walks[0]), w)) continue;
    std::vector<int> faces = r.g_faces;
    std::sort(faces.begin(), faces.end());
    out.push_back(std::move(faces));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_contractible(const EmbeddedGraph& g, const Walk& w,
                     std::vector<int>* disk_faces) {
  auto disks = bounded_disks(g, w);
  if (disks.empty()) return false;
  if (disk_faces) *disk_faces = disks.front();
  return true;
}

bool surrounds_cuff(const EmbeddedGraph& g, const Walk& cycle, int cuff) {
  if (!is_cycle(g, cycle)) {
    fail(ErrorCode::kPreconditionViolated, "surrounds_cuff expects a cycle");
  }
  const int hole = g.cuff_face(cuff);
  SubgraphFaces sf = subgraph_faces(g, walk_edge_mask(g, cycle));
  bool patched_disk = false;
  for (const Region& r : sf.regions) {
    if (!r.is_hole && r.two_cell() && r.walks[0].size() == cycle.length()) {
      return false;
    }
    const bool has_hole = std::find(r.g_faces.begin(), r.g_faces.end(),
                                    hole) != r.g_faces.end();
    if (!has_hole) continue;
    if (r.is_hole ||
        (r.surface.euler_genus == 0 && r.walks.size() == 1 &&
         r.walks[0].size() == cycle.length() && r.cuff_holes == 1)) {
      patched_disk = true;
    }
  }
  return patched_disk;
}

std::optional<Walk> short_essential_walk(const EmbeddedGraph& g, VertexId v,
                                         int d) {
  std::vector<HomotopyGroup> groups;
  const int c = static_cast<int>(g.cuffs().size());
  if (c == 0) groups.emplace_back(g);
  for (int i = 0; i < c; ++i) groups.push_back(HomotopyGroup::patched(g, {i}));
  std::optional<Walk> out;
  for (int len = 1; len <= d && !out; ++len) {
    closed_walks_from(g, v, len, [&](const Walk& w) {
      for (const auto& grp : groups) {
        if (grp.is_trivial(w)) return false;
      }
      out = w;
      return true;
    });
  }
  return out;
}

std::optional<Walk> walk_homotopic_to_patches(const EmbeddedGraph& g,
                                              VertexId v,
                                              const std::vector<int>& faces,
                                              int d) {
  if (faces.empty()) {
    fail(ErrorCode::kPreconditionViolated, "no faces to drill");
  }
  std::vector<bool> in_set(g.all_faces().size(), false);
  for (int f : faces) in_set[f] = true;
  std::vector<bool> h(g.edge_capacity(), false);
  for (EdgeId e : g.edges()) {
    h[e] = !(in_set[g.face_of_state(make_state(2 * e, 1))] &&
             in_set[g.face_of_state(make_state(2 * e, -1))]);
  }
  SubgraphFaces sf = subgraph_faces(g, h);
  const Region& reg = sf.regions[sf.region_of_face[faces.front()]];
  if (reg.is_hole || !reg.two_cell() || reg.g_faces.size() != faces.size()) {
    fail(ErrorCode::kPreconditionViolated, "drilled faces do not form a disk");
  }
  const Walk boundary = walk_of_states(reg.walks[0]);
  std::vector<int> drilled = faces;
  HomotopyGroup grp = HomotopyGroup::patched(g, {}, drilled);
  const Word target = grp.word(boundary);
  std::optional<Walk> out;
  for (int len = 1; len <= d && !out; ++len) {
    closed_walks_from(g, v, len, [&](const Walk& w) {
      if (!grp.freely_homotopic(grp.word(w), target, true)) return false;
      out = w;
      return true;
    });
  }
  return out;
}

bool is_essential(const EmbeddedGraph& g, const std::vector<bool>& h_edges) {
  std::vector<bool> h = h_edges;
  h.resize(g.edge_capacity(), false);
  std::vector<bool> hv(g.vertex_capacity(), false);
  bool any = false;
  for (EdgeId e : g.edges()) {
    if (!h[e]) continue;
    any = true;
    hv[g.edge(e).u] = hv[g.edge(e).v] = true;
  }
  if (!any) return false;
  std::vector<int> touched;
  for (int c = 0; c < static_cast<int>(g.cuffs().size()); ++c) {
    for (VertexId x : g.cuffs()[c]) {
      if (hv[x]) {
        touched.push_back(c);
        break;
      }
    }
  }
  if (touched.size() >= 2) return true;
  if (touched.size() == 1) {
    const auto& cuff = g.cuffs()[touched[0]];
    for (std::size_t i = 0; i < cuff.size(); ++i) {
      h[g.find_edge(cuff[i], cuff[(i + 1) % cuff.size()])] = true;
    }
  }
  int nv = 0, ne = 0;
  std::fill(hv.begin(), hv.end(), false);
  for (EdgeId e : g.edges()) {
    if (!h[e]) continue;
    ++ne;
    for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
      if (!hv[x]) {
        hv[x] = true;
        ++nv;
      }
    }
  }
  SubgraphFaces sf = subgraph_faces(g, h);
  const int nr = static_cast<int>(sf.regions.size());
  for (int j = 0; j < nr; ++j) {
    const Region& rj = sf.regions[j];
    if (rj.is_hole || rj.walks.size() != 1) continue;
    int chi = nv - ne, cuffs = 0;
    for (int i = 0; i < nr; ++i) {
      if (i == j) continue;
      const Region& r = sf.regions[i];
      if (r.is_hole) {
        ++cuffs;
        continue;
      }
      chi += 2 - r.surface.euler_genus - r.surface.cuff_count;
      cuffs += r.cuff_holes;
    }
    const bool disk = chi == 1 && cuffs == 0;
    const bool annulus = chi == 0 && cuffs == 1;
    if (touched.empty() ? (disk || annulus) : annulus) return false;
  }
  return true;
}

std::optional<std::vector<EdgeId>> smallest_essential_subgraph(
    const EmbeddedGraph& g, int m) {
  const std::vector<EdgeId> all = g.edges();
  std::vector<std::vector<EdgeId>> incident(g.vertex_capacity());
  for (EdgeId e : all) {
    incident[g.edge(e).u].push_back(e);
    incident[g.edge(e).v].push_back(e);
  }
  std::vector<bool> in(g.edge_capacity(), false), banned(g.edge_capacity(), false);
  std::vector<EdgeId> chosen;
  std::optional<std::vector<EdgeId>> out;
  int target = 0;
  // Connected edge sets with minimum edge `lo`, enumerated once each by
  // branching on one frontier edge at a time.
  std::function<void(EdgeId)> grow = [&](EdgeId lo) {
    if (out) return;
    if (static_cast<int>(chosen.size()) == target) {
      if (is_essential(g, in)) out = chosen;
      return;
    }
    EdgeId pick = kNone;
    for (EdgeId e : chosen) {
      for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
        for (EdgeId f : incident[x]) {
          if (f > lo && !in[f] && !banned[f]) {
            pick = f;
            break;
          }
        }
        if (pick != kNone) break;
      }
      if (pick != kNone) break;
    }
    if (pick == kNone) return;
    in[pick] = true;
    chosen.push_back(pick);
    grow(lo);
    chosen.pop_back();
    in[pick] = false;
    banned[pick] = true;
    grow(lo);
    banned[pick] = false;
  };
  for (target = 1; target <= m && !out; ++target) {
    for (EdgeId e : all) {
      in[e] = true;
      chosen = {e};
      grow(e);
      in[e] = false;
      if (out) break;
    }
  }
  if (out) std::sort(out->begin(), out->end());
  return out;
}

std::vector<Walk> simple_cycles(const EmbeddedGraph& g, int d) {
  std::vector<Walk> out;
  std::vector<bool> on(g.vertex_capacity(), false);
  Walk w;
  std::function<void(VertexId, VertexId)> go = [&](VertexId s, VertexId at) {
    for (Dart dd : g.rotation(at)) {
      const VertexId x = g.head(dd);
      if (!w.empty() && dart_edge(dd) == dart_edge(w.darts.back())) continue;
      if (x == s) {
        if (w.length() + 1 >= 3 &&
            g.head(w.darts.front()) < at) {
          w.darts.push_back(dd);
          out.push_back(w);
          w.darts.pop_back();
        }
        continue;
      }
      if (x < s || on[x] || static_cast<int>(w.length()) + 1 >= d) continue;
      on[x] = true;
      w.darts.push_back(dd);
      go(s, x);
      w.darts.pop_back();
      on[x] = false;
    }
  };
  for (VertexId s : g.vertices()) {
    on[s] = true;
    go(s, s);
    on[s] = false;
  }
  return out;
}

std::optional<Walk> shortest_noncontractible_cycle(const EmbeddedGraph& g,
                                                   int d,
                                                   bool exclude_boundary) {
  auto wanted = [&](const Walk& c) {
    return bounded_disks(g, c).empty() &&
           !(exclude_boundary && is_cuff_cycle(g, c));
  };
  std::optional<Walk> best;
  if (d <= 10) {
    for (const Walk& c : simple_cycles(g, d)) {
      if ((!best || c.length() < best->length()) && wanted(c)) best = c;
    }
    return best;
  }
  // Fundamental cycles of breadth-first trees from every root.
  for (VertexId r : g.vertices()) {
    std::vector<int> dist(g.vertex_capacity(), -1);
    std::vector<Dart> via(g.vertex_capacity(), kNone);
    std::queue<VertexId> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (Dart dd : g.rotation(v)) {
        const VertexId x = g.head(dd);
        if (dist[x] >= 0) continue;
        dist[x] = dist[v] + 1;
        via[x] = dd;
        q.push(x);
      }
    }
    for (EdgeId e : g.edges()) {
      const VertexId a = g.edge(e).u, b = g.edge(e).v;
      if (dist[a] < 0 || via[a] == 2 * e + 1 || via[b] == 2 * e) continue;
      if (dist[a] + dist[b] + 1 > d) continue;
      if (best && dist[a] + dist[b] + 1 >= static_cast<int>(best->length())) {
        continue;
      }
      std::vector<Dart> up_a, up_b;
      for (VertexId x = a; x != r; x = g.origin(via[x])) up_a.push_back(via[x]);
      for (VertexId x = b; x != r; x = g.origin(via[x])) up_b.push_back(via[x]);
      while (!up_a.empty() && !up_b.empty() && up_a.back() == up_b.back()) {
        up_a.pop_back();
        up_b.pop_back();
      }
      Walk c;
      for (auto it = up_a.rbegin(); it != up_a.rend(); ++it) c.darts.push_back(*it);
      c.darts.push_back(2 * e);
      for (Dart x : up_b) c.darts.push_back(twin(x));
      if (c.length() >= 3 && wanted(c)) best = c;
    }
  }
  return best;
}

}  // namespace surfcolor
