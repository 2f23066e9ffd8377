#include "surfcolor/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace surfcolor {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kNonCycleCuff: return "NonCycleCuff";
    case ErrorCode::kInconsistentRotation: return "InconsistentRotation";
    case ErrorCode::kSelfLoopOrMultiEdge: return "SelfLoopOrMultiEdge";
    case ErrorCode::kNotTwoCell: return "NotTwoCell";
    case ErrorCode::kNotADisk: return "NotADisk";
    case ErrorCode::kNotContractible: return "NotContractible";
    case ErrorCode::kNotCylinder: return "NotCylinder";
    case ErrorCode::kNotNearPlanar: return "NotNearPlanar";
    case ErrorCode::kNotTriangleFree: return "NotTriangleFree";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kOracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::kUnsupportedSurface: return "UnsupportedSurface";
    case ErrorCode::kBrokenCertificate: return "BrokenCertificate";
    case ErrorCode::kTableCapExceeded: return "TableCapExceeded";
    case ErrorCode::kNonExtendable: return "NonExtendable";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

std::string SurfaceClass::name() const {
  if (euler_genus == 0) {
    switch (cuff_count) {
      case 0: return "sphere";
      case 1: return "disk";
      case 2: return "cylinder";
      default: break;
    }
  }
  if (cuff_count == 0) {
    if (!orientable && euler_genus == 1) return "projective-plane";
    if (orientable && euler_genus == 2) return "torus";
    if (!orientable && euler_genus == 2) return "klein-bottle";
  }
  std::ostringstream out;
  out << "surface(g=" << euler_genus << ",c=" << cuff_count
      << (orientable ? ",orientable" : ",non-orientable") << ")";
  return out.str();
}

bool less_complex(const SurfaceClass& a, const SurfaceClass& b) {
  if (a.euler_genus != b.euler_genus) return a.euler_genus < b.euler_genus;
  return a.cuff_count < b.cuff_count;
}

EmbeddedGraph EmbeddedGraph::build(
    std::span<const VertexId> vertices, std::span<const EdgeSpec> edges,
    const std::vector<std::vector<Dart>>& rotation,
    const std::vector<std::vector<VertexId>>& cuffs, BuildOptions options) {
  EmbeddedGraph g;
  int vcap = 0;
  for (VertexId v : vertices) {
    if (v < 0) fail(ErrorCode::kValidationError, "negative vertex id");
    vcap = std::max(vcap, v + 1);
  }
  g.alive_.assign(vcap, false);
  for (VertexId v : vertices) {
    if (g.alive_[v]) {
      fail(ErrorCode::kValidationError,
           "duplicate vertex " + std::to_string(v));
    }
    g.alive_[v] = true;
    ++g.vertex_count_;
  }
  int ecap = 0;
  for (const auto& e : edges) {
    if (e.id < 0) fail(ErrorCode::kValidationError, "negative edge id");
    ecap = std::max(ecap, e.id + 1);
  }
  g.edges_.assign(ecap, Edge{});
  for (const auto& e : edges) {
    if (g.edges_[e.id].u != kNone) {
      fail(ErrorCode::kValidationError,
           "duplicate edge " + std::to_string(e.id));
    }
    if (!g.vertex_alive(e.u) || !g.vertex_alive(e.v)) {
      fail(ErrorCode::kValidationError,
           "edge " + std::to_string(e.id) + " has an unknown endpoint");
    }
    if (e.sign != 1 && e.sign != -1) {
      fail(ErrorCode::kValidationError, "edge sign must be +1 or -1");
    }
    g.edges_[e.id] = Edge{e.u, e.v, e.sign};
    ++g.edge_count_;
  }
  g.rotation_.assign(vcap, {});
  for (std::size_t v = 0; v < rotation.size() && v < g.rotation_.size(); ++v) {
    g.rotation_[v] = rotation[v];
  }
  if (rotation.size() > g.rotation_.size()) {
    for (std::size_t v = g.rotation_.size(); v < rotation.size(); ++v) {
      if (!rotation[v].empty()) {
        fail(ErrorCode::kInconsistentRotation,
             "rotation given for unknown vertex " + std::to_string(v));
      }
    }
  }
  g.cuffs_ = cuffs;
  g.validate(options);
  return g;
}

EmbeddedGraph EmbeddedGraph::from_neighbor_rotation(
    const std::vector<std::vector<VertexId>>& neighbor_rotation,
    const std::vector<std::vector<VertexId>>& cuffs, BuildOptions options) {
  const int n = static_cast<int>(neighbor_rotation.size());
  std::vector<VertexId> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<EdgeSpec> edges;
  std::map<std::pair<int, int>, EdgeId> ids;
  for (int u = 0; u < n; ++u) {
    for (VertexId w : neighbor_rotation[u]) {
      auto key = std::minmax(u, w);
      if (!ids.count(key)) {
        EdgeId id = static_cast<EdgeId>(edges.size());
        ids[key] = id;
        edges.push_back({id, key.first, key.second, 1});
      }
    }
  }
  std::vector<std::vector<Dart>> rot(n);
  for (int u = 0; u < n; ++u) {
    for (VertexId w : neighbor_rotation[u]) {
      EdgeId e = ids.at(std::minmax(u, w));
      rot[u].push_back(2 * e + (edges[e].u == u ? 0 : 1));
    }
  }
  return build(verts, edges, rot, cuffs, options);
}

void EmbeddedGraph::validate(const BuildOptions& options) {
  std::set<std::pair<int, int>> seen;
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (!edge_alive(e)) continue;
    const Edge& ed = edges_[e];
    if (ed.u == ed.v) {
      fail(ErrorCode::kSelfLoopOrMultiEdge,
           "edge " + std::to_string(e) + " is a loop");
    }
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert(key).second && !options.allow_multi_edges) {
      fail(ErrorCode::kSelfLoopOrMultiEdge,
           "parallel edges between " + std::to_string(ed.u) + " and " +
               std::to_string(ed.v));
    }
  }
  dart_pos_.assign(dart_capacity(), kNone);
  for (VertexId v = 0; v < vertex_capacity(); ++v) {
    if (!alive_[v]) {
      if (!rotation_[v].empty()) {
        fail(ErrorCode::kInconsistentRotation,
             "rotation given for dead vertex " + std::to_string(v));
      }
      continue;
    }
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      Dart d = rotation_[v][i];
      if (d < 0 || d >= dart_capacity() || !edge_alive(dart_edge(d))) {
        fail(ErrorCode::kInconsistentRotation,
             "vertex " + std::to_string(v) + " lists unknown half-edge " +
                 std::to_string(d));
      }
      if (origin(d) != v) {
        fail(ErrorCode::kInconsistentRotation,
             "vertex " + std::to_string(v) + " lists foreign half-edge " +
                 std::to_string(d));
      }
      if (dart_pos_[d] != kNone) {
        fail(ErrorCode::kInconsistentRotation,
             "half-edge " + std::to_string(d) + " listed twice");
      }
      dart_pos_[d] = static_cast<int>(i);
    }
  }
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (!edge_alive(e)) continue;
    if (dart_pos_[2 * e] == kNone || dart_pos_[2 * e + 1] == kNone) {
      fail(ErrorCode::kInconsistentRotation,
           "edge " + std::to_string(e) + " missing from a rotation");
    }
  }
  for (std::size_t i = 0; i < cuffs_.size(); ++i) {
    const auto& c = cuffs_[i];
    std::set<VertexId> distinct(c.begin(), c.end());
    if (c.size() < 2 || distinct.size() != c.size()) {
      fail(ErrorCode::kNonCycleCuff,
           "cuff " + std::to_string(i) + " is not a cycle");
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!vertex_alive(c[j]) ||
          find_edge(c[j], c[(j + 1) % c.size()]) == kNone) {
        fail(ErrorCode::kNonCycleCuff,
             "cuff " + std::to_string(i) + " does not trace a cycle");
      }
    }
    if (c.size() == 2 && !options.allow_multi_edges) {
      fail(ErrorCode::kNonCycleCuff, "cuff of length 2");
    }
  }
  traced_ = false;
  if (options.require_cuffs_are_faces) trace();
}

Dart EmbeddedGraph::rotate(Dart d, int orientation) const {
  const auto& rot = rotation_[origin(d)];
  const int n = static_cast<int>(rot.size());
  const int i = dart_pos_[d];
  return rot[orientation > 0 ? (i + 1) % n : (i + n - 1) % n];
}

std::vector<VertexId> EmbeddedGraph::vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_capacity(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> EmbeddedGraph::edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (edge_alive(e)) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> EmbeddedGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(rotation_[v].size());
  for (Dart d : rotation_[v]) out.push_back(head(d));
  return out;
}

EdgeId EmbeddedGraph::find_edge(VertexId u, VertexId v) const {
  if (!vertex_alive(u) || !vertex_alive(v)) return kNone;
  const auto& ru = rotation_[u];
  const auto& rv = rotation_[v];
  const auto& smaller = ru.size() <= rv.size() ? ru : rv;
  const VertexId other = ru.size() <= rv.size() ? v : u;
  for (Dart d : smaller) {
    if (head(d) == other) return dart_edge(d);
  }
  return kNone;
}

bool EmbeddedGraph::is_boundary_vertex(VertexId v) const {
  for (const auto& c : cuffs_) {
    if (std::find(c.begin(), c.end(), v) != c.end()) return true;
  }
  return false;
}

std::vector<VertexId> EmbeddedGraph::boundary_vertices() const {
  std::set<VertexId> s;
  for (const auto& c : cuffs_) s.insert(c.begin(), c.end());
  return {s.begin(), s.end()};
}

int EmbeddedGraph::boundary_vertex_count() const {
  return static_cast<int>(boundary_vertices().size());
}

std::vector<bool> EmbeddedGraph::boundary_edge_mask() const {
  std::vector<bool> mask(edge_capacity(), false);
  for (const auto& c : cuffs_) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      EdgeId e = find_edge(c[j], c[(j + 1) % c.size()]);
      if (e != kNone) mask[e] = true;
    }
  }
  return mask;
}

State EmbeddedGraph::next_state(State s) const {
  const Dart d = state_dart(s);
  const int o = state_orientation(s) * edges_[dart_edge(d)].sign;
  return make_state(rotate(twin(d), o), o);
}

State EmbeddedGraph::mirror_state(State s) const {
  const Dart d = state_dart(s);
  return make_state(twin(d),
                    -state_orientation(s) * edges_[dart_edge(d)].sign);
}

namespace {

std::vector<VertexId> state_vertices(const EmbeddedGraph& g,
                                     const std::vector<State>& walk) {
  std::vector<VertexId> out;
  out.reserve(walk.size());
  for (State s : walk) out.push_back(g.origin(state_dart(s)));
  return out;
}

bool same_cyclic_sequence(const std::vector<VertexId>& a,
                          const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (int dir : {1, -1}) {
    for (std::size_t start = 0; start < n; ++start) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::size_t j = dir > 0 ? (start + i) % n : (start + n - i) % n;
        ok = a[i] == b[j];
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

void EmbeddedGraph::trace() const {
  faces_.clear();
  state_face_.assign(2 * dart_capacity(), kNone);
  std::vector<bool> visited(2 * dart_capacity(), false);
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (!edge_alive(e)) continue;
    for (Dart d : {2 * e, 2 * e + 1}) {
      for (int o : {1, -1}) {
        const State start = make_state(d, o);
        if (visited[start]) continue;
        Face f;
        f.id = static_cast<int>(faces_.size());
        State s = start;
        do {
          visited[s] = true;
          state_face_[s] = f.id;
          f.walk.push_back(s);
          s = next_state(s);
        } while (s != start);
        for (State t : f.walk) {
          const State m = mirror_state(t);
          if (visited[m] && state_face_[m] != f.id) {
            fail(ErrorCode::kInternal, "mirror orbit already assigned");
          }
          visited[m] = true;
          state_face_[m] = f.id;
        }
        faces_.push_back(std::move(f));
      }
    }
  }
  for (VertexId v = 0; v < vertex_capacity(); ++v) {
    if (alive_[v] && rotation_[v].empty()) {
      Face f;
      f.id = static_cast<int>(faces_.size());
      faces_.push_back(std::move(f));
    }
  }
  cuff_face_.assign(cuffs_.size(), kNone);
  for (std::size_t i = 0; i < cuffs_.size(); ++i) {
    const auto& c = cuffs_[i];
    std::vector<int> candidates;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const VertexId a = c[j];
      const VertexId b = c[(j + 1) % c.size()];
      for (Dart d : rotation_[a]) {
        if (head(d) != b) continue;
        candidates.push_back(state_face_[make_state(d, 1)]);
        candidates.push_back(state_face_[make_state(d, -1)]);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (int fid : candidates) {
      if (faces_[fid].is_cuff) continue;
      if (same_cyclic_sequence(state_vertices(*this, faces_[fid].walk), c)) {
        faces_[fid].is_cuff = true;
        cuff_face_[i] = fid;
        break;
      }
    }
    if (cuff_face_[i] == kNone) {
      fail(ErrorCode::kNonCycleCuff,
           "cuff " + std::to_string(i) +
               " does not bound a face of the rotation system");
    }
  }
  traced_ = true;
}

const std::vector<Face>& EmbeddedGraph::all_faces() const {
  if (!traced_) trace();
  return faces_;
}

std::vector<Face> EmbeddedGraph::faces() const {
  std::vector<Face> out;
  for (const Face& f : all_faces()) {
    if (!f.is_cuff) out.push_back(f);
  }
  return out;
}

int EmbeddedGraph::face_count() const {
  int n = 0;
  for (const Face& f : all_faces()) n += f.is_cuff ? 0 : 1;
  return n;
}

int EmbeddedGraph::face_of_state(State s) const {
  if (!traced_) trace();
  return state_face_[s];
}

int EmbeddedGraph::cuff_face(int cuff_index) const {
  if (!traced_) trace();
  return cuff_face_[cuff_index];
}

std::vector<std::vector<VertexId>> EmbeddedGraph::components() const {
  std::vector<int> comp(vertex_capacity(), kNone);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < vertex_capacity(); ++s) {
    if (!alive_[s] || comp[s] != kNone) continue;
    std::vector<VertexId> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Dart d : rotation_[members[i]]) {
        VertexId w = head(d);
        if (comp[w] == kNone) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool EmbeddedGraph::is_connected() const { return components().size() <= 1; }

bool EmbeddedGraph::is_orientable() const {
  std::vector<int> eps(vertex_capacity(), 0);
  for (VertexId s = 0; s < vertex_capacity(); ++s) {
    if (!alive_[s] || eps[s] != 0) continue;
    eps[s] = 1;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : rotation_[v]) {
        VertexId w = head(d);
        int want = eps[v] * edges_[dart_edge(d)].sign;
        if (eps[w] == 0) {
          eps[w] = want;
          stack.push_back(w);
        } else if (eps[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

SurfaceClass EmbeddedGraph::surface_class() const {
  if (!is_connected()) {
    fail(ErrorCode::kNotTwoCell,
         "graph is disconnected; some face is not an open disk");
  }
  const int chi = vertex_count_ - edge_count_ + face_count();
  SurfaceClass sc;
  sc.cuff_count = static_cast<int>(cuffs_.size());
  sc.euler_genus = 2 - sc.cuff_count - chi;
  sc.orientable = is_orientable();
  return sc;
}

bool EmbeddedGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (EdgeId e : edges()) {
    if (edges_[e].u == edges_[e].v) return false;
    if (!seen.insert(std::minmax(edges_[e].u, edges_[e].v)).second) {
      return false;
    }
  }
  return true;
}

bool EmbeddedGraph::has_triangle() const {
  for (EdgeId e : edges()) {
    const VertexId u = edges_[e].u, v = edges_[e].v;
    for (Dart d : rotation_[u]) {
      VertexId w = head(d);
      if (w != v && w != u && find_edge(w, v) != kNone) return true;
    }
  }
  return false;
}

EmbeddedGraph EmbeddedGraph::without(std::span<const VertexId> dead_vertices,
                                     std::span<const EdgeId> dead_edges) const {
  EmbeddedGraph g = *this;
  std::vector<bool> kill_edge(edge_capacity(), false);
  for (EdgeId e : dead_edges) kill_edge[e] = true;
  for (VertexId v : dead_vertices) {
    if (!vertex_alive(v)) continue;
    for (Dart d : rotation_[v]) kill_edge[dart_edge(d)] = true;
    g.alive_[v] = false;
    --g.vertex_count_;
    g.rotation_[v].clear();
  }
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (!kill_edge[e] || !edge_alive(e)) continue;
    g.edges_[e] = Edge{};
    --g.edge_count_;
  }
  for (VertexId v = 0; v < vertex_capacity(); ++v) {
    auto& rot = g.rotation_[v];
    std::erase_if(rot, [&](Dart d) { return kill_edge[dart_edge(d)]; });
  }
  BuildOptions opts;
  opts.allow_multi_edges = !is_simple();
  g.validate(opts);
  return g;
}

void switch_vertex(EmbeddedGraph& g, VertexId v) {
  // Rebuild through the public interface to keep invariants in one place.
  std::vector<EdgeSpec> edges;
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    int s = ed.sign;
    if (ed.u == v || ed.v == v) s = -s;
    edges.push_back({e, ed.u, ed.v, s});
  }
  std::vector<std::vector<Dart>> rot(g.vertex_capacity());
  for (VertexId w : g.vertices()) rot[w] = g.rotation(w);
  std::reverse(rot[v].begin(), rot[v].end());
  auto vo = g.vertex_origin;
  auto eo = g.edge_origin;
  auto verts = g.vertices();
  BuildOptions opts;
  opts.allow_multi_edges = !g.is_simple();
  g = EmbeddedGraph::build(verts, edges, rot, g.cuffs(), opts);
  g.vertex_origin = std::move(vo);
  g.edge_origin = std::move(eo);
}

namespace {

// Canonical form: switch vertices so a BFS forest has all-positive edges and
// rotate each list to start at its smallest dart.
// Darts are keyed by (edge, far end) so that edge direction does not matter.
struct CanonicalEmbedding {
  std::vector<std::vector<long long>> rotation;
  std::vector<int> signs;
};

CanonicalEmbedding canonicalize(const EmbeddedGraph& g) {
  std::vector<int> eps(g.vertex_capacity(), 0);
  for (VertexId s : g.vertices()) {
    if (eps[s] != 0) continue;
    eps[s] = 1;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      auto darts = g.rotation(v);
      std::sort(darts.begin(), darts.end(),
                [](Dart x, Dart y) { return dart_edge(x) < dart_edge(y); });
      for (Dart d : darts) {
        VertexId w = g.head(d);
        if (eps[w] == 0) {
          eps[w] = eps[v] * g.sign(dart_edge(d));
          q.push(w);
        }
      }
    }
  }
  CanonicalEmbedding out;
  out.rotation.assign(g.vertex_capacity(), {});
  for (VertexId v : g.vertices()) {
    std::vector<long long> rot;
    for (Dart d : g.rotation(v)) {
      rot.push_back(static_cast<long long>(dart_edge(d)) * g.vertex_capacity() +
                    g.head(d));
    }
    if (eps[v] < 0) std::reverse(rot.begin(), rot.end());
    if (!rot.empty()) {
      std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()),
                  rot.end());
    }
    out.rotation[v] = std::move(rot);
  }
  out.signs.assign(g.edge_capacity(), 0);
  for (EdgeId e : g.edges()) {
    out.signs[e] = g.sign(e) * eps[g.edge(e).u] * eps[g.edge(e).v];
  }
  return out;
}

}  // namespace

bool equivalent_embedding(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.vertices() != b.vertices() || a.edges() != b.edges()) return false;
  if (a.vertex_capacity() != b.vertex_capacity()) return false;
  for (EdgeId e : a.edges()) {
    const Edge& x = a.edge(e);
    const Edge& y = b.edge(e);
    if (std::minmax(x.u, x.v) != std::minmax(y.u, y.v)) return false;
  }
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  if (ca.signs != cb.signs) return false;
  auto reversed = [](std::vector<long long> rot) {
    std::reverse(rot.begin(), rot.end());
    if (!rot.empty()) {
      std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()),
                  rot.end());
    }
    return rot;
  };
  // Each component may be mirrored as a whole.
  for (const auto& comp : a.components()) {
    bool same = true, mirrored = true;
    for (VertexId v : comp) {
      same = same && ca.rotation[v] == cb.rotation[v];
      mirrored = mirrored && ca.rotation[v] == reversed(cb.rotation[v]);
    }
    if (!same && !mirrored) return false;
  }
  return true;
}

}  // namespace surfcolor
