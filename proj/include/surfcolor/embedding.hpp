#pragma once

// Combinatorial embeddings of graphs in surfaces with boundary.
//
// An embedding is a rotation system (cyclic order of darts around every
// vertex) together with an edge signature for non-orientable surfaces.
// Cuffs are boundary cycles of the surface; each must trace a face of the
// rotation system, and that face is the hole rather than a face of the graph.
//
// Dart 2e leaves edge(e).u, dart 2e+1 leaves edge(e).v. Face tracing works on
// states (dart, local orientation); every face is a pair of mirror orbits.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfcolor/error.hpp"

namespace surfcolor {

using VertexId = int;
using EdgeId = int;
using Dart = int;

inline constexpr int kNone = -1;

inline EdgeId dart_edge(Dart d) { return d >> 1; }
inline Dart twin(Dart d) { return d ^ 1; }

// (dart, orientation) pair packed into an int.
using State = int;
inline State make_state(Dart d, int orientation) {
  return 2 * d + (orientation > 0 ? 0 : 1);
}
inline Dart state_dart(State s) { return s >> 1; }
inline int state_orientation(State s) { return (s & 1) ? -1 : 1; }

struct SurfaceClass {
  int euler_genus = 0;
  int cuff_count = 0;
  bool orientable = true;

  bool is_sphere() const { return euler_genus == 0 && cuff_count == 0; }
  bool is_disk() const { return euler_genus == 0 && cuff_count == 1; }
  bool is_cylinder() const { return euler_genus == 0 && cuff_count == 2; }
  std::string name() const;

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

// Strict "less complex" order used by recursions: genus first, then cuffs.
bool less_complex(const SurfaceClass& a, const SurfaceClass& b);

struct Edge {
  VertexId u = kNone;
  VertexId v = kNone;
  int sign = 1;
};

// A closed walk given by its darts; consecutive darts share an endpoint.
struct Walk {
  std::vector<Dart> darts;

  std::size_t length() const { return darts.size(); }
  bool empty() const { return darts.empty(); }
};

struct Face {
  int id = kNone;
  // Boundary walk as states; for faces of an embedded graph there is one walk.
  std::vector<State> walk;
  bool is_cuff = false;  // the hole bounded by a cuff; not a face of the graph
  std::size_t length() const { return walk.size(); }
};

struct EdgeSpec {
  EdgeId id = kNone;
  VertexId u = kNone;
  VertexId v = kNone;
  int sign = 1;
};

struct BuildOptions {
  // Surgery inside the pipeline may transiently create parallel edges.
  bool allow_multi_edges = false;
  bool require_cuffs_are_faces = true;
};

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  // rotation[v] lists the darts leaving v in cyclic (clockwise) order; vertex
  // ids index the vector and unlisted ids are dead.
  static EmbeddedGraph build(std::span<const VertexId> vertices,
                             std::span<const EdgeSpec> edges,
                             const std::vector<std::vector<Dart>>& rotation,
                             const std::vector<std::vector<VertexId>>& cuffs,
                             BuildOptions options = {});

  // Convenience: planar-style build with every sign +1 and rotations given as
  // neighbor lists.
  static EmbeddedGraph from_neighbor_rotation(
      const std::vector<std::vector<VertexId>>& neighbor_rotation,
      const std::vector<std::vector<VertexId>>& cuffs = {},
      BuildOptions options = {});

  // Id ranges (including dead ids).
  int vertex_capacity() const { return static_cast<int>(alive_.size()); }
  int edge_capacity() const { return static_cast<int>(edges_.size()); }
  int dart_capacity() const { return 2 * edge_capacity(); }

  bool vertex_alive(VertexId v) const {
    return v >= 0 && v < vertex_capacity() && alive_[v];
  }
  bool edge_alive(EdgeId e) const {
    return e >= 0 && e < edge_capacity() && edges_[e].u != kNone;
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  int sign(EdgeId e) const { return edges_[e].sign; }
  VertexId origin(Dart d) const {
    return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u;
  }
  VertexId head(Dart d) const { return origin(twin(d)); }

  const std::vector<Dart>& rotation(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const {
    return static_cast<int>(rotation_[v].size());
  }
  // Rotation successor (orientation +1) or predecessor (-1) of d at origin(d).
  Dart rotate(Dart d, int orientation) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  // Edge joining u and v, or kNone.
  EdgeId find_edge(VertexId u, VertexId v) const;

  const std::vector<std::vector<VertexId>>& cuffs() const { return cuffs_; }
  bool is_boundary_vertex(VertexId v) const;
  std::vector<VertexId> boundary_vertices() const;
  // Edges lying on some cuff.
  std::vector<bool> boundary_edge_mask() const;
  int boundary_vertex_count() const;

  // Faces, traced once and cached; includes the cuff holes (is_cuff).
  const std::vector<Face>& all_faces() const;
  // Faces of the graph only (cuff holes excluded).
  std::vector<Face> faces() const;
  int face_count() const;
  // Face id containing the given state (a face owns both mirror orbits).
  int face_of_state(State s) const;
  // The face on the "left" of dart d when traversed with orientation +1.
  int face_of_dart(Dart d) const { return face_of_state(make_state(d, 1)); }
  // Next state along a face walk.
  State next_state(State s) const;
  // Mirror of a state (same side, opposite traversal).
  State mirror_state(State s) const;
  // Index of cuff i's hole face.
  int cuff_face(int cuff_index) const;

  bool is_connected() const;
  std::vector<std::vector<VertexId>> components() const;
  bool is_orientable() const;

  // 2 - c - (V - E + F), with orientability from the signature. Requires a
  // connected graph (otherwise some face is not an open disk).
  SurfaceClass surface_class() const;

  bool is_simple() const;
  bool has_triangle() const;

  // Vertex/edge-removing surgery. Removed ids are never reused.
  EmbeddedGraph without(std::span<const VertexId> dead_vertices,
                        std::span<const EdgeId> dead_edges) const;

  // Stable id allocation for derived graphs.
  VertexId next_vertex_id() const { return vertex_capacity(); }

  // Labels carried through surgery so pieces can be mapped back.
  std::vector<VertexId> vertex_origin;  // per vertex id; kNone if none
  std::vector<EdgeId> edge_origin;      // per edge id; kNone if none

  VertexId origin_of(VertexId v) const {
    return (v < static_cast<int>(vertex_origin.size()) &&
            vertex_origin[v] != kNone)
               ? vertex_origin[v]
               : v;
  }

 private:
  void validate(const BuildOptions& options);
  void trace() const;

  std::vector<bool> alive_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::vector<VertexId>> cuffs_;
  int vertex_count_ = 0;
  int edge_count_ = 0;
  std::vector<int> dart_pos_;

  mutable bool traced_ = false;
  mutable std::vector<Face> faces_;
  mutable std::vector<int> state_face_;
  mutable std::vector<int> cuff_face_;
};

// Reverse rotation at v and flip the signs of its edges (same embedding).
void switch_vertex(EmbeddedGraph& g, VertexId v);

// True iff both describe the same embedding up to vertex switching.
bool equivalent_embedding(const EmbeddedGraph& a, const EmbeddedGraph& b);

// ---------------------------------------------------------------------------
// Faces of a subgraph H in the surface of G.

struct Region {
  std::vector<int> g_faces;  // faces of G (cuff holes included) in the region
  std::vector<std::vector<State>> walks;  // boundary walks, as states of G
  int interior_vertices = 0;
  int interior_edges = 0;
  int cuff_holes = 0;  // cuff faces of G inside the region
  bool is_hole = false;  // consists of a single cuff hole bounded by H
  SurfaceClass surface;  // Σ_h
  int length() const;
  bool two_cell() const {
    return surface.euler_genus == 0 && walks.size() == 1 && cuff_holes == 0;
  }
};

struct SubgraphFaces {
  std::vector<bool> in_h_edge;
  std::vector<bool> in_h_vertex;
  std::vector<Region> regions;   // holes included (is_hole)
  std::vector<int> region_of_face;  // G face id -> region index
};

// H is given as an edge mask over G's edge ids; its vertices are the ends.
SubgraphFaces subgraph_faces(const EmbeddedGraph& g,
                             const std::vector<bool>& h_edges);

// Σ_h and G_h: the closure of face `region` of H with G cut open along the
// boundary walks, which become cuffs. Vertex/edge origins point into G.
struct FacePiece {
  SurfaceClass surface;
  EmbeddedGraph graph;
  // For each boundary walk of the region, the cuff index in `graph`.
  std::vector<int> walk_cuffs;
};

FacePiece face_subsurface(const EmbeddedGraph& g,
                          const std::vector<bool>& h_edges,
                          const SubgraphFaces& analysis, int region);

// Removes everything drawn in the open disk formed by the given faces.
EmbeddedGraph delete_disk_interior(const EmbeddedGraph& g,
                                   const std::vector<int>& disk_faces);

// Edges/vertices strictly inside the disk formed by the given faces.
struct DiskInterior {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};
DiskInterior disk_interior(const EmbeddedGraph& g,
                           const std::vector<int>& disk_faces);

// Vertex set of a walk, in order of first appearance.
std::vector<VertexId> walk_vertices(const EmbeddedGraph& g, const Walk& w);
bool is_closed_walk(const EmbeddedGraph& g, const Walk& w);
bool is_cycle(const EmbeddedGraph& g, const Walk& w);
std::vector<bool> walk_edge_mask(const EmbeddedGraph& g, const Walk& w);
Walk walk_from_vertices(const EmbeddedGraph& g,
                        const std::vector<VertexId>& cyc);

// ---------------------------------------------------------------------------
// Normal representation: the graph cut open along a one-faced cut graph.

struct ArcPair {
  // Positions along the disk boundary walk (indices into boundary cycle),
  // inclusive ranges of vertices; `same_direction` true when A and B are
  // identified traversing the boundary the same way (a crosscap).
  int a_begin = 0, a_end = 0;
  int b_begin = 0, b_end = 0;
  bool same_direction = false;
};

struct NormalRepresentation {
  EmbeddedGraph disk_graph;  // one cuff: the disk boundary
  std::vector<VertexId> boundary;  // disk boundary cycle (disk graph ids)
  std::vector<ArcPair> arc_pairs;
  int cut_branch_vertices = 0;  // degree >= 3 vertices of the cut graph
  SurfaceClass surface;
  std::vector<bool> cut_edges;  // the cut graph, as an edge mask of G
};

NormalRepresentation normal_representation(const EmbeddedGraph& g);
EmbeddedGraph reglue(const NormalRepresentation& rep);

}  // namespace surfcolor
