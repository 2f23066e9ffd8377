#pragma once

#include <array>
#include <optional>
#include <vector>

#include "surfcolor/color.hpp"

namespace surfcolor::detail {

struct FaceCorners {
  int face = kNone;
  std::array<VertexId, 4> v{};  // in walk order
};

// A non-cuff face of length 4 on four distinct vertices.
std::optional<FaceCorners> four_face(const EmbeddedGraph& g, int face);

EmbeddedGraph delete_vertices(const EmbeddedGraph& g,
                              const std::vector<VertexId>& vs);

// Glues `merged` onto `kept` through the face; they must be opposite on a
// 4-face. The two digons left behind lose their `merged` edge.
EmbeddedGraph identify_across_face(const EmbeddedGraph& g, int face,
                                   VertexId kept, VertexId merged);

// v2 has degree two; its other edge moves to v1.
EmbeddedGraph contract_boundary_pair(const EmbeddedGraph& g, VertexId v1,
                                     VertexId v2);

// A path of length <= max_len from `from` to `to` missing `avoid`.
bool short_path_avoiding(const EmbeddedGraph& g, VertexId from, VertexId to,
                         const std::vector<VertexId>& avoid, int max_len);

struct DiskPiece {
  EmbeddedGraph graph;  // cuff 0 is C; origins point into g
  std::vector<VertexId> interior;
  EmbeddedGraph outside;  // g with the open disk emptied
};

// C bounds the open disk formed by disk_faces.
DiskPiece disk_piece(const EmbeddedGraph& g, const Walk& c,
                     const std::vector<int>& disk_faces);

}  // namespace surfcolor::detail
