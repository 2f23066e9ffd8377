#pragma once

// Constructive 3-coloring: reductions, lifts, clearable cycles and 4-face
// elimination by identifying opposite vertices.

#include <optional>
#include <vector>

#include "surfcolor/decide.hpp"

namespace surfcolor {

// One step of a reduction; the coloring of the smaller graph is pulled back
// through these in reverse.
struct LiftLink {
  enum class Kind { kDelete, kIdentify, kFix };
  Kind kind = Kind::kDelete;
  // kDelete: removed vertices and their neighbors in the larger graph.
  std::vector<VertexId> removed;
  std::vector<std::vector<VertexId>> neighbors;
  // kIdentify: `merged` was glued onto `kept`.
  VertexId kept = kNone;
  VertexId merged = kNone;
  // kFix: vertices whose color is forced (restored boundary vertices).
  std::vector<std::pair<VertexId, int>> fixed;
  int capacity = 0;  // vertex capacity of the larger graph
};

// Replays the chain last to first. Throws BrokenCertificate when a deletion
// cannot be colored back.
Coloring lift_coloring(const std::vector<LiftLink>& chain,
                       const Coloring& reduced);

struct SurgeryStep {
  enum class Op { kAddEdgeInFace, kContractEdge, kDeleteVertex };
  Op op = Op::kDeleteVertex;
  VertexId a = kNone;
  VertexId b = kNone;
};

struct Reduction {
  enum class Kind { kLowDegree, kEvenCycle, kOddCycle };
  Kind kind = Kind::kLowDegree;
  std::vector<VertexId> configuration;  // V(F)
  std::vector<SurgeryStep> script;
  LiftLink lift;
  EmbeddedGraph reduced;
};

// First reducible configuration in scan order: a vertex of degree <= 2 off
// the cuffs, an even chordless cycle (<= 9) of degree-3 vertices off the
// cuffs, or such an odd cycle with two adjacent vertices that both see it.
std::optional<Reduction> find_reduction(const EmbeddedGraph& g);

// Main component and cuff of a near-planar graph.
struct NearPlanarCheck {
  int cuff = 0;
  std::vector<VertexId> main_component;
  int max_face = 0;  // m(G)
};

std::optional<NearPlanarCheck> near_planar(const EmbeddedGraph& g, int cuff);

// Chord of the cuff leaving a 2-cell face of length <= 6, or a vertex with
// three neighbors on it leaving two 2-cell faces of length 5.
bool is_very_exceptional(const EmbeddedGraph& g, int cuff = 0);

// |C| <= 9 and the closed disk bounded by C holds no very exceptional
// subgraph.
bool is_clearable(const EmbeddedGraph& g, const Walk& c);

enum class DiskMode { kFaceAtMost5, kGirth5AtMost9 };

// g in the disk with psi on its cuff; the extension always exists under the
// mode's hypotheses, which are checked.
Coloring extend_in_small_disk(const EmbeddedGraph& g, const Precoloring& psi,
                              DiskMode mode);

// Σ max(7, |C_i|) over the cuffs.
int q_value(const EmbeddedGraph& g);

struct ColorConfig {
  DecideConfig decide;
};

struct ColorStats {
  long long decide_calls = 0;
  long long brute_force = 0;
  long long oracle_fallbacks = 0;
  long long reductions = 0;
  long long identifications = 0;
  long long contractions = 0;
  long long splits = 0;
  long long small_disks = 0;
  long long clearable = 0;
};

struct ColorResult {
  Coloring coloring;
  ColorStats stats;
};

// Throws NonExtendable when psi does not extend.
ColorResult color(const EmbeddedGraph& g, const Precoloring& psi,
                  const ColorConfig& cfg = {});

// Every 4-cycle must be a cuff.
ColorResult color_girth5(const EmbeddedGraph& g, const Precoloring& psi,
                         const ColorConfig& cfg = {});

}  // namespace surfcolor
