#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "surfcolor/decide.hpp"

namespace surfcolor::detail {

struct Ctx {
  const DecideConfig& cfg;
  DecideStats& stats;
};

// Copy of g on the kept vertices with the given cuffs; ids are preserved and
// origin labels dropped.
EmbeddedGraph rebuild(const EmbeddedGraph& g, const std::vector<bool>& keep,
                      const std::vector<std::vector<VertexId>>& cuffs);
EmbeddedGraph local_copy(const EmbeddedGraph& g);

Walk cuff_walk(const EmbeddedGraph& g, int cuff);
// Cuff vertices in order of first appearance.
std::vector<VertexId> boundary_order(const EmbeddedGraph& g);

// w_η of the subgraph with the given edges, in the surface of g.
Rational mask_weight(const EmbeddedGraph& g, const std::vector<bool>& edges,
                     const WeightConfig& cfg);
NoCertificate make_certificate(const EmbeddedGraph& g,
                               const std::vector<bool>& vertices,
                               const std::vector<bool>& edges,
                               const Rational& bound, const WeightConfig& cfg);
// The live part of h (same ids as g).
NoCertificate certificate_of(const EmbeddedGraph& g, const EmbeddedGraph& h,
                             const Rational& bound, const WeightConfig& cfg);

bool proper_on_edges(const EmbeddedGraph& g, const Precoloring& psi);
ExtensionResult oracle(Ctx& ctx, const EmbeddedGraph& g,
                       const Precoloring& psi);

// Colors relabelled in order of first appearance; 0 stays 0.
std::vector<std::int8_t> canonical_key(const std::vector<std::int8_t>& c);

// Backtracking over the vertices that lie on the border of two or more
// parts. A part is queried once all its shared vertices are set; vertices on
// a single border stay open for the part itself.
class BorderSearch {
 public:
  using Query = std::function<bool(int part, const Precoloring& assignment)>;

  BorderSearch(int capacity, std::vector<std::vector<VertexId>> borders,
               std::vector<std::pair<VertexId, VertexId>> h_edges);

  std::optional<Precoloring> run(const Precoloring& psi, const Query& query,
                                 long long* steps = nullptr);

 private:
  bool search(std::size_t i);

  int capacity_;
  std::vector<std::vector<VertexId>> borders_;
  std::vector<std::pair<VertexId, VertexId>> h_edges_;
  std::vector<bool> shared_;
  const Query* query_ = nullptr;
  long long* steps_ = nullptr;
  Precoloring assign_;
  std::vector<VertexId> order_;
  std::vector<std::vector<int>> ready_;
  bool symmetric_ = false;
};

}  // namespace surfcolor::detail
