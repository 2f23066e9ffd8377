#pragma once

// Deciding whether a precoloring of the cuffs extends to a 3-coloring.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "surfcolor/embedding.hpp"
#include "surfcolor/oracle.hpp"
#include "surfcolor/weights.hpp"

namespace surfcolor {

// Partial map from boundary vertices to {1,2,3}; 0 means free.
using Precoloring = Coloring;

struct DecideConfig {
  WeightConfig weights;
  int oracle_cap = kDefaultOracleCap;
  // Replaces N_{Σ,k} when positive.
  long long n_override = 0;
  // Largest cut whose colorings are tabulated: 3^dp_cut_cap states.
  int dp_cut_cap = 12;
};

struct DecideStats {
  long long oracle_calls = 0;
  long long disk_calls = 0;
  long long cylinder_calls = 0;
  long long special_calls = 0;
  long long pieces = 0;
  long long free_set_yes = 0;
  long long skeleton_colorings = 0;
};

struct ExtensionResult {
  bool extends = false;
  Coloring witness;  // empty unless extends
};

// Exact, by backtracking; throws OracleCapExceeded above the cap.
ExtensionResult extension_oracle(const EmbeddedGraph& g, const Precoloring& psi,
                                 int cap = kDefaultOracleCap);

// ceil((5 / s(5)) * (k + η s(Σ))) + 8.
long long n_sigma_k(const SurfaceClass& surface, int k,
                    const WeightConfig& cfg = {});

// A subgraph G' of G, as masks over G's ids.
struct NoCertificate {
  std::vector<bool> vertices;
  std::vector<bool> edges;
  Rational weight{0};  // w_η(G') in the surface of G
  Rational bound{0};
};

struct Answer {
  bool yes = false;
  std::optional<NoCertificate> certificate;  // set on NO
};

// G' from the certificate, with the cuffs of G.
EmbeddedGraph certificate_graph(const EmbeddedGraph& g,
                                const NoCertificate& cert);

// Colorings of a vertex list that extend into some region.
struct ExtensionTable {
  std::vector<VertexId> vertices;
  std::vector<std::vector<std::int8_t>> colorings;  // sorted

  bool contains(const std::vector<std::int8_t>& c) const;
  // Relational join over the shared vertices, projected onto `keep`.
  static ExtensionTable compose(const ExtensionTable& a,
                                const ExtensionTable& b,
                                const std::vector<VertexId>& keep);
};

// Table over the cuff vertices of g, in order of first appearance.
ExtensionTable extension_table(const EmbeddedGraph& g,
                               const DecideConfig& cfg = {},
                               DecideStats* stats = nullptr);

// G in the disk; psi must color the whole cuff.
Answer decide_disk(const EmbeddedGraph& g, const Precoloring& psi,
                   const DecideConfig& cfg = {}, DecideStats* stats = nullptr);

// Nested non-contractible cycles of length <= d from one cuff to the other;
// consecutive cycles meet or have no such cycle strictly between them.
std::vector<Walk> cylinder_decomposition(const EmbeddedGraph& g, int d);

bool decide_cylinder(const EmbeddedGraph& g, const Precoloring& psi,
                     const DecideConfig& cfg = {},
                     DecideStats* stats = nullptr);

// Cuff induction, then liberate with k = r = w_η(B).
Answer decide_special(const EmbeddedGraph& g, const Precoloring& psi,
                      const DecideConfig& cfg = {},
                      DecideStats* stats = nullptr);

bool decide_no_small_essential(const EmbeddedGraph& g, const Precoloring& psi,
                               const DecideConfig& cfg = {},
                               DecideStats* stats = nullptr);

using NuFunction = std::function<long long(const SurfaceClass&, int)>;

// H ⊇ B as an edge mask over G; every piece G_h has no connected essential
// subgraph with fewer than ν(Σ_h, k_h) edges.
std::vector<bool> sparsify_essential(const EmbeddedGraph& g,
                                     const NuFunction& nu);

struct Decision {
  bool yes = false;
  DecideStats stats;
};

Decision decide(const EmbeddedGraph& g, const Precoloring& psi,
                const DecideConfig& cfg = {});

}  // namespace surfcolor
