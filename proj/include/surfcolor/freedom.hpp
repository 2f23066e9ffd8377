#pragma once

// Binding walks, k-free face sets and the liberate reduction.
//
// A closed walk W bounding an open disk Λ binds a face set S when Λ is not a
// member of S and the weight of the members inside Λ is positive and at
// least s(|W|). S is k-free when no walk of length at most k binds it.

#include <optional>
#include <vector>

#include "surfcolor/embedding.hpp"
#include "surfcolor/weights.hpp"

namespace surfcolor {

class FaceSet {
 public:
  FaceSet() = default;
  FaceSet(const EmbeddedGraph& g, std::vector<int> faces);

  const std::vector<int>& faces() const { return faces_; }
  const Rational& weight() const { return weight_; }
  bool contains(int f) const;
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }

 private:
  std::vector<int> faces_;  // sorted
  Rational weight_{0};
};

struct BindingCertificate {
  Walk walk;
  std::vector<int> disk;  // faces of G forming Λ, sorted
  Rational bound_weight{0};
};

bool binds(const EmbeddedGraph& g, const Walk& w,
           const std::vector<int>& disk, const FaceSet& s);

// Faces of the walk subgraph that meet the drilled faces; each is 2-cell and
// their lengths sum to at most |W|.
std::vector<Region> simplify_walk(const EmbeddedGraph& g, const Walk& w,
                                  const std::vector<int>& drilled);

// Shortest binding walk for S, or nullopt when S is k-free.
std::optional<BindingCertificate> test_free_set(const EmbeddedGraph& g,
                                                const FaceSet& s, int k);

// nullopt iff {f} is k-free; otherwise a shortest binding walk, widened to a
// disk Λ such that {Λ} is k-free once the inside of Λ is removed.
std::optional<BindingCertificate> test_free_single(const EmbeddedGraph& g,
                                                   int face, int k);

// A removed disk: its boundary walk and what was drawn inside, in the ids of
// the graph it was removed from (ids survive surgery).
struct Pocket {
  Walk boundary;
  DiskInterior removed;
};

struct Elimination {
  EmbeddedGraph graph;
  std::vector<Pocket> pockets;  // outermost first
};

// Removes the inside of every contractible cycle of length at most 4 that
// does not bound a face.
Elimination elim_small_contractible(const EmbeddedGraph& g);

struct LiberateResult {
  EmbeddedGraph graph;  // G'
  FaceSet free_set;     // S, faces of G'
  Rational total_weight{0};  // w0(G')
  std::vector<Pocket> pockets;  // elimination pockets, then binding steps
  int steps = 0;
  int step_bound = 0;
};

// Either w0(G') <= r, or S is k-free in G' with weight above r.
LiberateResult liberate(const EmbeddedGraph& g, int k, const Rational& r);

// b = ceil(r / s(5)) + 1.
long long free_set_cap(const Rational& r);
// Multisets of integers >= 5 whose s-values sum to at most r (saturating).
long long small_multiset_count(const Rational& r);

}  // namespace surfcolor
