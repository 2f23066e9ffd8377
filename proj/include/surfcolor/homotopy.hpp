#pragma once

// Homotopy queries on a connected embedded graph.
//
// Closed walks are mapped to words in the fundamental group of the surface
// through a tree-cotree presentation. Faces marked as holes carry no relator
// (cuffs by default; patching a cuff removes its hole, drilling a face adds
// one). With at least one hole the group is free; otherwise the single
// remaining relator is handled per surface type.

#include <memory>
#include <optional>
#include <vector>

#include "surfcolor/embedding.hpp"

namespace surfcolor {

// Generator i is written as i + 1, its inverse as -(i + 1).
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

class HomotopyGroup {
 public:
  // holes[f] over g.all_faces(); empty means "cuff faces only".
  explicit HomotopyGroup(const EmbeddedGraph& g, std::vector<bool> holes = {});

  static HomotopyGroup patched(const EmbeddedGraph& g,
                               const std::vector<int>& patched_cuffs,
                               const std::vector<int>& drilled_faces = {});

  Word word(const Walk& w) const;
  bool is_trivial(const Walk& w) const;
  bool is_trivial(const Word& w) const;
  // Free homotopy of closed walks (conjugacy, up to inversion when
  // `allow_inverse`). Only for presentations with a hole.
  bool freely_homotopic(const Word& a, const Word& b,
                        bool allow_inverse) const;

  bool is_free() const { return !has_relator_; }
  int generator_count() const { return generators_; }
  const Word& relator() const { return relator_; }

 private:
  Word dart_word(Dart d) const;

  const EmbeddedGraph* g_;
  std::vector<bool> in_tree_;
  // Per edge: the word of dart 2e (dart 2e+1 is its inverse).
  std::vector<Word> edge_word_;
  int generators_ = 0;
  bool has_relator_ = false;
  Word relator_;
  SurfaceClass closed_;  // surface with every hole patched
  mutable std::shared_ptr<EmbeddedGraph> cover_;
  mutable std::shared_ptr<HomotopyGroup> cover_group_;
};

// Orientation double cover of a closed non-orientable embedding; vertex
// (v, s) gets id 2v + s and edge e lifts to 2e and 2e + 1.
EmbeddedGraph orientation_cover(const EmbeddedGraph& g);
// Lift of a closed walk starting on sheet 0; nullopt when it does not close.
std::optional<Walk> lift_walk(const EmbeddedGraph& g, const Walk& w);

// Open disks bounded by the walk, each as a list of faces of G. For a cycle
// on the sphere both sides qualify.
std::vector<std::vector<int>> bounded_disks(const EmbeddedGraph& g,
                                            const Walk& w);

// Null-homotopic and bounding an open disk; the disk is reported if asked.
bool is_contractible(const EmbeddedGraph& g, const Walk& w,
                     std::vector<int>* disk_faces = nullptr);

// K is a cycle; true iff non-contractible in Σ but contractible in Σ + Ĉ.
bool surrounds_cuff(const EmbeddedGraph& g, const Walk& cycle, int cuff);

// Shortest closed walk through v of length <= d that stays non-null-homotopic
// after patching any single cuff.
std::optional<Walk> short_essential_walk(const EmbeddedGraph& g, VertexId v,
                                         int d);

// Shortest closed walk through v of length <= d freely homotopic, in Σ with
// the given faces drilled, to the boundary of the disk they form together.
// The faces must form an open disk.
std::optional<Walk> walk_homotopic_to_patches(const EmbeddedGraph& g,
                                              VertexId v,
                                              const std::vector<int>& faces,
                                              int d);

// Not contained in an open disk or in an open disk with a cuff as its hole.
bool is_essential(const EmbeddedGraph& g, const std::vector<bool>& h_edges);

// A connected essential subgraph with at most m edges, as an edge list.
std::optional<std::vector<EdgeId>> smallest_essential_subgraph(
    const EmbeddedGraph& g, int m);

// Shortest non-contractible cycle of length <= d; cuffs are skipped when
// exclude_boundary is set.
std::optional<Walk> shortest_noncontractible_cycle(const EmbeddedGraph& g,
                                                   int d,
                                                   bool exclude_boundary = true);

// All simple cycles of length <= d, each listed once as a walk starting at
// its smallest vertex.
std::vector<Walk> simple_cycles(const EmbeddedGraph& g, int d);

}  // namespace surfcolor
