#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "surfcolor/homotopy.hpp"
#include "surfcolor/oracle.hpp"

using namespace surfcolor;

namespace {

std::vector<bool> mask_of(const EmbeddedGraph& g, const std::vector<VertexId>& path) {
  std::vector<bool> m(g.edge_capacity(), false);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    m[g.find_edge(path[i], path[i + 1])] = true;
  }
  return m;
}

// Same graph, rotation reversed at the chosen vertices (signs untouched), so
// the surface changes.
EmbeddedGraph reembed(const EmbeddedGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> verts = g.vertices();
  std::vector<EdgeSpec> edges;
  for (EdgeId e : g.edges()) {
    edges.push_back({e, g.edge(e).u, g.edge(e).v, g.sign(e)});
  }
  std::vector<std::vector<Dart>> rot(g.vertex_capacity());
  for (VertexId v : verts) {
    rot[v] = g.rotation(v);
    if (rng() % 3 == 0) std::reverse(rot[v].begin(), rot[v].end());
  }
  return EmbeddedGraph::build(verts, edges, rot, {});
}

// Winding of a closed walk in the w x h torus lattice, from coordinates.
std::pair<int, int> torus_winding(const EmbeddedGraph& g, const Walk& c, int w,
                                  int h) {
  int dx = 0, dy = 0;
  for (Dart d : c.darts) {
    const int a = g.origin(d), b = g.head(d);
    dx += (b % w - a % w + w + 1) % w - 1;
    dy += (b / w - a / w + h + 1) % h - 1;
  }
  return {dx / w, dy / h};
}

bool region_contractible(const EmbeddedGraph& g, const Walk& c) {
  return !bounded_disks(g, c).empty();
}

}  // namespace

TEST(Words, FreeAndCyclicReduction) {
  EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), (Word{3}));
  EXPECT_EQ(cyclic_reduce({-1, 2, 3, 1}), (Word{2, 3}));
  EXPECT_EQ(inverse({1, -2}), (Word{2, -1}));
}

TEST(Homotopy, TorusRowIsNoncontractible) {
  EmbeddedGraph g = grid_torus(4, 4);
  Walk row = walk_from_vertices(g, {0, 1, 2, 3});
  EXPECT_FALSE(is_contractible(g, row));
  Walk face = walk_from_vertices(g, {0, 1, 5, 4});
  std::vector<int> disk;
  EXPECT_TRUE(is_contractible(g, face, &disk));
  EXPECT_EQ(disk.size(), 1u);
  auto c = shortest_noncontractible_cycle(g, 8);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length(), 4u);
  HomotopyGroup grp(g);
  EXPECT_FALSE(grp.is_trivial(row));
  Walk twice = row;
  twice.darts.insert(twice.darts.end(), row.darts.begin(), row.darts.end());
  EXPECT_FALSE(grp.is_trivial(twice));
}

TEST(Homotopy, CubeFaceBoundsTwoDisks) {
  EmbeddedGraph g = cube();
  auto disks = bounded_disks(g, walk_from_vertices(g, {0, 1, 2, 3}));
  ASSERT_EQ(disks.size(), 2u);
  EXPECT_EQ(disks[0].size(), 1u);
  EXPECT_EQ(disks[1].size(), 5u);
  EXPECT_FALSE(shortest_noncontractible_cycle(g, 8).has_value());
  EXPECT_FALSE(shortest_noncontractible_cycle(grid_disk(5, 5), 16).has_value());
}

TEST(Homotopy, ProjectiveFixtures) {
  EmbeddedGraph g = mycielski_embedded(5);
  auto c = shortest_noncontractible_cycle(g, 5);
  ASSERT_TRUE(c.has_value());
  EXPECT_LE(c->length(), 5u);
  HomotopyGroup grp(g);
  EXPECT_FALSE(grp.is_trivial(*c));
  Walk twice = *c;
  twice.darts.insert(twice.darts.end(), c->darts.begin(), c->darts.end());
  EXPECT_TRUE(grp.is_trivial(twice));
}

TEST(Homotopy, TorusAgreesWithWinding) {
  const int w = 5, h = 4;
  EmbeddedGraph g = grid_torus(w, h);
  HomotopyGroup grp(g);
  int noncontractible = 0;
  for (const Walk& c : simple_cycles(g, 8)) {
    const auto wind = torus_winding(g, c, w, h);
    const bool zero = wind.first == 0 && wind.second == 0;
    EXPECT_EQ(region_contractible(g, c), zero);
    EXPECT_EQ(grp.is_trivial(c), zero);
    noncontractible += zero ? 0 : 1;
  }
  EXPECT_GT(noncontractible, 0);
}

TEST(Homotopy, GroupAgreesWithRegionsOnManySurfaces) {
  std::vector<EmbeddedGraph> gs = {grid_klein(4, 4), grid_projective(4, 3),
                                   grid_cylinder(4, 3), petersen_projective(),
                                   mycielski_embedded(7), grid_sphere(3, 4)};
  std::set<std::pair<int, bool>> kinds;
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    gs.push_back(reembed(seed % 2 ? grid_torus(4, 4) : grid_klein(4, 4), seed));
  }
  for (const EmbeddedGraph& g : gs) {
    const SurfaceClass sc = g.surface_class();
    kinds.insert({sc.euler_genus, sc.orientable});
    HomotopyGroup grp(g);
    for (const Walk& c : simple_cycles(g, 6)) {
      EXPECT_EQ(grp.is_trivial(c), region_contractible(g, c)) << sc.name();
    }
  }
  // Both word-problem paths (Dehn and the double cover) were exercised.
  bool high_orientable = false, low_nonorientable = false;
  for (auto [eg, ori] : kinds) {
    high_orientable |= ori && eg >= 4;
    low_nonorientable |= !ori && eg < 4;
  }
  EXPECT_TRUE(high_orientable);
  EXPECT_TRUE(low_nonorientable);
}

TEST(Homotopy, SurroundsCuff) {
  EmbeddedGraph g = grid_cylinder(4, 3);
  Walk mid = walk_from_vertices(g, {4, 5, 6, 7});
  EXPECT_TRUE(surrounds_cuff(g, mid, 0));
  EXPECT_TRUE(surrounds_cuff(g, mid, 1));
  EXPECT_TRUE(surrounds_cuff(g, walk_from_vertices(g, {0, 1, 2, 3}), 0));
  EXPECT_FALSE(surrounds_cuff(g, walk_from_vertices(g, {0, 1, 5, 4}), 0));
  EmbeddedGraph d = grid_disk(3, 3);
  EXPECT_FALSE(surrounds_cuff(d, walk_from_vertices(d, {0, 1, 4, 3}), 0));
}

TEST(Homotopy, Essentiality) {
  EmbeddedGraph cyl = grid_cylinder(4, 3);
  EXPECT_FALSE(is_essential(cyl, mask_of(cyl, {4, 5, 6, 7, 4})));
  EXPECT_TRUE(is_essential(cyl, mask_of(cyl, {0, 4, 8})));
  EXPECT_FALSE(is_essential(cyl, mask_of(cyl, {0, 4})));
  EmbeddedGraph tor = grid_torus(4, 4);
  EXPECT_TRUE(is_essential(tor, mask_of(tor, {0, 1, 2, 3, 0})));
  EXPECT_FALSE(is_essential(tor, mask_of(tor, {0, 1, 5, 4, 0})));
  EXPECT_FALSE(is_essential(tor, mask_of(tor, {0, 1, 2, 6, 10})));
  EmbeddedGraph disk = grid_disk(4, 4);
  std::vector<bool> all(disk.edge_capacity(), true);
  EXPECT_FALSE(is_essential(disk, all));

  auto t = smallest_essential_subgraph(tor, 5);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->size(), 4u);
  auto p = smallest_essential_subgraph(cyl, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 2u);
  EXPECT_FALSE(smallest_essential_subgraph(disk, 5).has_value());
}

TEST(Homotopy, ShortEssentialWalk) {
  EmbeddedGraph tor = grid_torus(4, 5);
  auto w = short_essential_walk(tor, 0, 6);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->length(), 4u);
  EXPECT_FALSE(short_essential_walk(tor, 0, 3).has_value());
  EXPECT_FALSE(short_essential_walk(grid_cylinder(4, 3), 0, 6).has_value());
}

TEST(Homotopy, WalkAroundDrilledFaces) {
  EmbeddedGraph g = grid_disk(4, 4);
  int f1 = 0;
  while (g.all_faces()[f1].is_cuff) ++f1;
  std::vector<int> pair;
  for (const Face& f : g.all_faces()) {
    if (f.is_cuff) continue;
    int shared = 0;
    for (State s : f.walk) {
      for (State t : g.all_faces()[f1].walk) {
        shared += dart_edge(state_dart(s)) == dart_edge(state_dart(t)) ? 1 : 0;
      }
    }
    if (shared == 1) {
      pair = {f1, f.id};
      break;
    }
  }
  ASSERT_EQ(pair.size(), 2u);
  const VertexId v = g.origin(state_dart(g.all_faces()[f1].walk[0]));
  auto w = walk_homotopic_to_patches(g, v, pair, 8);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->length(), 6u);
  EXPECT_FALSE(walk_homotopic_to_patches(g, v, pair, 5).has_value());
  auto one = walk_homotopic_to_patches(g, v, {f1}, 8);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->length(), 4u);
}
