#include <gtest/gtest.h>

#include <set>

#include "surfcolor/embedding.hpp"
#include "surfcolor/oracle.hpp"

using namespace surfcolor;

namespace {

std::multiset<std::size_t> face_lengths(const EmbeddedGraph& g) {
  std::multiset<std::size_t> out;
  for (const Face& f : g.faces()) out.insert(f.length());
  return out;
}

std::vector<bool> edge_mask(const EmbeddedGraph& g,
                            const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> m(g.edge_capacity(), false);
  for (auto [a, b] : pairs) {
    const EdgeId e = g.find_edge(a, b);
    EXPECT_NE(e, kNone) << a << "-" << b;
    if (e != kNone) m[e] = true;
  }
  return m;
}

std::vector<std::pair<int, int>> row_cycle(int w, int j) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < w; ++i) out.push_back({j * w + i, j * w + (i + 1) % w});
  return out;
}

std::vector<std::pair<int, int>> column_cycle(int w, int h, int i) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < h; ++j) out.push_back({j * w + i, ((j + 1) % h) * w + i});
  return out;
}

}  // namespace

TEST(Embedding, CubeIsSphereWithSixSquares) {
  const auto g = cube();
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 12);
  EXPECT_EQ(face_lengths(g), (std::multiset<std::size_t>{4, 4, 4, 4, 4, 4}));
  EXPECT_EQ(g.surface_class(), (SurfaceClass{0, 0, true}));
}

TEST(Embedding, FourCycleDisk) {
  const auto g = grid_disk(2, 2);
  EXPECT_EQ(g.surface_class(), (SurfaceClass{0, 1, true}));
  EXPECT_EQ(g.face_count(), 1);
  EXPECT_EQ(g.boundary_vertex_count(), 4);
}

TEST(Embedding, StandardMeshes) {
  EXPECT_EQ(grid_torus(4, 4).surface_class(), (SurfaceClass{2, 0, true}));
  EXPECT_EQ(grid_torus(4, 4).face_count(), 16);
  EXPECT_EQ(grid_klein(4, 5).surface_class(), (SurfaceClass{2, 0, false}));
  EXPECT_EQ(grid_projective(4, 3).surface_class(), (SurfaceClass{1, 0, false}));
  EXPECT_EQ(grid_cylinder(5, 3).surface_class(), (SurfaceClass{0, 2, true}));
  EXPECT_EQ(grid_sphere(4, 3).surface_class(), (SurfaceClass{0, 0, true}));
  EXPECT_EQ(cycle_disk(7).surface_class(), (SurfaceClass{0, 1, true}));
}

TEST(Embedding, ProjectivePlaneFourCycleHasOneFace) {
  // C4 with one twisted edge: a single face of length 8.
  std::vector<VertexId> verts{0, 1, 2, 3};
  std::vector<EdgeSpec> edges{{0, 0, 1, 1}, {1, 1, 2, 1}, {2, 2, 3, 1},
                              {3, 3, 0, -1}};
  std::vector<std::vector<Dart>> rot{{0, 7}, {1, 2}, {3, 4}, {5, 6}};
  const auto g = EmbeddedGraph::build(verts, edges, rot, {});
  EXPECT_EQ(g.face_count(), 1);
  EXPECT_EQ(g.faces()[0].length(), 8u);
  EXPECT_EQ(g.surface_class(), (SurfaceClass{1, 0, false}));
}

TEST(Embedding, Fixtures) {
  const auto p = petersen_projective();
  EXPECT_EQ(face_lengths(p), (std::multiset<std::size_t>{5, 5, 5, 5, 5, 5}));
  EXPECT_EQ(p.surface_class(), (SurfaceClass{1, 0, false}));
  const auto m5 = mycielski_embedded(5);
  EXPECT_EQ(m5.vertex_count(), 11);
  EXPECT_EQ(m5.edge_count(), 20);
  EXPECT_EQ(m5.surface_class(), (SurfaceClass{1, 0, false}));
  EXPECT_EQ(mycielski_embedded(7).surface_class(), (SurfaceClass{1, 0, false}));
}

TEST(Embedding, RejectsCuffThatIsNotAFace) {
  // A 4-cycle chord-free square grid's interior 4-cycle is a face, but the
  // 6-cycle around two squares is not.
  auto g = grid_disk(3, 2);
  std::vector<std::vector<VertexId>> nb;
  std::vector<VertexId> verts;
  for (VertexId v : g.vertices()) {
    verts.push_back(v);
    nb.push_back(g.neighbors(v));
  }
  try {
    EmbeddedGraph::from_neighbor_rotation(nb, {{0, 1, 4, 3}});
    EXPECT_TRUE(true);
  } catch (const Error&) {
    FAIL() << "face cuff rejected";
  }
  try {
    EmbeddedGraph::from_neighbor_rotation(nb, {{0, 1, 4, 5}});
    FAIL() << "non-cycle accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonCycleCuff);
  }
}

TEST(Embedding, ForeignDartRejected) {
  std::vector<VertexId> verts{0, 1, 2, 3};
  std::vector<EdgeSpec> edges{{0, 0, 1, 1}, {1, 1, 2, 1}, {2, 2, 3, 1},
                              {3, 3, 0, 1}};
  std::vector<std::vector<Dart>> rot{{0, 7}, {1, 2}, {3, 4}, {5, 2}};
  EXPECT_THROW(EmbeddedGraph::build(verts, edges, rot, {}), Error);
}

TEST(Embedding, SwitchingPreservesEmbedding) {
  auto g = grid_klein(4, 4);
  auto h = g;
  switch_vertex(h, 5);
  switch_vertex(h, 6);
  EXPECT_TRUE(equivalent_embedding(g, h));
  EXPECT_EQ(h.surface_class(), g.surface_class());
  EXPECT_FALSE(equivalent_embedding(g, grid_torus(4, 4)));
}

TEST(Subgraph, TorusRowIsCylinder) {
  const auto g = grid_torus(5, 4);
  const auto an = subgraph_faces(g, edge_mask(g, row_cycle(5, 0)));
  ASSERT_EQ(an.regions.size(), 1u);
  EXPECT_EQ(an.regions[0].walks.size(), 2u);
  EXPECT_EQ(an.regions[0].surface, (SurfaceClass{0, 2, true}));
  const auto piece = face_subsurface(g, an.in_h_edge, an, 0);
  EXPECT_EQ(piece.graph.surface_class(), (SurfaceClass{0, 2, true}));
  EXPECT_EQ(piece.graph.vertex_count(), 25);
}

TEST(Subgraph, TorusRowAndColumnIsDisk) {
  const auto g = grid_torus(4, 4);
  auto pairs = row_cycle(4, 0);
  for (auto p : column_cycle(4, 4, 0)) pairs.push_back(p);
  const auto an = subgraph_faces(g, edge_mask(g, pairs));
  ASSERT_EQ(an.regions.size(), 1u);
  EXPECT_TRUE(an.regions[0].two_cell());
  EXPECT_EQ(an.regions[0].length(), 16);
  const auto piece = face_subsurface(g, an.in_h_edge, an, 0);
  EXPECT_EQ(piece.graph.surface_class(), (SurfaceClass{0, 1, true}));
}

TEST(Subgraph, KleinTwistedRowIsMobiusPair) {
  // Cutting the Klein bottle along a row through the twist leaves an annulus
  // or a Moebius band; either way the surface class must match the piece.
  const auto g = grid_klein(4, 5);
  const auto an = subgraph_faces(g, edge_mask(g, column_cycle(4, 5, 1)));
  for (std::size_t r = 0; r < an.regions.size(); ++r) {
    const auto piece = face_subsurface(g, an.in_h_edge, an, r);
    EXPECT_EQ(piece.graph.surface_class(), an.regions[r].surface);
  }
}

TEST(Subgraph, CubeEquatorSplitsIntoTwoDisks) {
  const auto g = cube();
  const auto an = subgraph_faces(g, edge_mask(g, row_cycle(4, 0)));
  ASSERT_EQ(an.regions.size(), 2u);
  for (const auto& r : an.regions) EXPECT_TRUE(r.two_cell());
}

TEST(Subgraph, CylinderCuffHole) {
  const auto g = grid_cylinder(4, 3);
  const auto an = subgraph_faces(g, edge_mask(g, row_cycle(4, 0)));
  int holes = 0;
  for (const auto& r : an.regions) {
    if (r.is_hole) {
      ++holes;
    } else {
      EXPECT_EQ(r.surface, (SurfaceClass{0, 2, true}));
    }
  }
  EXPECT_EQ(holes, 1);
}

TEST(DiskSurgery, TwoAdjacentSquares) {
  const auto g = cube();
  const int f = g.face_of_dart(0);
  const int f2 = g.face_of_state(make_state(0, -1));
  const auto h = delete_disk_interior(g, {f, f2});
  EXPECT_EQ(h.edge_count(), 11);
  EXPECT_EQ(face_lengths(h), (std::multiset<std::size_t>{4, 4, 4, 4, 6}));
}

TEST(DiskSurgery, CornerOfCube) {
  const auto g = cube();
  std::vector<int> faces;
  for (Dart d : g.rotation(0)) faces.push_back(g.face_of_dart(d));
  const auto h = delete_disk_interior(g, faces);
  EXPECT_EQ(h.vertex_count(), 7);
  EXPECT_EQ(face_lengths(h), (std::multiset<std::size_t>{4, 4, 4, 6}));
}

TEST(DiskSurgery, ComplementOfOneFaceRejected) {
  const auto g = cube();
  std::vector<int> faces;
  for (int f = 1; f < 6; ++f) faces.push_back(f);
  try {
    delete_disk_interior(g, faces);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotADisk);
  }
}

TEST(DiskSurgery, NonDiskRejected) {
  const auto g = grid_torus(4, 4);
  std::vector<int> faces;
  for (const Face& f : g.faces()) faces.push_back(f.id);
  faces.pop_back();
  faces.pop_back();
  EXPECT_THROW(delete_disk_interior(g, faces), Error);
}

TEST(Walks, CycleHelpers) {
  const auto g = grid_torus(4, 4);
  const auto w = walk_from_vertices(g, {0, 1, 2, 3});
  EXPECT_TRUE(is_closed_walk(g, w));
  EXPECT_TRUE(is_cycle(g, w));
  EXPECT_EQ(walk_vertices(g, w).size(), 4u);
  EXPECT_THROW(walk_from_vertices(g, {0, 2}), Error);
}

class NormalRep : public ::testing::TestWithParam<int> {};

TEST_P(NormalRep, RegluesToOriginal) {
  std::vector<EmbeddedGraph> all{cube(),           grid_disk(3, 3),
                                 grid_cylinder(4, 3), grid_torus(4, 4),
                                 grid_klein(4, 4), grid_projective(4, 3),
                                 petersen_projective(), mycielski_embedded(5),
                                 mycielski_embedded(7)};
  const auto& g = all[GetParam()];
  const auto rep = normal_representation(g);
  const auto s = g.surface_class();
  const int gc = s.euler_genus + s.cuff_count;
  if (gc > 0) {
    EXPECT_LE(rep.cut_branch_vertices, 2 * (gc - 1));
    EXPECT_LE(static_cast<int>(rep.arc_pairs.size()), 3 * gc + 1);
  }
  if (rep.boundary.size() > 0) {
    EXPECT_EQ(rep.disk_graph.surface_class(), (SurfaceClass{0, 1, true}));
  }
  const auto back = reglue(rep);
  EXPECT_TRUE(equivalent_embedding(g, back));
  EXPECT_EQ(back.surface_class(), s);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, NormalRep, ::testing::Range(0, 9));
