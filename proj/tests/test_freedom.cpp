#include <gtest/gtest.h>

#include <random>

#include "surfcolor/freedom.hpp"
#include "surfcolor/homotopy.hpp"
#include "test_util.hpp"

using namespace surfcolor;
using testutil::ring;

namespace {

int face_with_length(const EmbeddedGraph& g, std::size_t len) {
  for (const Face& f : g.all_faces()) {
    if (!f.is_cuff && f.length() == len) return f.id;
  }
  return kNone;
}

std::vector<std::pair<int, int>> spokes_every(int step, int m) {
  std::vector<std::pair<int, int>> s;
  for (int j = 0; j < m; ++j) s.push_back({step * j, j});
  return s;
}

// Shortest simple cycle binding S, from the flood-fill sides; 0 if none.
int oracle_binding_length(const EmbeddedGraph& g, const std::vector<int>& s,
                          int k) {
  int best = 0;
  for (const Walk& c : testutil::all_cycles(g, k)) {
    const auto side = testutil::inner_side(g, c);
    if (side.empty()) continue;
    // The walk of a member face itself; a shorter cycle around a face with
    // pendant edges encloses more than the face.
    if (side.size() == 1 && g.all_faces()[side[0]].length() == c.length() &&
        std::find(s.begin(), s.end(), side[0]) != s.end()) {
      continue;
    }
    Rational in(0);
    for (int f : s) {
      if (std::binary_search(side.begin(), side.end(), f)) {
        in += s_face(static_cast<int>(g.all_faces()[f].length()));
      }
    }
    if (in > 0 && in >= s_face(static_cast<int>(c.length()))) {
      const int len = static_cast<int>(c.length());
      if (best == 0 || len < best) best = len;
    }
  }
  return best;
}

std::vector<EmbeddedGraph> small_disks(int count) {
  std::vector<EmbeddedGraph> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
    out.push_back(random_instance(SurfaceClass{0, 1, true},
                                  8 + static_cast<int>(seed % 7), seed));
  }
  return out;
}

}  // namespace

TEST(Binds, NineFaceInsideNineCycle) {
  // Outer 9-cycle, inner 9-cycle, three spokes: ring faces have length 8.
  EmbeddedGraph g = ring(9, 9, {{0, 0}, {3, 3}, {6, 6}});
  const int nine = face_with_length(g, 9);
  ASSERT_NE(nine, kNone);
  FaceSet s(g, {nine});
  EXPECT_EQ(s.weight(), Rational(1));
  Walk outer = walk_from_vertices(g, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  auto disks = bounded_disks(g, outer);
  ASSERT_EQ(disks.size(), 1u);
  EXPECT_TRUE(binds(g, outer, disks[0], s));
  EXPECT_FALSE(binds(g, outer, disks[0], FaceSet(g, {})));
  Walk inner = walk_from_vertices(g, {9, 10, 11, 12, 13, 14, 15, 16, 17});
  EXPECT_FALSE(binds(g, inner, {nine}, s));
  EXPECT_THROW(binds(g, inner, disks[0], s), Error);
}

TEST(FreeSingle, Examples) {
  // 5-face inside a 10-cycle with every ring face of length 5.
  EmbeddedGraph pent = ring(10, 5, spokes_every(2, 5));
  int f5 = kNone;
  for (const Face& f : pent.all_faces()) {
    std::set<int> ids;
    for (State st : f.walk) ids.insert(pent.origin(state_dart(st)));
    if (ids == std::set<int>{10, 11, 12, 13, 14}) f5 = f.id;
  }
  ASSERT_NE(f5, kNone);
  EXPECT_FALSE(test_free_single(pent, f5, 8).has_value());

  EmbeddedGraph g = ring(9, 9, {{0, 0}, {3, 3}, {6, 6}});
  const int nine = face_with_length(g, 9);
  auto cert = test_free_single(g, nine, 9);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->walk.length(), 9u);
  EXPECT_EQ(cert->disk.size(), 4u);
  EXPECT_FALSE(test_free_single(g, nine, 8).has_value());
  EXPECT_FALSE(test_free_single(g, nine, 4).has_value());
}

TEST(FreeSingle, MinimalAgainstCycleEnumeration) {
  int compared = 0, bound = 0;
  for (const EmbeddedGraph& g0 : small_disks(40)) {
    const EmbeddedGraph g = elim_small_contractible(g0).graph;
    for (const Face& f : g.all_faces()) {
      if (f.is_cuff || f.length() < 5) continue;
      for (int k = 4; k <= 8; ++k) {
        auto cert = test_free_single(g, f.id, k);
        const int want = oracle_binding_length(g, {f.id}, k);
        ASSERT_EQ(cert.has_value(), want > 0);
        ++compared;
        if (!cert) continue;
        ++bound;
        EXPECT_EQ(static_cast<int>(cert->walk.length()), want);
        EXPECT_TRUE(std::binary_search(cert->disk.begin(), cert->disk.end(),
                                       f.id));
        // After removing Λ, nothing of length <= |W| binds it again.
        EmbeddedGraph h = cert->disk.size() > 1
                              ? delete_disk_interior(g, cert->disk)
                              : g;
        std::set<VertexId> on_w;
        for (Dart d : cert->walk.darts) on_w.insert(h.origin(d));
        for (const Face& lam : h.all_faces()) {
          if (lam.is_cuff || lam.length() != cert->walk.length()) continue;
          std::set<VertexId> on_f;
          for (State st : lam.walk) on_f.insert(h.origin(state_dart(st)));
          if (on_f == on_w) EXPECT_FALSE(test_free_single(h, lam.id, k));
        }
      }
    }
  }
  EXPECT_GT(compared, 50);
  EXPECT_GT(bound, 0);
}

TEST(FreeSet, AgreesWithCycleEnumeration) {
  std::mt19937_64 rng(7);
  int compared = 0, bound = 0;
  for (const EmbeddedGraph& g0 : small_disks(40)) {
    const EmbeddedGraph g = elim_small_contractible(g0).graph;
    std::vector<int> big;
    for (const Face& f : g.all_faces()) {
      if (!f.is_cuff && f.length() >= 5) big.push_back(f.id);
    }
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> s;
      for (int f : big) {
        if (rng() % 2) s.push_back(f);
      }
      const int k = 4 + static_cast<int>(rng() % 7);
      auto cert = test_free_set(g, FaceSet(g, s), k);
      const int want = oracle_binding_length(g, s, k);
      ASSERT_EQ(cert.has_value(), want > 0);
      ++compared;
      if (!cert) continue;
      ++bound;
      EXPECT_EQ(static_cast<int>(cert->walk.length()), want);
      EXPECT_TRUE(binds(g, cert->walk, cert->disk, FaceSet(g, s)));
    }
  }
  EXPECT_TRUE(test_free_set(grid_disk(4, 4), FaceSet(), 10) == std::nullopt);
  EXPECT_GT(compared, 100);
  EXPECT_GT(bound, 0);
}

TEST(SimplifyWalk, Basics) {
  EmbeddedGraph g = grid_disk(4, 4);
  int f = 0;
  while (g.all_faces()[f].is_cuff) ++f;
  Walk fw;
  for (State st : g.all_faces()[f].walk) fw.darts.push_back(state_dart(st));
  auto t = simplify_walk(g, fw, {f});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].g_faces, std::vector<int>{f});

  Walk big = walk_from_vertices(g, {0, 1, 2, 6, 10, 9, 8, 4});
  auto t2 = simplify_walk(g, big, {f});
  ASSERT_EQ(t2.size(), 1u);
  EXPECT_EQ(t2[0].walks[0].size(), big.length());
  EXPECT_EQ(t2[0].g_faces.size(), 4u);
}

TEST(Elim, ChordPathAndNesting) {
  using testutil::planar;
  EmbeddedGraph chord = planar({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}},
                               {{0, 1, 2, 3}});
  Elimination e = elim_small_contractible(chord);
  EXPECT_FALSE(e.graph.vertex_alive(4));
  ASSERT_EQ(e.pockets.size(), 1u);
  EXPECT_EQ(e.pockets[0].removed.vertices, std::vector<VertexId>{4});

  std::vector<std::pair<double, double>> xy;
  std::vector<std::pair<int, int>> edges;
  for (int level = 0; level < 3; ++level) {
    const double r = 3 - level;
    xy.insert(xy.end(), {{-r, -r}, {r, -r}, {r, r}, {-r, r}});
    for (int i = 0; i < 4; ++i) {
      edges.push_back({4 * level + i, 4 * level + (i + 1) % 4});
      if (level > 0) edges.push_back({4 * (level - 1) + i, 4 * level + i});
    }
  }
  EmbeddedGraph nested = testutil::planar(xy, edges, {{0, 1, 2, 3}});
  Elimination n = elim_small_contractible(nested);
  EXPECT_EQ(n.graph.vertex_count(), 4);
  ASSERT_EQ(n.pockets.size(), 1u);
  EXPECT_EQ(n.pockets[0].removed.vertices.size(), 8u);

  EmbeddedGraph quad = grid_disk(4, 4);
  EXPECT_TRUE(elim_small_contractible(quad).pockets.empty());
}

TEST(Liberate, Examples) {
  EmbeddedGraph quad = grid_disk(4, 5);
  LiberateResult q = liberate(quad, 10, s_face(10));
  EXPECT_EQ(q.graph.vertex_count(), quad.vertex_count());
  EXPECT_TRUE(q.free_set.empty());
  EXPECT_EQ(q.total_weight, Rational(0));

  // 9-face inside an 18-cycle; ring faces of length 5; nothing binds it.
  EmbeddedGraph g = ring(18, 9, spokes_every(2, 9));
  const int nine = face_with_length(g, 9);
  LiberateResult l = liberate(g, 16, Rational(1, 2));
  ASSERT_EQ(l.free_set.size(), 1u);
  EXPECT_EQ(l.free_set.faces()[0], nine);
  EXPECT_EQ(l.free_set.weight(), Rational(1));
  EXPECT_FALSE(test_free_set(l.graph, l.free_set, 16).has_value());
  EXPECT_LE(l.steps, l.step_bound);
}

TEST(Liberate, ColoringsOfResultExtend) {
  int checked = 0, shrunk = 0;
  for (const EmbeddedGraph& g : small_disks(60)) {
    const int b = static_cast<int>(g.cuffs()[0].size());
    for (int k : {4, std::max(4, b - 2)}) {
      LiberateResult l = liberate(g, k, s_face(k) / Rational(2));
      const EmbeddedGraph& h = l.graph;
      ASSERT_TRUE(l.total_weight <= s_face(k) / Rational(2) ||
                  (l.free_set.weight() > s_face(k) / Rational(2) &&
                   !test_free_set(h, l.free_set, k)));
      ASSERT_EQ(h.cuffs(), g.cuffs());
      if (h.vertex_count() < g.vertex_count()) ++shrunk;
      for (const Pocket& p : l.pockets) {
        EXPECT_TRUE(is_closed_walk(g, p.boundary));
        for (VertexId v : p.removed.vertices) EXPECT_FALSE(h.vertex_alive(v));
      }
      SimpleGraph sh = abstract_graph(h);
      SimpleGraph sg = abstract_graph(g);
      for_each_3coloring(sh, {}, [&](const Coloring& c) {
        Coloring psi(sg.n, 0);
        for (VertexId v : h.vertices()) psi[v] = c[v];
        EXPECT_TRUE(brute_force_3color(sg, psi).has_value());
        ++checked;
        return true;
      });
    }
  }
  EXPECT_GT(checked, 100);
  EXPECT_GT(shrunk, 0);
}

TEST(Liberate, Bounds) {
  EXPECT_EQ(free_set_cap(Rational(0)), 1);
  EXPECT_EQ(free_set_cap(s_face(5)), 2);
  EXPECT_EQ(free_set_cap(Rational(1)), 4113 / 4 + 1 + 1);
  EXPECT_EQ(small_multiset_count(Rational(0)), 1);
  // Multisets of {5, 6} with weights 4 and 72 (in units of 1/4113) fitting 80:
  // {}, 5 x1..20, 6, 6+5 x1..2.
  EXPECT_EQ(small_multiset_count(Rational(80, 4113)), 1 + 20 + 1 + 2);
}
