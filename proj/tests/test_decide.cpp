#include <gtest/gtest.h>

#include <random>

#include "surfcolor/decide.hpp"
#include "surfcolor/homotopy.hpp"
#include "test_util.hpp"

using namespace surfcolor;

namespace {

bool truth(const EmbeddedGraph& g, const Precoloring& psi) {
  return brute_force_3color(g, psi).has_value();
}

// Up to `count` boundary vertices precolored at random, proper on edges.
Precoloring random_psi(const EmbeddedGraph& g, int count, std::mt19937_64& rng) {
  Precoloring psi(g.vertex_capacity(), 0);
  auto b = g.boundary_vertices();
  std::shuffle(b.begin(), b.end(), rng);
  const int n = std::min<int>(count, static_cast<int>(b.size()));
  for (int i = 0; i < n; ++i) {
    for (int tries = 0; tries < 6; ++tries) {
      psi[b[i]] = 1 + static_cast<int>(rng() % 3);
      bool ok = true;
      for (VertexId w : g.neighbors(b[i])) ok &= psi[w] != psi[b[i]];
      if (ok) break;
      psi[b[i]] = 0;
    }
  }
  return psi;
}

// A full proper coloring of the cuffs, drawn from a random coloring of the
// cuff subgraph.
Precoloring random_full_boundary(const EmbeddedGraph& g, std::mt19937_64& rng) {
  Precoloring psi(g.vertex_capacity(), 0);
  for (VertexId v : g.boundary_vertices()) {
    std::vector<int> ok;
    for (int c = 1; c <= 3; ++c) {
      bool fine = true;
      for (VertexId w : g.neighbors(v)) fine &= psi[w] != c;
      if (fine) ok.push_back(c);
    }
    if (ok.empty()) return random_full_boundary(g, rng);
    psi[v] = ok[rng() % ok.size()];
  }
  return psi;
}

void check_certificate(const EmbeddedGraph& g, const Precoloring& psi,
                       const NoCertificate& cert) {
  for (VertexId v : g.boundary_vertices()) EXPECT_TRUE(cert.vertices[v]);
  const auto b = g.boundary_edge_mask();
  for (std::size_t e = 0; e < b.size(); ++e) {
    if (b[e]) EXPECT_TRUE(cert.edges[e]);
  }
  EXPECT_LE(cert.weight, cert.bound);
  const EmbeddedGraph sub = certificate_graph(g, cert);
  EXPECT_FALSE(truth(sub, psi));
}

}  // namespace

TEST(Oracle, Examples) {
  const EmbeddedGraph c5 = cycle_disk(5);
  Precoloring psi(c5.vertex_capacity(), 0);
  psi[0] = 2;
  const auto r = extension_oracle(c5, psi);
  EXPECT_TRUE(r.extends);
  EXPECT_TRUE(verify_coloring(c5, r.witness, psi));
  EXPECT_FALSE(extension_oracle(mycielski_embedded(5), {}).extends);
  EXPECT_THROW(extension_oracle(grid_torus(9, 9), {}, 64), Error);
}

TEST(Oracle, QuadrangulatedDiskMatchesEnumeration) {
  const EmbeddedGraph g = grid_disk(3, 3);
  // The outer 4-cycle of a 3x3 grid in the disk is its cuff.
  const auto& cuff = g.cuffs()[0];
  std::vector<int> pattern{1, 2, 1, 3, 2, 3, 1, 2};
  Precoloring psi(g.vertex_capacity(), 0);
  for (std::size_t i = 0; i < cuff.size(); ++i) psi[cuff[i]] = pattern[i % 8];
  const bool expect = count_3colorings(abstract_graph(g), psi) > 0;
  EXPECT_EQ(extension_oracle(g, psi).extends, expect);
}

TEST(NSigma, MonotoneInK) {
  for (const SurfaceClass& s : supported_surfaces()) {
    long long prev = 0;
    for (int k = 0; k <= 24; ++k) {
      const long long n = n_sigma_k(s, k);
      EXPECT_GE(n, prev);
      EXPECT_GE(n, 8);
      prev = n;
    }
  }
}

TEST(DecideDisk, SmallBoundaryAlwaysExtends) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const EmbeddedGraph g = random_instance(SurfaceClass{0, 1, true}, 14, seed);
    if (g.cuffs()[0].size() > 5) continue;
    std::mt19937_64 rng(seed);
    const Precoloring psi = random_full_boundary(g, rng);
    EXPECT_TRUE(decide_disk(g, psi).yes);
  }
}

TEST(DecideDisk, AgreesWithOracleAndCertifiesNo) {
  int no = 0, runs = 0;
  for (std::uint64_t seed = 1; runs < 120; ++seed) {
    const EmbeddedGraph g =
        random_instance(SurfaceClass{0, 1, true}, 10 + static_cast<int>(seed % 20), seed);
    std::mt19937_64 rng(seed * 7);
    const Precoloring psi = random_full_boundary(g, rng);
    ++runs;
    const Answer a = decide_disk(g, psi);
    ASSERT_EQ(a.yes, truth(g, psi)) << "seed " << seed;
    if (!a.yes) {
      ++no;
      ASSERT_TRUE(a.certificate.has_value());
      check_certificate(g, psi, *a.certificate);
    }
  }
  EXPECT_GT(no, 0);
}

TEST(CylinderDecomposition, ShortCylinder) {
  const auto cyc = cylinder_decomposition(grid_cylinder(4, 2), 4);
  EXPECT_EQ(cyc.size(), 2u);
}

TEST(CylinderDecomposition, LongCylinderIsSparse) {
  const EmbeddedGraph g = grid_cylinder(4, 11);
  const auto cyc = cylinder_decomposition(g, 4);
  ASSERT_GE(cyc.size(), 2u);
  const int h0 = g.cuff_face(0), h1 = g.cuff_face(1);
  auto side = [&](const Walk& w) {
    for (const auto& s : testutil::cycle_sides(g, w)) {
      if (std::binary_search(s.begin(), s.end(), h0)) return s;
    }
    return std::vector<int>{};
  };
  std::vector<std::vector<int>> sides;
  for (const Walk& w : cyc) sides.push_back(side(w));
  std::vector<std::vector<int>> all;
  for (const Walk& w : testutil::all_cycles(g, 4)) {
    auto s = side(w);
    if (!std::binary_search(s.begin(), s.end(), h1)) all.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
    EXPECT_TRUE(std::includes(sides[i + 1].begin(), sides[i + 1].end(),
                              sides[i].begin(), sides[i].end()));
    const auto a = walk_vertices(g, cyc[i]);
    const auto b = walk_vertices(g, cyc[i + 1]);
    bool meet = false;
    for (VertexId v : a) meet |= std::find(b.begin(), b.end(), v) != b.end();
    if (meet) continue;
    for (const auto& s : all) {
      const bool between =
          std::includes(s.begin(), s.end(), sides[i].begin(), sides[i].end()) &&
          std::includes(sides[i + 1].begin(), sides[i + 1].end(), s.begin(), s.end());
      EXPECT_FALSE(between && s != sides[i] && s != sides[i + 1]);
    }
  }
}

TEST(DecideCylinder, AgreesWithOracle) {
  std::mt19937_64 rng(5);
  for (int h = 2; h <= 6; ++h) {
    const EmbeddedGraph g = grid_cylinder(4, h);
    for (int t = 0; t < 6; ++t) {
      const Precoloring psi = random_full_boundary(g, rng);
      EXPECT_EQ(decide_cylinder(g, psi), truth(g, psi)) << h;
    }
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const EmbeddedGraph g = random_instance(SurfaceClass{0, 2, true}, 22, seed);
    const Precoloring psi = random_psi(g, 4, rng);
    EXPECT_EQ(decide_cylinder(g, psi), truth(g, psi)) << seed;
  }
}

TEST(ExtensionTable, ComposeIsAssociativeOnGridBands) {
  const EmbeddedGraph two = grid_cylinder(4, 2);
  const EmbeddedGraph three = grid_cylinder(4, 3);
  const ExtensionTable ab = extension_table(two);
  // The same band shifted one row down.
  ExtensionTable bc = ab;
  for (VertexId& v : bc.vertices) v += 4;
  std::vector<VertexId> keep{0, 1, 2, 3, 8, 9, 10, 11};
  const ExtensionTable composed = ExtensionTable::compose(ab, bc, keep);
  const ExtensionTable direct = extension_table(three);
  ExtensionTable reordered = ExtensionTable::compose(
      direct, ExtensionTable{{}, {{}}}, keep);
  EXPECT_EQ(composed.colorings, reordered.colorings);
  EXPECT_FALSE(direct.colorings.empty());
}

TEST(Sparsify, TorusGetsCutIntoSimplerPieces) {
  const EmbeddedGraph g = grid_torus(4, 4);
  const auto nu = [](const SurfaceClass& s, int) -> long long {
    return (s.is_disk() || s.is_cylinder()) ? 0 : 1000;
  };
  const auto h = sparsify_essential(g, nu);
  const SubgraphFaces an = subgraph_faces(g, h);
  for (const Region& r : an.regions) {
    EXPECT_TRUE(r.surface.is_disk() || r.surface.is_cylinder());
  }
  EXPECT_TRUE(is_essential(g, h));
}

TEST(Sparsify, NothingSmallLeavesBoundary) {
  const EmbeddedGraph g = grid_cylinder(4, 3);
  const auto h = sparsify_essential(
      g, [](const SurfaceClass&, int) -> long long { return 1000; });
  auto b = g.boundary_edge_mask();
  b.resize(h.size(), false);
  EXPECT_EQ(h, b);
}

TEST(Decide, Examples) {
  EXPECT_FALSE(decide(mycielski_embedded(5), {}).yes);
  EXPECT_FALSE(decide(mycielski_embedded(7), {}).yes);
  EXPECT_TRUE(decide(grid_torus(4, 4), {}).yes);
  EXPECT_TRUE(decide(cube(), {}).yes);
  EXPECT_THROW(decide(grid_torus(3, 3), {}), Error);
}

TEST(Decide, AgreesWithOracleOnAllSurfaces) {
  std::mt19937_64 rng(11);
  int runs = 0, no = 0;
  for (const SurfaceClass& s : supported_surfaces()) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const EmbeddedGraph g =
          random_instance(s, 12 + static_cast<int>(seed * 3 % 20), seed);
      if (g.boundary_vertex_count() > 12) continue;
      Precoloring psi = random_psi(g, 4, rng);
      // Odd seeds look for a full cuff coloring that does not extend.
      for (int t = 0; seed % 2 && t < 30 && g.boundary_vertex_count() > 0; ++t) {
        psi = random_full_boundary(g, rng);
        if (!truth(g, psi)) break;
      }
      const bool expect = truth(g, psi);
      EXPECT_EQ(decide(g, psi).yes, expect) << s.name() << " seed " << seed;
      ++runs;
      no += expect ? 0 : 1;
    }
  }
  EXPECT_GT(no, 0);
}

TEST(Decide, SmallNOverrideTakesTheSpecialPath) {
  DecideConfig cfg;
  cfg.n_override = 3;
  std::mt19937_64 rng(3);
  long long special = 0;
  for (const SurfaceClass& s : supported_surfaces()) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const EmbeddedGraph g = random_instance(s, 20, seed);
      const Precoloring psi = random_psi(g, 4, rng);
      const Decision d = decide(g, psi, cfg);
      EXPECT_EQ(d.yes, truth(g, psi)) << s.name() << " seed " << seed;
      special += d.stats.special_calls;
    }
  }
  EXPECT_GT(special, 0);
}
