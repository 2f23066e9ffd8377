#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "surfcolor/oracle.hpp"
#include "surfcolor/weights.hpp"

using namespace surfcolor;

TEST(Weights, FaceTable) {
  EXPECT_EQ(s_face(1), Rational(0));
  EXPECT_EQ(s_face(4), Rational(0));
  EXPECT_EQ(s_face(5), Rational(4, 4113));
  EXPECT_EQ(s_face(6), Rational(72, 4113));
  EXPECT_EQ(s_face(7), Rational(540, 4113));
  EXPECT_EQ(s_face(8), Rational(2184, 4113));
  EXPECT_EQ(s_face(9), Rational(1));
  EXPECT_EQ(s_face(12), Rational(4));
}

TEST(Weights, FaceTableNonDecreasing) {
  for (int n = 1; n < 60; ++n) EXPECT_LE(s_face(n), s_face(n + 1)) << n;
}

TEST(Weights, SurfaceTable) {
  EXPECT_EQ(s_surface({0, 0, true}), Rational(-6));
  EXPECT_EQ(s_surface({0, 1, true}), Rational(0));
  EXPECT_EQ(s_surface({0, 2, true}), Rational(6));
  EXPECT_EQ(s_surface({0, 3, true}), Rational(24));
  EXPECT_EQ(s_surface({2, 0, true}), Rational(120));
  EXPECT_EQ(s_surface({1, 1, false}), Rational(48));
}

TEST(Weights, RegionWeights) {
  Region five;
  five.walks.assign(1, std::vector<State>(5));
  five.surface = {0, 1, true};
  EXPECT_EQ(w_eta(five, {Rational(7, 3), Rational(1)}), Rational(4, 4113));

  Region nine = five;
  nine.walks.assign(1, std::vector<State>(9));
  EXPECT_EQ(w0(nine), Rational(1));

  Region ring;
  ring.walks.assign(2, std::vector<State>(4));
  ring.surface = {0, 2, true};
  EXPECT_EQ(w0(ring), Rational(8));
  EXPECT_EQ(w_eta(ring, {Rational(1, 100), Rational(1)}),
            Rational(8) + Rational(6, 100));

  Region six_ring;
  six_ring.walks = {std::vector<State>(3), std::vector<State>(3)};
  six_ring.surface = {0, 2, true};
  EXPECT_EQ(w0(six_ring), Rational(6));
}

TEST(Weights, QuadrangulationTotalsVanish) {
  EXPECT_EQ(w_eta_total(grid_torus(5, 4), WeightConfig{}), Rational(0));
  EXPECT_EQ(w0_total(cube()), Rational(0));
  EXPECT_EQ(w0_total(petersen_projective()), 6 * Rational(4, 4113));
}

TEST(Weights, SubgraphTotalsMatchFaces) {
  // H = G: the regions are exactly the faces.
  const auto g = grid_disk(4, 3);
  std::vector<bool> all(g.edge_capacity(), true);
  const auto an = subgraph_faces(g, all);
  EXPECT_EQ(w0_total(an), w0_total(g));
}

namespace {

// Independent check: some bijection pairs every s with a t not above it.
bool dominates_by_matching(std::vector<int> s, const std::vector<int>& t) {
  std::sort(s.begin(), s.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) ok = ok && s[i] >= t[i];
    if (ok) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

}  // namespace

TEST(Weights, Domination) {
  EXPECT_TRUE(dominates({5, 7}, {5, 7}));
  EXPECT_TRUE(dominates({6, 8}, {5, 7}));
  EXPECT_FALSE(dominates({5, 9}, {6, 7}));
  EXPECT_THROW(dominates({5}, {5, 6}), Error);
  for (int a = 4; a < 9; ++a) {
    for (int b = 4; b < 9; ++b) {
      for (int c = 4; c < 9; ++c) {
        for (int d = 4; d < 9; ++d) {
          for (int e = 4; e < 9; ++e) {
            for (int f = 4; f < 9; ++f) {
              EXPECT_EQ(dominates({a, b, c}, {d, e, f}),
                        dominates_by_matching({a, b, c}, {d, e, f}));
            }
          }
        }
      }
    }
  }
}

TEST(Weights, SubAdditivity) {
  // All multisets of integers >= 2 with sum <= 40, generated in
  // non-decreasing order.
  long checked = 0;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int min_part, int sum) {
    if (!parts.empty()) {
      Rational lhs(0);
      for (int h : parts) lhs += s_face(h);
      const Rational rhs = s_face(sum);
      EXPECT_LE(lhs, rhs);
      if (parts.size() >= 2 && sum >= 5) EXPECT_LT(lhs, rhs);
      ++checked;
    }
    for (int h = min_part; sum + h <= 40; ++h) {
      parts.push_back(h);
      rec(h, sum + h);
      parts.pop_back();
    }
  };
  rec(2, 0);
  EXPECT_GT(checked, 10000);
}
