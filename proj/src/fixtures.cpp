#include "surfcolor/oracle.hpp"

namespace surfcolor {

namespace {

struct Fixture {
  int n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> signs;
  std::vector<std::vector<Dart>> rotation;
};

EmbeddedGraph build_fixture(const Fixture& f) {
  std::vector<VertexId> verts(f.n);
  for (int i = 0; i < f.n; ++i) verts[i] = i;
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    edges.push_back({static_cast<EdgeId>(e), f.edges[e].first, f.edges[e].second,
                     f.signs[e]});
  }
  return EmbeddedGraph::build(verts, edges, f.rotation, {});
}

// Projective-plane embedding, 6 faces.
const Fixture& petersen_fixture() {
  static const Fixture f{
      10,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {6, 8}, {7, 9}, {8, 5}, {9, 6}},
      {-1, -1, 1, 1, -1, 1, 1, -1, -1, -1, -1, 1, 1, 1, -1},
      {{10, 9, 0}, {1, 2, 12}, {3, 4, 14}, {5, 16, 6}, {18, 7, 8}, {11, 20, 27}, {22, 29, 13}, {21, 24, 15}, {26, 23, 17}, {28, 19, 25}}};
  return f;
}

// Projective-plane embedding, 10 faces.
const Fixture& grotzsch_fixture() {
  static const Fixture f{
      11,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}, {6, 2}, {6, 0}, {7, 3}, {7, 1}, {8, 4}, {8, 2}, {9, 0}, {9, 3}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}},
      {-1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, -1, -1, 1, 1},
      {{9, 27, 17, 0}, {2, 1, 11, 21}, {25, 4, 3, 15}, {29, 6, 5, 19}, {7, 23, 13, 8}, {10, 31, 12}, {14, 16, 33}, {20, 35, 18}, {37, 24, 22}, {28, 26, 39}, {32, 36, 30, 34, 38}}};
  return f;
}

// Projective-plane embedding, 14 faces.
const Fixture& mycielski7_fixture() {
  static const Fixture f{
      15,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {7, 1}, {7, 6}, {8, 2}, {8, 0}, {9, 3}, {9, 1}, {10, 4}, {10, 2}, {11, 5}, {11, 3}, {12, 6}, {12, 4}, {13, 0}, {13, 5}, {14, 7}, {14, 8}, {14, 9}, {14, 10}, {14, 11}, {14, 12}, {14, 13}},
      {1, 1, 1, -1, 1, -1, -1, -1, 1, -1, -1, 1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1, -1, -1, 1, 1, -1, -1},
      {{21, 39, 13, 0}, {2, 1, 15, 25}, {19, 3, 4, 29}, {5, 23, 33, 6}, {27, 37, 8, 7}, {41, 31, 9, 10}, {35, 11, 12, 17}, {43, 16, 14}, {45, 18, 20}, {24, 47, 22}, {26, 49, 28}, {51, 32, 30}, {36, 53, 34}, {38, 40, 55}, {50, 54, 44, 48, 52, 42, 46}}};
  return f;
}

}  // namespace

EmbeddedGraph petersen_projective() { return build_fixture(petersen_fixture()); }

EmbeddedGraph mycielski_embedded(int len) {
  if (len == 5) return build_fixture(grotzsch_fixture());
  if (len == 7) return build_fixture(mycielski7_fixture());
  fail(ErrorCode::kUnsupportedSurface, "no embedded fixture for this length");
}

}  // namespace surfcolor
