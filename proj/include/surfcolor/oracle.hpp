#pragma once

// Ground truth: brute-force 3-coloring, checkers and instance generators.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "surfcolor/embedding.hpp"

namespace surfcolor {

// Colors are 1, 2, 3; 0 means uncolored. Indexed by vertex id.
using Coloring = std::vector<int>;

// Plain adjacency lists; vertices are 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  void add_edge(int a, int b);
  int edge_count() const;
};

// Live vertices/edges of g, indexed by vertex id (dead ids are isolated).
SimpleGraph abstract_graph(const EmbeddedGraph& g);

inline constexpr int kDefaultOracleCap = 64;

// Calls visit on each proper 3-coloring extending psi, in a deterministic
// order, until visit returns false. Returns the number visited. Throws
// OracleCapExceeded when the graph has more than cap non-isolated vertices.
std::uint64_t for_each_3coloring(
    const SimpleGraph& g, const Coloring& psi,
    const std::function<bool(const Coloring&)>& visit,
    int cap = kDefaultOracleCap);

std::optional<Coloring> brute_force_3color(const SimpleGraph& g,
                                           const Coloring& psi,
                                           int cap = kDefaultOracleCap);
std::optional<Coloring> brute_force_3color(const EmbeddedGraph& g,
                                           const Coloring& psi,
                                           int cap = kDefaultOracleCap);
std::uint64_t count_3colorings(const SimpleGraph& g, const Coloring& psi,
                               int cap = kDefaultOracleCap);

// Proper, uses only colors 1..3 on every live vertex, and agrees with psi.
bool verify_coloring(const EmbeddedGraph& g, const Coloring& phi,
                     const Coloring& psi);
bool verify_coloring(const SimpleGraph& g, const Coloring& phi,
                     const Coloring& psi);
bool check_triangle_free(const SimpleGraph& g);
bool check_triangle_free(const EmbeddedGraph& g);
// Length of a shortest cycle; 0 for forests.
int girth(const SimpleGraph& g);
int girth(const EmbeddedGraph& g);

// Mycielski graph of the odd cycle C_len.
SimpleGraph mycielski(int len);
// Embedded fixtures in the projective plane, for len 5 and 7.
EmbeddedGraph mycielski_embedded(int len);
SimpleGraph petersen();
EmbeddedGraph petersen_projective();

// Quadrangulated meshes. w runs around, h across.
EmbeddedGraph cube();
EmbeddedGraph grid_disk(int w, int h);
EmbeddedGraph grid_sphere(int w, int h);
EmbeddedGraph grid_cylinder(int w, int h);
EmbeddedGraph grid_torus(int w, int h);
EmbeddedGraph grid_klein(int w, int h);
EmbeddedGraph grid_projective(int w, int h);
EmbeddedGraph cycle_disk(int n);

// Triangle-free 2-cell instance with about n vertices on the given surface;
// reproducible from the seed. Throws UnsupportedSurface.
EmbeddedGraph random_instance(const SurfaceClass& surface, int n,
                              std::uint64_t seed);

// Supported surfaces for random_instance, in a fixed order.
std::vector<SurfaceClass> supported_surfaces();

}  // namespace surfcolor
