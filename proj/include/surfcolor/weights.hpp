#pragma once

// Exact face weights.

#include <boost/rational.hpp>
#include <vector>

#include "surfcolor/embedding.hpp"

namespace surfcolor {

using Rational = boost::rational<long long>;

struct WeightConfig {
  Rational eta{1, 1000};
  Rational kappa{1000000};
};

// s(n): 0 up to 4, then 4/4113, 72/4113, 540/4113, 2184/4113, then n - 8.
Rational s_face(int n);
// s(Π) for a surface with Euler genus g and c cuffs.
Rational s_surface(const SurfaceClass& surface);

// Faces of G itself are open disks, so w0 and w_eta coincide there.
Rational w0(const EmbeddedGraph& g, const Face& f);
Rational w0_total(const EmbeddedGraph& g);
Rational w_eta_total(const EmbeddedGraph& g, const WeightConfig& cfg);

// Faces of a subgraph H in the surface of G.
Rational w0(const Region& face);
Rational w_eta(const Region& face, const WeightConfig& cfg);
Rational w0_total(const SubgraphFaces& h);
Rational w_eta_total(const SubgraphFaces& h, const WeightConfig& cfg);

// Sorted pointwise comparison of equal-size multisets; SizeMismatch otherwise.
bool dominates(std::vector<int> s, std::vector<int> t);

}  // namespace surfcolor
