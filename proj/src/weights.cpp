#include "surfcolor/weights.hpp"

#include <algorithm>

namespace surfcolor {

Rational s_face(int n) {
  switch (n) {
    case 5:
      return Rational(4, 4113);
    case 6:
      return Rational(72, 4113);
    case 7:
      return Rational(540, 4113);
    case 8:
      return Rational(2184, 4113);
    default:
      return n <= 4 ? Rational(0) : Rational(n - 8);
  }
}

Rational s_surface(const SurfaceClass& s) {
  if (s.euler_genus == 0 && s.cuff_count <= 2) {
    return Rational(6 * s.cuff_count - 6);
  }
  return Rational(120 * s.euler_genus + 48 * s.cuff_count - 120);
}

Rational w0(const EmbeddedGraph&, const Face& f) {
  return s_face(static_cast<int>(f.length()));
}

Rational w0_total(const EmbeddedGraph& g) {
  Rational t(0);
  for (const Face& f : g.all_faces()) {
    if (!f.is_cuff) t += w0(g, f);
  }
  return t;
}

Rational w_eta_total(const EmbeddedGraph& g, const WeightConfig&) {
  return w0_total(g);
}

Rational w0(const Region& f) {
  return f.two_cell() ? s_face(f.length()) : Rational(f.length());
}

Rational w_eta(const Region& f, const WeightConfig& cfg) {
  return w0(f) + cfg.eta * s_surface(f.surface);
}

Rational w0_total(const SubgraphFaces& h) {
  Rational t(0);
  for (const Region& r : h.regions) {
    if (!r.is_hole) t += w0(r);
  }
  return t;
}

Rational w_eta_total(const SubgraphFaces& h, const WeightConfig& cfg) {
  Rational t(0);
  for (const Region& r : h.regions) {
    if (!r.is_hole) t += w_eta(r, cfg);
  }
  return t;
}

bool dominates(std::vector<int> s, std::vector<int> t) {
  if (s.size() != t.size()) {
    fail(ErrorCode::kSizeMismatch, "multisets of different sizes");
  }
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < t[i]) return false;
  }
  return true;
}

}  // namespace surfcolor
