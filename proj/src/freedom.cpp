#include "surfcolor/freedom.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "surfcolor/homotopy.hpp"

namespace surfcolor {

namespace {

Rational face_weight(const EmbeddedGraph& g, int f) {
  return s_face(static_cast<int>(g.all_faces()[f].length()));
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// A disk formed by one face whose walk is its whole boundary is that face;
// a shorter walk around a face with pendant trees bounds a larger disk.
bool is_face_itself(const EmbeddedGraph& g, const std::vector<int>& disk,
                    std::size_t len) {
  return disk.size() == 1 && g.all_faces()[disk[0]].length() == len;
}

// Weight of members of S inside the disk, or -1 when the disk is a member.
Rational inside_weight(const EmbeddedGraph& g, const std::vector<int>& disk,
                       std::size_t len, const FaceSet& s) {
  if (is_face_itself(g, disk, len) && s.contains(disk[0])) return Rational(-1);
  Rational sum(0);
  for (int f : disk) {
    if (s.contains(f)) sum += face_weight(g, f);
  }
  return sum;
}

bool binding_weight(const Rational& inside, std::size_t len) {
  return inside > 0 && inside >= s_face(static_cast<int>(len));
}

// A state of G on the inside of the disk's boundary.
State inner_boundary_state(const EmbeddedGraph& g,
                           const std::vector<int>& disk) {
  std::set<int> in(disk.begin(), disk.end());
  for (int f : disk) {
    for (State s : g.all_faces()[f].walk) {
      const EdgeId e = dart_edge(state_dart(s));
      const int a = g.face_of_state(make_state(2 * e, 1));
      const int b = g.face_of_state(make_state(2 * e, -1));
      if (!in.count(a) || !in.count(b)) return s;
    }
  }
  fail(ErrorCode::kNotADisk, "disk has no boundary");
}

struct Removal {
  EmbeddedGraph graph;
  int face = kNone;  // the disk as a face of the new graph
  Pocket pocket;
};

Removal remove_disk(const EmbeddedGraph& g, const Walk& w,
                    const std::vector<int>& disk) {
  Removal out;
  const State s = inner_boundary_state(g, disk);
  out.pocket = {w, disk_interior(g, disk)};
  out.graph = is_face_itself(g, disk, w.length()) ? g : delete_disk_interior(g, disk);
  out.face = out.graph.face_of_state(s);
  return out;
}

// Face ids of `members` (in g) carried into h, skipping those inside `disk`.
std::vector<int> carry_faces(const EmbeddedGraph& g, const EmbeddedGraph& h,
                             const std::vector<int>& members,
                             const std::vector<int>& disk) {
  std::vector<int> out;
  for (int f : members) {
    if (std::binary_search(disk.begin(), disk.end(), f)) continue;
    out.push_back(h.face_of_state(g.all_faces()[f].walk.front()));
  }
  return out;
}

}  // namespace

FaceSet::FaceSet(const EmbeddedGraph& g, std::vector<int> faces)
    : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  for (int f : faces_) {
    if (f < 0 || f >= static_cast<int>(g.all_faces().size()) ||
        g.all_faces()[f].is_cuff) {
      fail(ErrorCode::kPreconditionViolated, "face set member is not a face");
    }
    weight_ += face_weight(g, f);
  }
}

bool FaceSet::contains(int f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

bool binds(const EmbeddedGraph& g, const Walk& w,
           const std::vector<int>& disk, const FaceSet& s) {
  std::vector<int> d = disk;
  std::sort(d.begin(), d.end());
  const auto disks = bounded_disks(g, w);
  if (std::find(disks.begin(), disks.end(), d) == disks.end()) {
    fail(ErrorCode::kNotContractible, "walk does not bound the given disk");
  }
  return binding_weight(inside_weight(g, d, w.length(), s), w.length());
}

std::vector<Region> simplify_walk(const EmbeddedGraph& g, const Walk& w,
                                  const std::vector<int>& drilled) {
  SubgraphFaces sf = subgraph_faces(g, walk_edge_mask(g, w));
  std::set<int> picked;
  for (int f : drilled) picked.insert(sf.region_of_face[f]);
  std::vector<Region> out;
  std::size_t total = 0;
  for (int r : picked) {
    const Region& reg = sf.regions[r];
    if (reg.is_hole || !reg.two_cell()) {
      fail(ErrorCode::kPreconditionViolated,
           "walk face meeting the drilled region is not 2-cell");
    }
    total += reg.walks[0].size();
    out.push_back(reg);
  }
  if (total > w.length()) {
    fail(ErrorCode::kPreconditionViolated,
         "walk is not homotopic to the drilled boundary");
  }
  return out;
}

std::optional<BindingCertificate> test_free_set(const EmbeddedGraph& g,
                                                const FaceSet& s, int k) {
  if (s.empty() || s.weight() <= 0) return std::nullopt;
  int t = 0;
  for (int len = 1; len <= k; ++len) {
    if (s_face(len) <= s.weight()) t = len;
  }
  std::vector<Walk> cycles = simple_cycles(g, t);
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const Walk& a, const Walk& b) {
                     return a.length() < b.length();
                   });
  for (const Walk& c : cycles) {
    for (const auto& disk : bounded_disks(g, c)) {
      const Rational in = inside_weight(g, disk, c.length(), s);
      if (binding_weight(in, c.length())) {
        return BindingCertificate{c, disk, in};
      }
    }
  }
  return std::nullopt;
}

std::optional<BindingCertificate> test_free_single(const EmbeddedGraph& g,
                                                   int face, int k) {
  const FaceSet single(g, {face});
  auto cert = test_free_set(g, single, k);
  if (!cert) return cert;
  // Widen to the largest disk bound by a walk of the same length.
  const int t = static_cast<int>(cert->walk.length());
  std::vector<Walk> same;
  for (Walk& c : simple_cycles(g, t)) {
    if (static_cast<int>(c.length()) == t) same.push_back(std::move(c));
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (const Walk& c : same) {
      for (const auto& disk : bounded_disks(g, c)) {
        if (disk.size() > cert->disk.size() && contains_all(disk, cert->disk)) {
          cert->walk = c;
          cert->disk = disk;
          grew = true;
        }
      }
    }
  }
  return cert;
}

Elimination elim_small_contractible(const EmbeddedGraph& g) {
  Elimination out{g, {}};
  for (;;) {
    const EmbeddedGraph& cur = out.graph;
    const Walk* best = nullptr;
    std::vector<int> best_disk;
    const std::vector<Walk> cycles = simple_cycles(cur, 4);
    for (const Walk& c : cycles) {
      const auto disks = bounded_disks(cur, c);
      if (disks.empty() || is_face_itself(cur, disks.front(), c.length())) {
        continue;
      }
      if (!best || disks.front().size() > best_disk.size()) {
        best = &c;
        best_disk = disks.front();
      }
    }
    if (!best) break;
    Removal rm = remove_disk(cur, *best, best_disk);
    out.pockets.push_back(std::move(rm.pocket));
    out.graph = std::move(rm.graph);
  }
  return out;
}

long long free_set_cap(const Rational& r) {
  const Rational q = r / s_face(5);
  long long c = q.numerator() / q.denominator();
  if (c * q.denominator() < q.numerator()) ++c;
  return c + 1;
}

long long small_multiset_count(const Rational& r) {
  // Work in units of 1/4113, where every s-value is an integer.
  const Rational scaled = r * Rational(4113);
  const long long budget = scaled.numerator() / scaled.denominator();
  constexpr long long kCap = LLONG_MAX / 4;
  if (budget > 4'000'000) return kCap;
  std::vector<long long> coins;
  for (int len = 5; s_face(len) <= r; ++len) {
    const Rational v = s_face(len) * Rational(4113);
    coins.push_back(v.numerator() / v.denominator());
  }
  std::vector<long long> ways(budget + 1, 0);
  ways[0] = 1;
  for (long long c : coins) {
    for (long long x = c; x <= budget; ++x) {
      ways[x] = std::min(kCap, ways[x] + ways[x - c]);
    }
  }
  long long total = 0;
  for (long long w : ways) total = std::min(kCap, total + w);
  return total;
}

LiberateResult liberate(const EmbeddedGraph& g, int k, const Rational& r) {
  if (k < 4 || r < 0) {
    fail(ErrorCode::kPreconditionViolated, "liberate needs k >= 4, r >= 0");
  }
  Elimination elim = elim_small_contractible(g);
  LiberateResult out;
  out.graph = std::move(elim.graph);
  out.pockets = std::move(elim.pockets);
  const long long b = free_set_cap(r);
  const long long m0 = small_multiset_count(r);
  const long long bound =
      (m0 + 1 > LLONG_MAX / 4 / std::max(1LL, b)) ? LLONG_MAX / 4 : b * (m0 + 1);
  out.step_bound = static_cast<int>(std::min<long long>(bound, INT_MAX));
  std::vector<int> members;
  for (;;) {
    EmbeddedGraph& cur = out.graph;
    out.total_weight = w0_total(cur);
    out.free_set = FaceSet(cur, members);
    if (out.total_weight <= r) break;
    if (out.steps >= out.step_bound) {
      fail(ErrorCode::kInternal, "liberate exceeded its step bound");
    }
    auto cert = test_free_set(cur, out.free_set, k);
    int face = kNone;
    if (cert) {
      Removal first = remove_disk(cur, cert->walk, cert->disk);
      out.pockets.push_back(first.pocket);
      members = carry_faces(cur, first.graph, members, cert->disk);
      cur = std::move(first.graph);
      face = first.face;
    } else {
      if (out.free_set.weight() > r) break;
      int pick = kNone;
      for (const Face& f : cur.all_faces()) {
        if (f.is_cuff || f.length() < 5 || out.free_set.contains(f.id)) continue;
        if (pick == kNone || f.length() > cur.all_faces()[pick].length()) {
          pick = f.id;
        }
      }
      if (pick == kNone) break;
      face = pick;
    }
    auto wide = test_free_single(cur, face, k);
    if (wide) {
      Removal second = remove_disk(cur, wide->walk, wide->disk);
      out.pockets.push_back(second.pocket);
      members = carry_faces(cur, second.graph, members, wide->disk);
      cur = std::move(second.graph);
      face = second.face;
    }
    members.erase(std::remove(members.begin(), members.end(), face),
                  members.end());
    members.push_back(face);
    ++out.steps;
  }
  return out;
}

}  // namespace surfcolor
