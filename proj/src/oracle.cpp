#include "surfcolor/oracle.hpp"

#include <algorithm>
#include <queue>

namespace surfcolor {

void SimpleGraph::add_edge(int a, int b) {
  adj[a].push_back(b);
  adj[b].push_back(a);
}

int SimpleGraph::edge_count() const {
  int s = 0;
  for (const auto& a : adj) s += static_cast<int>(a.size());
  return s / 2;
}

SimpleGraph abstract_graph(const EmbeddedGraph& g) {
  SimpleGraph s;
  s.n = g.vertex_capacity();
  s.adj.resize(s.n);
  for (EdgeId e : g.edges()) s.add_edge(g.edge(e).u, g.edge(e).v);
  return s;
}

namespace {

class Search {
 public:
  Search(const SimpleGraph& g, const std::function<bool(const Coloring&)>& v)
      : g_(g), visit_(v), dom_(g.n, 7), color_(g.n, 0) {}

  std::uint64_t run(const Coloring& psi) {
    for (int v = 0; v < g_.n; ++v) {
      const int c = v < static_cast<int>(psi.size()) ? psi[v] : 0;
      if (c == 0) continue;
      if (c < 1 || c > 3 || !(dom_[v] & bit(c))) return 0;
      dom_[v] = bit(c);
    }
    for (int v = 0; v < g_.n; ++v) {
      if (dom_[v] == 7) continue;
      for (int w : g_.adj[v]) {
        if (dom_[w] == dom_[v] && __builtin_popcount(dom_[v]) == 1) return 0;
      }
    }
    dfs(0);
    return count_;
  }

 private:
  static int bit(int c) { return 1 << (c - 1); }

  bool dfs(int v) {
    if (v == g_.n) {
      ++count_;
      return visit_(color_);
    }
    for (int c = 1; c <= 3; ++c) {
      if (!(dom_[v] & bit(c))) continue;
      color_[v] = c;
      std::vector<int> touched;
      bool ok = true;
      for (int w : g_.adj[v]) {
        if (w < v) continue;
        if (dom_[w] & bit(c)) {
          dom_[w] &= ~bit(c);
          touched.push_back(w);
          if (dom_[w] == 0) ok = false;
        }
      }
      const bool go_on = !ok || dfs(v + 1);
      for (int w : touched) dom_[w] |= bit(c);
      color_[v] = 0;
      if (!go_on) return false;
    }
    return true;
  }

  const SimpleGraph& g_;
  const std::function<bool(const Coloring&)>& visit_;
  std::vector<int> dom_;
  Coloring color_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t for_each_3coloring(
    const SimpleGraph& g, const Coloring& psi,
    const std::function<bool(const Coloring&)>& visit, int cap) {
  int live = 0;
  for (int v = 0; v < g.n; ++v) live += g.adj[v].empty() ? 0 : 1;
  if (live > cap) {
    fail(ErrorCode::kOracleCapExceeded,
         std::to_string(live) + " vertices exceed the oracle cap " +
             std::to_string(cap));
  }
  Search s(g, visit);
  return s.run(psi);
}

std::optional<Coloring> brute_force_3color(const SimpleGraph& g,
                                           const Coloring& psi, int cap) {
  std::optional<Coloring> out;
  for_each_3coloring(
      g, psi,
      [&](const Coloring& c) {
        out = c;
        return false;
      },
      cap);
  return out;
}

std::optional<Coloring> brute_force_3color(const EmbeddedGraph& g,
                                           const Coloring& psi, int cap) {
  // Isolated and dead ids are fixed up front so they do not multiply work.
  SimpleGraph s = abstract_graph(g);
  Coloring fixed = psi;
  fixed.resize(s.n, 0);
  for (int v = 0; v < s.n; ++v) {
    if (s.adj[v].empty() && fixed[v] == 0) fixed[v] = 1;
  }
  auto out = brute_force_3color(s, fixed, cap);
  if (out) {
    for (int v = 0; v < s.n; ++v) {
      if (!g.vertex_alive(v)) (*out)[v] = 0;
    }
  }
  return out;
}

std::uint64_t count_3colorings(const SimpleGraph& g, const Coloring& psi,
                               int cap) {
  return for_each_3coloring(
      g, psi, [](const Coloring&) { return true; }, cap);
}

bool verify_coloring(const SimpleGraph& g, const Coloring& phi,
                     const Coloring& psi) {
  if (static_cast<int>(phi.size()) < g.n) return false;
  for (int v = 0; v < g.n; ++v) {
    if (phi[v] < 1 || phi[v] > 3) return false;
    if (v < static_cast<int>(psi.size()) && psi[v] != 0 && psi[v] != phi[v]) {
      return false;
    }
    for (int w : g.adj[v]) {
      if (phi[w] == phi[v]) return false;
    }
  }
  return true;
}

bool verify_coloring(const EmbeddedGraph& g, const Coloring& phi,
                     const Coloring& psi) {
  if (static_cast<int>(phi.size()) < g.vertex_capacity()) return false;
  for (VertexId v : g.vertices()) {
    if (phi[v] < 1 || phi[v] > 3) return false;
    if (v < static_cast<int>(psi.size()) && psi[v] != 0 && psi[v] != phi[v]) {
      return false;
    }
  }
  for (EdgeId e : g.edges()) {
    if (phi[g.edge(e).u] == phi[g.edge(e).v]) return false;
  }
  return true;
}

bool check_triangle_free(const SimpleGraph& g) {
  std::vector<char> mark(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    for (int w : g.adj[v]) mark[w] = 1;
    for (int w : g.adj[v]) {
      for (int x : g.adj[w]) {
        if (x != v && mark[x]) return false;
      }
    }
    for (int w : g.adj[v]) mark[w] = 0;
  }
  return true;
}

bool check_triangle_free(const EmbeddedGraph& g) {
  return check_triangle_free(abstract_graph(g));
}

int girth(const SimpleGraph& g) {
  int best = 0;
  std::vector<int> dist(g.n), parent(g.n);
  for (int r = 0; r < g.n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v]) {
          const int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

int girth(const EmbeddedGraph& g) { return girth(abstract_graph(g)); }

SimpleGraph mycielski(int len) {
  if (len < 5 || len % 2 == 0) {
    fail(ErrorCode::kPreconditionViolated, "mycielski needs an odd cycle >= 5");
  }
  SimpleGraph g;
  g.n = 2 * len + 1;
  g.adj.resize(g.n);
  for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
  for (int i = 0; i < len; ++i) {
    g.add_edge(len + i, (i + 1) % len);
    g.add_edge(len + i, (i + len - 1) % len);
  }
  for (int i = 0; i < len; ++i) g.add_edge(2 * len, len + i);
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g;
  g.n = 10;
  g.adj.resize(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace surfcolor
