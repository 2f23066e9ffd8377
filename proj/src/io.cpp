#include "surfcolor/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace surfcolor {
namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view t, int line) {
  int x = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || p != t.data() + t.size()) {
    parse_fail(line, "expected an integer, got '" + std::string(t) + "'");
  }
  return x;
}

void need(const std::vector<std::string_view>& tk, std::size_t n, int line) {
  if (tk.size() != n) {
    parse_fail(line, "'" + std::string(tk[0]) + "' takes " +
                         std::to_string(n - 1) + " fields");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::optional<SurfaceClass> declared;
  std::vector<VertexId> vertices;
  std::map<VertexId, int> vertex_line;
  std::vector<EdgeSpec> edges;
  std::map<EdgeId, EdgeSpec> edge_by_id;
  std::map<VertexId, std::pair<std::vector<Dart>, int>> rot;
  std::vector<std::vector<VertexId>> cuffs;
  std::vector<std::tuple<VertexId, int, int>> colors;

  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    const auto tk = tokens(raw);
    if (tk.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view kw = tk[0];
    if (kw == "surface") {
      need(tk, 4, line);
      if (declared) parse_fail(line, "second surface header");
      SurfaceClass sc;
      sc.euler_genus = to_int(tk[1], line);
      sc.cuff_count = to_int(tk[2], line);
      const int o = to_int(tk[3], line);
      if (o != 0 && o != 1) parse_fail(line, "orientable flag must be 0 or 1");
      sc.orientable = o == 1;
      declared = sc;
    } else if (!declared) {
      parse_fail(line, "the surface header must come first");
    } else if (kw == "v") {
      need(tk, 2, line);
      const VertexId v = to_int(tk[1], line);
      if (v < 0) parse_fail(line, "negative vertex id");
      if (!vertex_line.emplace(v, line).second) {
        parse_fail(line, "duplicate vertex " + std::to_string(v));
      }
      vertices.push_back(v);
    } else if (kw == "e") {
      need(tk, 5, line);
      EdgeSpec e;
      e.id = to_int(tk[1], line);
      e.u = to_int(tk[2], line);
      e.v = to_int(tk[3], line);
      if (tk[4] == "+") {
        e.sign = 1;
      } else if (tk[4] == "-") {
        e.sign = -1;
      } else {
        parse_fail(line, "edge sign must be + or -");
      }
      if (e.id < 0) parse_fail(line, "negative edge id");
      if (!vertex_line.count(e.u) || !vertex_line.count(e.v)) {
        parse_fail(line, "edge endpoint is not a declared vertex");
      }
      if (!edge_by_id.emplace(e.id, e).second) {
        parse_fail(line, "duplicate edge " + std::to_string(e.id));
      }
      edges.push_back(e);
    } else if (kw == "rot") {
      if (tk.size() < 2) parse_fail(line, "'rot' needs a vertex");
      const VertexId v = to_int(tk[1], line);
      if (!vertex_line.count(v)) parse_fail(line, "rotation of an undeclared vertex");
      if (rot.count(v)) parse_fail(line, "second rotation for vertex " + std::to_string(v));
      std::vector<Dart> darts;
      for (std::size_t i = 2; i < tk.size(); ++i) {
        const Dart d = to_int(tk[i], line);
        auto it = edge_by_id.find(dart_edge(d));
        if (d < 0 || it == edge_by_id.end()) {
          parse_fail(line, "half-edge " + std::to_string(d) + " has no edge");
        }
        const VertexId from = (d & 1) ? it->second.v : it->second.u;
        if (from != v) {
          parse_fail(line, "half-edge " + std::to_string(d) + " does not leave vertex " +
                               std::to_string(v));
        }
        darts.push_back(d);
      }
      rot[v] = {std::move(darts), line};
    } else if (kw == "cuff") {
      if (tk.size() < 2) parse_fail(line, "empty cuff");
      std::vector<VertexId> c;
      for (std::size_t i = 1; i < tk.size(); ++i) {
        const VertexId v = to_int(tk[i], line);
        if (!vertex_line.count(v)) parse_fail(line, "cuff vertex is not declared");
        c.push_back(v);
      }
      cuffs.push_back(std::move(c));
    } else if (kw == "color") {
      need(tk, 3, line);
      const VertexId v = to_int(tk[1], line);
      const int c = to_int(tk[2], line);
      if (!vertex_line.count(v)) parse_fail(line, "color of an undeclared vertex");
      if (c < 1 || c > 3) parse_fail(line, "colors are 1, 2 or 3");
      colors.emplace_back(v, c, line);
    } else {
      parse_fail(line, "unknown record '" + std::string(kw) + "'");
    }
  }
  if (!declared) parse_fail(line, "missing surface header");

  int vcap = 0;
  for (VertexId v : vertices) vcap = std::max(vcap, v + 1);
  std::vector<std::vector<Dart>> rotation(vcap);
  for (auto& [v, r] : rot) rotation[v] = r.first;

  Instance out;
  try {
    out.graph = EmbeddedGraph::build(vertices, edges, rotation, cuffs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kValidationError) throw;
    fail(ErrorCode::kValidationError, e.what());
  }
  const SurfaceClass actual = out.graph.surface_class();
  if (!(actual == *declared)) {
    fail(ErrorCode::kValidationError,
         "surface header says " + declared->name() + " but the embedding is " +
             actual.name());
  }
  out.psi.assign(out.graph.vertex_capacity(), 0);
  for (const auto& [v, c, at] : colors) {
    if (out.psi[v] != 0) parse_fail(at, "second color for vertex " + std::to_string(v));
    if (!out.graph.is_boundary_vertex(v)) {
      fail(ErrorCode::kValidationError,
           "precolored vertex " + std::to_string(v) + " is not on a cuff");
    }
    out.psi[v] = c;
  }
  for (EdgeId e : out.graph.edges()) {
    const Edge& ed = out.graph.edge(e);
    if (out.psi[ed.u] != 0 && out.psi[ed.u] == out.psi[ed.v]) {
      fail(ErrorCode::kValidationError,
           "precoloring is not proper on edge " + std::to_string(e));
    }
  }
  return out;
}

std::string emit_instance(const EmbeddedGraph& g, const Precoloring& psi) {
  const SurfaceClass sc = g.surface_class();
  std::ostringstream os;
  os << "surface " << sc.euler_genus << ' ' << sc.cuff_count << ' '
     << (sc.orientable ? 1 : 0) << '\n';
  for (VertexId v : g.vertices()) os << "v " << v << '\n';
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    os << "e " << e << ' ' << ed.u << ' ' << ed.v << ' '
       << (ed.sign > 0 ? '+' : '-') << '\n';
  }
  for (VertexId v : g.vertices()) {
    os << "rot " << v;
    for (Dart d : g.rotation(v)) os << ' ' << d;
    os << '\n';
  }
  for (const auto& c : g.cuffs()) {
    os << "cuff";
    for (VertexId v : c) os << ' ' << v;
    os << '\n';
  }
  for (VertexId v : g.vertices()) {
    if (v < static_cast<int>(psi.size()) && psi[v] != 0) {
      os << "color " << v << ' ' << psi[v] << '\n';
    }
  }
  return os.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void write_instance_file(const std::string& path, const EmbeddedGraph& g,
                         const Precoloring& psi) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kParseError, "cannot write " + path);
  out << emit_instance(g, psi);
}

}  // namespace surfcolor
