#include "surfcolor/surfcolor.h"

#include <charconv>
#include <cstring>
#include <map>
#include <string>

#include <json.hpp>

#include "surfcolor/color.hpp"
#include "surfcolor/freedom.hpp"
#include "surfcolor/homotopy.hpp"
#include "surfcolor/io.hpp"

struct sc_instance {
  surfcolor::EmbeddedGraph graph;
  surfcolor::Precoloring psi;
};

namespace {

using namespace surfcolor;
using nlohmann::json;

thread_local std::string last_error;

sc_status set_error(sc_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
sc_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return set_error(static_cast<sc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SC_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

long long to_ll(std::string_view t) {
  long long x = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || p != t.data() + t.size()) {
    fail(ErrorCode::kValidationError, "bad number '" + std::string(t) + "'");
  }
  return x;
}

DecideConfig config(const sc_options* opts) {
  DecideConfig cfg;
  if (!opts) return cfg;
  if (opts->eta) {
    const std::string_view s(opts->eta);
    const auto slash = s.find('/');
    const long long p = to_ll(s.substr(0, slash));
    const long long q = slash == std::string_view::npos ? 1 : to_ll(s.substr(slash + 1));
    if (q <= 0 || p <= 0) fail(ErrorCode::kValidationError, "eta must be a positive p/q");
    cfg.weights.eta = Rational(p, q);
  }
  if (opts->oracle_cap < 0) fail(ErrorCode::kValidationError, "negative oracle cap");
  if (opts->oracle_cap > 0) cfg.oracle_cap = opts->oracle_cap;
  return cfg;
}

json stats_json(const DecideStats& s) {
  return {{"oracle_calls", s.oracle_calls},   {"disk_calls", s.disk_calls},
          {"cylinder_calls", s.cylinder_calls}, {"special_calls", s.special_calls},
          {"pieces", s.pieces},               {"free_set_yes", s.free_set_yes},
          {"skeleton_colorings", s.skeleton_colorings}};
}

json certificate_json(const EmbeddedGraph& g, const NoCertificate& c) {
  json vs = json::array(), es = json::array();
  for (VertexId v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
    if (c.vertices[v]) vs.push_back(v);
  }
  for (EdgeId e = 0; e < static_cast<int>(c.edges.size()); ++e) {
    if (c.edges[e]) es.push_back({e, g.edge(e).u, g.edge(e).v});
  }
  return {{"vertices", vs}, {"edges", es}, {"w_eta", str(c.weight)}, {"bound", str(c.bound)}};
}

bool fully_precolored(const EmbeddedGraph& g, const Precoloring& psi) {
  for (VertexId v : g.boundary_vertices()) {
    if (v >= static_cast<int>(psi.size()) || psi[v] == 0) return false;
  }
  return true;
}

// A NO-subgraph from the disk or special decider when the instance fits one.
std::optional<NoCertificate> find_certificate(const EmbeddedGraph& g, const Precoloring& psi,
                                              const DecideConfig& cfg) {
  const SurfaceClass sc = g.surface_class();
  try {
    if (sc.is_disk() && fully_precolored(g, psi)) return decide_disk(g, psi, cfg).certificate;
    if (sc.cuff_count > 0) return decide_special(g, psi, cfg).certificate;
  } catch (const Error&) {
  }
  return std::nullopt;
}

json surface_json(const SurfaceClass& s) {
  return {{"name", s.name()},
          {"euler_genus", s.euler_genus},
          {"cuffs", s.cuff_count},
          {"orientable", s.orientable}};
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_name(sc_status status) {
  if (status == SC_ERR_ARGUMENT) return "InvalidArgument";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* sc_last_error(void) { return last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

sc_status sc_instance_parse(const char* text, sc_instance** out) {
  if (!text || !out) return set_error(SC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    Instance in = parse_instance(text);
    *out = new sc_instance{std::move(in.graph), std::move(in.psi)};
    return SC_OK;
  });
}

sc_status sc_instance_read(const char* path, sc_instance** out) {
  if (!path || !out) return set_error(SC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    Instance in = read_instance_file(path);
    *out = new sc_instance{std::move(in.graph), std::move(in.psi)};
    return SC_OK;
  });
}

sc_status sc_instance_generate(const char* surface, int n, uint64_t seed, sc_instance** out) {
  if (!surface || !out) return set_error(SC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    for (const SurfaceClass& s : supported_surfaces()) {
      if (s.name() != surface) continue;
      EmbeddedGraph g = random_instance(s, n, seed);
      Precoloring psi(g.vertex_capacity(), 0);
      *out = new sc_instance{std::move(g), std::move(psi)};
      return SC_OK;
    }
    return set_error(SC_ERR_UNSUPPORTED_SURFACE,
                     std::string("unsupported surface '") + surface + "'");
  });
}

void sc_instance_free(sc_instance* inst) { delete inst; }

sc_status sc_instance_emit(const sc_instance* inst, char** out) {
  if (!inst || !out) return set_error(SC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(emit_instance(inst->graph, inst->psi));
    return SC_OK;
  });
}

int sc_instance_vertex_count(const sc_instance* inst) {
  return inst ? inst->graph.vertex_count() : 0;
}

int sc_instance_edge_count(const sc_instance* inst) {
  return inst ? inst->graph.edge_count() : 0;
}

int sc_instance_vertex_capacity(const sc_instance* inst) {
  return inst ? inst->graph.vertex_capacity() : 0;
}

sc_status sc_instance_set_color(sc_instance* inst, int v, int color) {
  if (!inst) return set_error(SC_ERR_ARGUMENT, "null argument");
  if (!inst->graph.vertex_alive(v) || color < 0 || color > 3) {
    return set_error(SC_ERR_ARGUMENT, "bad vertex or color");
  }
  if (color != 0 && !inst->graph.is_boundary_vertex(v)) {
    return set_error(SC_ERR_VALIDATION, "precolored vertex is not on a cuff");
  }
  inst->psi.resize(inst->graph.vertex_capacity(), 0);
  inst->psi[v] = color;
  return SC_OK;
}

sc_status sc_decide(const sc_instance* inst, const sc_options* opts, int* yes, char** json_out) {
  if (!inst || !yes) return set_error(SC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const DecideConfig cfg = config(opts);
    const Decision d = decide(inst->graph, inst->psi, cfg);
    *yes = d.yes ? 1 : 0;
    if (json_out) {
      json j = {{"answer", d.yes ? "YES" : "NO"}, {"stats", stats_json(d.stats)}};
      if (!d.yes) {
        if (auto c = find_certificate(inst->graph, inst->psi, cfg)) {
          j["certificate"] = certificate_json(inst->graph, *c);
        }
      }
      *json_out = dup(j.dump());
    }
    return SC_OK;
  });
}

sc_status sc_color(const sc_instance* inst, const sc_options* opts, int* colors,
                   char** stats_json_out) {
  if (!inst || !colors) return set_error(SC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    ColorConfig cfg;
    cfg.decide = config(opts);
    const ColorResult r = color(inst->graph, inst->psi, cfg);
    if (!verify_coloring(inst->graph, r.coloring, inst->psi)) {
      return set_error(SC_ERR_INTERNAL, "coloring failed verification");
    }
    for (int v = 0; v < inst->graph.vertex_capacity(); ++v) {
      colors[v] = v < static_cast<int>(r.coloring.size()) ? r.coloring[v] : 0;
    }
    if (stats_json_out) {
      const ColorStats& s = r.stats;
      const json j = {{"decide_calls", s.decide_calls},     {"brute_force", s.brute_force},
                      {"oracle_fallbacks", s.oracle_fallbacks}, {"reductions", s.reductions},
                      {"identifications", s.identifications}, {"contractions", s.contractions},
                      {"splits", s.splits},                 {"small_disks", s.small_disks},
                      {"clearable", s.clearable}};
      *stats_json_out = dup(j.dump());
    }
    return SC_OK;
  });
}

int sc_verify_coloring(const sc_instance* inst, const int* colors) {
  if (!inst || !colors) return 0;
  try {
    const Coloring phi(colors, colors + inst->graph.vertex_capacity());
    return verify_coloring(inst->graph, phi, inst->psi) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

sc_status sc_analyze(const sc_instance* inst, const sc_options* opts, char** json_out) {
  if (!inst || !json_out) return set_error(SC_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const DecideConfig cfg = config(opts);
    const EmbeddedGraph& g = inst->graph;
    json j;
    j["surface"] = surface_json(g.surface_class());
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    std::map<std::size_t, int> lengths;
    std::vector<int> big;
    for (const Face& f : g.faces()) {
      ++lengths[f.length()];
      if (f.length() >= 5) big.push_back(f.id);
    }
    json hist = json::object();
    for (auto [len, n] : lengths) hist[std::to_string(len)] = n;
    j["faces"] = {{"count", g.face_count()}, {"by_length", hist}};
    j["girth"] = girth(g);
    j["triangle_free"] = check_triangle_free(g);
    j["w0_total"] = str(w0_total(g));
    j["w_eta_total"] = str(w_eta_total(g, cfg.weights));

    const int k = std::max(4, g.boundary_vertex_count() - 2);
    const FaceSet s(g, big);
    const auto binding = test_free_set(g, s, k);
    json free = {{"faces", big.size()}, {"weight", str(s.weight())}, {"k", k},
                 {"free", !binding.has_value()}};
    if (binding) free["binding_walk_length"] = binding->walk.length();
    j["free_set"] = free;

    const SurfaceClass sc = g.surface_class();
    const auto nc = sc.euler_genus > 0 || sc.cuff_count >= 2
                        ? shortest_noncontractible_cycle(g, g.vertex_count())
                        : std::nullopt;
    if (nc) {
      j["shortest_noncontractible_cycle"] = {{"length", nc->length()},
                                             {"vertices", walk_vertices(g, *nc)}};
    } else {
      j["shortest_noncontractible_cycle"] = nullptr;
    }
    *json_out = dup(j.dump());
    return SC_OK;
  });
}

}  // extern "C"
