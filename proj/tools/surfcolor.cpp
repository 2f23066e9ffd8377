// Command-line driver: decide, color, analyze, gen.
//
// Exit codes: 0 YES / success, 1 NO / not extendable, 2 error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfcolor/surfcolor.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct InstanceDeleter {
  void operator()(sc_instance* p) const { sc_instance_free(p); }
};
using InstancePtr = std::unique_ptr<sc_instance, InstanceDeleter>;

struct LibString {
  char* p = nullptr;
  ~LibString() { sc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int report(sc_status s) {
  const std::string msg = sc_last_error();
  std::cerr << "error: " << (msg.empty() ? sc_status_name(s) : msg) << '\n';
  return kExitError;
}

struct SolveFlags {
  std::string file;
  std::optional<std::string> eta;
  int oracle_cap = 0;
  bool json = false;

  sc_options options() const {
    return sc_options{eta ? eta->c_str() : nullptr, oracle_cap};
  }
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("file", f.file, "instance file")->required();
  cmd->add_option("--eta", f.eta, "weight parameter as p/q");
  cmd->add_option("--oracle-cap", f.oracle_cap, "largest graph handed to the oracle")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", f.json, "machine-readable output");
}

int load(const std::string& file, InstancePtr& out) {
  sc_instance* raw = nullptr;
  const sc_status s = sc_instance_read(file.c_str(), &raw);
  if (s != SC_OK) return report(s);
  out.reset(raw);
  return kExitYes;
}

int run_decide(const SolveFlags& f) {
  InstancePtr inst;
  if (int rc = load(f.file, inst); rc != kExitYes) return rc;
  const sc_options opts = f.options();
  int yes = 0;
  LibString json;
  const sc_status s = sc_decide(inst.get(), &opts, &yes, f.json ? &json.p : nullptr);
  if (s != SC_OK) return report(s);
  std::cout << (f.json ? json.str() : (yes ? "YES" : "NO")) << '\n';
  return yes ? kExitYes : kExitNo;
}

int run_color(const SolveFlags& f) {
  InstancePtr inst;
  if (int rc = load(f.file, inst); rc != kExitYes) return rc;
  const sc_options opts = f.options();
  std::vector<int> colors(sc_instance_vertex_capacity(inst.get()), 0);
  LibString stats;
  const sc_status s = sc_color(inst.get(), &opts, colors.data(), &stats.p);
  if (s == SC_ERR_NON_EXTENDABLE) {
    std::cout << (f.json ? "{\"answer\":\"NONEXTENDABLE\"}" : "NONEXTENDABLE") << '\n';
    return kExitNo;
  }
  if (s != SC_OK) return report(s);
  if (!sc_verify_coloring(inst.get(), colors.data())) {
    std::cerr << "error: coloring failed verification\n";
    return kExitError;
  }
  if (f.json) {
    std::cout << "{\"answer\":\"COLORED\",\"coloring\":{";
    bool first = true;
    for (std::size_t v = 0; v < colors.size(); ++v) {
      if (colors[v] == 0) continue;
      std::cout << (first ? "" : ",") << '"' << v << "\":" << colors[v];
      first = false;
    }
    std::cout << "},\"stats\":" << stats.str() << "}\n";
    return kExitYes;
  }
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] != 0) std::cout << "color " << v << ' ' << colors[v] << '\n';
  }
  return kExitYes;
}

int run_analyze(const SolveFlags& f) {
  InstancePtr inst;
  if (int rc = load(f.file, inst); rc != kExitYes) return rc;
  const sc_options opts = f.options();
  LibString json;
  const sc_status s = sc_analyze(inst.get(), &opts, &json.p);
  if (s != SC_OK) return report(s);
  std::cout << json.str() << '\n';
  return kExitYes;
}

int run_gen(const std::string& surface, int n, std::optional<std::uint64_t> seed) {
  if (!seed) {
    const char* env = std::getenv("SURFCOLOR_SEED");
    seed = env ? std::strtoull(env, nullptr, 10) : 1;
  }
  sc_instance* raw = nullptr;
  sc_status s = sc_instance_generate(surface.c_str(), n, *seed, &raw);
  if (s != SC_OK) return report(s);
  InstancePtr inst(raw);
  LibString text;
  s = sc_instance_emit(inst.get(), &text.p);
  if (s != SC_OK) return report(s);
  std::cout << "# " << surface << " n=" << n << " seed=" << *seed << '\n' << text.str();
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-coloring triangle-free graphs embedded in surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sc_version());

  SolveFlags decide_flags, color_flags, analyze_flags;
  auto* decide = app.add_subcommand("decide", "does the precoloring extend");
  add_solve_flags(decide, decide_flags);
  auto* color = app.add_subcommand("color", "extend the precoloring to a 3-coloring");
  add_solve_flags(color, color_flags);
  auto* analyze = app.add_subcommand("analyze", "report structure and weights as JSON");
  add_solve_flags(analyze, analyze_flags);

  std::string surface;
  int n = 0;
  std::optional<std::uint64_t> seed;
  auto* gen = app.add_subcommand("gen", "emit a random instance");
  gen->add_option("surface", surface,
                  "sphere, disk, cylinder, projective-plane, torus or klein-bottle")
      ->required();
  gen->add_option("n", n, "approximate vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("seed", seed, "defaults to $SURFCOLOR_SEED, then 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  if (*decide) return run_decide(decide_flags);
  if (*color) return run_color(color_flags);
  if (*analyze) return run_analyze(analyze_flags);
  return run_gen(surface, n, seed);
}
