#include "pst/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pst/babinet.hpp"
#include "pst/closedform.hpp"
#include "pst/disorder.hpp"
#include "pst/dynamics.hpp"
#include "pst/error.hpp"
#include "pst/export.hpp"
#include "pst/graph.hpp"

namespace pst::cli {

using nlohmann::json;

std::string engine_version() { return PST_VERSION; }

namespace {

struct Options {
  int n = 0;
  double t_max = 0.0;
  int steps = 0;
  int connectivity = 0;
  int source = 1;
  std::string graph = "cpg";
  std::string graph_file;
  double delta = 0.02;
  double broken = 0.0;
  int trials = 100;
  std::uint64_t seed = 42;
  std::string out;
  std::string json_path;
  std::string family = "pair";
  std::vector<int> sizes{8, 16, 32, 64};
  std::string manifest;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidArgument("cannot open output file " + path);
  return f;
}

// CSV goes to --out when given, otherwise to `out`.
template <typename Writer>
void emit_csv(const Options& o, std::ostream& out, Writer&& write) {
  if (o.out.empty()) {
    write(out);
  } else {
    auto f = open_output(o.out);
    write(f);
  }
}

void emit_json(const std::string& path, const json& j, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    auto f = open_output(path);
    f << j.dump(2) << '\n';
  }
}

// One manifest per run, next to the primary output file.
void write_manifest(const std::string& command, const std::vector<std::string>& args,
                    const json& parameters, std::optional<std::uint64_t> seed,
                    const std::vector<std::string>& outputs, double seconds) {
  std::vector<std::string> files;
  std::copy_if(outputs.begin(), outputs.end(), std::back_inserter(files),
               [](const std::string& p) { return !p.empty(); });
  if (files.empty()) return;
  json m = {{"command", command},
            {"argv", args},
            {"parameters", parameters},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"outputs", files},
            {"engine_version", engine_version()},
            {"wall_seconds", seconds}};
  auto f = open_output(files.front() + ".manifest.json");
  f << m.dump(2) << '\n';
}

Graph graph_from_spec(const Options& o) {
  if (!o.graph_file.empty()) return load_graph(o.graph_file);
  const std::string& spec = o.graph;
  if (spec.rfind("file:", 0) == 0) return load_graph(spec.substr(5));
  if (o.n < 1) throw InvalidArgument("--n is required for graph `" + spec + "`");
  if (spec == "ring") return ring(o.n);
  if (spec == "cpg") return cross_polytope(o.n);
  if (spec == "complete") return complete(o.n);
  if (spec == "pair") return pair_matching(o.n);
  if (spec == "connectivity") {
    if (o.connectivity < 1) throw InvalidArgument("--connectivity is required for graph `connectivity`");
    return connectivity_graph(o.n, o.connectivity);
  }
  if (spec.rfind("circulant:", 0) == 0) {
    std::set<int> jumps;
    std::istringstream list(spec.substr(10));
    std::string item;
    while (std::getline(list, item, ',')) {
      try {
        std::size_t used = 0;
        const int d = std::stoi(item, &used);
        if (used != item.size()) throw InvalidArgument("bad jump");
        jumps.insert(d);
      } catch (const std::logic_error&) {
        throw InvalidArgument("malformed circulant jump `" + item + "`");
      }
    }
    if (jumps.empty()) throw InvalidArgument("circulant spec needs at least one jump");
    return circulant(o.n, jumps);
  }
  throw InvalidArgument("unknown graph spec `" + spec + "`");
}

int steps_or_default(const Options& o) { return o.steps > 0 ? o.steps : default_steps(o.t_max); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"State transfer in excitation-preserving spin networks", "pst"};
  app.require_subcommand(1);
  Options o;

  auto* sweep = app.add_subcommand("sweep", "Peak fidelity against connectivity C = 1..n/2");
  o.n = 200;
  sweep->add_option("--n", o.n, "Network size (even)")->capture_default_str();
  sweep->add_option("--tmax", o.t_max, "Scan window [0, tmax]")->default_val(100.0);
  sweep->add_option("--steps", o.steps, "Grid points (default 2000 per unit time)");
  sweep->add_option("--source", o.source, "Source vertex")->capture_default_str();
  sweep->add_option("--out", o.out, "CSV output (default stdout)");

  auto* series = app.add_subcommand("series", "Fidelity against time for one network");
  series->add_option("--n", o.n, "Network size");
  series->add_option("--graph", o.graph,
                     "ring | cpg | complete | pair | connectivity | circulant:j1,j2,... | file:path")
      ->capture_default_str();
  series->add_option("--graph-file", o.graph_file, "Edge-list file (overrides --graph)");
  series->add_option("--connectivity", o.connectivity, "C for --graph connectivity");
  series->add_option("--tmax", o.t_max, "Time window")->default_val(100.0);
  series->add_option("--steps", o.steps, "Grid points (default 2000 per unit time)");
  series->add_option("--source", o.source, "Source vertex")->capture_default_str();
  series->add_option("--out", o.out, "CSV output (default stdout)");
  series->add_option("--json", o.json_path, "Peak JSON output");

  auto* check = app.add_subcommand("check", "Closed-form PST report with numeric cross-check");
  check->add_option("--n", o.n, "Network size (even)")->required();
  check->add_option("--json", o.json_path, "JSON output (default stdout)");

  auto* disorder = app.add_subcommand("disorder", "Monte-Carlo disorder statistics on cross polytopes");
  disorder->add_option("--n", o.n, "Network size (even)")->default_val(40);
  disorder->add_option("--delta", o.delta, "Coupling disorder amplitude")->capture_default_str();
  disorder->add_option("--broken", o.broken, "Broken-bond ratio")->capture_default_str();
  disorder->add_option("--trials", o.trials, "Trial count")->capture_default_str();
  disorder->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  disorder->add_option("--tmax", o.t_max, "Scan window")->default_val(10.0);
  disorder->add_option("--steps", o.steps, "Grid points (default 2000 per unit time)");
  disorder->add_option("--source", o.source, "Source vertex")->capture_default_str();
  disorder->add_option("--out", o.out, "Per-trial CSV output (default stdout)");
  disorder->add_option("--json", o.json_path, "Summary JSON output");

  auto* bab = app.add_subcommand("babinet", "Complement-dynamics scaling study");
  bab->add_option("--family", o.family, "pair | complete | cpg | ring | single-edge | edge+pair")
      ->capture_default_str();
  bab->add_option("--sizes", o.sizes, "Comma-separated even sizes")->delimiter(',')->capture_default_str();
  bab->add_option("--tmax", o.t_max, "Time window")->default_val(10.0);
  bab->add_option("--steps", o.steps, "Grid points (default 2000 per unit time)");
  bab->add_option("--source", o.source, "Source vertex")->capture_default_str();
  bab->add_option("--out", o.out, "CSV output (default stdout)");

  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", o.manifest, "Manifest JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    if (sweep->parsed()) {
      const int steps = steps_or_default(o);
      const auto rows = connectivity_sweep(o.n, o.t_max, steps, o.source);
      emit_csv(o, out, [&](std::ostream& os) { write_sweep_csv(os, rows); });
      write_manifest("sweep", args, {{"n", o.n}, {"tmax", o.t_max}, {"steps", steps}, {"source", o.source}},
                     std::nullopt, {o.out}, elapsed());
    } else if (series->parsed()) {
      const Graph g = graph_from_spec(o);
      const int steps = steps_or_default(o);
      const auto s = fidelity_series(spectral_decompose(hamiltonian(g)), o.t_max, steps, o.source);
      emit_csv(o, out, [&](std::ostream& os) { write_series_csv(os, s); });
      if (!o.json_path.empty() || !o.out.empty()) emit_json(o.json_path, peak_json(s.peak), out);
      write_manifest("series", args,
                     {{"n", g.size()}, {"graph", o.graph_file.empty() ? o.graph : "file:" + o.graph_file},
                      {"connectivity", o.connectivity}, {"tmax", o.t_max}, {"steps", steps},
                      {"source", o.source}},
                     std::nullopt, {o.out, o.json_path}, elapsed());
    } else if (check->parsed()) {
      if (o.n % 2 != 0) {
        err << "check: n = " << o.n
            << " is odd. No vertex lies opposite the source, and circulant networks of odd order "
               "admit no perfect state transfer.\n";
        return kExitUsage;
      }
      const auto rep = closedform::report(o.n);
      const Spectrum s = spectral_decompose(hamiltonian(cross_polytope(o.n)));
      const double numeric = squared_fidelity(s, std::numbers::pi / 2, 1);
      json j = report_json(rep);
      j["numeric_squared_fidelity_at_half_pi"] = numeric;
      j["delta_squared_fidelity"] = std::abs(numeric - rep.squared_fidelity_at_half_pi);
      emit_json(o.json_path, j, out);
      write_manifest("check", args, {{"n", o.n}}, std::nullopt, {o.json_path}, elapsed());
    } else if (disorder->parsed()) {
      DisorderConfig cfg;
      cfg.n = o.n;
      cfg.delta = o.delta;
      cfg.broken = o.broken;
      cfg.trials = o.trials;
      cfg.master_seed = o.seed;
      cfg.t_max = o.t_max;
      cfg.steps = o.steps;
      cfg.source = o.source;
      const auto stats = run_trials(cfg);
      emit_csv(o, out, [&](std::ostream& os) { write_trials_csv(os, stats); });
      if (!o.json_path.empty() || !o.out.empty()) emit_json(o.json_path, stats_json(stats), out);
      if (stats.failures > 0) err << "disorder: " << stats.failures << " trial(s) dropped after eigensolver failure\n";
      write_manifest("disorder", args,
                     {{"n", cfg.n}, {"delta", cfg.delta}, {"broken", cfg.broken}, {"trials", cfg.trials},
                      {"tmax", cfg.t_max}, {"steps", cfg.grid_steps()}, {"source", cfg.source}},
                     cfg.master_seed, {o.out, o.json_path}, elapsed());
    } else if (bab->parsed()) {
      const int steps = steps_or_default(o);
      const auto rows = babinet::scaling_study(babinet::family_by_name(o.family), o.sizes, o.t_max,
                                               steps, o.source);
      emit_csv(o, out, [&](std::ostream& os) { write_scaling_csv(os, rows); });
      write_manifest("babinet", args,
                     {{"family", o.family}, {"sizes", o.sizes}, {"tmax", o.t_max}, {"steps", steps},
                      {"source", o.source}},
                     std::nullopt, {o.out}, elapsed());
    } else if (replay->parsed()) {
      std::ifstream in(o.manifest);
      if (!in) throw InvalidArgument("cannot open manifest " + o.manifest);
      const json m = json::parse(in, nullptr, false);
      if (m.is_discarded() || !m.contains("argv")) throw InvalidArgument("manifest has no argv");
      const auto recorded = m.at("argv").get<std::vector<std::string>>();
      if (!recorded.empty() && recorded.front() == "replay") throw InvalidArgument("manifest records a replay");
      return run(recorded, out, err);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace pst::cli
