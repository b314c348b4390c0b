// cpcf: pair-distance counts, corrected PCFs, lattice simulation, timing.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpcf/cpcf.hpp"

namespace {

using namespace cpcf;

enum ExitCode { kOk = 0, kParse = 2, kMode = 3, kValidation = 4, kOther = 5 };

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

// Writes to the named file, or stdout for "-" / empty.
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  fn(out);
}

Site parse_site(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected x,y but got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("expected x,y but got '" + text + "'");
  }
}

NeighborConvention parse_convention(const std::string& name) {
  if (name == "boundary") return NeighborConvention::RespectBoundary;
  if (name == "four") return NeighborConvention::FourPerSite;
  if (name == "lattice") return NeighborConvention::WholeLattice;
  throw ParseError("unknown neighbour convention '" + name + "'");
}

void write_pcf_plot(const std::string& path, const PcfResult& r) {
  emit(path, [&](std::ostream& os) {
    for (const auto& row : r.rows) {
      if (row.P) os << row.m << ' ' << format_number(*row.P) << '\n';
    }
  });
}

std::vector<std::uint64_t> realization_seeds(std::uint64_t seed, int n) {
  std::vector<std::uint64_t> s;
  for (int k = 0; k < n; ++k) s.push_back(seed + static_cast<std::uint64_t>(k));
  return s;
}

struct CountsArgs {
  std::string input = "-";
  std::string mode = "exact";
  std::string dump_field;
  std::string plot;
  std::string out;
  unsigned threads = 1;
};

int run_counts(const CountsArgs& a) {
  const auto parsed = parse_input(slurp(a.input));
  const auto& config = parsed.config;
  if (!a.dump_field.empty()) {
    const auto field = bfs_distances(config, parse_site(a.dump_field));
    emit(a.out, [&](std::ostream& os) { os << field.dump(); });
    return kOk;
  }
  DistanceHistogram h;
  Count unreachable = 0;
  if (a.mode == "exact") {
    h = corrected_counts(config);
  } else if (a.mode == "approx") {
    h = approx_counts(config);
  } else if (a.mode == "oracle") {
    auto o = oracle_pair_counts(config, a.threads);
    h = std::move(o.histogram);
    unreachable = o.unreachable_pairs;
  } else {
    throw ParseError("unknown counts mode '" + a.mode + "'");
  }
  emit(a.out, [&](std::ostream& os) { write_histogram_csv(os, h); });
  if (unreachable > 0) std::cerr << "unreachable pairs: " << unreachable << '\n';
  if (!a.plot.empty()) {
    emit(a.plot, [&](std::ostream& os) {
      for (int m = 1; m <= h.m_max(); ++m) os << m << ' ' << h[m] << '\n';
    });
  }
  return kOk;
}

struct PcfArgs {
  std::string input = "-";
  std::string mode = "exact";
  int ensemble = 1;
  std::uint64_t seed = 0;
  std::optional<double> density;
  std::string meta;
  std::string plot;
  std::string out;
  std::string prefactor = "all";
  unsigned threads = 1;
};

PcfOptions pcf_options(const std::string& prefactor, unsigned threads) {
  PcfOptions o;
  if (prefactor == "all") {
    o.standard_prefactor = StandardPrefactor::AllSites;
  } else if (prefactor == "accessible") {
    o.standard_prefactor = StandardPrefactor::AccessibleSites;
  } else {
    throw ParseError("unknown prefactor '" + prefactor + "'");
  }
  o.oracle_threads = threads;
  return o;
}

void write_pcf_outputs(const PcfResult& r, const std::vector<std::uint64_t>& seeds, const std::string& out,
                       const std::string& meta, const std::string& plot) {
  emit(out, [&](std::ostream& os) { write_pcf_csv(os, r); });
  if (!meta.empty()) emit(meta, [&](std::ostream& os) { os << pcf_metadata(r, seeds).dump(2) << '\n'; });
  if (!plot.empty()) write_pcf_plot(plot, r);
}

// Agents in the input are used as-is unless a density is given, in which
// case each realization seeds a fresh random occupancy.
int run_pcf(const PcfArgs& a) {
  const auto parsed = parse_input(slurp(a.input));
  const auto mode = parse_pcf_mode(a.mode);
  const auto opts = pcf_options(a.prefactor, a.threads);
  if (mode == PcfMode::CorrectedExact && parsed.config.admissibility() != Admissibility::Exact) {
    throw ModeError("exact cPCF requested on a configuration that only admits the approximation");
  }
  if (a.ensemble < 1) throw DomainError("--ensemble must be >= 1");
  const auto norm = normalization(parsed.config, mode, opts);
  if (!a.density) {
    const auto r = pcf_with_normalization(parsed.config, parsed.occupancy, norm);
    write_pcf_outputs(r, {}, a.out, a.meta, a.plot);
    return kOk;
  }
  std::vector<PcfResult> runs;
  for (int k = 0; k < a.ensemble; ++k) {
    Rng rng = Rng::for_realization(a.seed, static_cast<std::uint64_t>(k));
    runs.push_back(pcf_with_normalization(parsed.config, seed_occupancy(parsed.config, *a.density, rng), norm));
  }
  write_pcf_outputs(ensemble_pcf(runs), realization_seeds(a.seed, a.ensemble), a.out, a.meta, a.plot);
  return kOk;
}

struct SimulateArgs {
  std::string input = "-";
  SimulationParams params;
  std::string convention = "boundary";
  int snapshot_every = 0;
  int ensemble = 1;
  std::string pcf_mode;
  std::string meta;
  std::string plot;
  std::string out;
  std::string prefactor = "all";
  unsigned threads = 1;
};

// Without --pcf the final grid of each realization is printed (snapshots
// first, each preceded by a "# step t" line).
int run_simulate(SimulateArgs a) {
  const auto parsed = parse_input(slurp(a.input));
  const auto& config = parsed.config;
  a.params.neighbor_convention = parse_convention(a.convention);
  if (a.ensemble < 1) throw DomainError("--ensemble must be >= 1");
  std::optional<Normalization> norm;
  if (!a.pcf_mode.empty()) {
    const auto mode = parse_pcf_mode(a.pcf_mode);
    if (mode == PcfMode::CorrectedExact && config.admissibility() != Admissibility::Exact) {
      throw ModeError("exact cPCF requested on a configuration that only admits the approximation");
    }
    norm = normalization(config, mode, pcf_options(a.prefactor, a.threads));
  }
  std::vector<PcfResult> runs;
  std::ostringstream grids;
  int steps = 0;
  for (int k = 0; k < a.ensemble; ++k) {
    const auto sim = run_simulation(config, a.params, static_cast<std::uint64_t>(k), a.snapshot_every);
    steps = sim.steps;
    if (norm) {
      runs.push_back(pcf_with_normalization(config, sim.final_state, *norm));
      continue;
    }
    if (a.ensemble > 1) grids << "# realization " << k << '\n';
    for (const auto& [t, state] : sim.snapshots) grids << "# step " << t << '\n' << render_grid(config, state);
    if (a.snapshot_every > 0) grids << "# final\n";
    grids << render_grid(config, sim.final_state);
  }
  std::cerr << "steps: " << steps << '\n';
  if (const auto iso = accessible_neighbor_ratio(config, a.params.neighbor_convention).isolated_sites; iso > 0) {
    std::cerr << "warning: " << iso << " accessible sites have no accessible neighbour\n";
  }
  if (!norm) {
    emit(a.out, [&](std::ostream& os) { os << grids.str(); });
    return kOk;
  }
  const auto result = ensemble_pcf(runs);
  emit(a.out, [&](std::ostream& os) { write_pcf_csv(os, result); });
  if (!a.meta.empty()) {
    auto j = pcf_metadata(result, realization_seeds(a.params.seed, a.ensemble));
    j["p_birth"] = a.params.p_birth;
    j["p_move"] = a.params.p_move;
    j["t_end"] = a.params.t_end;
    j["steps"] = steps;
    j["initial_density"] = a.params.initial_density;
    j["scale_time"] = a.params.scale_time;
    j["neighbor_convention"] = a.convention;
    emit(a.meta, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }
  if (!a.plot.empty()) write_pcf_plot(a.plot, result);
  return kOk;
}

struct BenchArgs {
  std::vector<int> sizes{50};
  std::vector<int> clusters{25};
  int repeats = 10;
  std::uint64_t seed = 1;
  double occupancy = 0.2;
  int max_extent = 3;
  unsigned threads = 1;
  std::string csv;
};

int run_bench(const BenchArgs& a) {
  BenchOptions o;
  o.occupancy = a.occupancy;
  o.max_extent = a.max_extent;
  o.oracle_threads = a.threads;
  const auto report = bench_compare(a.sizes, a.clusters, a.repeats, a.seed, o);
  write_bench_table(std::cout, report);
  if (a.threads > 1) std::cout << "(oracle used " << a.threads << " threads; not a headline comparison)\n";
  if (!a.csv.empty()) emit(a.csv, [&](std::ostream& os) { write_bench_csv(os, report); });
  return kOk;
}

int run_validate(const ValidationOptions& o, const std::string& dump_prefix) {
  const auto report = validate_random(o);
  if (!report.mismatch) {
    std::cout << "ok: " << report.checked << " configurations, analytic == oracle\n";
    return kOk;
  }
  const auto& mm = *report.mismatch;
  std::cerr << "mismatch in configuration " << mm.index << " (" << mm.config.domain().lx() << "x"
            << mm.config.domain().ly() << ", " << mm.config.clusters().size() << " clusters)\n";
  std::cerr << render_grid(mm.config);
  std::cerr << config_to_json(mm.config) << '\n';
  const int m_max = std::max(mm.analytic.m_max(), mm.oracle.m_max());
  std::cerr << "m,analytic,oracle\n";
  for (int m = 1; m <= m_max; ++m) {
    if (mm.analytic[m] != mm.oracle[m]) std::cerr << m << ',' << mm.analytic[m] << ',' << mm.oracle[m] << '\n';
  }
  if (mm.oracle_unreachable) std::cerr << "oracle unreachable pairs: " << mm.oracle_unreachable << '\n';
  if (!dump_prefix.empty()) {
    emit(dump_prefix + ".grid", [&](std::ostream& os) { os << render_grid(mm.config); });
    emit(dump_prefix + ".json", [&](std::ostream& os) { os << config_to_json(mm.config) << '\n'; });
  }
  throw ValidationFailure("analytic counts differ from the oracle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corrected pair correlation functions on lattices with obstacles"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CountsArgs ca;
  auto* counts = app.add_subcommand("counts", "pair-distance histogram D(m) of a grid or JSON configuration");
  counts->add_option("input", ca.input, "grid or JSON file ('-' for stdin)");
  counts->add_option("--mode", ca.mode, "exact | approx | oracle")->check(CLI::IsMember({"exact", "approx", "oracle"}));
  counts->add_option("--dump-field", ca.dump_field, "print the BFS distance field from site x,y instead");
  counts->add_option("--plot", ca.plot, "two-column m/count file");
  counts->add_option("-o,--out", ca.out, "CSV output (stdout by default)");
  counts->add_option("--threads", ca.threads, "oracle worker threads");

  PcfArgs pa;
  auto* pcf = app.add_subcommand("pcf", "pair correlation function of the agents in a configuration");
  pcf->add_option("input", pa.input, "grid or JSON file ('-' for stdin)");
  pcf->add_option("--mode", pa.mode, "standard | exact | approx | oracle")
      ->check(CLI::IsMember({"standard", "exact", "approx", "oracle"}));
  pcf->add_option("--ensemble", pa.ensemble, "realizations of random occupancy (needs --density)");
  pcf->add_option("--seed", pa.seed, "base seed; realization k uses seed + k");
  pcf->add_option("--density", pa.density, "ignore input agents and occupy this fraction of accessible sites");
  pcf->add_option("--meta", pa.meta, "JSON metadata sidecar");
  pcf->add_option("--plot", pa.plot, "two-column m/P file");
  pcf->add_option("-o,--out", pa.out, "CSV output (stdout by default)");
  pcf->add_option("--standard-prefactor", pa.prefactor, "all | accessible");
  pcf->add_option("--threads", pa.threads, "oracle worker threads");

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "birth-movement exclusion process");
  sim->add_option("input", sa.input, "grid or JSON obstacle layout ('-' for stdin)");
  sim->add_option("--pb", sa.params.p_birth, "birth probability per draw");
  sim->add_option("--pm", sa.params.p_move, "movement probability per draw");
  sim->add_option("--tend", sa.params.t_end, "final time before scaling");
  sim->add_option("--density", sa.params.initial_density, "initial fraction of accessible sites occupied");
  sim->add_flag("--scale-time", sa.params.scale_time, "scale the final time by the accessible-neighbour ratio");
  sim->add_option("--neighbors", sa.convention, "boundary | four | lattice (neighbour ratio convention)");
  sim->add_flag("!--pre-birth-movers", sa.params.movement_uses_post_birth,
                "movement phase draws from the agents present before births");
  sim->add_option("--snapshot-every", sa.snapshot_every, "print the grid every K steps");
  sim->add_option("--seed", sa.params.seed, "base seed; realization k uses seed + k");
  sim->add_option("--ensemble", sa.ensemble, "realizations");
  sim->add_option("--pcf", sa.pcf_mode, "emit the ensemble PCF of final states in this mode");
  sim->add_option("--meta", sa.meta, "JSON metadata sidecar (with --pcf)");
  sim->add_option("--plot", sa.plot, "two-column m/P file (with --pcf)");
  sim->add_option("-o,--out", sa.out, "output (stdout by default)");
  sim->add_option("--standard-prefactor", sa.prefactor, "all | accessible");
  sim->add_option("--threads", sa.threads, "oracle worker threads");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "time analytic against oracle cPCF evaluation");
  bench->add_option("--sizes", ba.sizes, "square domain sides")->delimiter(',');
  bench->add_option("--clusters", ba.clusters, "cluster counts")->delimiter(',');
  bench->add_option("--repeats", ba.repeats, "layouts per case");
  bench->add_option("--seed", ba.seed, "layout seed");
  bench->add_option("--occupancy", ba.occupancy, "agent density");
  bench->add_option("--max-extent", ba.max_extent, "largest cluster side");
  bench->add_option("--threads", ba.threads, "oracle worker threads");
  bench->add_option("--csv", ba.csv, "CSV output");

  ValidationOptions vo;
  std::string dump_prefix;
  auto* validate = app.add_subcommand("validate", "check analytic counts against BFS on random layouts");
  validate->add_option("--domains", vo.domains, "number of configurations");
  validate->add_option("--min-size", vo.min_size, "smallest domain side");
  validate->add_option("--max-size", vo.max_size, "largest domain side");
  validate->add_option("--max-clusters", vo.max_clusters, "most clusters per domain");
  validate->add_option("--max-extent", vo.max_extent, "largest cluster side");
  validate->add_option("--seed", vo.seed, "generator seed");
  validate->add_option("--dump", dump_prefix, "write a failing layout to PREFIX.grid and PREFIX.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*counts) return run_counts(ca);
    if (*pcf) return run_pcf(pa);
    if (*sim) return run_simulate(sa);
    if (*bench) return run_bench(ba);
    if (*validate) return run_validate(vo, dump_prefix);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ModeError& e) {
    std::cerr << "mode error: " << e.what() << '\n';
    return kMode;
  } catch (const ValidationFailure& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
