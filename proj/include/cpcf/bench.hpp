#pragma once

// Analytic-versus-oracle timing harness and randomized exactness check.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cpcf/counts.hpp"
#include "cpcf/layouts.hpp"
#include "cpcf/path_oracle.hpp"
#include "cpcf/pcf.hpp"
#include "cpcf/simulation.hpp"

namespace cpcf {

struct BenchCase {
  int size = 0;  // square domain side
  int clusters = 0;
  std::uint64_t layout_seed = 0;
  int repeats = 0;
  double analytic_seconds = 0.0;  // mean over repeats
  double oracle_seconds = 0.0;
  double speedup() const { return oracle_seconds / analytic_seconds; }
};

struct BenchReport {
  std::vector<BenchCase> cases;
  double occupancy = 0.2;
  int max_extent = 3;
};

struct BenchOptions {
  double occupancy = 0.2;
  int max_extent = 3;
  unsigned oracle_threads = 1;
};

// Seed of repeat r's layout for one (size, clusters) case.
inline std::uint64_t bench_layout_seed(std::uint64_t seed, int size, int clusters) {
  return Rng::splitmix64(seed ^ (static_cast<std::uint64_t>(size) << 32) ^ static_cast<std::uint64_t>(clusters));
}

// Layout and occupancy of one repeat; identical for equal arguments.
inline std::pair<ObstacleConfiguration, OccupancyState> bench_instance(std::uint64_t layout_seed, int size, int clusters,
                                                                       int repeat, const BenchOptions& options) {
  Rng rng = Rng::for_realization(layout_seed, static_cast<std::uint64_t>(repeat));
  auto config = layouts::random_admissible_layout(rng, size, size, clusters, options.max_extent);
  auto occupancy = seed_occupancy(config, options.occupancy, rng);
  return {std::move(config), std::move(occupancy)};
}

// Wall time of the full cPCF (normalization, C(m), P(m)) with the analytic
// normalization and with the BFS normalization, averaged over repeats.
inline BenchReport bench_compare(const std::vector<int>& sizes, const std::vector<int>& cluster_counts, int repeats,
                                 std::uint64_t seed, const BenchOptions& options = {}) {
  if (sizes.empty() || cluster_counts.empty() || repeats < 1) throw DomainError("empty benchmark grid");
  using clock = std::chrono::steady_clock;
  BenchReport report;
  report.occupancy = options.occupancy;
  report.max_extent = options.max_extent;
  PcfOptions pcf_options;
  pcf_options.oracle_threads = options.oracle_threads;
  for (const int size : sizes) {
    for (const int clusters : cluster_counts) {
      BenchCase c{size, clusters, bench_layout_seed(seed, size, clusters), repeats};
      for (int r = 0; r < repeats; ++r) {
        const auto [config, occupancy] = bench_instance(c.layout_seed, size, clusters, r, options);
        const auto t0 = clock::now();
        const auto analytic = corrected_pcf(config, occupancy, PcfMode::CorrectedExact, pcf_options);
        const auto t1 = clock::now();
        const auto oracle = corrected_pcf(config, occupancy, PcfMode::CorrectedOracle, pcf_options);
        const auto t2 = clock::now();
        for (std::size_t k = 0; k < std::max(analytic.rows.size(), oracle.rows.size()); ++k) {
          const double a = k < analytic.rows.size() ? analytic.rows[k].D : 0.0;
          const double o = k < oracle.rows.size() ? oracle.rows[k].D : 0.0;
          if (a != o) throw ValidationFailure("analytic and oracle normalizations differ in benchmark case");
        }
        c.analytic_seconds += std::chrono::duration<double>(t1 - t0).count();
        c.oracle_seconds += std::chrono::duration<double>(t2 - t1).count();
      }
      c.analytic_seconds /= repeats;
      c.oracle_seconds /= repeats;
      report.cases.push_back(c);
    }
  }
  return report;
}

inline void write_bench_csv(std::ostream& os, const BenchReport& report) {
  os << "size,clusters,layout_seed,repeats,analytic_s,oracle_s,speedup\n";
  for (const auto& c : report.cases) {
    os << c.size << ',' << c.clusters << ',' << c.layout_seed << ',' << c.repeats << ',' << c.analytic_seconds << ','
       << c.oracle_seconds << ',' << c.speedup() << '\n';
  }
}

inline void write_bench_table(std::ostream& os, const BenchReport& report) {
  os << "domain     clusters  analytic (s)  oracle (s)  speedup\n";
  for (const auto& c : report.cases) {
    std::string dom = std::to_string(c.size) + "x" + std::to_string(c.size);
    dom.resize(11, ' ');
    std::string cl = std::to_string(c.clusters);
    cl.resize(10, ' ');
    char buf[64];
    std::snprintf(buf, sizeof buf, "%12.4f  %10.4f  %7.2f", c.analytic_seconds, c.oracle_seconds, c.speedup());
    os << dom << cl << buf << '\n';
  }
}

struct ValidationOptions {
  int domains = 100;
  int min_size = 10;
  int max_size = 40;
  int max_clusters = 20;
  int max_extent = 4;
  std::uint64_t seed = 7;
};

struct ValidationMismatch {
  int index = 0;
  ObstacleConfiguration config;
  DistanceHistogram analytic;
  DistanceHistogram oracle;
  Count oracle_unreachable = 0;
};

struct ValidationReport {
  int checked = 0;
  std::optional<ValidationMismatch> mismatch;  // first one, if any
};

// Random admissible configurations: analytic D must equal the BFS histogram
// entrywise. Stops at the first mismatch.
inline ValidationReport validate_random(const ValidationOptions& options) {
  if (options.min_size < 3 || options.max_size < options.min_size) throw DomainError("invalid size range");
  ValidationReport report;
  for (int k = 0; k < options.domains; ++k) {
    Rng rng = Rng::for_realization(options.seed, static_cast<std::uint64_t>(k));
    const int span = options.max_size - options.min_size + 1;
    const int lx = options.min_size + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(span)));
    const int ly = options.min_size + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(span)));
    const int cap = std::min(options.max_clusters, layouts::max_admissible_clusters(lx, ly));
    const int clusters = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(cap)));
    auto config = layouts::random_admissible_layout(rng, lx, ly, clusters, options.max_extent);
    auto analytic = corrected_counts(config);
    auto oracle = oracle_pair_counts(config);
    ++report.checked;
    if (!(analytic == oracle.histogram) || oracle.unreachable_pairs != 0) {
      report.mismatch = ValidationMismatch{k, std::move(config), std::move(analytic), std::move(oracle.histogram),
                                           oracle.unreachable_pairs};
      return report;
    }
  }
  return report;
}

}  // namespace cpcf
