#pragma once

// Pair correlation P(m) = C(m) / E[C(m)] with
//   E[C(m)] = z(z-1) / (n(n-1)) * D(m)
// in standard (taxicab, obstacles ignored) and corrected (path distance)
// flavours.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cpcf/counts.hpp"
#include "cpcf/histogram.hpp"
#include "cpcf/lattice.hpp"
#include "cpcf/path_oracle.hpp"

namespace cpcf {

enum class PcfMode { Standard, CorrectedExact, CorrectedApprox, CorrectedOracle };

inline const char* to_string(PcfMode mode) {
  switch (mode) {
    case PcfMode::Standard:
      return "standard";
    case PcfMode::CorrectedExact:
      return "exact";
    case PcfMode::CorrectedApprox:
      return "approx";
    case PcfMode::CorrectedOracle:
      return "oracle";
  }
  return "?";
}

inline PcfMode parse_pcf_mode(const std::string& name) {
  if (name == "standard") return PcfMode::Standard;
  if (name == "exact") return PcfMode::CorrectedExact;
  if (name == "approx") return PcfMode::CorrectedApprox;
  if (name == "oracle") return PcfMode::CorrectedOracle;
  throw ParseError("unknown mode '" + name + "'");
}

// Site count used in the standard-mode prefactor.
enum class StandardPrefactor { AllSites, AccessibleSites };

struct PcfOptions {
  StandardPrefactor standard_prefactor = StandardPrefactor::AllSites;
  unsigned oracle_threads = 1;
};

struct PcfRow {
  int m = 0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  std::optional<double> P;      // empty where E = 0
  std::optional<double> P_std;  // ensembles only
  Count participation = 0;      // realizations with a defined P at this m
};

struct PcfResult {
  PcfMode mode = PcfMode::CorrectedExact;
  std::vector<PcfRow> rows;
  Count ensemble_size = 1;
  Count unreachable_pairs = 0;

  Count undefined_bins() const {
    Count n = 0;
    for (const auto& r : rows) n += r.P ? 0 : 1;
    return n;
  }
  const PcfRow* row(int m) const {
    return m >= 1 && m <= static_cast<int>(rows.size()) ? &rows[static_cast<std::size_t>(m - 1)] : nullptr;
  }
  std::optional<double> P(int m) const {
    const auto* r = row(m);
    return r ? r->P : std::nullopt;
  }
};

inline std::vector<double> expected_counts(const DistanceHistogram& D, Count z, Count n) {
  if (n < 2) throw DomainError("need at least two sites for a pair normalization");
  if (z < 0 || z > n) throw DomainError("agent count outside [0, n]");
  const double prefactor = (static_cast<double>(z) * static_cast<double>(z - 1)) /
                           (static_cast<double>(n) * static_cast<double>(n - 1));
  std::vector<double> E(static_cast<std::size_t>(D.m_max()));
  for (int m = 1; m <= D.m_max(); ++m) E[static_cast<std::size_t>(m - 1)] = prefactor * static_cast<double>(D[m]);
  return E;
}

inline std::vector<PcfRow> pcf_from_counts(const DistanceHistogram& C, const std::vector<double>& E) {
  const int m_max = std::max(C.m_max(), static_cast<int>(E.size()));
  std::vector<PcfRow> rows(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    auto& r = rows[static_cast<std::size_t>(m - 1)];
    r.m = m;
    r.C = static_cast<double>(C[m]);
    r.E = m <= static_cast<int>(E.size()) ? E[static_cast<std::size_t>(m - 1)] : 0.0;
    if (r.E > 0.0) {
      r.P = r.C / r.E;
      r.participation = 1;
    }
  }
  return rows;
}

// D(m) for the mode, plus the site count n entering the prefactor. Depends
// only on the obstacle layout, so ensembles over occupancy can reuse it.
struct Normalization {
  PcfMode mode = PcfMode::CorrectedExact;
  DistanceHistogram D;
  Count sites = 0;
  Count unreachable_pairs = 0;
};

inline Normalization normalization(const ObstacleConfiguration& config, PcfMode mode, const PcfOptions& options = {}) {
  const auto& domain = config.domain();
  switch (mode) {
    case PcfMode::Standard:
      return {mode, d_no_histogram(domain.lx(), domain.ly()),
              options.standard_prefactor == StandardPrefactor::AllSites ? domain.site_count() : config.n_a(), 0};
    case PcfMode::CorrectedExact:
      return {mode, corrected_counts(config), config.n_a(), 0};
    case PcfMode::CorrectedApprox:
      return {mode, approx_counts(config), config.n_a(), 0};
    case PcfMode::CorrectedOracle: {
      auto oracle = oracle_pair_counts(config, options.oracle_threads);
      return {mode, std::move(oracle.histogram), config.n_a(), oracle.unreachable_pairs};
    }
  }
  throw DomainError("unknown PCF mode");
}

inline PcfResult pcf_with_normalization(const ObstacleConfiguration& config, const OccupancyState& occupancy,
                                        const Normalization& norm) {
  PcfResult out;
  out.mode = norm.mode;
  DistanceHistogram C;
  if (norm.mode == PcfMode::Standard) {
    C = taxicab_pair_counts(config.domain(), occupancy);
  } else {
    auto counts = occupied_pair_counts(config, occupancy);
    C = std::move(counts.histogram);
    out.unreachable_pairs = counts.unreachable_pairs;
  }
  out.rows = pcf_from_counts(C, expected_counts(norm.D, occupancy.z(), norm.sites));
  for (auto& r : out.rows) r.D = static_cast<double>(norm.D[r.m]);
  return out;
}

// C from agent path distances (taxicab in standard mode); D from the
// analytic, approximate or BFS normalization.
inline PcfResult corrected_pcf(const ObstacleConfiguration& config, const OccupancyState& occupancy, PcfMode mode,
                               const PcfOptions& options = {}) {
  if (mode == PcfMode::CorrectedExact && config.admissibility() != Admissibility::Exact) {
    throw ModeError("exact cPCF requested on a configuration that only admits the approximation");
  }
  return pcf_with_normalization(config, occupancy, normalization(config, mode, options));
}

// Per-bin mean and sample standard deviation of P over realizations; bins
// where a realization has no defined P are skipped for that realization.
// C, D and E are averaged over all realizations.
inline PcfResult ensemble_pcf(const std::vector<PcfResult>& results) {
  if (results.empty()) throw DomainError("ensemble of zero realizations");
  PcfResult out;
  out.mode = results.front().mode;
  std::size_t m_max = 0;
  for (const auto& r : results) {
    if (r.mode != out.mode) throw DomainError("ensemble mixes PCF modes");
    m_max = std::max(m_max, r.rows.size());
    out.unreachable_pairs += r.unreachable_pairs;
  }
  out.ensemble_size = static_cast<Count>(results.size());
  out.rows.resize(m_max);
  const double n = static_cast<double>(results.size());
  for (std::size_t k = 0; k < m_max; ++k) {
    auto& row = out.rows[k];
    row.m = static_cast<int>(k + 1);
    double sum = 0.0;
    for (const auto& r : results) {
      if (k >= r.rows.size()) continue;
      const auto& src = r.rows[k];
      row.C += src.C / n;
      row.D += src.D / n;
      row.E += src.E / n;
      if (src.P) {
        sum += *src.P;
        ++row.participation;
      }
    }
    if (row.participation == 0) continue;
    const double mean = sum / static_cast<double>(row.participation);
    row.P = mean;
    if (results.size() > 1) {
      double ss = 0.0;
      for (const auto& r : results) {
        if (k < r.rows.size() && r.rows[k].P) ss += (*r.rows[k].P - mean) * (*r.rows[k].P - mean);
      }
      row.P_std = row.participation > 1 ? std::sqrt(ss / static_cast<double>(row.participation - 1)) : 0.0;
    }
  }
  return out;
}

}  // namespace cpcf
