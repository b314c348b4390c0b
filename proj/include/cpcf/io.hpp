#pragma once

// File formats: text grids, JSON configurations, PCF CSV and metadata.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cpcf/lattice.hpp"
#include "cpcf/pcf.hpp"

namespace cpcf {

// {"lx":int, "ly":int, "clusters":[{"x0","y0","cx","cy"}], "agents":[[x,y],...]}
inline ParsedGrid parse_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const int lx = j.at("lx").get<int>();
    const int ly = j.at("ly").get<int>();
    std::vector<ObstacleCluster> clusters;
    for (const auto& c : j.value("clusters", nlohmann::json::array())) {
      clusters.push_back({c.at("x0").get<int>(), c.at("y0").get<int>(), c.at("cx").get<int>(), c.at("cy").get<int>()});
    }
    std::vector<Site> agents;
    for (const auto& a : j.value("agents", nlohmann::json::array())) {
      if (!a.is_array() || a.size() != 2) throw ParseError("agent entries must be [x, y]");
      agents.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    auto config = ObstacleConfiguration::from_clusters(LatticeDomain(lx, ly), std::move(clusters));
    OccupancyState occ(config, std::move(agents));
    return {std::move(config), std::move(occ)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON configuration: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid configuration: ") + e.what());
  }
}

// Clusters are written when the obstacles are rectangular; otherwise each
// inaccessible site becomes a 1x1 entry, which is only valid JSON input when
// no two sites touch.
inline std::string config_to_json(const ObstacleConfiguration& config, const OccupancyState& occupancy = {}) {
  nlohmann::json j;
  j["lx"] = config.domain().lx();
  j["ly"] = config.domain().ly();
  j["clusters"] = nlohmann::json::array();
  if (config.rectangular()) {
    for (const auto& c : config.clusters()) j["clusters"].push_back({{"x0", c.x0}, {"y0", c.y0}, {"cx", c.cx}, {"cy", c.cy}});
  } else {
    for (const auto& s : config.inaccessible_sites()) j["clusters"].push_back({{"x0", s.x}, {"y0", s.y}, {"cx", 1}, {"cy", 1}});
  }
  j["agents"] = nlohmann::json::array();
  for (const auto& a : occupancy.agents()) j["agents"].push_back({a.x, a.y});
  return j.dump();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON when the first non-blank character is '{', text grid otherwise.
inline ParsedGrid parse_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_config_json(text);
  return parse_grid(text);
}

inline std::string format_number(double v) {
  std::ostringstream os;
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    os << static_cast<std::int64_t>(v);
  } else {
    os << std::setprecision(10) << v;
  }
  return os.str();
}

// "m,C,D,E,P,Pstd"; undefined P and single-realization Pstd are empty.
inline void write_pcf_csv(std::ostream& os, const PcfResult& result) {
  os << "m,C,D,E,P,Pstd\n";
  for (const auto& r : result.rows) {
    os << r.m << ',' << format_number(r.C) << ',' << format_number(r.D) << ',' << format_number(r.E) << ',';
    if (r.P) os << format_number(*r.P);
    os << ',';
    if (r.P_std) os << format_number(*r.P_std);
    os << '\n';
  }
}

inline nlohmann::json pcf_metadata(const PcfResult& result, const std::vector<std::uint64_t>& seeds) {
  return {{"mode", to_string(result.mode)},
          {"seeds", seeds},
          {"ensemble_size", result.ensemble_size},
          {"unreachable_pairs", result.unreachable_pairs},
          {"undefined_bins", result.undefined_bins()}};
}

// Two whitespace-separated columns, one point per line, for plotting.
template <typename X, typename Y>
void write_plot_columns(std::ostream& os, const std::vector<X>& xs, const std::vector<Y>& ys) {
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) os << xs[i] << ' ' << ys[i] << '\n';
}

}  // namespace cpcf
