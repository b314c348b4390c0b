#pragma once

// Obstacle layouts: fixed reference domains and seeded random generators.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cpcf/lattice.hpp"
#include "cpcf/simulation.hpp"

namespace cpcf::layouts {

// 50x50 domains with 0, 1, 25 and 576 clusters.
inline ObstacleConfiguration empty_domain(int l = 50) { return ObstacleConfiguration(LatticeDomain(l, l)); }

// One 20x20 block in the middle of a 50x50 domain.
inline ObstacleConfiguration single_large_cluster() {
  return ObstacleConfiguration::from_clusters(LatticeDomain(50, 50), {{16, 16, 20, 20}});
}

// 5x5 grid of 3x3 clusters with ten-site pitch.
inline ObstacleConfiguration twenty_five_clusters() {
  std::vector<ObstacleCluster> clusters;
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) clusters.push_back({5 + 10 * i, 5 + 10 * j, 3, 3});
  }
  return ObstacleConfiguration::from_clusters(LatticeDomain(50, 50), std::move(clusters));
}

// Single inaccessible sites at every (2i, 2j), i, j = 1..24.
inline ObstacleConfiguration lattice_576() {
  std::vector<ObstacleCluster> clusters;
  for (int j = 1; j <= 24; ++j) {
    for (int i = 1; i <= 24; ++i) clusters.push_back({2 * i, 2 * j, 1, 1});
  }
  return ObstacleConfiguration::from_clusters(LatticeDomain(50, 50), std::move(clusters));
}

struct NamedLayout {
  std::string name;
  ObstacleConfiguration config;
};

inline std::vector<NamedLayout> reference_layouts() {
  return {{"empty", empty_domain()},
          {"single-cluster", single_large_cluster()},
          {"25-clusters", twenty_five_clusters()},
          {"576-sites", lattice_576()}};
}

// Small fixtures covering a single site, a single block, a row/column
// arrangement of single sites and a mixed grid of blocks.
inline std::vector<NamedLayout> verification_fixtures() {
  return {
      {"single-site", ObstacleConfiguration::from_clusters(LatticeDomain(20, 20), {{8, 12, 1, 1}})},
      {"single-block", ObstacleConfiguration::from_clusters(LatticeDomain(25, 20), {{9, 7, 4, 3}})},
      {"row-and-column", ObstacleConfiguration::from_clusters(
                             LatticeDomain(20, 20), {{5, 5, 1, 1}, {10, 5, 1, 1}, {15, 5, 1, 1}, {5, 12, 1, 1},
                                                     {15, 12, 1, 1}})},
      {"mixed-blocks", ObstacleConfiguration::from_clusters(
                           LatticeDomain(40, 40), {{4, 4, 3, 2},
                                                   {12, 4, 2, 2},
                                                   {25, 4, 5, 2},
                                                   {4, 12, 3, 4},
                                                   {25, 12, 5, 4},
                                                   {33, 12, 2, 4},
                                                   {12, 25, 2, 6},
                                                   {33, 25, 2, 6},
                                                   {4, 33, 3, 1},
                                                   {12, 33, 2, 1},
                                                   {25, 33, 5, 1}})},
  };
}

namespace detail {

// Lengths of `count` bands with extents drawn from [1, max_extent] and
// random gaps, packed into `length` sites with at least one empty line
// before, between and after them. Returns the start of each band, or an
// empty vector if they cannot fit.
inline std::vector<std::pair<int, int>> pack_bands(Rng& rng, int length, int count, int max_extent) {
  std::vector<int> extent(static_cast<std::size_t>(count));
  for (auto& e : extent) e = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(max_extent)));
  auto used = [&] { return std::accumulate(extent.begin(), extent.end(), 0) + count + 1; };
  while (used() > length) {
    auto widest = std::max_element(extent.begin(), extent.end());
    if (*widest == 1) return {};
    --*widest;
  }
  std::vector<int> gap(static_cast<std::size_t>(count + 1), 1);
  for (int slack = length - used(); slack > 0; --slack) {
    ++gap[static_cast<std::size_t>(rng.uniform_index(static_cast<std::uint64_t>(count + 1)))];
  }
  std::vector<std::pair<int, int>> bands;
  int pos = 0;
  for (int k = 0; k < count; ++k) {
    pos += gap[static_cast<std::size_t>(k)];
    bands.push_back({pos + 1, extent[static_cast<std::size_t>(k)]});
    pos += extent[static_cast<std::size_t>(k)];
  }
  return bands;
}

}  // namespace detail

inline int max_admissible_clusters(int lx, int ly) { return ((lx - 1) / 2) * ((ly - 1) / 2); }

// Random admissible layout: clusters occupy cells of a coarse grid whose row
// and column bands are separated by fully empty lines, so every cluster is
// flanked by accessible rows and columns by construction.
inline ObstacleConfiguration random_admissible_layout(Rng& rng, int lx, int ly, int clusters, int max_extent) {
  if (clusters < 0 || clusters > max_admissible_clusters(lx, ly)) {
    throw DomainError("cannot fit " + std::to_string(clusters) + " admissible clusters in " + std::to_string(lx) +
                      "x" + std::to_string(ly));
  }
  if (max_extent < 1) throw DomainError("cluster extent must be >= 1");
  LatticeDomain domain(lx, ly);
  if (clusters == 0) return ObstacleConfiguration(domain);
  const int max_rows = (ly - 1) / 2;
  const int max_cols = (lx - 1) / 2;
  for (;;) {
    const int rows = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(max_rows)));
    const int cols = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(max_cols)));
    if (rows * cols < clusters) continue;
    const auto row_bands = detail::pack_bands(rng, ly, rows, max_extent);
    const auto col_bands = detail::pack_bands(rng, lx, cols, max_extent);
    if (row_bands.empty() || col_bands.empty()) continue;
    std::vector<int> cells(static_cast<std::size_t>(rows * cols));
    std::iota(cells.begin(), cells.end(), 0);
    std::vector<ObstacleCluster> out;
    for (int k = 0; k < clusters; ++k) {
      const auto j = static_cast<std::size_t>(k) +
                     static_cast<std::size_t>(rng.uniform_index(cells.size() - static_cast<std::size_t>(k)));
      std::swap(cells[static_cast<std::size_t>(k)], cells[j]);
      const auto& r = row_bands[static_cast<std::size_t>(cells[static_cast<std::size_t>(k)] / cols)];
      const auto& c = col_bands[static_cast<std::size_t>(cells[static_cast<std::size_t>(k)] % cols)];
      out.push_back({c.first, r.first, c.second, r.second});
    }
    return ObstacleConfiguration::from_clusters(domain, std::move(out));
  }
}

// `count` distinct inaccessible sites placed uniformly at random.
inline ObstacleConfiguration random_sites(Rng& rng, int lx, int ly, int count) {
  LatticeDomain domain(lx, ly);
  if (count < 0 || count > domain.site_count()) throw DomainError("too many inaccessible sites");
  std::vector<std::size_t> idx(static_cast<std::size_t>(domain.site_count()));
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<bool> mask(idx.size(), false);
  for (std::size_t k = 0; k < static_cast<std::size_t>(count); ++k) {
    const auto j = k + static_cast<std::size_t>(rng.uniform_index(idx.size() - k));
    std::swap(idx[k], idx[j]);
    mask[idx[k]] = true;
  }
  return ObstacleConfiguration::from_mask(domain, std::move(mask));
}

}  // namespace cpcf::layouts
