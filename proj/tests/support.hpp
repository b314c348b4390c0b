#pragma once

// Brute-force references shared by the tests. Deliberately naive and
// independent of the library's BFS workspace.

#include <queue>
#include <vector>

#include "cpcf/cpcf.hpp"

namespace cpcf::testing {

// All-pairs path distances with a plain queue BFS per accessible site.
inline PairCounts brute_path_counts(const ObstacleConfiguration& config) {
  const auto& dom = config.domain();
  PairCounts out;
  std::vector<Site> acc;
  for (int y = 1; y <= dom.ly(); ++y)
    for (int x = 1; x <= dom.lx(); ++x)
      if (config.is_accessible({x, y})) acc.push_back({x, y});
  for (std::size_t i = 0; i < acc.size(); ++i) {
    std::vector<int> dist(static_cast<std::size_t>(dom.site_count()), -1);
    std::queue<Site> q;
    dist[dom.index(acc[i])] = 0;
    q.push(acc[i]);
    while (!q.empty()) {
      const Site s = q.front();
      q.pop();
      const Site nb[4] = {{s.x + 1, s.y}, {s.x - 1, s.y}, {s.x, s.y + 1}, {s.x, s.y - 1}};
      for (const Site n : nb) {
        if (!config.is_accessible(n) || dist[dom.index(n)] >= 0) continue;
        dist[dom.index(n)] = dist[dom.index(s)] + 1;
        q.push(n);
      }
    }
    for (std::size_t j = i + 1; j < acc.size(); ++j) {
      const int d = dist[dom.index(acc[j])];
      if (d < 0) {
        ++out.unreachable_pairs;
      } else {
        out.histogram.add(d, 1);
      }
    }
  }
  return out;
}

// Accessible pairs binned by taxicab distance.
inline DistanceHistogram brute_taxicab_counts(const ObstacleConfiguration& config) {
  const auto& dom = config.domain();
  std::vector<Site> acc;
  for (int y = 1; y <= dom.ly(); ++y)
    for (int x = 1; x <= dom.lx(); ++x)
      if (config.is_accessible({x, y})) acc.push_back({x, y});
  DistanceHistogram h;
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = i + 1; j < acc.size(); ++j) h.add(taxicab(acc[i], acc[j]), 1);
  return h;
}

inline Count brute_d_no(int m, int lx, int ly) {
  Count n = 0;
  for (int y1 = 1; y1 <= ly; ++y1)
    for (int x1 = 1; x1 <= lx; ++x1)
      for (int y2 = 1; y2 <= ly; ++y2)
        for (int x2 = 1; x2 <= lx; ++x2)
          if (std::abs(x1 - x2) + std::abs(y1 - y2) == m) ++n;
  return n / 2;
}

// Same layout with x and y swapped.
inline ObstacleConfiguration transpose(const ObstacleConfiguration& c) {
  std::vector<ObstacleCluster> out;
  for (const auto& k : c.clusters()) out.push_back({k.y0, k.x0, k.cy, k.cx});
  return ObstacleConfiguration::from_clusters(LatticeDomain(c.domain().ly(), c.domain().lx()), out);
}

// Mirror in x.
inline ObstacleConfiguration mirror(const ObstacleConfiguration& c) {
  std::vector<ObstacleCluster> out;
  for (const auto& k : c.clusters()) out.push_back({c.domain().lx() - k.x1() + 1, k.y0, k.cx, k.cy});
  return ObstacleConfiguration::from_clusters(c.domain(), out);
}

inline ObstacleConfiguration random_config(std::uint64_t seed, int lo = 5, int hi = 30, int max_extent = 4) {
  Rng rng(seed);
  const int lx = lo + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
  const int ly = lo + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
  const int cap = std::min(12, layouts::max_admissible_clusters(lx, ly));
  const int k = 1 + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(cap)));
  return layouts::random_admissible_layout(rng, lx, ly, k, max_extent);
}

}  // namespace cpcf::testing
