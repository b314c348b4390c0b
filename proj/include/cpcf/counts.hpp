#pragma once

// Analytic counts of pair distances on a lattice with rectangular obstacles.
//
//   D(m) = D_NO(m) - A(m) + I(m) - L(m) + G(m)
//
// D_NO: all site pairs at taxicab distance m on the bare lattice.
// A:    (site, inaccessible site) pairs at taxicab distance m, summed over
//       inaccessible sites, so inaccessible pairs appear twice.
// I:    inaccessible pairs at taxicab distance m.
// L, G: accessible pairs whose path distance exceeds their taxicab distance,
//       removed at the taxicab distance (lost) and re-added at the path
//       distance (gained).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "cpcf/histogram.hpp"
#include "cpcf/lattice.hpp"

namespace cpcf {

// Counts of unordered site pairs at taxicab distance m on an obstacle-free
// lx-by-ly lattice with no-flux boundaries.
inline Count d_no(int m, int lx, int ly) {
  if (m <= 0) throw DomainError("pair distance must be >= 1, got " + std::to_string(m));
  if (lx < 1 || ly < 1) throw DomainError("lattice extents must be positive");
  if (m > lx + ly - 2) return 0;
  const Count lo = std::min(lx, ly);
  const Count hi = std::max(lx, ly);
  const Count M = m;
  auto short_range = [&](Count k) {
    return 2 * k * Count{lx} * ly - (Count{lx} + ly) * k * k + (k * k * k - k) / 3;
  };
  if (M <= lo) return short_range(M);
  if (M < hi) return short_range(lo) - lo * lo * (M - lo);
  const Count k = Count{lx} + ly - 1 - M;
  return k * (k + 1) * (k + 2) / 3;
}

inline DistanceHistogram d_no_histogram(int lx, int ly, int m_max = -1) {
  if (m_max < 0) m_max = lx + ly - 2;
  DistanceHistogram h(m_max);
  for (int m = 1; m <= m_max; ++m) h.add(m, d_no(m, lx, ly));
  return h;
}

// Distances from a site to the four edges (b) and four corners (c), measured
// to the first out-of-domain position.
struct BoundaryDistances {
  int left = 1, right = 1, down = 1, up = 1;

  int down_left() const { return down + left; }
  int down_right() const { return down + right; }
  int up_left() const { return up + left; }
  int up_right() const { return up + right; }
  int max_corner() const { return std::max({down_left(), down_right(), up_left(), up_right()}); }
};

inline BoundaryDistances boundary_distances(const LatticeDomain& domain, Site s) {
  if (!domain.contains(s)) throw DomainError("site outside domain");
  return {s.x, domain.lx() - s.x + 1, s.y, domain.ly() - s.y + 1};
}

namespace detail {

inline Count axis_out(int m, int b) { return m >= b ? 1 : 0; }

inline Count diagonal_out(int m, int bj, int bk) {
  const int lo = std::min(bj, bk);
  const int hi = std::max(bj, bk);
  const int corner = bj + bk;
  if (m <= lo) return 0;
  if (m <= hi) return m - lo;
  if (m <= corner - 2) return 2 * m - corner;
  return m - 1;
}

}  // namespace detail

// Number of the 4m ring positions at taxicab distance m from the site that
// fall outside the domain.
inline Count alpha_out_of_domain(int m, const BoundaryDistances& bd) {
  if (m < 1) throw DomainError("pair distance must be >= 1");
  using detail::axis_out;
  using detail::diagonal_out;
  return axis_out(m, bd.left) + axis_out(m, bd.right) + axis_out(m, bd.down) + axis_out(m, bd.up) +
         diagonal_out(m, bd.down, bd.left) + diagonal_out(m, bd.down, bd.right) +
         diagonal_out(m, bd.up, bd.left) + diagonal_out(m, bd.up, bd.right);
}

// A(m): sum over inaccessible sites of the in-domain ring size 4m - alpha(m).
inline DistanceHistogram accessible_inaccessible_counts(const ObstacleConfiguration& config) {
  const auto& domain = config.domain();
  std::vector<Count> acc(static_cast<std::size_t>(domain.max_taxicab()), 0);
  for (const Site s : config.inaccessible_sites()) {
    const auto bd = boundary_distances(domain, s);
    const int last = std::min(domain.max_taxicab(), bd.max_corner());
    for (int m = 1; m <= last; ++m) acc[static_cast<std::size_t>(m - 1)] += 4 * Count{m} - alpha_out_of_domain(m, bd);
  }
  return DistanceHistogram(std::move(acc));
}

// I(m): unordered inaccessible pairs at taxicab distance m.
inline DistanceHistogram inaccessible_pair_counts(const ObstacleConfiguration& config) {
  const auto& sites = config.inaccessible_sites();
  std::vector<Count> acc(static_cast<std::size_t>(config.domain().max_taxicab()), 0);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) ++acc[static_cast<std::size_t>(taxicab(sites[i], sites[j]) - 1)];
  }
  return DistanceHistogram(std::move(acc));
}

// Pairs straddling a contiguous block of n inaccessible sites inside a 1-D
// line of X sites, at through-distance m, capped by d = min(sites left of
// the block, sites right of it):
//   max(0, min(-|m - (X+n)/2| + (X-n)/2, d))
// evaluated in doubled integers so the half-integer midpoint stays exact.
inline Count k_subdomain(int m, int n, int X, int d) {
  const Count twice = std::min<Count>(-std::abs(2 * Count{m} - (Count{X} + n)) + (Count{X} - n), 2 * Count{d});
  return twice > 0 ? twice / 2 : 0;
}

enum class Orientation { Horizontal, Vertical };

// One transformed 1-D subdomain, independent of m.
struct SubdomainSpec {
  int n = 1;
  int X = 2;
  int d = 0;
  Count multiplicity = 1;
  Orientation orientation = Orientation::Horizontal;

  friend bool operator==(const SubdomainSpec&, const SubdomainSpec&) = default;
};

namespace detail {

// Clusters sharing one perpendicular interval, with their along-axis
// intervals sorted.
struct Band {
  int lo = 0, hi = 0;
  std::vector<std::pair<int, int>> blocks;
};

inline std::vector<Band> bands(const ObstacleConfiguration& config, Orientation o) {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> grouped;
  for (const auto& c : config.clusters()) {
    if (o == Orientation::Horizontal) {
      grouped[{c.y0, c.y1()}].push_back({c.x0, c.x1()});
    } else {
      grouped[{c.x0, c.x1()}].push_back({c.y0, c.y1()});
    }
  }
  std::vector<Band> out;
  for (auto& [key, blocks] : grouped) {
    std::sort(blocks.begin(), blocks.end());
    out.push_back({key.first, key.second, std::move(blocks)});
  }
  return out;
}

// Walks every band and every run of consecutive clusters within it. The
// callback receives the block length n, subdomain length X, straddle cap d
// and the band's perpendicular extent.
template <typename Fn>
void for_each_combination(const ObstacleConfiguration& config, Fn&& fn) {
  for (const Orientation o : {Orientation::Horizontal, Orientation::Vertical}) {
    const int length = o == Orientation::Horizontal ? config.domain().lx() : config.domain().ly();
    for (const auto& band : bands(config, o)) {
      const auto& blocks = band.blocks;
      const std::size_t count = blocks.size();
      std::vector<int> gaps(count + 1);
      gaps[0] = blocks[0].first - 1;
      for (std::size_t k = 1; k < count; ++k) gaps[k] = blocks[k].first - blocks[k - 1].second - 1;
      gaps[count] = length - blocks[count - 1].second;
      for (std::size_t first = 0; first < count; ++first) {
        for (std::size_t last = first; last < count; ++last) {
          const int n = blocks[last].second - blocks[first].first + 1;
          const int left = gaps[first];
          const int right = gaps[last + 1];
          fn(o, n, left + n + right, std::min(left, right), band.hi - band.lo + 1);
        }
      }
    }
  }
}

inline void require_exact(const ObstacleConfiguration& config, const char* what) {
  if (config.admissibility() != Admissibility::Exact) {
    throw ModeError(std::string(what) +
                    " requires rectangular clusters flanked by fully accessible rows and columns");
  }
}

}  // namespace detail

// Lost-pair subdomains. A pair whose endpoints sit at perpendicular offsets
// r_p, r_q inside a band of height H behaves like a 1-D pair with |r_p - r_q|
// extra blocked sites; ordered offset pairs give multiplicity H for offset 0
// and 2(H - o) for offset o > 0.
inline std::vector<SubdomainSpec> lost_subdomains(const ObstacleConfiguration& config) {
  detail::require_exact(config, "lost-pair counts");
  std::vector<SubdomainSpec> specs;
  detail::for_each_combination(config, [&](Orientation o, int n, int X, int d, int height) {
    for (int off = 0; off < height; ++off) {
      specs.push_back({n + off, X + off, d, off == 0 ? Count{height} : 2 * Count{height - off}, o});
    }
  });
  return specs;
}

// Gained-pair subdomains: the lost subdomain extended by the detour, which
// is twice the distance from the nearer endpoint row to the closer flanking
// line outside the band.
inline std::vector<SubdomainSpec> gained_subdomains(const ObstacleConfiguration& config) {
  detail::require_exact(config, "gained-pair counts");
  std::vector<SubdomainSpec> specs;
  detail::for_each_combination(config, [&](Orientation o, int n, int X, int d, int height) {
    std::map<int, Count> by_shift;
    for (int rp = 0; rp < height; ++rp) {
      for (int rq = 0; rq < height; ++rq) {
        const int offset = std::abs(rp - rq);
        const int detour = 2 * std::min(std::min(rp, rq) + 1, height - std::max(rp, rq));
        ++by_shift[offset + detour];
      }
    }
    for (const auto& [shift, mult] : by_shift) specs.push_back({n + shift, X + shift, d, mult, o});
  });
  return specs;
}

// Largest distance any count term can populate for this configuration.
inline int histogram_extent(const ObstacleConfiguration& config) {
  int m_max = config.domain().max_taxicab();
  if (config.admissibility() == Admissibility::Exact) {
    for (const auto& s : gained_subdomains(config)) m_max = std::max(m_max, s.X - 1);
  }
  return m_max;
}

inline DistanceHistogram sum_subdomains(const std::vector<SubdomainSpec>& specs, int m_max) {
  std::vector<Count> acc(static_cast<std::size_t>(m_max), 0);
  for (const auto& s : specs) {
    for (int m = s.n + 1; m <= std::min(s.X - 1, m_max); ++m) {
      acc[static_cast<std::size_t>(m - 1)] += s.multiplicity * k_subdomain(m, s.n, s.X, s.d);
    }
  }
  return DistanceHistogram(std::move(acc));
}

inline DistanceHistogram lost_counts(const ObstacleConfiguration& config) {
  return sum_subdomains(lost_subdomains(config), histogram_extent(config));
}

inline DistanceHistogram gained_counts(const ObstacleConfiguration& config) {
  return sum_subdomains(gained_subdomains(config), histogram_extent(config));
}

// D_NO - A + I: accessible pairs binned by taxicab distance. Needs only the
// raw inaccessible-site set.
inline DistanceHistogram approx_counts(const ObstacleConfiguration& config) {
  const auto& domain = config.domain();
  const auto a = accessible_inaccessible_counts(config);
  const auto i = inaccessible_pair_counts(config);
  DistanceHistogram h(domain.max_taxicab());
  for (int m = 1; m <= domain.max_taxicab(); ++m) h.add(m, d_no(m, domain.lx(), domain.ly()) - a[m] + i[m]);
  return h;
}

// Exact path-distance counts over accessible pairs.
inline DistanceHistogram corrected_counts(const ObstacleConfiguration& config) {
  detail::require_exact(config, "exact pair-distance counts");
  const int m_max = histogram_extent(config);
  const auto base = approx_counts(config);
  const auto lost = sum_subdomains(lost_subdomains(config), m_max);
  const auto gained = sum_subdomains(gained_subdomains(config), m_max);
  DistanceHistogram h(m_max);
  for (int m = 1; m <= m_max; ++m) {
    const Count v = base[m] - lost[m] + gained[m];
    if (v < 0) {
      throw InternalError("negative pair count " + std::to_string(v) + " at m = " + std::to_string(m));
    }
    h.add(m, v);
  }
  return h;
}

}  // namespace cpcf
