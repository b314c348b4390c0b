#pragma once

// Lattice domain model: extents, rectangular obstacle clusters, agent
// occupancy, and the admissibility test deciding whether the exact
// normalization applies.
//
// Coordinates are 1-based: x in [1, lx], y in [1, ly]. In the text grid the
// first line is the top row, y = ly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cpcf/errors.hpp"

namespace cpcf {

using Count = std::int64_t;

struct Site {
  int x = 0;
  int y = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

inline int taxicab(Site a, Site b) {
  return (a.x > b.x ? a.x - b.x : b.x - a.x) + (a.y > b.y ? a.y - b.y : b.y - a.y);
}

class LatticeDomain {
 public:
  LatticeDomain() = default;
  LatticeDomain(int lx, int ly) : lx_(lx), ly_(ly) {
    if (lx < 1 || ly < 1) {
      throw DomainError("lattice extents must be positive, got " + std::to_string(lx) + "x" +
                        std::to_string(ly));
    }
  }

  int lx() const { return lx_; }
  int ly() const { return ly_; }
  Count site_count() const { return Count{lx_} * ly_; }
  int max_taxicab() const { return lx_ + ly_ - 2; }

  bool contains(Site s) const { return s.x >= 1 && s.x <= lx_ && s.y >= 1 && s.y <= ly_; }
  std::size_t index(Site s) const {
    return static_cast<std::size_t>(s.x - 1) + static_cast<std::size_t>(s.y - 1) * static_cast<std::size_t>(lx_);
  }
  Site site(std::size_t index) const {
    return {static_cast<int>(index % static_cast<std::size_t>(lx_)) + 1,
            static_cast<int>(index / static_cast<std::size_t>(lx_)) + 1};
  }

  friend bool operator==(const LatticeDomain&, const LatticeDomain&) = default;

 private:
  int lx_ = 1;
  int ly_ = 1;
};

// Filled axis-aligned rectangle of inaccessible sites.
struct ObstacleCluster {
  int x0 = 1;  // lower-left site
  int y0 = 1;
  int cx = 1;  // extent along x
  int cy = 1;  // extent along y

  int x1() const { return x0 + cx - 1; }
  int y1() const { return y0 + cy - 1; }
  Count size() const { return Count{cx} * cy; }
  bool contains(Site s) const { return s.x >= x0 && s.x <= x1() && s.y >= y0 && s.y <= y1(); }

  friend bool operator==(const ObstacleCluster&, const ObstacleCluster&) = default;
};

enum class Admissibility { Exact, ApproximateOnly };

inline const char* to_string(Admissibility a) {
  return a == Admissibility::Exact ? "exact" : "approximate-only";
}

// 4-connected components of the mask, each checked to be a filled rectangle.
// Clusters are returned ordered by (y0, x0).
inline std::vector<ObstacleCluster> extract_clusters(const LatticeDomain& domain,
                                                     const std::vector<bool>& mask) {
  if (mask.size() != static_cast<std::size_t>(domain.site_count())) {
    throw DomainError("mask size does not match domain");
  }
  std::vector<ObstacleCluster> clusters;
  std::vector<bool> seen(mask.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < mask.size(); ++start) {
    if (!mask[start] || seen[start]) continue;
    int xmin = domain.lx(), xmax = 1, ymin = domain.ly(), ymax = 1;
    Count members = 0;
    stack.assign(1, start);
    seen[start] = true;
    while (!stack.empty()) {
      const Site s = domain.site(stack.back());
      stack.pop_back();
      ++members;
      xmin = std::min(xmin, s.x);
      xmax = std::max(xmax, s.x);
      ymin = std::min(ymin, s.y);
      ymax = std::max(ymax, s.y);
      const Site nbrs[4] = {{s.x, s.y + 1}, {s.x + 1, s.y}, {s.x, s.y - 1}, {s.x - 1, s.y}};
      for (const Site n : nbrs) {
        if (!domain.contains(n)) continue;
        const std::size_t i = domain.index(n);
        if (mask[i] && !seen[i]) {
          seen[i] = true;
          stack.push_back(i);
        }
      }
    }
    const ObstacleCluster c{xmin, ymin, xmax - xmin + 1, ymax - ymin + 1};
    if (members != c.size()) {
      std::ostringstream msg;
      msg << "obstacle component with bounding box (" << c.x0 << "," << c.y0 << ")+" << c.cx << "x"
          << c.cy << " is not a filled rectangle";
      throw NonRectangularObstacle(msg.str());
    }
    clusters.push_back(c);
  }
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    return a.y0 != b.y0 ? a.y0 < b.y0 : a.x0 < b.x0;
  });
  return clusters;
}

// Immutable obstacle layout. Always carries the raw inaccessible-site mask;
// the cluster list is empty when the mask is not a union of rectangles.
class ObstacleConfiguration {
 public:
  ObstacleConfiguration() : ObstacleConfiguration(LatticeDomain{}) {}
  explicit ObstacleConfiguration(LatticeDomain domain)
      : domain_(domain), mask_(static_cast<std::size_t>(domain.site_count()), false) {
    finalize();
  }

  // Throws DomainError for clusters outside the domain, overlapping or
  // edge-adjacent to one another.
  static ObstacleConfiguration from_clusters(LatticeDomain domain, std::vector<ObstacleCluster> clusters) {
    ObstacleConfiguration cfg(domain);
    for (const auto& c : clusters) {
      if (c.cx < 1 || c.cy < 1 || !domain.contains({c.x0, c.y0}) || !domain.contains({c.x1(), c.y1()})) {
        throw DomainError("cluster at (" + std::to_string(c.x0) + "," + std::to_string(c.y0) +
                          ") does not lie inside the domain");
      }
    }
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const auto& a = clusters[i];
        const auto& b = clusters[j];
        // Expand a by one site along each axis separately: overlap or
        // edge contact, but not corner contact.
        const bool x_overlap = a.x0 <= b.x1() && b.x0 <= a.x1();
        const bool y_overlap = a.y0 <= b.y1() && b.y0 <= a.y1();
        const bool x_touch = a.x0 <= b.x1() + 1 && b.x0 <= a.x1() + 1;
        const bool y_touch = a.y0 <= b.y1() + 1 && b.y0 <= a.y1() + 1;
        if ((x_overlap && y_touch) || (y_overlap && x_touch)) {
          throw DomainError("clusters " + std::to_string(i) + " and " + std::to_string(j) +
                            " overlap or share an edge");
        }
      }
    }
    for (const auto& c : clusters) {
      for (int y = c.y0; y <= c.y1(); ++y) {
        for (int x = c.x0; x <= c.x1(); ++x) cfg.mask_[domain.index({x, y})] = true;
      }
    }
    std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
      return a.y0 != b.y0 ? a.y0 < b.y0 : a.x0 < b.x0;
    });
    cfg.clusters_ = std::move(clusters);
    cfg.rectangular_ = true;
    cfg.finalize();
    return cfg;
  }

  // Non-rectangular components are accepted; the result then has no
  // clusters and is never admissible for the exact normalization.
  static ObstacleConfiguration from_mask(LatticeDomain domain, std::vector<bool> mask) {
    if (mask.size() != static_cast<std::size_t>(domain.site_count())) {
      throw DomainError("mask size does not match domain");
    }
    ObstacleConfiguration cfg(domain);
    cfg.mask_ = std::move(mask);
    try {
      cfg.clusters_ = extract_clusters(domain, cfg.mask_);
      cfg.rectangular_ = true;
    } catch (const NonRectangularObstacle&) {
      cfg.clusters_.clear();
      cfg.rectangular_ = false;
    }
    cfg.finalize();
    return cfg;
  }

  static ObstacleConfiguration from_sites(LatticeDomain domain, const std::vector<Site>& sites) {
    std::vector<bool> mask(static_cast<std::size_t>(domain.site_count()), false);
    for (const Site s : sites) {
      if (!domain.contains(s)) throw DomainError("inaccessible site outside domain");
      mask[domain.index(s)] = true;
    }
    return from_mask(domain, std::move(mask));
  }

  const LatticeDomain& domain() const { return domain_; }
  const std::vector<ObstacleCluster>& clusters() const { return clusters_; }
  const std::vector<Site>& inaccessible_sites() const { return sites_; }
  const std::vector<bool>& mask() const { return mask_; }
  bool is_inaccessible(Site s) const { return mask_[domain_.index(s)]; }
  bool is_accessible(Site s) const { return domain_.contains(s) && !mask_[domain_.index(s)]; }
  Count n_h() const { return static_cast<Count>(sites_.size()); }
  Count n_a() const { return domain_.site_count() - n_h(); }
  bool rectangular() const { return rectangular_; }
  Admissibility admissibility() const { return admissibility_; }

 private:
  void finalize() {
    sites_.clear();
    for (std::size_t i = 0; i < mask_.size(); ++i) {
      if (mask_[i]) sites_.push_back(domain_.site(i));
    }
    admissibility_ = classify();
  }

  bool row_empty(int y) const {
    for (int x = 1; x <= domain_.lx(); ++x) {
      if (mask_[domain_.index({x, y})]) return false;
    }
    return true;
  }
  bool column_empty(int x) const {
    for (int y = 1; y <= domain_.ly(); ++y) {
      if (mask_[domain_.index({x, y})]) return false;
    }
    return true;
  }

  // Every cluster needs a fully accessible row directly above and below it
  // and a fully accessible column directly left and right of it. A cluster
  // on the domain edge has no such line and fails.
  Admissibility classify() const {
    if (!rectangular_) return Admissibility::ApproximateOnly;
    for (const auto& c : clusters_) {
      if (c.y0 - 1 < 1 || c.y1() + 1 > domain_.ly() || c.x0 - 1 < 1 || c.x1() + 1 > domain_.lx()) {
        return Admissibility::ApproximateOnly;
      }
      if (!row_empty(c.y0 - 1) || !row_empty(c.y1() + 1) || !column_empty(c.x0 - 1) ||
          !column_empty(c.x1() + 1)) {
        return Admissibility::ApproximateOnly;
      }
    }
    return Admissibility::Exact;
  }

  LatticeDomain domain_;
  std::vector<ObstacleCluster> clusters_;
  std::vector<bool> mask_;
  std::vector<Site> sites_;
  bool rectangular_ = true;
  Admissibility admissibility_ = Admissibility::Exact;
};

inline Admissibility check_admissibility(const ObstacleConfiguration& config) {
  return config.admissibility();
}

// Agent positions, kept sorted by lattice index. At most one agent per site,
// never on an inaccessible site.
class OccupancyState {
 public:
  OccupancyState() = default;
  OccupancyState(const ObstacleConfiguration& config, std::vector<Site> agents) : agents_(std::move(agents)) {
    const auto& domain = config.domain();
    for (const Site s : agents_) {
      if (!config.is_accessible(s)) {
        throw DomainError("agent at (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                          ") is not on an accessible site");
      }
    }
    std::sort(agents_.begin(), agents_.end(),
              [&](Site a, Site b) { return domain.index(a) < domain.index(b); });
    if (std::adjacent_find(agents_.begin(), agents_.end()) != agents_.end()) {
      throw DomainError("two agents share a site");
    }
  }

  const std::vector<Site>& agents() const { return agents_; }
  Count z() const { return static_cast<Count>(agents_.size()); }

  friend bool operator==(const OccupancyState&, const OccupancyState&) = default;

 private:
  std::vector<Site> agents_;
};

enum class NeighborConvention {
  // Possible neighbours of a site respect the domain edge (corner sites have 2).
  RespectBoundary,
  // Every accessible site is credited with 4 possible neighbours.
  FourPerSite,
  // Possible neighbours are all in-domain neighbour slots of every site,
  // inaccessible ones included (the bare lattice's directed edge count).
  WholeLattice,
};

struct NeighborRatio {
  Count possible = 0;     // neighbour slots if obstacles were absent
  Count accessible = 0;   // neighbour slots that are actually accessible
  Count isolated_sites = 0;  // accessible sites with no accessible neighbour

  double value() const { return static_cast<double>(possible) / static_cast<double>(accessible); }
};

// Ratio of neighbour slots available without obstacles to those actually
// accessible; used to rescale simulation time on cluttered domains.
inline NeighborRatio accessible_neighbor_ratio(const ObstacleConfiguration& config,
                                               NeighborConvention convention = NeighborConvention::RespectBoundary) {
  const auto& domain = config.domain();
  if (config.n_a() < 1) throw DomainError("no accessible sites");
  NeighborRatio r;
  for (int y = 1; y <= domain.ly(); ++y) {
    for (int x = 1; x <= domain.lx(); ++x) {
      if (config.is_inaccessible({x, y})) continue;
      const Site nbrs[4] = {{x, y + 1}, {x + 1, y}, {x, y - 1}, {x - 1, y}};
      Count here = 0;
      for (const Site n : nbrs) {
        if (!domain.contains(n)) continue;
        if (convention == NeighborConvention::RespectBoundary) ++r.possible;
        if (!config.is_inaccessible(n)) ++here;
      }
      if (convention == NeighborConvention::FourPerSite) r.possible += 4;
      r.accessible += here;
      if (here == 0) ++r.isolated_sites;
    }
  }
  if (convention == NeighborConvention::WholeLattice) {
    r.possible = 2 * (Count{domain.lx() - 1} * domain.ly() + Count{domain.ly() - 1} * domain.lx());
  }
  return r;
}

// --- text grid ---------------------------------------------------------------

struct ParsedGrid {
  ObstacleConfiguration config;
  OccupancyState occupancy;
};

// Alphabet: '.' accessible, '#' inaccessible, 'A' agent on an accessible site.
inline ParsedGrid parse_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("grid is empty");
  const std::size_t width = lines.front().size();
  if (width == 0) throw ParseError("grid has an empty first line");

  const int lx = static_cast<int>(width);
  const int ly = static_cast<int>(lines.size());
  LatticeDomain domain(lx, ly);
  std::vector<bool> mask(static_cast<std::size_t>(domain.site_count()), false);
  std::vector<Site> agents;
  for (std::size_t row = 0; row < lines.size(); ++row) {
    if (lines[row].size() != width) {
      throw ParseError("ragged grid: line " + std::to_string(row + 1) + " has " +
                       std::to_string(lines[row].size()) + " columns, expected " + std::to_string(width));
    }
    const int y = ly - static_cast<int>(row);
    for (std::size_t col = 0; col < width; ++col) {
      const Site s{static_cast<int>(col) + 1, y};
      switch (lines[row][col]) {
        case '.':
          break;
        case '#':
          mask[domain.index(s)] = true;
          break;
        case 'A':
          agents.push_back(s);
          break;
        default:
          throw ParseError("unknown character '" + std::string(1, lines[row][col]) + "' at line " +
                           std::to_string(row + 1) + ", column " + std::to_string(col + 1));
      }
    }
  }
  auto config = ObstacleConfiguration::from_mask(domain, std::move(mask));
  OccupancyState occ(config, std::move(agents));
  return {std::move(config), std::move(occ)};
}

inline std::string render_grid(const ObstacleConfiguration& config, const OccupancyState& occupancy = {}) {
  const auto& domain = config.domain();
  std::string cells(static_cast<std::size_t>(domain.site_count()), '.');
  for (const Site s : config.inaccessible_sites()) cells[domain.index(s)] = '#';
  for (const Site s : occupancy.agents()) cells[domain.index(s)] = 'A';
  std::string out;
  out.reserve(cells.size() + static_cast<std::size_t>(domain.ly()));
  for (int y = domain.ly(); y >= 1; --y) {
    out.append(cells, domain.index({1, y}), static_cast<std::size_t>(domain.lx()));
    out.push_back('\n');
  }
  return out;
}

}  // namespace cpcf
