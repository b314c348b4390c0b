#pragma once

// Breadth-first shortest paths over accessible sites (von Neumann moves,
// no-flux edges). Ground truth for the analytic counts and the source of the
// occupied-pair counts C(m).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cpcf/histogram.hpp"
#include "cpcf/lattice.hpp"

namespace cpcf {

// Per-site path distance from one source; -1 marks unreachable (and
// inaccessible) sites.
class DistanceField {
 public:
  static constexpr int kUnreachable = -1;

  DistanceField(LatticeDomain domain, Site source, std::vector<int> distances)
      : domain_(domain), source_(source), distances_(std::move(distances)) {}

  const LatticeDomain& domain() const { return domain_; }
  Site source() const { return source_; }
  std::optional<int> at(Site s) const {
    const int d = distances_[domain_.index(s)];
    return d == kUnreachable ? std::nullopt : std::optional<int>(d);
  }
  const std::vector<int>& raw() const { return distances_; }

  // Grid of integers, top row first, "∞" for unreachable sites.
  std::string dump() const {
    std::ostringstream os;
    for (int y = domain_.ly(); y >= 1; --y) {
      for (int x = 1; x <= domain_.lx(); ++x) {
        const int d = distances_[domain_.index({x, y})];
        if (x > 1) os << ' ';
        if (d == kUnreachable) {
          os << "∞";
        } else {
          os << d;
        }
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  LatticeDomain domain_;
  Site source_;
  std::vector<int> distances_;
};

struct PairCounts {
  DistanceHistogram histogram;
  Count unreachable_pairs = 0;
};

namespace detail {

// Reusable BFS state on a grid padded with a blocked border, so neighbour
// lookups need no bounds checks. Neighbour order is N, E, S, W.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const ObstacleConfiguration& config)
      : lx_(config.domain().lx()), stride_(config.domain().lx() + 2) {
    const int ly = config.domain().ly();
    blocked_.assign(static_cast<std::size_t>(stride_) * static_cast<std::size_t>(ly + 2), 1);
    for (int y = 1; y <= ly; ++y) {
      for (int x = 1; x <= lx_; ++x) blocked_[padded({x, y})] = config.is_inaccessible({x, y}) ? 1 : 0;
    }
    dist_.assign(blocked_.size(), -1);
    queue_.reserve(blocked_.size());
  }

  std::size_t padded(Site s) const {
    return static_cast<std::size_t>(s.y) * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(s.x);
  }
  Site unpadded(std::size_t p) const {
    return {static_cast<int>(p % static_cast<std::size_t>(stride_)), static_cast<int>(p / static_cast<std::size_t>(stride_))};
  }

  // Runs BFS from source; visit(padded_index, distance) is called once per
  // reached site other than the source, in BFS order. Returning false from
  // visit stops the search.
  template <typename Visit>
  void run(Site source, Visit&& visit) {
    for (const std::uint32_t p : queue_) dist_[p] = -1;
    queue_.clear();
    const auto start = static_cast<std::uint32_t>(padded(source));
    dist_[start] = 0;
    queue_.push_back(start);
    const std::int64_t offsets[4] = {stride_, 1, -stride_, -1};
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::uint32_t p = queue_[head];
      const int next = dist_[p] + 1;
      for (const std::int64_t off : offsets) {
        const auto q = static_cast<std::uint32_t>(static_cast<std::int64_t>(p) + off);
        if (blocked_[q] || dist_[q] >= 0) continue;
        dist_[q] = next;
        queue_.push_back(q);
        if (!visit(q, next)) return;
      }
    }
  }

  int distance(std::size_t padded_index) const { return dist_[padded_index]; }

 private:
  int lx_;
  int stride_;
  std::vector<std::uint8_t> blocked_;
  std::vector<int> dist_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace detail

inline DistanceField bfs_distances(const ObstacleConfiguration& config, Site source) {
  if (!config.is_accessible(source)) {
    throw DomainError("BFS source (" + std::to_string(source.x) + "," + std::to_string(source.y) +
                      ") is not an accessible site");
  }
  const auto& domain = config.domain();
  detail::BfsWorkspace ws(config);
  std::vector<int> dist(static_cast<std::size_t>(domain.site_count()), DistanceField::kUnreachable);
  dist[domain.index(source)] = 0;
  ws.run(source, [&](std::size_t p, int d) {
    dist[domain.index(ws.unpadded(p))] = d;
    return true;
  });
  return DistanceField(domain, source, std::move(dist));
}

// Path-distance histogram over all unordered accessible pairs, one BFS per
// source with streaming accumulation. Sources are split round-robin across
// threads; the merged result does not depend on the thread count.
inline PairCounts oracle_pair_counts(const ObstacleConfiguration& config, unsigned threads = 1) {
  const auto& domain = config.domain();
  const std::size_t n = static_cast<std::size_t>(domain.site_count());
  std::vector<std::size_t> accessible;
  accessible.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!config.mask()[i]) accessible.push_back(i);
  }
  threads = std::max(1u, threads);

  auto work = [&](unsigned worker, PairCounts& out) {
    detail::BfsWorkspace ws(config);
    std::vector<Count> acc(static_cast<std::size_t>(domain.max_taxicab() + 1), 0);
    for (std::size_t k = worker; k < accessible.size(); k += threads) {
      const Site src = domain.site(accessible[k]);
      // Only partners later in lattice order, so each pair is seen once.
      const std::size_t src_padded = ws.padded(src);
      Count reached = 0;
      ws.run(src, [&](std::size_t p, int d) {
        if (p > src_padded) {
          if (static_cast<std::size_t>(d) > acc.size()) acc.resize(static_cast<std::size_t>(d), 0);
          ++acc[static_cast<std::size_t>(d - 1)];
          ++reached;
        }
        return true;
      });
      out.unreachable_pairs += static_cast<Count>(accessible.size() - 1 - k) - reached;
    }
    out.histogram = DistanceHistogram(std::move(acc));
  };

  std::vector<PairCounts> partial(threads);
  if (threads == 1) {
    work(0, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, std::ref(partial[t]));
    for (auto& th : pool) th.join();
  }
  PairCounts total;
  for (const auto& p : partial) {
    total.histogram += p.histogram;
    total.unreachable_pairs += p.unreachable_pairs;
  }
  total.histogram = total.histogram.trimmed();
  return total;
}

// Path-distance histogram over unordered agent pairs. Each BFS stops once
// every later agent has been reached.
inline PairCounts occupied_pair_counts(const ObstacleConfiguration& config, const OccupancyState& occupancy) {
  const auto& agents = occupancy.agents();
  PairCounts out;
  if (agents.size() < 2) return out;
  detail::BfsWorkspace ws(config);
  std::vector<std::int32_t> agent_at(static_cast<std::size_t>(config.domain().lx() + 2) *
                                         static_cast<std::size_t>(config.domain().ly() + 2),
                                     -1);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!config.is_accessible(agents[i])) throw DomainError("agent on an inaccessible site");
    agent_at[ws.padded(agents[i])] = static_cast<std::int32_t>(i);
  }
  std::vector<Count> acc(static_cast<std::size_t>(config.domain().max_taxicab() + 1), 0);
  for (std::size_t i = 0; i + 1 < agents.size(); ++i) {
    Count remaining = static_cast<Count>(agents.size() - 1 - i);
    ws.run(agents[i], [&](std::size_t p, int d) {
      if (agent_at[p] > static_cast<std::int32_t>(i)) {
        if (static_cast<std::size_t>(d) > acc.size()) acc.resize(static_cast<std::size_t>(d), 0);
        ++acc[static_cast<std::size_t>(d - 1)];
        return --remaining > 0;
      }
      return true;
    });
    out.unreachable_pairs += remaining;
  }
  out.histogram = DistanceHistogram(std::move(acc)).trimmed();
  return out;
}

// C(m) with plain taxicab distances, obstacles ignored.
inline DistanceHistogram taxicab_pair_counts(const LatticeDomain& domain, const OccupancyState& occupancy) {
  const auto& agents = occupancy.agents();
  std::vector<Count> acc(static_cast<std::size_t>(std::max(domain.max_taxicab(), 0)), 0);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (std::size_t j = i + 1; j < agents.size(); ++j) ++acc[static_cast<std::size_t>(taxicab(agents[i], agents[j]) - 1)];
  }
  return DistanceHistogram(std::move(acc)).trimmed();
}

}  // namespace cpcf
