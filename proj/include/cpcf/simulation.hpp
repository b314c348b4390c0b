#pragma once

// Birth-movement exclusion process on the obstacle lattice.
//
// One time step:
//   birth    - z draws with replacement from the z agents present at the
//              start of the step; each drawn agent, with probability p_b,
//              places a daughter on one of its four neighbours.
//   movement - z' draws with replacement from the post-birth population;
//              each drawn agent, with probability p_m, moves to one of its
//              four neighbours.
// An attempt succeeds only if the target is inside the domain, accessible
// and empty; failed attempts are dropped.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cpcf/lattice.hpp"

namespace cpcf {

// mt19937_64 with portable bounded draws (std distributions are not
// reproducible across standard libraries). Realization r of a run seeded
// with s uses the stream seeded by splitmix64(s + r).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  static Rng for_realization(std::uint64_t seed, std::uint64_t realization) {
    return Rng(splitmix64(seed + realization));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n), Lemire's multiply-and-reject.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) throw DomainError("uniform_index over an empty range");
    unsigned __int128 product = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<std::uint64_t>(product);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next()) * n;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

struct SimulationParams {
  double p_birth = 0.1;
  double p_move = 0.1;
  int t_end = 70;
  double initial_density = 0.01;
  std::uint64_t seed = 0;
  bool scale_time = false;
  // false: the movement phase draws from the agents present before births.
  bool movement_uses_post_birth = true;
  NeighborConvention neighbor_convention = NeighborConvention::RespectBoundary;
};

// Round half up.
inline int effective_final_time(const ObstacleConfiguration& config, const SimulationParams& params) {
  if (!params.scale_time) return params.t_end;
  const double ratio = accessible_neighbor_ratio(config, params.neighbor_convention).value();
  return static_cast<int>(std::floor(static_cast<double>(params.t_end) * ratio + 0.5));
}

// z = round(density * n_a) distinct accessible sites, uniformly without
// replacement (partial Fisher-Yates over the accessible sites in lattice
// order).
inline OccupancyState seed_occupancy(const ObstacleConfiguration& config, double density, Rng& rng) {
  if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must lie in [0, 1]");
  const auto& domain = config.domain();
  std::vector<Site> sites;
  sites.reserve(static_cast<std::size_t>(config.n_a()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(domain.site_count()); ++i) {
    if (!config.mask()[i]) sites.push_back(domain.site(i));
  }
  const auto z = static_cast<std::size_t>(std::floor(density * static_cast<double>(sites.size()) + 0.5));
  for (std::size_t k = 0; k < z; ++k) {
    const auto j = k + static_cast<std::size_t>(rng.uniform_index(sites.size() - k));
    std::swap(sites[k], sites[j]);
  }
  sites.resize(z);
  return OccupancyState(config, std::move(sites));
}

// Mutable agent list plus occupancy grid, used between steps. Agent order
// is part of the state: draws index into it.
class AgentLattice {
 public:
  AgentLattice(const ObstacleConfiguration& config, const OccupancyState& occupancy)
      : config_(&config), occupied_(static_cast<std::size_t>(config.domain().site_count()), 0),
        agents_(occupancy.agents()) {
    for (const Site s : agents_) occupied_[config.domain().index(s)] = 1;
  }

  const std::vector<Site>& agents() const { return agents_; }
  OccupancyState snapshot() const { return OccupancyState(*config_, agents_); }

  void step(const SimulationParams& params, Rng& rng) {
    const std::size_t z = agents_.size();
    for (std::size_t k = 0; k < z; ++k) {
      const auto i = static_cast<std::size_t>(rng.uniform_index(z));
      if (!rng.bernoulli(params.p_birth)) continue;
      const Site target = neighbour(agents_[i], rng);
      if (free(target)) {
        occupied_[config_->domain().index(target)] = 1;
        agents_.push_back(target);
      }
    }
    const std::size_t movers = params.movement_uses_post_birth ? agents_.size() : z;
    for (std::size_t k = 0; k < movers; ++k) {
      const auto i = static_cast<std::size_t>(rng.uniform_index(movers));
      if (!rng.bernoulli(params.p_move)) continue;
      const Site target = neighbour(agents_[i], rng);
      if (free(target)) {
        occupied_[config_->domain().index(agents_[i])] = 0;
        occupied_[config_->domain().index(target)] = 1;
        agents_[i] = target;
      }
    }
  }

 private:
  // N, E, S, W.
  static Site neighbour(Site s, Rng& rng) {
    switch (rng.uniform_index(4)) {
      case 0:
        return {s.x, s.y + 1};
      case 1:
        return {s.x + 1, s.y};
      case 2:
        return {s.x, s.y - 1};
      default:
        return {s.x - 1, s.y};
    }
  }
  bool free(Site s) const {
    return config_->is_accessible(s) && !occupied_[config_->domain().index(s)];
  }

  const ObstacleConfiguration* config_;
  std::vector<std::uint8_t> occupied_;
  std::vector<Site> agents_;
};

inline OccupancyState simulate_step(const ObstacleConfiguration& config, const OccupancyState& occupancy,
                                    const SimulationParams& params, Rng& rng) {
  AgentLattice lattice(config, occupancy);
  lattice.step(params, rng);
  return lattice.snapshot();
}

struct SimulationResult {
  OccupancyState initial;
  OccupancyState final_state;
  int steps = 0;
  std::vector<std::pair<int, OccupancyState>> snapshots;  // (step, state)
};

// Seeds with the realization's stream, then runs the effective number of
// steps. snapshot_every = K > 0 records the state after every K-th step.
inline SimulationResult run_simulation(const ObstacleConfiguration& config, const SimulationParams& params,
                                       std::uint64_t realization = 0, int snapshot_every = 0) {
  if (!(params.p_birth >= 0.0 && params.p_birth <= 1.0 && params.p_move >= 0.0 && params.p_move <= 1.0)) {
    throw DomainError("event probabilities must lie in [0, 1]");
  }
  if (params.t_end < 0) throw DomainError("final time must be non-negative");
  Rng rng = Rng::for_realization(params.seed, realization);
  SimulationResult out;
  out.initial = seed_occupancy(config, params.initial_density, rng);
  out.steps = effective_final_time(config, params);
  AgentLattice lattice(config, out.initial);
  for (int t = 1; t <= out.steps; ++t) {
    lattice.step(params, rng);
    if (snapshot_every > 0 && t % snapshot_every == 0) out.snapshots.emplace_back(t, lattice.snapshot());
  }
  out.final_state = lattice.snapshot();
  return out;
}

}  // namespace cpcf
