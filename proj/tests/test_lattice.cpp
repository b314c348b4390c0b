#include <gtest/gtest.h>

#include "support.hpp"

using namespace cpcf;

TEST(Grid, ObstacleFreeTwoByTwo) {
  const auto g = parse_grid("..\n..");
  EXPECT_EQ(g.config.domain().lx(), 2);
  EXPECT_EQ(g.config.domain().ly(), 2);
  EXPECT_EQ(g.config.n_h(), 0);
  EXPECT_EQ(g.occupancy.z(), 0);
}

TEST(Grid, TopLineIsHighestRow) {
  const auto g = parse_grid(".#\nA.\n");
  ASSERT_EQ(g.config.clusters().size(), 1u);
  EXPECT_EQ(g.config.clusters()[0], (ObstacleCluster{2, 2, 1, 1}));
  ASSERT_EQ(g.occupancy.z(), 1);
  EXPECT_EQ(g.occupancy.agents()[0], (Site{1, 1}));
}

TEST(Grid, EightyAgentsOnTwentySquare) {
  std::string text;
  int placed = 0;
  for (int r = 0; r < 20; ++r) {
    for (int c = 0; c < 20; ++c) text += (placed < 80 && (r * 20 + c) % 5 == 0) ? (++placed, 'A') : '.';
    text += '\n';
  }
  const auto g = parse_grid(text);
  EXPECT_EQ(g.occupancy.z(), 80);
  EXPECT_EQ(g.config.n_a(), 400);
}

TEST(Grid, Errors) {
  EXPECT_THROW(parse_grid("...\n..\n"), ParseError);
  EXPECT_THROW(parse_grid("..x\n...\n"), ParseError);
  EXPECT_THROW(parse_grid(""), ParseError);
}

TEST(Grid, CrlfAndTrailingBlankLines) {
  const auto g = parse_grid("..\r\n.#\r\n\n\n");
  EXPECT_EQ(g.config.domain().ly(), 2);
  EXPECT_EQ(g.config.n_h(), 1);
}

TEST(Grid, RoundTrip) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(s);
    const auto cfg = layouts::random_sites(rng, 3 + static_cast<int>(s % 9), 4 + static_cast<int>(s % 5),
                                           static_cast<int>(s % 6));
    auto occ = seed_occupancy(cfg, 0.3, rng);
    const auto text = render_grid(cfg, occ);
    const auto back = parse_grid(text);
    EXPECT_EQ(back.config.mask(), cfg.mask());
    EXPECT_EQ(back.occupancy, occ);
    EXPECT_EQ(render_grid(back.config, back.occupancy), text);
  }
}

TEST(Clusters, LShapeIsNotRectangular) {
  LatticeDomain d(6, 6);
  EXPECT_THROW(extract_clusters(d, ObstacleConfiguration::from_sites(d, {{2, 2}, {3, 2}, {2, 3}}).mask()),
               NonRectangularObstacle);
  const auto cfg = ObstacleConfiguration::from_sites(d, {{2, 2}, {3, 2}, {2, 3}});
  EXPECT_FALSE(cfg.rectangular());
  EXPECT_EQ(cfg.admissibility(), Admissibility::ApproximateOnly);
}

TEST(Clusters, BlockExtractsAsOne) {
  const auto g = parse_grid(".....\n.###.\n.###.\n.###.\n.....\n");
  ASSERT_EQ(g.config.clusters().size(), 1u);
  EXPECT_EQ(g.config.clusters()[0], (ObstacleCluster{2, 2, 3, 3}));
  EXPECT_EQ(g.config.admissibility(), Admissibility::Exact);
}

TEST(Clusters, DiagonalContactKeepsTwoClusters) {
  const auto g = parse_grid("....\n.#..\n..#.\n....\n");
  EXPECT_EQ(g.config.clusters().size(), 2u);
  EXPECT_TRUE(g.config.rectangular());
}

TEST(Clusters, FromClustersRejectsBadInput) {
  LatticeDomain d(10, 10);
  EXPECT_THROW(ObstacleConfiguration::from_clusters(d, {{9, 9, 3, 1}}), DomainError);
  EXPECT_THROW(ObstacleConfiguration::from_clusters(d, {{2, 2, 2, 2}, {4, 2, 1, 1}}), DomainError);
  EXPECT_THROW(ObstacleConfiguration::from_clusters(d, {{2, 2, 2, 2}, {3, 3, 1, 1}}), DomainError);
  EXPECT_NO_THROW(ObstacleConfiguration::from_clusters(d, {{2, 2, 1, 1}, {3, 3, 1, 1}}));
}

TEST(Admissibility, SingleInteriorSite) {
  EXPECT_EQ(ObstacleConfiguration::from_clusters(LatticeDomain(5, 5), {{3, 3, 1, 1}}).admissibility(),
            Admissibility::Exact);
}

TEST(Admissibility, TwentyFiveSingleSites) {
  std::vector<ObstacleCluster> cl;
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 5; ++i) cl.push_back({2 + 2 * i, 2 + 2 * j, 1, 1});
  EXPECT_EQ(ObstacleConfiguration::from_clusters(LatticeDomain(11, 11), cl).admissibility(), Admissibility::Exact);
}

TEST(Admissibility, NoEmptyColumnBetweenClusters) {
  // Diagonal neighbours: the column right of the first is occupied by the second.
  const auto cfg = ObstacleConfiguration::from_clusters(LatticeDomain(8, 8), {{3, 3, 1, 1}, {4, 4, 1, 1}});
  EXPECT_EQ(cfg.admissibility(), Admissibility::ApproximateOnly);
}

TEST(Admissibility, StaggeredBlocksShareNoLine) {
  // Overlapping y-ranges that differ: the row above the first is hit by the second.
  const auto cfg = ObstacleConfiguration::from_clusters(LatticeDomain(12, 12), {{2, 3, 2, 2}, {6, 4, 2, 2}});
  EXPECT_EQ(cfg.admissibility(), Admissibility::ApproximateOnly);
}

TEST(Admissibility, TouchingBoundary) {
  EXPECT_EQ(ObstacleConfiguration::from_clusters(LatticeDomain(6, 6), {{1, 3, 1, 1}}).admissibility(),
            Admissibility::ApproximateOnly);
  EXPECT_EQ(ObstacleConfiguration::from_clusters(LatticeDomain(6, 6), {{3, 4, 2, 3}}).admissibility(),
            Admissibility::ApproximateOnly);
}

TEST(Admissibility, ReferenceLayouts) {
  for (const auto& l : layouts::reference_layouts()) EXPECT_EQ(l.config.admissibility(), Admissibility::Exact) << l.name;
  for (const auto& l : layouts::verification_fixtures()) EXPECT_EQ(l.config.admissibility(), Admissibility::Exact) << l.name;
}

TEST(Occupancy, Validation) {
  const auto cfg = ObstacleConfiguration::from_clusters(LatticeDomain(5, 5), {{3, 3, 1, 1}});
  EXPECT_THROW(OccupancyState(cfg, {{3, 3}}), DomainError);
  EXPECT_THROW(OccupancyState(cfg, {{1, 1}, {1, 1}}), DomainError);
  EXPECT_THROW(OccupancyState(cfg, {{0, 1}}), DomainError);
  EXPECT_EQ(OccupancyState(cfg, {{2, 1}, {1, 1}}).agents().front(), (Site{1, 1}));
}

TEST(NeighborRatio, ObstacleFreeIsOne) {
  const auto r = accessible_neighbor_ratio(layouts::empty_domain(7));
  EXPECT_DOUBLE_EQ(r.value(), 1.0);
}

TEST(NeighborRatio, CentreBlockOfThreeByThree) {
  const auto cfg = ObstacleConfiguration::from_sites(LatticeDomain(3, 3), {{2, 2}});
  const auto b = accessible_neighbor_ratio(cfg, NeighborConvention::RespectBoundary);
  EXPECT_EQ(b.possible, 20);
  EXPECT_EQ(b.accessible, 16);
  const auto f = accessible_neighbor_ratio(cfg, NeighborConvention::FourPerSite);
  EXPECT_EQ(f.possible, 32);
  const auto w = accessible_neighbor_ratio(cfg, NeighborConvention::WholeLattice);
  EXPECT_EQ(w.possible, 24);
  EXPECT_EQ(w.accessible, 16);
  EXPECT_DOUBLE_EQ(w.value(), 1.5);
}

TEST(NeighborRatio, IsolatedSitesAreReported) {
  const auto g = parse_grid(".#.\n#.#\n.#.\n");
  EXPECT_EQ(accessible_neighbor_ratio(g.config).isolated_sites, 5);
}

TEST(NeighborRatio, FiveSeventySixLayout) {
  const auto cfg = layouts::lattice_576();
  EXPECT_EQ(cfg.n_a(), 1924);
  const auto f = accessible_neighbor_ratio(cfg, NeighborConvention::FourPerSite);
  EXPECT_EQ(f.possible, 7696);
  EXPECT_EQ(f.accessible, 5192);
  EXPECT_NEAR(f.value(), 1.48, 0.005);
}
