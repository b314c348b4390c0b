#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace cpcf;

TEST(Expected, EightyAgentsOnFourHundredSites) {
  DistanceHistogram d(std::vector<Count>{760});
  const auto e = expected_counts(d, 80, 400);
  EXPECT_NEAR(e[0], 80.0 * 79.0 / (400.0 * 399.0) * 760.0, 1e-12);
  EXPECT_NEAR(e[0], 30.09, 0.01);
}

TEST(Expected, ZeroOrOneAgent) {
  DistanceHistogram d(std::vector<Count>{10, 5});
  for (Count z : {0, 1}) {
    for (double v : expected_counts(d, z, 20)) EXPECT_EQ(v, 0.0);
  }
  EXPECT_THROW(expected_counts(d, 1, 1), DomainError);
  EXPECT_THROW(expected_counts(d, 30, 20), DomainError);
}

TEST(Pcf, UnitWhenCountsMatchExpectation) {
  DistanceHistogram c(std::vector<Count>{4, 6, 2});
  const auto rows = pcf_from_counts(c, {4.0, 6.0, 2.0});
  for (const auto& r : rows) EXPECT_DOUBLE_EQ(*r.P, 1.0);
}

TEST(Pcf, UndefinedWhereExpectationIsZero) {
  DistanceHistogram c(std::vector<Count>{1, 0, 0});
  const auto rows = pcf_from_counts(c, {2.0, 0.0});
  EXPECT_DOUBLE_EQ(*rows[0].P, 0.5);
  EXPECT_FALSE(rows[1].P);
  EXPECT_FALSE(rows[2].P);
}

TEST(Pcf, StandardEqualsCorrectedWithoutObstacles) {
  const auto cfg = layouts::empty_domain(15);
  Rng rng(3);
  const auto occ = seed_occupancy(cfg, 0.25, rng);
  const auto s = corrected_pcf(cfg, occ, PcfMode::Standard);
  const auto e = corrected_pcf(cfg, occ, PcfMode::CorrectedExact);
  ASSERT_EQ(s.rows.size(), e.rows.size());
  for (std::size_t k = 0; k < s.rows.size(); ++k) {
    EXPECT_EQ(s.rows[k].P.has_value(), e.rows[k].P.has_value());
    if (s.rows[k].P) EXPECT_DOUBLE_EQ(*s.rows[k].P, *e.rows[k].P);
  }
}

TEST(Pcf, OracleModeEqualsExactMode) {
  for (const auto& f : layouts::verification_fixtures()) {
    Rng rng(17);
    const auto occ = seed_occupancy(f.config, 0.2, rng);
    const auto e = corrected_pcf(f.config, occ, PcfMode::CorrectedExact);
    const auto o = corrected_pcf(f.config, occ, PcfMode::CorrectedOracle);
    ASSERT_EQ(e.rows.size(), o.rows.size()) << f.name;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      EXPECT_EQ(e.rows[k].D, o.rows[k].D);
      EXPECT_EQ(e.rows[k].P, o.rows[k].P);
    }
  }
}

TEST(Pcf, ExactModeOnInadmissibleConfigurationThrows) {
  const auto cfg = ObstacleConfiguration::from_clusters(LatticeDomain(6, 6), {{1, 1, 2, 2}});
  const OccupancyState occ(cfg, {{4, 4}, {5, 5}});
  EXPECT_THROW(corrected_pcf(cfg, occ, PcfMode::CorrectedExact), ModeError);
  EXPECT_NO_THROW(corrected_pcf(cfg, occ, PcfMode::CorrectedApprox));
  EXPECT_NO_THROW(corrected_pcf(cfg, occ, PcfMode::CorrectedOracle));
}

TEST(Pcf, FullOccupancyIsOne) {
  const auto cfg = layouts::twenty_five_clusters();
  Rng rng(1);
  const auto r = corrected_pcf(cfg, seed_occupancy(cfg, 1.0, rng), PcfMode::CorrectedExact);
  for (const auto& row : r.rows) {
    if (row.P) EXPECT_NEAR(*row.P, 1.0, 1e-12);
  }
}

TEST(Pcf, PrefactorOption) {
  const auto cfg = layouts::lattice_576();
  const auto all = normalization(cfg, PcfMode::Standard);
  PcfOptions o;
  o.standard_prefactor = StandardPrefactor::AccessibleSites;
  const auto acc = normalization(cfg, PcfMode::Standard, o);
  EXPECT_EQ(all.sites, 2500);
  EXPECT_EQ(acc.sites, 1924);
  EXPECT_EQ(all.D, acc.D);
}

TEST(Pcf, ParseMode) {
  EXPECT_EQ(parse_pcf_mode("standard"), PcfMode::Standard);
  EXPECT_EQ(parse_pcf_mode("exact"), PcfMode::CorrectedExact);
  EXPECT_EQ(parse_pcf_mode("approx"), PcfMode::CorrectedApprox);
  EXPECT_EQ(parse_pcf_mode("oracle"), PcfMode::CorrectedOracle);
  EXPECT_THROW(parse_pcf_mode("nope"), ParseError);
}

TEST(Ensemble, SingleRealizationIsIdentity) {
  const auto cfg = layouts::single_large_cluster();
  Rng rng(4);
  const auto r = corrected_pcf(cfg, seed_occupancy(cfg, 0.1, rng), PcfMode::CorrectedExact);
  const auto e = ensemble_pcf({r});
  ASSERT_EQ(e.rows.size(), r.rows.size());
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    EXPECT_EQ(e.rows[k].P, r.rows[k].P);
    EXPECT_FALSE(e.rows[k].P_std);
  }
}

TEST(Ensemble, MeanAndSpread) {
  PcfResult a, b;
  a.rows = pcf_from_counts(DistanceHistogram(std::vector<Count>{2, 1}), {2.0, 0.0});
  b.rows = pcf_from_counts(DistanceHistogram(std::vector<Count>{4, 1, 3}), {2.0, 1.0, 1.0});
  const auto e = ensemble_pcf({a, b});
  ASSERT_EQ(e.rows.size(), 3u);
  EXPECT_DOUBLE_EQ(*e.rows[0].P, 1.5);
  EXPECT_NEAR(*e.rows[0].P_std, std::sqrt(0.5), 1e-12);
  EXPECT_DOUBLE_EQ(*e.rows[1].P, 1.0);  // only b defines it
  EXPECT_EQ(e.rows[1].participation, 1);
  EXPECT_DOUBLE_EQ(*e.rows[2].P, 3.0);
  EXPECT_EQ(e.ensemble_size, 2);
}

TEST(Ensemble, Errors) {
  EXPECT_THROW(ensemble_pcf({}), DomainError);
  PcfResult a, b;
  b.mode = PcfMode::Standard;
  EXPECT_THROW(ensemble_pcf({a, b}), DomainError);
}

TEST(Io, CsvMarksUndefinedBins) {
  PcfResult r;
  r.rows = pcf_from_counts(DistanceHistogram(std::vector<Count>{3, 0}), {2.0, 0.0});
  std::ostringstream os;
  write_pcf_csv(os, r);
  EXPECT_EQ(os.str(), "m,C,D,E,P,Pstd\n1,3,0,2,1.5,\n2,0,0,0,,\n");
  const auto meta = pcf_metadata(r, {7});
  EXPECT_EQ(meta["undefined_bins"], 1);
  EXPECT_EQ(meta["mode"], "exact");
}

TEST(Io, JsonRoundTrip) {
  const auto cfg = layouts::verification_fixtures()[3].config;
  Rng rng(2);
  const auto occ = seed_occupancy(cfg, 0.05, rng);
  const auto back = parse_input(config_to_json(cfg, occ));
  EXPECT_EQ(back.config.mask(), cfg.mask());
  EXPECT_EQ(back.config.clusters(), cfg.clusters());
  EXPECT_EQ(back.occupancy, occ);
}

TEST(Io, JsonErrors) {
  EXPECT_THROW(parse_input("{\"lx\": 4}"), ParseError);
  EXPECT_THROW(parse_input("{\"lx\": 4, \"ly\": 4, \"clusters\": [{\"x0\": 4, \"y0\": 4, \"cx\": 2, \"cy\": 1}]}"),
               ParseError);
  EXPECT_THROW(parse_input("{\"lx\": 4, \"ly\": 4, \"agents\": [[1]]}"), ParseError);
  EXPECT_THROW(parse_input("{not json"), ParseError);
  EXPECT_EQ(parse_input("..\n..\n").config.n_a(), 4);
  EXPECT_THROW(parse_input("  ..\n..\n"), ParseError);
}
