#include <gtest/gtest.h>

#include <cmath>

#include "dray/invariance.hpp"
#include "oracles.hpp"
#include "runner.hpp"

using namespace dray;

namespace {

const AbelianGroup kZ2 = AbelianGroup::lattice(2);

std::vector<GroupElement> coset_reps() { return runner::coset_translates(); }

}  // namespace

TEST(ZTest, HandComputedValues) {
  // p_a = 0.6, p_b = 0.5, pooled 0.55 over 100 + 100.
  const double expected = (0.6 - 0.5) / std::sqrt(0.55 * 0.45 * (2.0 / 100));
  EXPECT_NEAR(two_proportion_z(60, 100, 50, 100), expected, 1e-12);
  EXPECT_DOUBLE_EQ(two_proportion_z(0, 50, 0, 70), 0.0);
  EXPECT_DOUBLE_EQ(two_proportion_z(50, 50, 70, 70), 0.0);
  EXPECT_DOUBLE_EQ(two_proportion_z(30, 100, 30, 100), 0.0);
}

TEST(ZTest, BonferroniQuantileMatchesBisection) {
  EXPECT_NEAR(bonferroni_critical_z(0.01, 8), oracle::normal_upper_quantile(0.01 / 16), 1e-6);
  EXPECT_NEAR(bonferroni_critical_z(0.05, 1), 1.959964, 1e-5);
  EXPECT_GT(bonferroni_critical_z(0.01, 8), bonferroni_critical_z(0.01, 4));
}

TEST(Binomial, UpperTailMatchesSummation) {
  EXPECT_NEAR(binomial_upper_tail(10, 0.5, 8), 56.0 / 1024.0, 1e-12);
  EXPECT_DOUBLE_EQ(binomial_upper_tail(10, 0.3, 0), 1.0);
  for (int k : {1, 2, 3, 5}) {
    EXPECT_NEAR(binomial_upper_tail(100, 0.01, static_cast<std::size_t>(k)), oracle::binomial_tail(100, 0.01, k),
                1e-12);
  }
}

TEST(Campaign, PeriodicDeterministicSamplerGivesEqualFrequencies) {
  // Every edge with an even lower-left x coordinate: invariant under (2,0)
  // but not under (1,0).
  const auto box = build_grid_window(2, 8, 0);
  EdgeSet periodic;
  for (const auto& [a, b] : box.graph().edges()) {
    if (a.free[0] % 2 == 0) periodic.insert(a, b);
  }
  const EdgeSampler fixed = [periodic](Rng&) { return periodic; };
  const auto trusted = TrustedRegion::everything(box.graph());
  const auto ev = edge_event(kZ2, {0, 0}, {0, 1});
  const auto even = invariance_test(fixed, ev, {{0, 0}, {2, 0}, {2, 2}, {-2, 4}}, kZ2, trusted, 50, 0.01, 1);
  for (double f : even.frequency) EXPECT_DOUBLE_EQ(f, 1.0);
  EXPECT_TRUE(even.invariant_not_rejected());
  const auto odd = invariance_test(fixed, ev, {{0, 0}, {1, 0}}, kZ2, trusted, 50, 0.01, 1);
  EXPECT_DOUBLE_EQ(odd.frequency[1], 0.0);
  EXPECT_EQ(odd.rejections(), 1u);
}

TEST(Campaign, ReproducibleFromSeed) {
  const auto box = build_grid_window(2, 6, 1);
  const auto sampler = bernoulli_bond_sampler(box.graph(), 0.5);
  const auto trusted = TrustedRegion::everything(box.graph());
  const auto ev = edge_event(kZ2, {0, 0}, {1, 0});
  const auto a = invariance_test(sampler, ev, coset_reps(), kZ2, trusted, 300, 0.01, 9);
  const auto b = invariance_test(sampler, ev, coset_reps(), kZ2, trusted, 300, 0.01, 9);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.z, b.z);
  const auto c = invariance_test(sampler, ev, coset_reps(), kZ2, trusted, 300, 0.01, 10);
  EXPECT_NE(a.hits, c.hits);
  for (double f : a.frequency) {
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(Campaign, RejectsBadArguments) {
  const auto box = build_grid_window(2, 3, 1);
  const auto sampler = bernoulli_bond_sampler(box.graph(), 0.5);
  const auto trusted = TrustedRegion::interior_of(box);  // [-1,1]^2
  const auto ev = edge_event(kZ2, {0, 0}, {1, 0});
  EXPECT_THROW(invariance_test(sampler, ev, {{0, 0}, {1, 0}}, kZ2, trusted, 10, 0.01, 1), StructureError);
  EXPECT_THROW(invariance_test(sampler, ev, {}, kZ2, trusted, 10, 0.01, 1), ConfigError);
  EXPECT_THROW(invariance_test(sampler, ev, {{0, 0}}, kZ2, trusted, 0, 0.01, 1), ConfigError);
  EXPECT_THROW(invariance_test(sampler, ev, {{0, 0}}, kZ2, trusted, 10, 1.5, 1), ConfigError);
}

TEST(Campaign, UnaveragedTilingIsDetected) {
  const auto doc = runner::invariance_document("tiling-raw", 14, 6, 400, 0.01, 5);
  EXPECT_GT(doc["rejections"].get<std::size_t>(), 0u);
}

TEST(Calibration, InvariantLawRejectsAtNominalRate) {
  const auto doc = runner::calibration_document(20, 400, 0.01, 3);
  const auto& r = doc["report"];
  EXPECT_EQ(r["campaigns"].get<std::size_t>(), 20u);
  EXPECT_TRUE(r["pass"].get<bool>());
}

TEST(Calibration, ReportFlagsExcessRejections) {
  CalibrationReport r;
  r.campaigns = 100;
  r.alpha = 0.01;
  r.rejected = 8;
  r.upper_tail = binomial_upper_tail(100, 0.01, 8);
  EXPECT_FALSE(r.pass());
  r.rejected = 2;
  r.upper_tail = binomial_upper_tail(100, 0.01, 2);
  EXPECT_TRUE(r.pass());
}
