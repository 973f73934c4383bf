#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "catentropy/fock/states.hpp"
#include "catentropy/purity.hpp"
#include "test_support.hpp"

namespace ce = catentropy;
namespace fk = catentropy::fock;

namespace {

constexpr double kCatGapUnit = 0.48185209242521708;     // a = b = 1/2, alpha = (1, 1)
constexpr double kCatGapOneTwo = 0.49084212531862236;   // a = b = 1/2, alpha = (1, 2)
constexpr double kThermalGap = 0.24271960029011358;     // N = 1, alpha = (1, 1)
constexpr double kThermalQ = 0.30326532985631671;       // e^{-1/2} / 2
constexpr double kMeanPhotonT1 = 0.58197670686932642;   // 1 / (e - 1)

}  // namespace

TEST(ThermalMeanPhoton, Examples) {
  EXPECT_EQ(ce::thermal_mean_photon(1e-3), 0.0);
  EXPECT_NEAR(ce::thermal_mean_photon(1.0 / std::numbers::ln2), 1.0, 1e-15);
  EXPECT_NEAR(ce::thermal_mean_photon(1.0), kMeanPhotonT1, 2e-16);
  EXPECT_THROW(ce::thermal_mean_photon(0.0), ce::invalid_temperature);
  EXPECT_THROW(ce::thermal_mean_photon(-1.0), ce::invalid_temperature);
}

TEST(ThermalMeanPhoton, MatchesGeometricSum) {
  for (double t : {0.3, 1.0, 2.5}) {
    const double x = std::exp(-1.0 / t);
    double z = 0.0, nz = 0.0, w = 1.0;
    for (int n = 0; n < 400; ++n, w *= x) {
      z += w;
      nz += n * w;
    }
    EXPECT_NEAR(ce::thermal_mean_photon(t), nz / z, 1e-13);
  }
}

TEST(ThermalOverlap, Examples) {
  EXPECT_EQ(ce::thermal_coherent_overlap(0.0, 0.0), 1.0);
  EXPECT_NEAR(ce::thermal_coherent_overlap(1.0, 1.0), kThermalQ, 1e-16);
  EXPECT_NEAR(ce::thermal_coherent_overlap(2.0, 0.0), std::exp(-4.0), 1e-16);
}

TEST(ThermalOverlap, MatchesFockExpectation) {
  const double n = 0.7;
  const ce::amplitude alpha{0.6, -0.8};
  const auto v = fk::coherent_fock(alpha, 64);
  const auto rho = fk::thermal_fock(n, 64);
  double expectation = 0.0;
  for (std::size_t k = 0; k < 64; ++k) expectation += std::norm(v.amplitudes[k]) * rho(k, k).real();
  EXPECT_NEAR(expectation, ce::thermal_coherent_overlap(alpha, n), 1e-12);
}

TEST(CatPurity, FrozenGaps) {
  EXPECT_NEAR(ce::purity_gap_cat({0.5, 0.5, {1.0, 0.0}, {1.0, 0.0}}), kCatGapUnit, 1e-15);
  EXPECT_NEAR(ce::purity_gap_cat({0.5, 0.5, {1.0, 0.0}, {2.0, 0.0}}), kCatGapOneTwo, 1e-15);
  EXPECT_EQ(ce::purity_gap_cat({0.5, 0.5, {0.0, 0.0}, {2.0, 0.0}}), 0.0);
  EXPECT_EQ(ce::purity_gap_cat({1.0, 0.0, {1.0, 0.0}, {2.0, 0.0}}), 0.0);
}

TEST(CatPurity, TripleAtUnitAmplitudes) {
  const auto t = ce::purity_triple_cat({0.5, 0.5, {1.0, 0.0}, {1.0, 0.0}});
  EXPECT_NEAR(t.mu12, 0.5 + 0.5 * std::exp(-8.0), 1e-16);
  EXPECT_NEAR(t.mu1, 0.5 + 0.5 * std::exp(-4.0), 1e-16);
  EXPECT_NEAR(t.gap(), kCatGapUnit, 1e-15);
}

TEST(CatPurity, RejectsBadWeights) {
  EXPECT_THROW(ce::purity_gap_cat({0.7, 0.7, {1.0, 0.0}, {1.0, 0.0}}), ce::weight_violation);
  EXPECT_THROW(ce::purity_gap_cat({1.5, -0.5, {1.0, 0.0}, {1.0, 0.0}}), ce::weight_violation);
}

TEST(ThermalPurity, FrozenGapAndTriple) {
  const ce::thermal_mixture spec{{1.0, 0.0}, {1.0, 0.0}, 1.0};
  EXPECT_NEAR(ce::purity_gap_thermal(spec), kThermalGap, 1e-16);
  const auto t = ce::purity_triple_thermal(spec);
  EXPECT_NEAR(t.gap(), kThermalGap, 1e-15);
  EXPECT_NEAR(t.mu12, 0.25 * (2.0 / 3.0 + 2.0 * kThermalQ * kThermalQ), 1e-16);
}

TEST(ThermalPurity, VacuumAmplitudeGivesOneTwelfthPattern) {
  // N = 1, alpha = 0: q = 1/2 and Tr rho_T^2 = 1/3, so mu1 = (1 + 1 + 1/3) / 4 = 7/12.
  const auto t = ce::purity_triple_thermal({{0.0, 0.0}, {0.0, 0.0}, 1.0});
  EXPECT_NEAR(t.mu1, 7.0 / 12.0, 1e-15);
  EXPECT_NEAR(t.gap(), 0.125, 1e-15);
}

TEST(ThermalPurity, RejectsNegativeOccupation) {
  EXPECT_THROW(ce::purity_gap_thermal({{1.0, 0.0}, {1.0, 0.0}, -0.1}), std::invalid_argument);
}

TEST(PurityProperty, TripleIdentityAndNonnegativity) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double a = unit(rng);
    const ce::cat_separable cat{a, 1.0 - a, ce::testing::random_amplitude(rng, 2.5),
                                ce::testing::random_amplitude(rng, 2.5)};
    const double gap = ce::purity_gap_cat(cat);
    EXPECT_GE(gap, 0.0);
    EXPECT_NEAR(ce::purity_triple_cat(cat).gap(), gap, 1e-12);

    const ce::thermal_mixture th{ce::testing::random_amplitude(rng, 2.5),
                                 ce::testing::random_amplitude(rng, 2.5), 3.0 * unit(rng)};
    const double tgap = ce::purity_gap_thermal(th);
    EXPECT_GE(tgap, 0.0);
    EXPECT_NEAR(ce::purity_triple_thermal(th).gap(), tgap, 1e-12);
  }
}

TEST(PurityProperty, CatGapMonotoneInEachAmplitude) {
  double previous = -1.0;
  for (int k = 0; k <= 100; ++k) {
    const double gap = ce::purity_gap_cat({0.3, 0.7, {0.03 * k, 0.0}, {1.0, 0.0}});
    EXPECT_GE(gap, previous);
    previous = gap;
  }
}

TEST(PurityProperty, ThermalGapZeroOnlyWhenQEqualsOne) {
  EXPECT_EQ(ce::purity_gap_thermal({{0.0, 0.0}, {2.0, 0.0}, 0.0}), 0.0);
  EXPECT_GT(ce::purity_gap_thermal({{0.0, 0.0}, {2.0, 0.0}, 0.5}), 0.0);
}

TEST(PurityOracle, CatGrid) {
  for (double x1 : {0.0, 0.5, 1.0})
    for (double x2 : {0.5, 1.5})
      for (double a : {0.2, 0.5}) {
        const ce::cat_separable spec{a, 1.0 - a, {x1, 0.0}, {x2, 0.0}};
        const auto cutoffs = fk::choose_mode_cutoffs(spec.alpha1, spec.alpha2, 0.0, 1e-12);
        const auto fock = fk::purities_of(fk::separable_cat_matrix(spec, cutoffs));
        const auto closed = ce::purity_triple_cat(spec);
        EXPECT_NEAR(fock.mu12, closed.mu12, 1e-10);
        EXPECT_NEAR(fock.mu1, closed.mu1, 1e-10);
        EXPECT_NEAR(fock.mu2, closed.mu2, 1e-10);
        EXPECT_NEAR(fock.gap(), closed.gap(), 1e-8);
      }
}

TEST(PurityOracle, ThermalGrid) {
  for (double n : {0.0, 0.5, 1.0})
    for (double x1 : {0.0, 1.0})
      for (double x2 : {0.5, 2.0}) {
        const ce::thermal_mixture spec{{x1, 0.0}, {x2, 0.0}, n};
        const auto cutoffs = fk::thermal_cutoffs(spec, 1e-12);
        const auto fock = fk::purities_of(fk::thermal_mixture_matrix(spec, cutoffs));
        EXPECT_NEAR(fock.gap(), ce::purity_gap_thermal(spec), 1e-8);
      }
}
