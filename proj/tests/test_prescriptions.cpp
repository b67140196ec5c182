#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spinstat/prescriptions.hpp"
#include "spinstat/sweep.hpp"
#include "support/brute_force.hpp"

using namespace spinstat;

namespace {

constexpr double kPi = std::numbers::pi;
const HalfInt kHalf = HalfInt::from_twice(1);

SpinState along(HalfInt s, const Vec3& n) { return coherent_state(s, n); }

AmplitudeModel symmetric_model() { return AmplitudeModel::partial_wave({{0.4, 0.3}, {0.8, -0.2}, {-0.3, 0.5}}); }

// No parity: catches any mix-up between f(-pi+phi), f(pi-phi) and f(-phi).
AmplitudeModel lopsided_model() {
  return AmplitudeModel::custom(
      [](double phi) { return std::polar(1.0 + 0.3 * phi, 0.7 * phi) + std::complex<double>(0.5, -0.2); }, false);
}

} // namespace

TEST(GmPhase, Values) {
  EXPECT_LT(std::abs(gm_phase(kHalf, 2.0 * kPi) - (-1.0)), 1e-15);
  EXPECT_EQ(gm_phase(HalfInt::from_twice(7), 0.0), Complex(1.0));
  EXPECT_LT(std::abs(gm_phase(HalfInt::from_int(1), kPi) - (-1.0)), 1e-15);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const HalfInt m = HalfInt::from_twice(static_cast<int>(rng() % 21) - 10);
    EXPECT_NEAR(std::abs(gm_phase(m, spinstat::testing::uniform(rng, -50, 50))), 1.0, 1e-15);
  }
}

TEST(RelativeExchangeFactor, IntegerArithmeticAgreesWithPhase) {
  for (int twice = 0; twice <= 10; ++twice) {
    const HalfInt s = HalfInt::from_twice(twice);
    const int factor = relative_exchange_factor(s);
    EXPECT_EQ(factor, twice % 2 == 0 ? 1 : -1);
    EXPECT_EQ(factor, statistics_sign(s));
    // exp(i 2s (-pi)) as a product of two per-particle phases exp(i s (-pi)).
    const Complex numeric = gm_phase(s, -kPi) * gm_phase(s, -kPi);
    EXPECT_LT(std::abs(numeric - static_cast<double>(factor)), 1e-12);
  }
}

TEST(OverlapFactor, Examples) {
  const SpinState up = sz_eigenstate(kHalf, kHalf), down = sz_eigenstate(kHalf, -kHalf);
  EXPECT_LT(std::abs(overlap_factor(up, up) - 1.0), 1e-15);
  EXPECT_LT(std::abs(overlap_factor(up, down)), 1e-15);
  EXPECT_LT(std::abs(overlap_factor(along(kHalf, Vec3::UnitX()), along(kHalf, -Vec3::UnitX()))), 1e-12);
  EXPECT_THROW(overlap_factor(up, sz_eigenstate(HalfInt::from_int(1), HalfInt{})), std::invalid_argument);

  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    const SpinState a = random_state(HalfInt::from_twice(3), rng), b = random_state(HalfInt::from_twice(3), rng);
    const Complex o = overlap_factor(a, b);
    EXPECT_NEAR(o.imag(), 0.0, 1e-15);
    EXPECT_GE(o.real(), 0.0);
    EXPECT_LE(o.real(), 1.0 + 1e-12);
    EXPECT_NEAR(o.real(), std::norm(inner(b, a)), 1e-15);
  }
}

TEST(ScatterConfig, RejectsMismatchedSpins) {
  EXPECT_THROW(ScatterConfig(sz_eigenstate(kHalf, kHalf), sz_eigenstate(HalfInt::from_int(1), HalfInt{}),
                             AmplitudeModel::constant(1.0)),
               std::invalid_argument);
}

TEST(WStandard, LongitudinalPairs) {
  const auto model = symmetric_model();
  const SpinState px = along(kHalf, Vec3::UnitX()), mx = along(kHalf, -Vec3::UnitX());
  const double f2 = std::norm(model.evaluate(kPi / 2));
  EXPECT_NEAR(w_standard(ScatterConfig(px, px, model), kPi / 2), 0.0, 1e-12);
  EXPECT_NEAR(w_standard(ScatterConfig(px, mx, model), kPi / 2), f2, 1e-12);
}

TEST(WStandard, SpinZeroConstantIsFour) {
  const SpinState scalar = sz_eigenstate(HalfInt{}, HalfInt{});
  const ScatterConfig cfg(scalar, scalar, AmplitudeModel::constant(1.0));
  for (double phi : uniform_phi_grid(37)) EXPECT_NEAR(w_standard(cfg, phi), 4.0, 1e-15);
  EXPECT_THROW(w_standard(cfg, -kPi), std::domain_error);
}

TEST(WDynamical, LongitudinalPairs) {
  const auto model = symmetric_model();
  const SpinState px = along(kHalf, Vec3::UnitX()), mx = along(kHalf, -Vec3::UnitX());
  const double f2 = std::norm(model.evaluate(kPi / 2));
  EXPECT_NEAR(w_dynamical(ScatterConfig(px, px, model), kPi / 2), f2, 1e-12);
  EXPECT_NEAR(w_dynamical(ScatterConfig(px, mx, model), kPi / 2), 0.0, 1e-12);
  EXPECT_NEAR(w_dynamical(ScatterConfig(px, px, AmplitudeModel::constant(1.0)), kPi / 2), 1.0, 1e-12);
}

TEST(WDynamical, LongitudinalClosedFormsOverGrid) {
  // Both along +x:   |f(phi) cos^2(phi/2) + f(-pi+phi) sin^2(phi/2)|^2
  // +x and -x:       |(f(phi) - f(-pi+phi)) cos^2(phi/2)|^2, standard |f(phi)|^2
  //                  and for both along +x the standard |f(phi) - f(-pi+phi)|^2.
  const auto model = lopsided_model();
  const SpinState px = along(kHalf, Vec3::UnitX()), mx = along(kHalf, -Vec3::UnitX());
  for (double phi : uniform_phi_grid(72)) {
    const Complex fd = model.evaluate(phi), fe = model.evaluate(exchange_angle(phi));
    const double c2 = std::pow(std::cos(phi / 2), 2), s2 = std::pow(std::sin(phi / 2), 2);
    EXPECT_NEAR(w_dynamical(ScatterConfig(px, px, model), phi), std::norm(fd * c2 + fe * s2), 1e-12);
    EXPECT_NEAR(w_dynamical(ScatterConfig(px, mx, model), phi), std::norm((fd - fe) * c2), 1e-12);
    EXPECT_NEAR(w_standard(ScatterConfig(px, px, model), phi), std::norm(fd - fe), 1e-12);
    EXPECT_NEAR(w_standard(ScatterConfig(px, mx, model), phi), std::norm(fd), 1e-12);
  }
}

TEST(WDynamical, BothUpConstantVanishes) {
  const SpinState up = sz_eigenstate(kHalf, kHalf);
  const ScatterConfig cfg(up, up, AmplitudeModel::constant(1.0));
  for (double phi : uniform_phi_grid(90)) {
    EXPECT_NEAR(w_dynamical(cfg, phi), 0.0, 1e-12);
    EXPECT_NEAR(w_standard(cfg, phi), 0.0, 1e-12);
  }
}

TEST(WWorking, EqualsStandardOnExamples) {
  const auto model = symmetric_model();
  const SpinState px = along(kHalf, Vec3::UnitX());
  EXPECT_NEAR(w_working(ScatterConfig(px, px, model), kPi / 2), 0.0, 1e-12);
  const SpinState scalar = sz_eigenstate(HalfInt{}, HalfInt{});
  const ScatterConfig cfg(scalar, scalar, AmplitudeModel::constant(1.0));
  for (double phi : uniform_phi_grid(24)) EXPECT_NEAR(w_working(cfg, phi), 4.0, 1e-12);
}

TEST(PrescriptionProperties, WorkingEqualsStandardForRandomStates) {
  std::mt19937_64 rng(100);
  const auto grid = uniform_phi_grid(90);
  for (int twice : {1, 2, 3}) {
    const HalfInt s = HalfInt::from_twice(twice);
    for (int k = 0; k < 40; ++k) {
      const auto model = k % 2 ? lopsided_model() : symmetric_model();
      ScatterConfig cfg(random_state(s, rng), random_state(s, rng), model);
      if (k % 4 == 3) {
        cfg = ScatterConfig(cfg.alpha(), cfg.beta(), model, random_state(s, rng), random_state(s, rng));
      }
      for (double phi : grid) EXPECT_NEAR(w_working(cfg, phi), w_standard(cfg, phi), 1e-12);
    }
  }
}

TEST(PrescriptionProperties, ExtremeEigenstatesAgree) {
  const auto grid = uniform_phi_grid(360);
  for (int twice : {1, 2, 3}) {
    const HalfInt s = HalfInt::from_twice(twice);
    for (HalfInt ma : {s, -s}) {
      for (HalfInt mb : {s, -s}) {
        for (const auto& model : {symmetric_model(), lopsided_model()}) {
          const ScatterConfig cfg(sz_eigenstate(s, ma), sz_eigenstate(s, mb), model);
          for (double phi : grid) EXPECT_NEAR(w_dynamical(cfg, phi), w_standard(cfg, phi), 1e-12);
        }
      }
    }
  }
}

TEST(PrescriptionProperties, CrossSectionsNonNegativeAndStatisticsSign) {
  std::mt19937_64 rng(8);
  for (int twice = 0; twice <= 6; ++twice) {
    const HalfInt s = HalfInt::from_twice(twice);
    const ScatterConfig cfg(random_state(s, rng), random_state(s, rng), symmetric_model());
    EXPECT_EQ(cfg.statistics_sign(), twice % 2 == 0 ? 1 : -1);
    for (Prescription p : {Prescription::StandardSSC, Prescription::DynamicalGM, Prescription::WorkingSOmega}) {
      for (double phi : uniform_phi_grid(30)) EXPECT_GE(cross_section(cfg, phi, p), 0.0);
    }
  }
}

TEST(CrossSectionCurve, ValidatesGrid) {
  const SpinState up = sz_eigenstate(kHalf, kHalf);
  const ScatterConfig cfg(up, up, symmetric_model());
  const auto curve = cross_section_curve(cfg, Prescription::DynamicalGM, uniform_phi_grid(8));
  EXPECT_EQ(curve.values.size(), 8u);
  EXPECT_THROW(cross_section_curve(cfg, Prescription::StandardSSC, {0.1, 0.1}), std::invalid_argument);
  EXPECT_THROW(cross_section_curve(cfg, Prescription::StandardSSC, {0.5, 0.1}), std::invalid_argument);
  EXPECT_THROW(cross_section_curve(cfg, Prescription::StandardSSC, {0.5, 4.0}), std::domain_error);
}

TEST(UniformGrid, CoversHalfOpenRange) {
  const auto grid = uniform_phi_grid(360);
  ASSERT_EQ(grid.size(), 360u);
  EXPECT_GT(grid.front(), -kPi);
  EXPECT_EQ(grid.back(), kPi);
  EXPECT_EQ(grid[269], kPi / 2);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_GT(grid[i], grid[i - 1]);
  EXPECT_THROW(uniform_phi_grid(0), std::invalid_argument);
}

TEST(CLL, LongitudinalValues) {
  const auto model = symmetric_model();
  EXPECT_NEAR(c_ll(model, kHalf, Prescription::StandardSSC, kPi / 2), -1.0, 1e-12);
  EXPECT_NEAR(c_ll(model, kHalf, Prescription::DynamicalGM, kPi / 2), 1.0, 1e-12);
  EXPECT_NEAR(c_ll(model, kHalf, Prescription::WorkingSOmega, kPi / 2), -1.0, 1e-12);
}

TEST(CLL, BoundedWhenDefined) {
  std::mt19937_64 rng(6);
  for (int twice = 1; twice <= 4; ++twice) {
    for (double phi : uniform_phi_grid(40)) {
      const auto model = AmplitudeModel::partial_wave(
          {{spinstat::testing::uniform(rng, -1, 1), spinstat::testing::uniform(rng, -1, 1)},
           {spinstat::testing::uniform(rng, -1, 1), spinstat::testing::uniform(rng, -1, 1)}});
      for (Prescription p : {Prescription::StandardSSC, Prescription::DynamicalGM}) {
        try {
          EXPECT_LE(std::abs(c_ll(model, HalfInt::from_twice(twice), p, phi)), 1.0 + 1e-12);
        } catch (const UndefinedObservable&) {
        }
      }
    }
  }
}

TEST(CLL, VanishingDenominatorIsDistinctError) {
  EXPECT_THROW(c_ll(AmplitudeModel::constant(0.0), kHalf, Prescription::StandardSSC, kPi / 2), UndefinedObservable);
  EXPECT_THROW(c_ll(AmplitudeModel::constant(0.0), kHalf, Prescription::DynamicalGM, 0.3), UndefinedObservable);
}

TEST(Detectors, DefaultToDirectFinalStates) {
  std::mt19937_64 rng(12);
  const HalfInt s = HalfInt::from_twice(2);
  const SpinState a = random_state(s, rng), b = random_state(s, rng);
  const ScatterConfig plain(a, b, symmetric_model());
  const ScatterConfig explicit_detectors(a, b, symmetric_model(), a, b);
  for (double phi : uniform_phi_grid(20)) {
    for (Prescription p : {Prescription::StandardSSC, Prescription::DynamicalGM, Prescription::WorkingSOmega}) {
      EXPECT_EQ(cross_section(plain, phi, p), cross_section(explicit_detectors, phi, p));
    }
  }
  EXPECT_THROW(ScatterConfig(a, b, symmetric_model(), sz_eigenstate(kHalf, kHalf), b), std::invalid_argument);
}

TEST(AgreementSweep, SpinHalfEigenPairsAgreeRandomPairsDisagree) {
  SweepParams params;
  params.s = kHalf;
  params.n_states = 100;
  params.seed = 2718;
  const SweepReport report = agreement_sweep(AmplitudeModel::constant(1.0), params);
  ASSERT_EQ(report.rows.size(), 104u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(report.rows[i].eigen_pair);
    EXPECT_TRUE(report.rows[i].agree) << report.rows[i].alpha_desc << " " << report.rows[i].beta_desc;
    EXPECT_LT(report.rows[i].max_abs_diff, 1e-12);
  }
  for (std::size_t i = 4; i < report.rows.size(); ++i) {
    EXPECT_FALSE(report.rows[i].agree);
    EXPECT_GT(report.rows[i].max_abs_diff, 1e-6);
  }
  EXPECT_EQ(report.agree_count(), 4);
}

TEST(AgreementSweep, LongitudinalPairDisagreesByQuarterTurnValue) {
  const auto model = symmetric_model();
  const SpinState px = along(kHalf, Vec3::UnitX());
  const auto gap = prescription_gap(ScatterConfig(px, px, model), uniform_phi_grid(360));
  EXPECT_GE(gap.max_abs_diff, std::norm(model.evaluate(kPi / 2)) - 1e-12);
  EXPECT_GT(gap.max_abs_diff, 1e-9);
}

TEST(AgreementSweep, HigherSpinReportsEveryEigenPairAsObserved) {
  // Record of what the sweep finds for s = 1 and 3/2: every s_z-eigenstate
  // product pair agrees, not only the four (+-s, +-s) pairs. Pairs with
  // m_a != m_b have no exchange interference in either prescription; for
  // m_a = m_b = m the exchanged branch carries exp(-i 2 pi m) = (-1)^{2s}.
  for (int twice : {2, 3}) {
    SweepParams params;
    params.s = HalfInt::from_twice(twice);
    params.n_states = 20;
    params.n_phis = 120;
    const SweepReport report = agreement_sweep(symmetric_model(), params);
    const int eigen_pairs = (twice + 1) * (twice + 1);
    for (int i = 0; i < eigen_pairs; ++i) EXPECT_TRUE(report.rows[i].agree);
    EXPECT_EQ(report.agree_count(), eigen_pairs);
  }
}

TEST(AgreementSweep, Deterministic) {
  SweepParams params;
  params.s = HalfInt::from_twice(2);
  params.n_states = 10;
  params.n_phis = 50;
  params.seed = 99;
  const auto a = agreement_sweep(symmetric_model(), params);
  const auto b = agreement_sweep(symmetric_model(), params);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].max_abs_diff, b.rows[i].max_abs_diff);
    EXPECT_EQ(a.rows[i].alpha_desc, b.rows[i].alpha_desc);
  }
  params.n_phis = 0;
  EXPECT_THROW(agreement_sweep(symmetric_model(), params), std::invalid_argument);
}
