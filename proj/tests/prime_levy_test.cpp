// Copyright 2026 The zeta-llt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "zeta/errors.hpp"
#include "zeta/numeric.hpp"
#include "zeta/prime_levy.hpp"
#include "zeta/primes.hpp"

namespace {

constexpr std::uint64_t kLimit = 10'000'000;

// Reference values of zeta and its first two derivatives at 2.
constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta2d1 = -0.93754825431584375;
constexpr double kZeta2d2 = 1.9892802342989010;

class PrimeLevyTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { table_ = new zeta::PrimeTable(zeta::sieve(kLimit)); }
  static void TearDownTestSuite() {
    delete table_;
    table_ = nullptr;
  }

  static zeta::ZetaParams params(double sigma) {
    auto p = zeta::ZetaParams::with_sigma(sigma);
    p.prime_limit = kLimit;
    // The certified prime tail at sigma = 1.5 is a few 1e-6 at this limit.
    p.prime_abs_error = 1e-5;
    return p;
  }

  static zeta::PrimeTable* table_;
};

zeta::PrimeTable* PrimeLevyTest::table_ = nullptr;

TEST_F(PrimeLevyTest, LeadingAtoms) {
  const auto measure = zeta::levy_atoms(params(2.0), *table_);
  ASSERT_GE(measure.atoms.size(), 3u);
  EXPECT_EQ(measure.atoms[0].p, 2u);
  EXPECT_EQ(measure.atoms[0].r, 1);
  EXPECT_DOUBLE_EQ(measure.atoms[0].location, std::log(2.0));
  EXPECT_DOUBLE_EQ(measure.atoms[0].weight, 0.25);
  bool found_square = false;
  for (const auto& atom : measure.atoms) {
    if (atom.p == 2 && atom.r == 2) {
      found_square = true;
      EXPECT_DOUBLE_EQ(atom.location, 2.0 * std::log(2.0));
      EXPECT_DOUBLE_EQ(atom.weight, 1.0 / 32.0);
    }
  }
  EXPECT_TRUE(found_square);
  for (std::size_t i = 1; i < measure.atoms.size(); ++i) {
    EXPECT_LE(measure.atoms[i - 1].location, measure.atoms[i].location);
  }
}

TEST_F(PrimeLevyTest, TotalMassIsLogZeta) {
  const auto measure = zeta::levy_atoms(params(2.0), *table_);
  EXPECT_NEAR(measure.total_mass + measure.omitted_mass_estimate, 0.497700302470745347, 1e-8);
  EXPECT_LE(std::abs(measure.total_mass + measure.omitted_mass_estimate - std::log(kZeta2)),
            measure.omitted_mass_bound + 1e-12);
}

TEST_F(PrimeLevyTest, ExponentReproducesCharacteristicFunction) {
  const auto p = params(2.0);
  const auto measure = zeta::levy_atoms(p, *table_);
  for (double t : {0.3, 1.0, 4.0}) {
    const auto psi = zeta::levy_khintchine_exponent(measure, t);
    const auto f = zeta::char_fn(p, t);
    EXPECT_LE(std::abs(std::exp(psi.value) - f.value), 2.0 * psi.error_bound + 1e-10) << t;
  }
}

TEST_F(PrimeLevyTest, CoefficientParity) {
  const auto c = zeta::taylor_coefficients(params(2.0), *table_, 8);
  ASSERT_EQ(c.a.size(), 9u);
  for (int l = 1; l <= 8; ++l) {
    if (l % 2 == 0) {
      EXPECT_EQ(c.a[l].imag(), 0.0) << l;
    } else {
      EXPECT_EQ(c.a[l].real(), 0.0) << l;
    }
  }
  EXPECT_DOUBLE_EQ(c.a[1].imag(), c.alpha);
  EXPECT_DOUBLE_EQ(c.a[2].real(), -c.beta);
}

TEST_F(PrimeLevyTest, AlphaBetaMatchZetaDerivatives) {
  const auto c = zeta::taylor_coefficients(params(2.0), *table_);
  const double alpha = kZeta2d1 / kZeta2;
  const double beta = (kZeta2 * kZeta2d2 - kZeta2d1 * kZeta2d1) / (2.0 * kZeta2 * kZeta2);
  EXPECT_NEAR(c.alpha, alpha, 1e-8);
  EXPECT_NEAR(c.beta, beta, 1e-8);
  EXPECT_LE(std::abs(c.alpha - alpha), c.alpha_error + 1e-12);
  EXPECT_LE(std::abs(c.beta - beta), c.beta_error + 1e-12);
}

TEST_F(PrimeLevyTest, DualRoutesAgree) {
  for (double sigma : {1.5, 2.0, 3.0}) {
    const auto d = zeta::alpha_beta_dual(params(sigma), *table_);
    EXPECT_LE(std::abs(d.alpha_prime_sum - d.alpha_deriv),
              d.alpha_prime_error + d.alpha_deriv_error)
        << sigma;
    EXPECT_LE(std::abs(d.beta_prime_sum - d.beta_deriv), d.beta_prime_error + d.beta_deriv_error)
        << sigma;
  }
  const auto d = zeta::alpha_beta_dual(params(2.0), *table_);
  EXPECT_LE(std::abs(d.alpha_prime_sum - d.alpha_deriv), 1e-8);
  EXPECT_LE(std::abs(d.beta_prime_sum - d.beta_deriv), 1e-8);
}

TEST_F(PrimeLevyTest, SignsAtSigmaThree) {
  const auto c = zeta::taylor_coefficients(params(3.0), *table_);
  EXPECT_LT(c.alpha, 0.0);
  EXPECT_GT(c.beta, 0.0);
  EXPECT_GT(c.B_const, 0.0);
  EXPECT_GT(c.C_const, 0.0);
  EXPECT_GT(c.delta, 0.0);
  EXPECT_LE(c.delta, 1.0);
  EXPECT_DOUBLE_EQ(c.radius, 1.0);
}

TEST_F(PrimeLevyTest, RadiusOutsideStripThrows) {
  EXPECT_THROW(zeta::taylor_coefficients(params(2.0), *table_, 8, 1.0), zeta::DivergentConstant);
  EXPECT_THROW(zeta::taylor_coefficients(params(2.0), *table_, 8, 0.0), zeta::DivergentConstant);
  EXPECT_NO_THROW(zeta::taylor_coefficients(params(2.0), *table_, 8, 0.4));
}

TEST_F(PrimeLevyTest, SmallPrimeLimitIsRejected) {
  auto p = params(1.5);
  p.prime_limit = 100;
  p.prime_abs_error = 1e-12;
  EXPECT_THROW(zeta::taylor_coefficients(p, zeta::sieve(100)), zeta::TruncationInsufficient);
}

TEST_F(PrimeLevyTest, EnvelopeAtOrigin) {
  const auto p = params(2.0);
  const auto c = zeta::taylor_coefficients(p, *table_);
  const auto report = zeta::envelope_check(p, c, {0.0});
  ASSERT_EQ(report.points.size(), 1u);
  EXPECT_DOUBLE_EQ(report.points[0].abs_f, 1.0);
  EXPECT_TRUE(report.all_hold);
}

TEST_F(PrimeLevyTest, EnvelopeHoldsInsideNeighborhood) {
  for (double sigma : {1.5, 2.0, 3.0}) {
    const auto p = params(sigma);
    const auto c = zeta::taylor_coefficients(p, *table_);
    const auto report = zeta::envelope_check(p, c, zeta::symmetric_grid(c.delta, 201));
    EXPECT_TRUE(report.all_hold) << sigma;
    for (const auto& pt : report.points) {
      EXPECT_LE(pt.lower, pt.abs_f + 1e-12);
      EXPECT_LE(pt.abs_f, pt.upper + 1e-12);
    }
  }
}

TEST_F(PrimeLevyTest, EnvelopeRejectsPointsOutsideNeighborhood) {
  const auto p = params(2.0);
  const auto c = zeta::taylor_coefficients(p, *table_);
  EXPECT_THROW(zeta::envelope_check(p, c, {0.0, 2.0 * c.delta}), zeta::GridOutsideNeighborhood);
}

TEST_F(PrimeLevyTest, VonMangoldtTailMatchesBruteForce) {
  const double P = 100'000.0;
  double psi_P = 0.0;
  for (auto p : table_->primes) {
    if (p > P) break;
    for (double q = p; q <= P; q *= p) psi_P += std::log(static_cast<double>(p));
  }
  for (int k : {0, 1, 2}) {
    const double s = 2.0;
    double brute = 0.0;
    for (auto p : table_->primes) {
      const double lp = std::log(static_cast<double>(p));
      for (double q = p; q <= static_cast<double>(kLimit); q *= p) {
        if (q > P) brute += lp * std::pow(std::log(q), k) * std::pow(q, -s);
      }
    }
    // Beyond the table, psi(x) ~ x closes the sum to well within the bound.
    brute += zeta::log_power_integral(k, s, static_cast<double>(kLimit));
    const auto tail = zeta::von_mangoldt_tail(P, psi_P, k, s);
    EXPECT_LE(std::abs(tail.estimate - brute), tail.error) << k;
    EXPECT_LE(std::abs(tail.estimate - brute), 1e-3 * brute) << k;
  }
}

TEST_F(PrimeLevyTest, ChebyshevPsiMatchesDirectSum) {
  const auto table = zeta::sieve(100);
  double expected = 0.0;
  for (int n = 2; n <= 100; ++n) {
    int m = n;
    int p = 2;
    while (m % p != 0) ++p;
    while (m % p == 0) m /= p;
    if (m == 1) expected += std::log(static_cast<double>(p));
  }
  EXPECT_NEAR(zeta::chebyshev_psi(table), expected, 1e-12);
}

TEST(MomentCheck, MeanAndVarianceMatchConstants) {
  auto p = zeta::ZetaParams::with_sigma(2.0);
  const auto m = zeta::moment_check(p, 100'000);
  const double alpha = kZeta2d1 / kZeta2;
  const double beta = (kZeta2 * kZeta2d2 - kZeta2d1 * kZeta2d1) / (2.0 * kZeta2 * kZeta2);
  EXPECT_NEAR(m.mean, alpha, std::max(m.mean_error, 1e-12) + 1e-12);
  EXPECT_NEAR(m.variance, 2.0 * beta, std::max(m.variance_error, 1e-12) + 1e-12);
  EXPECT_NEAR(m.mean, alpha, 1e-9);
  EXPECT_NEAR(m.variance, 2.0 * beta, 1e-9);
}

TEST(MomentCheck, PartialSecondMomentIncreasesWithCutoff) {
  auto p = zeta::ZetaParams::with_sigma(2.0);
  const auto small = zeta::moment_check(p, 100'000);
  const auto large = zeta::moment_check(p, 1'000'000);
  EXPECT_LT(small.second_moment_partial, large.second_moment_partial);
  EXPECT_LE(large.second_moment_partial, small.second_moment_partial + small.second_moment_tail_bound);
  EXPECT_LE(large.second_moment_tail_bound, small.second_moment_tail_bound);
}

}  // namespace
