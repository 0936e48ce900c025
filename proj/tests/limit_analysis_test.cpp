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


#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "zeta/convolution.hpp"
#include "zeta/errors.hpp"
#include "zeta/limit_analysis.hpp"
#include "zeta/prime_levy.hpp"
#include "zeta/primes.hpp"
#include "zeta/quadrature.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kLimit = 10'000'000;

class LimitTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto table = zeta::sieve(kLimit);
    coeffs_ = new zeta::TaylorCoefficients(zeta::taylor_coefficients(params(), table));
  }
  static void TearDownTestSuite() {
    delete coeffs_;
    coeffs_ = nullptr;
  }

  static zeta::ZetaParams params() {
    auto p = zeta::ZetaParams::with_sigma(2.0);
    p.prime_limit = kLimit;
    return p;
  }

  static zeta::TaylorCoefficients* coeffs_;
};

zeta::TaylorCoefficients* LimitTest::coeffs_ = nullptr;

TEST(HeatKernel, UnitPeakAtMatchedTime) {
  EXPECT_NEAR(zeta::heat_kernel({1.0 / (4.0 * kPi), 0.0}, 0.0), 1.0, 1e-15);
}

TEST(HeatKernel, EvenAndPositive) {
  const zeta::HeatKernelParams hk{0.44, 0.0};
  EXPECT_DOUBLE_EQ(zeta::heat_kernel(hk, 1.3), zeta::heat_kernel(hk, -1.3));
  EXPECT_GT(zeta::heat_kernel(hk, 30.0), 0.0);
}

TEST(HeatKernel, IntegratesToOne) {
  const double beta = 0.44;
  const zeta::HeatKernelParams hk{beta, 0.0};
  const double half = 20.0 * std::sqrt(beta);
  const int steps = 100'000;
  const double h = 2.0 * half / steps;
  double total = 0.0;
  for (int i = 0; i < steps; ++i) total += zeta::heat_kernel(hk, -half + (i + 0.5) * h);
  EXPECT_NEAR(total * h, 1.0, 1e-10);
}

TEST_F(LimitTest, HeatKernelMatchesFourierIntegral) {
  const double beta = coeffs_->beta;
  const double half = std::sqrt(60.0 / beta);
  for (double x : {0.0, 0.5, 2.0}) {
    const double fourier =
        zeta::integrate_real([&](double u) { return std::cos(x * u) * std::exp(-beta * u * u); },
                             -half, half) /
        (2.0 * kPi);
    EXPECT_NEAR(zeta::heat_kernel({beta, coeffs_->alpha}, x), fourier, 1e-8) << x;
  }
}

TEST_F(LimitTest, LltReportCoversRequestedN) {
  const std::vector<int> ns{4, 16, 64};
  const auto report = zeta::llt_report(params(), *coeffs_, ns);
  ASSERT_EQ(report.per_n.size(), ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto& r = report.per_n[i];
    EXPECT_EQ(r.n, ns[i]);
    EXPECT_GE(r.sup_abs_error, 0.0);
    EXPECT_LE(r.sqrt_n_sup_norm, report.measured_C);
    EXPECT_NEAR(r.sqrt_n_sup_norm, std::sqrt(static_cast<double>(r.n)) * r.sup_norm,
                1e-15 * r.sqrt_n_sup_norm);
    EXPECT_GE(r.sup_norm, r.retained_sup_norm);
  }
  EXPECT_LT(report.per_n[2].sup_abs_error, report.per_n[0].sup_abs_error);
  EXPECT_NEAR(report.heat_kernel_peak, 1.0 / std::sqrt(4.0 * kPi * coeffs_->beta), 1e-15);
}

TEST_F(LimitTest, LltReportSupMatchesGlobalRoute) {
  const auto report = zeta::llt_report(params(), *coeffs_, {8});
  const auto g = zeta::global_sup(params(), 8);
  EXPECT_NEAR(report.per_n[0].sup_norm, g.value, 1e-14);
  EXPECT_EQ(report.per_n[0].argmax_m, g.argmax_m.str());
}

TEST_F(LimitTest, CharFnPowerIsOneAtOrigin) {
  for (int n : {1, 7, 64}) {
    const auto v = zeta::char_fn_power(params(), *coeffs_, n, 0.0);
    EXPECT_NEAR(v.real(), 1.0, 1e-15);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  }
}

TEST_F(LimitTest, CharFnPowerMatchesDirectPowering) {
  for (double t : {0.01, 0.05, 0.5, 2.0}) {
    const auto f = zeta::char_fn(params(), t).value;
    for (int n : {2, 9}) {
      const auto direct = std::pow(f, n);
      EXPECT_LE(std::abs(zeta::char_fn_power(params(), *coeffs_, n, t) - direct), 1e-10)
          << "t=" << t << " n=" << n;
    }
  }
}

TEST_F(LimitTest, InversionReportsResidualAndDiscrepancy) {
  const auto r = zeta::inversion_quadrature(params(), *coeffs_, 1, 1);
  EXPECT_LE(r.imag_residual, 1e-10);
  EXPECT_LE(r.refinement_delta, 1e-10);
  EXPECT_NEAR(r.exact_mass, 6.0 / (kPi * kPi), 1e-12);
  EXPECT_DOUBLE_EQ(r.discrepancy, r.value - r.exact_mass);
}

TEST_F(LimitTest, BlockBoundHoldsAndScales) {
  std::vector<zeta::GaussianBlock> blocks;
  for (int n : {4, 16, 64}) {
    blocks.push_back(zeta::gaussian_block_bound(params(), *coeffs_, n));
    EXPECT_LE(blocks.back().ratio, 1.0) << n;
    EXPECT_NEAR(blocks.back().x, coeffs_->alpha * n, 1e-12);
  }
  EXPECT_DOUBLE_EQ(blocks[1].bound / blocks[2].bound, 2.0);
}

TEST_F(LimitTest, RestrictedBlockBelowFullModulusIntegral) {
  const auto block = zeta::gaussian_block_bound(params(), *coeffs_, 1);
  const double restricted = zeta::modulus_block_integral(params(), 1, coeffs_->delta);
  const double full = zeta::modulus_block_integral(params(), 1, kPi);
  EXPECT_LE(block.integral, restricted + 1e-10);
  EXPECT_LE(restricted, full);
}

TEST(OutsideSup, BelowOneAwayFromOrigin) {
  const auto p = zeta::ZetaParams::with_sigma(2.0);
  const auto s = zeta::outside_neighborhood_sup(p, 0.5, kPi);
  EXPECT_GT(s.sup, 0.0);
  EXPECT_LT(s.sup, 1.0);
  EXPECT_GE(s.certified_upper, s.sup);
  EXPECT_GE(s.margin, 1e-3);
  EXPECT_GE(zeta::outside_neighborhood_sup(p, 1.0, kPi).margin, 1e-3);
}

TEST(OutsideSup, AdjacentGridValuesRespectLipschitzBound) {
  const auto p = zeta::ZetaParams::with_sigma(2.0);
  const auto s = zeta::outside_neighborhood_sup(p, 0.5, kPi);
  // -zeta'(2)/zeta(2), the mean of log m, bounds |d|f|/dt|.
  EXPECT_NEAR(s.lipschitz, 0.93754825431584375 / 1.6449340668482264, 1e-9);
  const double h = 1e-3;
  double prev = std::abs(zeta::char_fn(p, 0.5).value);
  for (double t = 0.5 + h; t <= kPi; t += h) {
    const double cur = std::abs(zeta::char_fn(p, t).value);
    EXPECT_LE(std::abs(cur - prev), s.lipschitz * h + 1e-12) << t;
    prev = cur;
  }
}

TEST(OutsideSup, ApproachesOneNearOrigin) {
  const auto p = zeta::ZetaParams::with_sigma(2.0);
  const auto s = zeta::outside_neighborhood_sup(p, 1e-3, 0.1, 1e-4);
  EXPECT_GT(s.sup, 0.9999);
  EXPECT_LT(s.sup, 1.0);
}

TEST(Sampler, ReproducibleForSeed) {
  const auto p = zeta::ZetaParams::with_sigma(2.0);
  const auto a = zeta::sample(p, 5000, 42);
  const auto b = zeta::sample(p, 5000, 42);
  const auto c = zeta::sample(p, 5000, 43);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, c.values);
}

TEST(Sampler, IndependentOfThreadCount) {
  auto p = zeta::ZetaParams::with_sigma(1.5);
  p.threads = 1;
  const auto a = zeta::sample(p, 20'000, 7);
  p.threads = 4;
  const auto b = zeta::sample(p, 20'000, 7);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.index, b.index);
}

TEST(Sampler, ValuesAreNegativeLogsOfIntegers) {
  const auto batch = zeta::sample(zeta::ZetaParams::with_sigma(1.3), 20'000, 3);
  bool saw_tail = false;
  for (std::size_t i = 0; i < batch.values.size(); ++i) {
    const double m = batch.index[i];
    ASSERT_GE(m, 1.0);
    if (m < 9007199254740992.0) {
      EXPECT_EQ(m, std::floor(m));
      EXPECT_EQ(batch.values[i], m == 1.0 ? 0.0 : -std::log(m));
    }
    saw_tail = saw_tail || m > static_cast<double>(zeta::kSamplerTableSize);
  }
  EXPECT_TRUE(saw_tail);
}

TEST_F(LimitTest, SampleMeanWithinFiveStandardErrors) {
  const std::uint64_t N = 1'000'000;
  const auto batch = zeta::sample(params(), N, 2024);
  double sum = 0.0;
  for (double v : batch.values) sum += v;
  const double se = std::sqrt(2.0 * coeffs_->beta / N);
  EXPECT_NEAR(sum / N, coeffs_->alpha, 5.0 * se);
}

TEST(Sampler, EmpiricalPmfMatchesMasses) {
  const std::uint64_t N = 1'000'000;
  const auto p = zeta::ZetaParams::with_sigma(2.0);
  const auto batch = zeta::sample(p, N, 99);
  std::vector<double> counts(21, 0.0);
  for (double m : batch.index) {
    if (m <= 20.0) counts[static_cast<int>(m)] += 1.0;
  }
  const double z = kPi * kPi / 6.0;
  for (int m = 1; m <= 20; ++m) {
    const double prob = 1.0 / (static_cast<double>(m) * m * z);
    EXPECT_NEAR(counts[m] / N, prob, 4.0 * std::sqrt(prob * (1.0 - prob) / N)) << m;
  }
}

TEST_F(LimitTest, CltGroupsAreNearNormal) {
  const auto batch = zeta::sample(params(), 256 * 4000, 11);
  EXPECT_LT(zeta::clt_check(batch, 256, coeffs_->alpha, coeffs_->beta), 0.05);
  EXPECT_GE(zeta::clt_check(batch, 1, coeffs_->alpha, coeffs_->beta), 0.05);
}

TEST(KsDistance, AffineInvariant) {
  std::vector<double> values;
  for (int i = 0; i < 500; ++i) values.push_back(std::sin(0.37 * i) + 0.01 * i);
  const double base = zeta::ks_distance_normal(values, 2.0, 1.5);
  std::vector<double> moved;
  for (double v : values) moved.push_back(3.0 * v - 7.0);
  const double after = zeta::ks_distance_normal(moved, 3.0 * 2.0 - 7.0, 3.0 * 1.5);
  EXPECT_NEAR(base, after, 1e-12);
}

TEST(KsDistance, ExactForSinglePoint) {
  // One sample at the mean: empirical CDF jumps 0 -> 1 where Phi = 1/2.
  EXPECT_NEAR(zeta::ks_distance_normal({0.0}, 0.0, 1.0), 0.5, 1e-15);
}

}  // namespace
