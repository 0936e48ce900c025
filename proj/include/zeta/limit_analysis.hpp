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


#ifndef ZETA_LIMIT_ANALYSIS_HPP_
#define ZETA_LIMIT_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zeta/params.hpp"
#include "zeta/prime_levy.hpp"
#include "zeta/quadrature.hpp"
#include "zeta/zeta_core.hpp"

namespace zeta {

struct HeatKernelParams {
  double beta = 0.0;
  double alpha = 0.0;
};

// (4 pi beta)^{-1/2} exp(-x^2 / (4 beta)).
double heat_kernel(const HeatKernelParams& hk, double x);

struct LltRecord {
  int n = 0;
  std::uint64_t max_m = 0;
  // sup over m <= max_m of |sqrt(n) mass(-log m) - p((-log m - alpha n)/sqrt(n))|.
  double sup_abs_error = 0.0;
  double argmax_x = 0.0;
  // Global sup norm, attained at argmax_m (decimal string; may exceed 64 bits).
  double sup_norm = 0.0;
  std::string argmax_m;
  double sqrt_n_sup_norm = 0.0;
  double measured_C = 0.0;
  // |sqrt(n) sup_norm - p(z)| at the global maximizer.
  double mode_abs_error = 0.0;
  double retained_sup_norm = 0.0;
  double tail_mass_bound = 0.0;
  // Largest heat-kernel value and sqrt(n) times largest point mass over m > max_m.
  double omitted_heat_kernel_max = 0.0;
  double omitted_point_mass_bound = 0.0;
  std::optional<double> quad_discrepancy;
};

struct LltReport {
  double sigma = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double heat_kernel_peak = 0.0;  // p(0)
  std::vector<int> n_values;
  std::vector<LltRecord> per_n;
  double measured_C = 0.0;
};

struct LltOptions {
  // Overrides default_max_m(n) when set.
  std::optional<std::uint64_t> max_m;
  // Adds the inversion-quadrature discrepancy at the retained maximizer.
  bool with_quadrature = false;
};

LltReport llt_report(const ZetaParams& params, const TaylorCoefficients& coeffs,
                     const std::vector<int>& n_values, const LltOptions& options = {});

struct InversionResult {
  int n = 0;
  std::uint64_t m = 0;
  double value = 0.0;          // (1/2pi) int_{-pi}^{pi} Re f^n e^{-ixt} dt
  double imag_residual = 0.0;  // |imaginary part| of the unsymmetrized integral
  double exact_mass = 0.0;
  double discrepancy = 0.0;    // value - exact_mass
  double refinement_delta = 0.0;
  int level = 0;
};

// f^n uses exp(n log f) with the demodulated branch inside |t| < delta and
// direct powering outside.
InversionResult inversion_quadrature(const ZetaParams& params,
                                     const TaylorCoefficients& coeffs, int n,
                                     std::uint64_t m,
                                     const QuadratureOptions& options = {});

// f(t)^n for the configured sigma.
Complex char_fn_power(const ZetaParams& params, const TaylorCoefficients& coeffs, int n,
                      double t);

struct GaussianBlock {
  int n = 0;
  double x = 0.0;
  double integral = 0.0;  // |(1/2pi) int_{|t|<delta} f^n e^{-ixt} dt|
  double bound = 0.0;     // 1/sqrt(n beta)
  double ratio = 0.0;
  double refinement_delta = 0.0;
};

// Evaluated at the center x = alpha n of the n-fold law.
GaussianBlock gaussian_block_bound(const ZetaParams& params, const TaylorCoefficients& coeffs,
                                   int n, const QuadratureOptions& options = {});

// (1/2pi) int_{-w}^{w} |f(t)|^n dt.
double modulus_block_integral(const ZetaParams& params, int n, double half_width,
                              const QuadratureOptions& options = {});

struct OutsideSup {
  double delta = 0.0;
  double t_max = 0.0;
  double sup = 0.0;       // refined maximum of |f| on [delta, t_max]
  double argmax_t = 0.0;
  double grid_step = 0.0;
  double lipschitz = 0.0;  // bound on |d|f|/dt|
  double certified_upper = 0.0;
  double margin = 0.0;  // 1 - certified_upper
  int grid_points = 0;
};

// Throws MarginTooSmall when the certified upper bound reaches 1.
OutsideSup outside_neighborhood_sup(const ZetaParams& params, double delta, double t_max,
                                    double grid_step = 1e-3);

struct SampleBatch {
  double sigma = 0.0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::vector<double> index;   // the integer m, exact below 2^53
  std::vector<double> values;  // -log m
};

inline constexpr std::uint64_t kSamplerTableSize = 10'000;

// Inverse CDF over m <= 1e4, rejection from a Pareto envelope beyond. Draw i
// uses substream (seed, i).
SampleBatch sample(const ZetaParams& params, std::uint64_t count, std::uint64_t seed);

// Kolmogorov-Smirnov distance of (X_1 + ... + X_k - k alpha)/sqrt(k) over
// disjoint groups to N(0, 2 beta).
double clt_check(const SampleBatch& batch, std::uint64_t group_size, double alpha,
                 double beta);

double ks_distance_normal(std::vector<double> values, double mean, double sd);

}  // namespace zeta

#endif  // ZETA_LIMIT_ANALYSIS_HPP_
