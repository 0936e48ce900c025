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

#ifndef ZETA_ZETA_CORE_HPP_
#define ZETA_ZETA_CORE_HPP_

#include <complex>
#include <cstdint>

#include "zeta/params.hpp"

namespace zeta {

using Complex = std::complex<double>;

// |t| above which evaluations are flagged as outside the range any caller in
// this library needs.
inline constexpr double kLargeT = 1e6;

struct ZetaValue {
  Complex value;
  // Certified truncation plus rounding error of `value`.
  double error_bound = 0.0;
  std::int64_t terms = 0;
  bool euler_maclaurin = false;
  bool large_t = false;
};

struct RealValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::int64_t terms = 0;
};

// zeta(sigma + i t) for sigma > 1. Throws TruncationInsufficient when no
// M <= params.series_terms certifies params.target_abs_error.
ZetaValue zeta(const ZetaParams& params, double t);

// zeta'(sigma) = -sum log m / m^sigma.
RealValue zeta_deriv1(const ZetaParams& params);

// zeta''(sigma) = sum (log m)^2 / m^sigma.
RealValue zeta_deriv2(const ZetaParams& params);

// f_sigma(t) = zeta(sigma + i t) / zeta(sigma); f_sigma(0) == 1 exactly.
ZetaValue char_fn(const ZetaParams& params, double t);

// sum_{m >= 1} (log m)^k m^{-sigma} split into the explicit partial sum over
// m < terms and an Euler-Maclaurin (or integral) tail.
struct LogWeightedSeries {
  double partial = 0.0;        // sum_{m < terms}
  double tail_estimate = 0.0;  // estimate of sum_{m >= terms}
  double error_bound = 0.0;    // |partial + tail_estimate - exact|
  std::int64_t terms = 0;
  bool euler_maclaurin = false;

  double value() const { return partial + tail_estimate; }
};

// Evaluates the series with exactly `terms` explicit terms (terms >= 2).
LogWeightedSeries log_weighted_series(double sigma, int k, std::int64_t terms);

// Chooses the smallest admissible term count for `target` and evaluates;
// throws TruncationInsufficient if none <= max_terms works.
LogWeightedSeries log_weighted_series_auto(double sigma, int k, double target,
                                           std::int64_t max_terms);

}  // namespace zeta

#endif  // ZETA_ZETA_CORE_HPP_
