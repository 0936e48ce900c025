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


#ifndef ZETA_PRIME_LEVY_HPP_
#define ZETA_PRIME_LEVY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "zeta/params.hpp"
#include "zeta/primes.hpp"
#include "zeta/zeta_core.hpp"

namespace zeta {

inline constexpr double kDefaultAtomCutoff = 1e-16;

// Point mass p^{-r sigma}/r at r log p.
struct LevyAtom {
  std::uint32_t p = 0;
  int r = 0;
  double location = 0.0;
  double weight = 0.0;
};

struct LevyMeasure {
  double sigma = 0.0;
  std::vector<LevyAtom> atoms;  // sorted by location, then p
  double total_mass = 0.0;      // sum of atom weights
  // Estimate and certified bound for the mass of all atoms not listed.
  double omitted_mass_estimate = 0.0;
  double omitted_mass_bound = 0.0;
};

// Atoms r log p for p <= table.limit and r <= R(p), where R(p) is the first r
// with weight below `cutoff`.
LevyMeasure levy_atoms(const ZetaParams& params, const PrimeTable& table,
                       double cutoff = kDefaultAtomCutoff);

struct ExponentValue {
  Complex value;
  double error_bound = 0.0;
};

// sum_atoms weight (e^{-it location} - 1); the bound covers omitted atoms.
ExponentValue levy_khintchine_exponent(const LevyMeasure& measure, double t);

// Estimate of sum_{n > P} Lambda(n) g(n) with g(x) = (log x)^k x^{-s}, or
// g(x) = x^{-s}/log x for k = -1, from int_P^inf g + (P - psi(P)) g(P).
// error bounds |int_P^inf (psi(x) - x) g'(x) dx| with explicit bounds on
// |psi(x) - x|.
struct TailEstimate {
  double estimate = 0.0;
  double error = 0.0;
};
TailEstimate von_mangoldt_tail(double P, double psi_P, int k, double s);

// psi(P) = sum_{n <= P} Lambda(n) for P = table.limit.
double chebyshev_psi(const PrimeTable& table);

struct TaylorCoefficients {
  double sigma = 0.0;
  std::uint64_t prime_limit = 0;
  double alpha = 0.0;  // mean of the law, < 0
  double alpha_error = 0.0;
  double beta = 0.0;  // half the variance, > 0
  double beta_error = 0.0;
  // a[l] for l = 0..L; a[0] = 0 is padding so indices match the order.
  std::vector<Complex> a;
  std::vector<double> a_errors;
  // Cubic-remainder constant and lower-envelope constant at `radius`.
  double B_const = 0.0;
  double C_const = 0.0;
  double radius = 0.0;
  // Certified neighborhood min(beta / (2 B), 1).
  double delta = 0.0;
  double truncation_error = 0.0;
};

// Default radius min(1, (sigma - 1)/2); an explicit radius must lie in
// (0, sigma - 1) or DivergentConstant is thrown. Throws TruncationInsufficient
// when the alpha/beta error exceeds params.prime_abs_error.
TaylorCoefficients taylor_coefficients(const ZetaParams& params, const PrimeTable& table,
                                       int L = 8, std::optional<double> radius = {});

double default_radius(double sigma);

struct DualConstants {
  double alpha_prime_sum = 0.0;
  double alpha_prime_error = 0.0;
  double alpha_deriv = 0.0;
  double alpha_deriv_error = 0.0;
  double beta_prime_sum = 0.0;
  double beta_prime_error = 0.0;
  double beta_deriv = 0.0;
  double beta_deriv_error = 0.0;
};

// alpha and beta from the closed-form prime sums and from zeta'/zeta,
// (zeta zeta'' - zeta'^2)/(2 zeta^2).
DualConstants alpha_beta_dual(const ZetaParams& params, const PrimeTable& table);

struct MomentCheck {
  double mean = 0.0;
  double mean_error = 0.0;
  double second_moment = 0.0;
  double second_moment_error = 0.0;
  double variance = 0.0;
  double variance_error = 0.0;
  // Retained sum over m <= max_m and a certified bound on what it omits.
  double second_moment_partial = 0.0;
  double second_moment_tail_bound = 0.0;
};

MomentCheck moment_check(const ZetaParams& params, std::int64_t max_m);

struct EnvelopePoint {
  double t = 0.0;
  double abs_f = 0.0;
  double lower = 0.0;  // exp(-C t^2)
  double upper = 0.0;  // exp(-beta t^2 / 2)
  bool lower_holds = false;
  bool upper_holds = false;
  double remainder = 0.0;  // |Gamma(t) - i alpha t + beta t^2|
  double remainder_bound = 0.0;
  bool remainder_holds = false;
};

struct EnvelopeReport {
  double sigma = 0.0;
  double delta = 0.0;
  std::vector<EnvelopePoint> points;  // in grid order
  bool all_hold = false;
};

// Gamma is the continuous branch of log f tracked outward from t = 0.
// Throws GridOutsideNeighborhood if any |t| > coeffs.delta.
EnvelopeReport envelope_check(const ZetaParams& params, const TaylorCoefficients& coeffs,
                              const std::vector<double>& t_grid);

// `count` equally spaced points on [-half_width, half_width].
std::vector<double> symmetric_grid(double half_width, int count);

}  // namespace zeta

#endif  // ZETA_PRIME_LEVY_HPP_
