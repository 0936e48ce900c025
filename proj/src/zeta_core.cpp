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

#include "zeta/zeta_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zeta/errors.hpp"
#include "zeta/numeric.hpp"

namespace zeta {

namespace {

// Term count needed so that c * M^{-p} <= target, clamped to a double so that
// absurd requests compare as "too many" instead of overflowing.
double terms_for(double c, double p, double target) {
  return std::max(2.0, std::ceil(std::pow(c / target, 1.0 / p)));
}

// Rounding allowance for sum_m m^{-s}: every term carries a few ulps from
// exp/log, plus the phase error |t| log m * eps.
double zeta_rounding_bound(double sigma, double t, double terms) {
  const double zeta_upper = 1.0 + 1.0 / (sigma - 1.0);
  return 8.0 * kEps * (4.0 + std::abs(t) * std::log(terms)) * zeta_upper;
}

// f^{(j)}(x) = x^{-sigma-j} Q_j(log x) for f(x) = (log x)^k x^{-sigma}.
std::vector<double> derivative_poly(double sigma, int k, int order) {
  std::vector<double> q(static_cast<std::size_t>(k) + 1, 0.0);
  q[static_cast<std::size_t>(k)] = 1.0;
  for (int j = 0; j < order; ++j) {
    std::vector<double> next(q.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i] -= (sigma + j) * q[i];
      if (i > 0) next[i - 1] += static_cast<double>(i) * q[i];
    }
    q = std::move(next);
  }
  return q;
}

double eval_poly(const std::vector<double>& q, double u) {
  double r = 0.0;
  for (std::size_t i = q.size(); i-- > 0;) r = r * u + q[i];
  return r;
}

// Cauchy bound: every real root of q lies below the returned value.
double root_bound(const std::vector<double>& q) {
  const double lead = std::abs(q.back());
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) m = std::max(m, std::abs(q[i]) / lead);
  return 1.0 + m;
}

// Bound |f'''(M)|/360 on the Euler-Maclaurin remainder after the B2 term,
// valid when f'''' keeps one sign on [M, inf). Infinity otherwise.
double em_remainder_bound(double sigma, int k, double terms) {
  const auto q4 = derivative_poly(sigma, k, 4);
  const double u = std::log(terms);
  if (k > 0 && !(u > root_bound(q4))) return kInf;
  const auto q3 = derivative_poly(sigma, k, 3);
  return std::abs(eval_poly(q3, u)) * std::exp(-(sigma + 3.0) * u) / 360.0;
}

}  // namespace

ZetaValue zeta(const ZetaParams& params, double t) {
  params.validate();
  if (!std::isfinite(t)) throw InvalidArgument("t must be finite");
  const double sigma = params.sigma;
  const Complex s(sigma, t);
  const double half_target = 0.5 * params.target_abs_error;

  // Remainder of Euler-Maclaurin through B2:
  //   |s(s+1)(s+2)(s+3)| |B4| / (4! (sigma+3)) M^{-sigma-3}.
  const double em_const = std::abs(s * (s + 1.0) * (s + 2.0) * (s + 3.0)) /
                          (720.0 * (sigma + 3.0));
  const double em_terms = terms_for(em_const, sigma + 3.0, half_target);
  double plain_terms = kInf;
  if (sigma >= 2.0) {
    plain_terms = terms_for(1.0 / (sigma - 1.0), sigma - 1.0, half_target);
  }
  const bool use_plain = plain_terms <= em_terms;
  const double needed = use_plain ? plain_terms : em_terms;
  if (needed > static_cast<double>(params.series_terms)) {
    throw TruncationInsufficient(
        "zeta: " + std::to_string(needed) + " terms needed for error " +
        std::to_string(params.target_abs_error) + " but series_terms is " +
        std::to_string(params.series_terms));
  }
  const auto M = static_cast<std::int64_t>(needed);
  const double dM = static_cast<double>(M);

  ZetaValue out;
  out.terms = M;
  out.euler_maclaurin = !use_plain;
  out.large_t = std::abs(t) > kLargeT;

  CompensatedComplexSum sum;
  const std::int64_t last = use_plain ? M : M - 1;
  for (std::int64_t m = last; m >= 1; --m) {
    const double lm = std::log(static_cast<double>(m));
    const double mag = std::exp(-sigma * lm);
    sum.add(Complex(mag * std::cos(t * lm), -mag * std::sin(t * lm)));
  }
  double truncation = 0.0;
  if (use_plain) {
    truncation = std::pow(dM, 1.0 - sigma) / (sigma - 1.0);
  } else {
    const Complex m_pow = std::exp(-s * std::log(dM));  // M^{-s}
    sum.add(m_pow * dM / (s - 1.0));
    sum.add(0.5 * m_pow);
    sum.add(s * m_pow / (12.0 * dM));
    truncation = em_const * std::pow(dM, -(sigma + 3.0));
  }
  out.value = sum.value();
  out.error_bound = truncation + zeta_rounding_bound(sigma, t, dM);
  if (out.error_bound > params.target_abs_error) {
    throw TruncationInsufficient("zeta: rounding error at t=" + std::to_string(t) +
                                 " exceeds target_abs_error");
  }
  return out;
}

LogWeightedSeries log_weighted_series(double sigma, int k, std::int64_t terms) {
  if (!(sigma > 1.0)) throw InvalidArgument("sigma must satisfy sigma > 1");
  if (terms < 2) throw InvalidArgument("log_weighted_series needs terms >= 2");
  const double dM = static_cast<double>(terms);
  LogWeightedSeries out;
  out.terms = terms;

  CompensatedSum partial;
  double abs_sum = 0.0;
  for (std::int64_t m = terms - 1; m >= 2; --m) {
    const double v = log_power(k, sigma, static_cast<double>(m));
    partial.add(v);
    abs_sum += v;
  }
  if (k == 0) {
    partial.add(1.0);
    abs_sum += 1.0;
  }
  out.partial = partial.value();

  const double rem = em_remainder_bound(sigma, k, dM);
  const double u = std::log(dM);
  const double f = log_power(k, sigma, dM);
  if (std::isfinite(rem)) {
    // f'(M) = M^{-sigma-1} Q_1(log M).
    const double fprime =
        eval_poly(derivative_poly(sigma, k, 1), u) * std::exp(-(sigma + 1.0) * u);
    out.tail_estimate = log_power_integral(k, sigma, dM) + 0.5 * f - fprime / 12.0;
    out.error_bound = rem;
    out.euler_maclaurin = true;
  } else if (sigma * u >= k) {
    // f decreasing on [M, inf): 0 <= sum_{m >= M} f(m) <= f(M) + int_M^inf f.
    const double upper = f + log_power_integral(k, sigma, dM);
    out.tail_estimate = 0.5 * upper;
    out.error_bound = 0.5 * upper;
  } else {
    throw TruncationInsufficient("log-weighted series: " + std::to_string(terms) +
                                 " terms is below the monotone range of the summand");
  }
  out.error_bound += 4.0 * (k + 4) * kEps * (abs_sum + std::abs(out.tail_estimate));
  return out;
}

LogWeightedSeries log_weighted_series_auto(double sigma, int k, double target,
                                           std::int64_t max_terms) {
  std::int64_t M = 16;
  while (true) {
    const std::int64_t capped = std::min(M, max_terms);
    const double rem = em_remainder_bound(sigma, k, static_cast<double>(capped));
    if (rem <= 0.5 * target || capped == max_terms) {
      auto series = log_weighted_series(sigma, k, std::max<std::int64_t>(capped, 2));
      if (series.error_bound > target) {
        throw TruncationInsufficient(
            "log-weighted series (k=" + std::to_string(k) + ", sigma=" +
            std::to_string(sigma) + "): certified error " +
            std::to_string(series.error_bound) + " exceeds target " +
            std::to_string(target) + " with " + std::to_string(capped) + " terms");
      }
      return series;
    }
    M *= 2;
  }
}

RealValue zeta_deriv1(const ZetaParams& params) {
  params.validate();
  const auto s = log_weighted_series_auto(params.sigma, 1, params.target_abs_error,
                                          params.series_terms);
  return {-s.value(), s.error_bound, s.terms};
}

RealValue zeta_deriv2(const ZetaParams& params) {
  params.validate();
  const auto s = log_weighted_series_auto(params.sigma, 2, params.target_abs_error,
                                          params.series_terms);
  return {s.value(), s.error_bound, s.terms};
}

ZetaValue char_fn(const ZetaParams& params, double t) {
  const ZetaValue at_zero = zeta(params, 0.0);
  if (t == 0.0) {
    ZetaValue one = at_zero;
    one.value = Complex(1.0, 0.0);
    one.error_bound = 0.0;
    return one;
  }
  ZetaValue z = zeta(params, t);
  const double z0 = at_zero.value.real();
  const double e0 = at_zero.error_bound;
  const Complex ratio = z.value / z0;
  z.value = ratio;
  z.error_bound = (z.error_bound + std::abs(ratio) * e0) / (z0 - e0) +
                  4.0 * kEps * std::abs(ratio);
  return z;
}

}  // namespace zeta
