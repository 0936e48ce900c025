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


#include "zeta/prime_levy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "zeta/errors.hpp"
#include "zeta/numeric.hpp"
#include "zeta/parallel.hpp"

namespace zeta {

namespace {

constexpr std::size_t kPrimeChunk = std::size_t{1} << 15;

// Explicit bounds on |psi(x) - x|: trivial below 11, 0.94 sqrt(x) up to 1e19,
// and x/(2 log x) + 1.4262 sqrt(x) <= 0.0115 x + 1.43 sqrt(x) beyond.
constexpr double kPsiSmall = 11.0;
constexpr double kPsiVerified = 1e19;

// int_a^inf e(x) (log x)^k x^{-s-1} dx with e(x) the bound above.
double psi_error_integral(int k, double s, double a) {
  double total = 0.0;
  if (a < kPsiSmall) total += log_power_integral(k, s, a, kPsiSmall);
  const double mid_lo = std::max(a, kPsiSmall);
  if (mid_lo < kPsiVerified) {
    total += 0.94 * log_power_integral(k, s + 0.5, mid_lo, kPsiVerified);
  }
  const double hi_lo = std::max(a, kPsiVerified);
  total += 0.0115 * log_power_integral(k, s, hi_lo) +
           1.43 * log_power_integral(k, s + 0.5, hi_lo);
  return total;
}

// Reduces per-chunk channel sums over all primes in a fixed chunk order, so
// the result does not depend on the thread count.
template <typename Term>
std::vector<double> prime_sums(const PrimeTable& table, unsigned threads,
                               std::size_t channels, Term term) {
  const std::size_t chunks = chunk_count_for(table.size(), kPrimeChunk);
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(channels, 0.0));
  for_each_chunk(chunks, threads, [&](std::size_t c) {
    std::vector<CompensatedSum> acc(channels);
    std::vector<double> buf(channels);
    const std::size_t end = std::min(table.size(), (c + 1) * kPrimeChunk);
    // Descending primes: smallest terms first.
    for (std::size_t i = end; i-- > c * kPrimeChunk;) {
      std::fill(buf.begin(), buf.end(), 0.0);
      term(table.primes[i], buf.data());
      for (std::size_t j = 0; j < channels; ++j) acc[j].add(buf[j]);
    }
    for (std::size_t j = 0; j < channels; ++j) partial[c][j] = acc[j].value();
  });
  std::vector<CompensatedSum> total(channels);
  for (std::size_t c = chunks; c-- > 0;) {
    for (std::size_t j = 0; j < channels; ++j) total[j].add(partial[c][j]);
  }
  std::vector<double> out(channels);
  for (std::size_t j = 0; j < channels; ++j) out[j] = total[j].value();
  return out;
}

// e^z - 1 - z for z >= 0.
double exp_remainder(double z) {
  if (z > 0.5) return std::expm1(z) - z;
  double term = z * z / 2.0;
  double sum = 0.0;
  for (int l = 3; term > 1e-18 * sum || sum == 0.0; ++l) {
    sum += term;
    term *= z / l;
    if (term == 0.0) break;
  }
  return sum;
}

// (cosh z - cos z)/2 = sum_{j>=1} z^{4j-2}/(4j-2)! for z >= 0.
double cosh_minus_cos_half(double z) {
  if (z > 1.0) return 0.5 * (std::cosh(z) - std::cos(z));
  const double z4 = z * z * z * z;
  double term = z * z / 2.0;
  double sum = 0.0;
  for (int j = 1; term > 1e-18 * sum || sum == 0.0; ++j) {
    sum += term;
    term *= z4 / ((4.0 * j - 1) * (4.0 * j) * (4.0 * j + 1) * (4.0 * j + 2));
    if (term == 0.0) break;
  }
  return sum;
}

// (-i)^l as an exact unit.
Complex minus_i_power(int l) {
  switch (l % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

void require_limit_match(const ZetaParams& params, const PrimeTable& table) {
  if (table.limit != params.prime_limit) {
    throw InvalidArgument("prime table limit " + std::to_string(table.limit) +
                          " does not match prime_limit " +
                          std::to_string(params.prime_limit));
  }
}

}  // namespace

TailEstimate von_mangoldt_tail(double P, double psi_P, int k, double s) {
  if (!(s > 1.0)) throw InvalidArgument("von_mangoldt_tail needs s > 1");
  if (k < -1) throw InvalidArgument("von_mangoldt_tail needs k >= -1");
  const double u = std::log(P);
  TailEstimate out;
  if (k >= 0) {
    if (u * s < k) {
      throw TruncationInsufficient("prime limit " + std::to_string(P) +
                                   " is below the monotone range of (log x)^" +
                                   std::to_string(k) + " x^-s");
    }
    out.estimate = log_power_integral(k, s, P) + (P - psi_P) * log_power(k, s, P);
    // |g'(x)| <= s (log x)^k x^{-s-1} once g is decreasing.
    out.error = s * psi_error_integral(k, s, P);
  } else {
    // int_P^inf x^{-s}/log x dx = E1((s - 1) log P).
    const double e1 = -std::expint(-(s - 1.0) * u);
    out.estimate = e1 + (P - psi_P) * std::exp(-s * u) / u;
    out.error = (s + 1.0 / u) / u * psi_error_integral(0, s, P);
  }
  out.error += 8.0 * kEps * (std::abs(out.estimate) + std::abs(P - psi_P) * 1e-16);
  return out;
}

double chebyshev_psi(const PrimeTable& table) {
  const std::uint64_t P = table.limit;
  const auto sums = prime_sums(table, 1, 1, [P](std::uint32_t p, double* out) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t n = p; n <= P; n *= p) {
      out[0] += lp;
      if (n > P / p) break;
    }
  });
  return sums[0];
}

LevyMeasure levy_atoms(const ZetaParams& params, const PrimeTable& table, double cutoff) {
  params.validate();
  require_limit_match(params, table);
  if (!(cutoff > 0.0)) throw InvalidArgument("atom cutoff must be > 0");
  const double sigma = params.sigma;
  const std::uint64_t P = table.limit;

  const std::size_t chunks = chunk_count_for(table.size(), kPrimeChunk);
  std::vector<std::vector<LevyAtom>> chunk_atoms(chunks);
  std::vector<double> chunk_dropped(chunks, 0.0);
  for_each_chunk(chunks, params.threads, [&](std::size_t c) {
    auto& atoms = chunk_atoms[c];
    double dropped = 0.0;
    const std::size_t end = std::min(table.size(), (c + 1) * kPrimeChunk);
    for (std::size_t i = c * kPrimeChunk; i < end; ++i) {
      const std::uint32_t p = table.primes[i];
      const double lp = std::log(static_cast<double>(p));
      int r = 1;
      while (true) {
        const double w = std::exp(-sigma * r * lp) / r;
        atoms.push_back({p, r, r * lp, w});
        if (w < cutoff) break;
        ++r;
      }
      // sum_{j > r} q^j / j <= q^{r+1} / ((r+1)(1-q)).
      dropped += std::exp(-sigma * (r + 1) * lp) / ((r + 1) * -std::expm1(-sigma * lp));
    }
    chunk_dropped[c] = dropped;
  });

  LevyMeasure out;
  out.sigma = sigma;
  std::size_t count = 0;
  for (const auto& a : chunk_atoms) count += a.size();
  out.atoms.reserve(count);
  for (auto& a : chunk_atoms) {
    out.atoms.insert(out.atoms.end(), a.begin(), a.end());
    std::vector<LevyAtom>().swap(a);
  }
  std::sort(out.atoms.begin(), out.atoms.end(), [](const LevyAtom& x, const LevyAtom& y) {
    return x.location != y.location ? x.location < y.location : x.p < y.p;
  });
  CompensatedSum listed;
  for (std::size_t i = out.atoms.size(); i-- > 0;) listed.add(out.atoms[i].weight);
  out.total_mass = listed.value();

  // Everything minus the listed atoms: sum_{n <= P} Lambda(n) n^{-sigma}/log n plus
  // its tail estimate.
  const auto head = prime_sums(table, params.threads, 2,
                               [sigma, P](std::uint32_t p, double* acc) {
    const double lp = std::log(static_cast<double>(p));
    int r = 1;
    for (std::uint64_t n = p; n <= P; n *= p, ++r) {
      acc[0] += std::exp(-sigma * r * lp) / r;
      acc[1] += lp;
      if (n > P / p) break;
    }
  });
  const auto tail = von_mangoldt_tail(static_cast<double>(P), head[1], -1, sigma);
  CompensatedSum dropped;
  for (double d : chunk_dropped) dropped.add(d);
  out.omitted_mass_estimate = head[0] + tail.estimate - out.total_mass;
  out.omitted_mass_bound = std::max(0.0, out.omitted_mass_estimate) + tail.error +
                           dropped.value() + 16.0 * kEps * out.total_mass;
  return out;
}

ExponentValue levy_khintchine_exponent(const LevyMeasure& measure, double t) {
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t i = measure.atoms.size(); i-- > 0;) {
    const auto& a = measure.atoms[i];
    const double half = 0.5 * t * a.location;
    const double s = std::sin(half);
    // e^{-ix} - 1 = -2 sin^2(x/2) - i sin x.
    re.add(-2.0 * a.weight * s * s);
    im.add(-a.weight * std::sin(t * a.location));
  }
  ExponentValue out;
  out.value = Complex(re.value(), im.value());
  out.error_bound = 2.0 * measure.omitted_mass_bound +
                    8.0 * kEps * (1.0 + std::abs(t)) * measure.total_mass;
  return out;
}

double default_radius(double sigma) { return std::min(1.0, 0.5 * (sigma - 1.0)); }

TaylorCoefficients taylor_coefficients(const ZetaParams& params, const PrimeTable& table,
                                       int L, std::optional<double> radius) {
  params.validate();
  require_limit_match(params, table);
  if (L < 2) throw InvalidArgument("taylor_coefficients needs L >= 2");
  const double sigma = params.sigma;
  const double rho = radius.value_or(default_radius(sigma));
  if (!(rho > 0.0) || !(rho < sigma - 1.0)) {
    throw DivergentConstant("envelope constants diverge at radius " + std::to_string(rho) +
                            "; the radius must lie in (0, sigma - 1) = (0, " +
                            std::to_string(sigma - 1.0) + ")");
  }
  const std::uint64_t P = table.limit;
  const double dP = static_cast<double>(P);
  const auto nk = static_cast<std::size_t>(L);
  // Channels: S_0..S_{L-1}, psi, B head, C head.
  const std::size_t ch_psi = nk;
  const std::size_t ch_b = nk + 1;
  const std::size_t ch_c = nk + 2;
  const double rho2 = rho * rho;
  const double rho3 = rho2 * rho;

  const auto sums = prime_sums(table, params.threads, nk + 3,
                               [&](std::uint32_t p, double* acc) {
    const double lp = std::log(static_cast<double>(p));
    int r = 1;
    for (std::uint64_t n = p; n <= P; n *= p, ++r) {
      const double y = r * lp;
      const double pw = std::exp(-sigma * y);
      double term = lp * pw;
      for (std::size_t k = 0; k < nk; ++k) {
        acc[k] += term;
        term *= y;
      }
      acc[ch_psi] += lp;
      acc[ch_b] += pw / r * exp_remainder(rho * y) / rho3;
      acc[ch_c] += pw / r * cosh_minus_cos_half(rho * y) / rho2;
      if (n > P / p) break;
    }
  });
  const double psi = sums[ch_psi];

  TaylorCoefficients out;
  out.sigma = sigma;
  out.prime_limit = P;
  out.radius = rho;
  out.a.assign(nk + 1, Complex(0.0, 0.0));
  out.a_errors.assign(nk + 1, 0.0);
  std::vector<double> S(nk);
  std::vector<double> S_err(nk);
  for (std::size_t k = 0; k < nk; ++k) {
    const auto tail = von_mangoldt_tail(dP, psi, static_cast<int>(k), sigma);
    S[k] = sums[k] + tail.estimate;
    S_err[k] = tail.error + 8.0 * kEps * std::abs(S[k]);
  }
  double factorial = 1.0;
  for (std::size_t l = 1; l <= nk; ++l) {
    factorial *= static_cast<double>(l);
    out.a[l] = minus_i_power(static_cast<int>(l)) * (S[l - 1] / factorial);
    out.a_errors[l] = S_err[l - 1] / factorial;
  }
  out.alpha = -S[0];
  out.alpha_error = S_err[0];
  out.beta = 0.5 * S[1];
  out.beta_error = 0.5 * S_err[1];

  // Omitted n > P: Lambda(n)/log n <= Lambda(n)/log P and both kernels are at
  // most e^{rho log n}, so the tails are bounded by sum_{n>P} Lambda(n) n^{rho-sigma}.
  const auto shifted = von_mangoldt_tail(dP, psi, 0, sigma - rho);
  const double shifted_upper = shifted.estimate + shifted.error;
  const double log_P = std::log(dP);
  out.B_const = sums[ch_b] * (1.0 + 8.0 * kEps) + shifted_upper / (rho3 * log_P);
  out.C_const = sums[ch_c] * (1.0 + 8.0 * kEps) + shifted_upper / (rho2 * log_P);
  if (!std::isfinite(out.B_const) || !std::isfinite(out.C_const) || !(shifted_upper >= 0.0)) {
    throw DivergentConstant("envelope constant tail is not finite at radius " +
                            std::to_string(rho));
  }
  out.delta = std::min(out.beta / (2.0 * out.B_const), 1.0);
  out.truncation_error = std::max(out.alpha_error, out.beta_error);
  if (out.truncation_error > params.prime_abs_error) {
    throw TruncationInsufficient(
        "prime sums up to " + std::to_string(P) + " certify alpha/beta only to " +
        std::to_string(out.truncation_error) + ", above prime_abs_error " +
        std::to_string(params.prime_abs_error));
  }
  return out;
}

DualConstants alpha_beta_dual(const ZetaParams& params, const PrimeTable& table) {
  params.validate();
  require_limit_match(params, table);
  const double sigma = params.sigma;
  const std::uint64_t P = table.limit;
  const double dP = static_cast<double>(P);

  // Channels: closed forms c0, c1; the part o0, o1 of them coming from powers
  // p^r > P; psi(P).
  const auto sums = prime_sums(table, params.threads, 5, [&](std::uint32_t p, double* acc) {
    const double lp = std::log(static_cast<double>(p));
    const double q = std::exp(-sigma * lp);
    const double one_minus_q = -std::expm1(-sigma * lp);
    int r0 = 1;
    for (std::uint64_t n = p; n <= P; n *= p, ++r0) {
      acc[4] += lp;
      if (n > P / p) {
        ++r0;
        break;
      }
    }
    const double q_r0 = std::exp(-sigma * r0 * lp);
    acc[0] += lp * q / one_minus_q;
    acc[1] += lp * lp * q / (one_minus_q * one_minus_q);
    acc[2] += lp * q_r0 / one_minus_q;
    acc[3] += lp * lp * q_r0 * (r0 - (r0 - 1) * q) / (one_minus_q * one_minus_q);
  });
  const auto t0 = von_mangoldt_tail(dP, sums[4], 0, sigma);
  const auto t1 = von_mangoldt_tail(dP, sums[4], 1, sigma);

  DualConstants out;
  out.alpha_prime_sum = -(sums[0] + (t0.estimate - sums[2]));
  out.alpha_prime_error = t0.error + 16.0 * kEps * std::abs(out.alpha_prime_sum);
  out.beta_prime_sum = 0.5 * (sums[1] + (t1.estimate - sums[3]));
  out.beta_prime_error = 0.5 * t1.error + 16.0 * kEps * out.beta_prime_sum;

  const ZetaValue z = zeta(params, 0.0);
  const RealValue d1 = zeta_deriv1(params);
  const RealValue d2 = zeta_deriv2(params);
  const double z0 = z.value.real();
  const double e0 = z.error_bound;
  const double alpha = d1.value / z0;
  const double alpha_err = (d1.error_bound + std::abs(alpha) * e0) / (z0 - e0) +
                           4.0 * kEps * std::abs(alpha);
  const double r2 = d2.value / z0;
  const double r2_err = (d2.error_bound + std::abs(r2) * e0) / (z0 - e0);
  out.alpha_deriv = alpha;
  out.alpha_deriv_error = alpha_err;
  out.beta_deriv = 0.5 * (r2 - alpha * alpha);
  out.beta_deriv_error = 0.5 * (r2_err + 2.0 * std::abs(alpha) * alpha_err + alpha_err * alpha_err) +
                         4.0 * kEps * (r2 + alpha * alpha);
  return out;
}

MomentCheck moment_check(const ZetaParams& params, std::int64_t max_m) {
  params.validate();
  if (max_m < 2) throw InvalidArgument("moment_check needs max_m >= 2");
  const ZetaValue z = zeta(params, 0.0);
  const double z0 = z.value.real();
  const double e0 = z.error_bound;
  const auto s1 = log_weighted_series(params.sigma, 1, max_m + 1);
  const auto s2 = log_weighted_series(params.sigma, 2, max_m + 1);

  MomentCheck out;
  out.mean = -s1.value() / z0;
  out.mean_error = (s1.error_bound + std::abs(out.mean) * e0) / (z0 - e0) +
                   4.0 * kEps * std::abs(out.mean);
  out.second_moment = s2.value() / z0;
  out.second_moment_error = (s2.error_bound + out.second_moment * e0) / (z0 - e0) +
                            4.0 * kEps * out.second_moment;
  out.variance = out.second_moment - out.mean * out.mean;
  out.variance_error = out.second_moment_error + 2.0 * std::abs(out.mean) * out.mean_error +
                       out.mean_error * out.mean_error +
                       4.0 * kEps * (out.second_moment + out.mean * out.mean);
  out.second_moment_partial = s2.partial / z0;
  out.second_moment_tail_bound = (s2.tail_estimate + s2.error_bound) / (z0 - e0);
  return out;
}

std::vector<double> symmetric_grid(double half_width, int count) {
  if (count < 1) throw InvalidArgument("grid needs at least one point");
  if (!(half_width >= 0.0)) throw InvalidArgument("grid half width must be >= 0");
  if (count == 1) return {0.0};
  std::vector<double> grid(static_cast<std::size_t>(count));
  const int last = count - 1;
  for (int i = 0; i <= last; ++i) {
    // Symmetric by construction: grid[i] == -grid[last - i].
    const double u = static_cast<double>(2 * i - last) / last;
    grid[static_cast<std::size_t>(i)] = half_width * u;
  }
  return grid;
}

EnvelopeReport envelope_check(const ZetaParams& params, const TaylorCoefficients& coeffs,
                              const std::vector<double>& t_grid) {
  params.validate();
  for (double t : t_grid) {
    if (!(std::abs(t) <= coeffs.delta)) {
      throw GridOutsideNeighborhood("grid point t=" + std::to_string(t) +
                                    " lies outside the neighborhood |t| <= " +
                                    std::to_string(coeffs.delta));
    }
  }

  // Continuous branch on |t|, walking from 0 with phase steps below 1/2.
  struct Branch {
    Complex log_f;
    double f_abs = 1.0;
    double f_error = 0.0;
  };
  std::map<double, Branch> branch;
  branch[0.0] = Branch{Complex(0.0, 0.0), 1.0, 0.0};
  std::vector<double> targets;
  for (double t : t_grid) targets.push_back(std::abs(t));
  std::sort(targets.begin(), targets.end());
  const double max_step = 0.5 / std::max(std::abs(coeffs.alpha), 1e-300);
  double prev_t = 0.0;
  double prev_phase = 0.0;
  for (double target : targets) {
    if (branch.count(target)) continue;
    while (prev_t < target) {
      const double t = std::min(target, prev_t + max_step);
      const ZetaValue f = char_fn(params, t);
      const double phase = std::arg(f.value);
      const double unwrapped =
          phase + 2.0 * kPi * std::round((prev_phase - phase) / (2.0 * kPi));
      prev_t = t;
      prev_phase = unwrapped;
      if (t == target) {
        branch[t] = Branch{Complex(std::log(std::abs(f.value)), unwrapped),
                           std::abs(f.value), f.error_bound};
      }
    }
  }

  EnvelopeReport out;
  out.sigma = params.sigma;
  out.delta = coeffs.delta;
  out.all_hold = true;
  for (double t : t_grid) {
    const Branch& b = branch.at(std::abs(t));
    const Complex gamma = t < 0.0 ? std::conj(b.log_f) : b.log_f;
    const double t2 = t * t;
    EnvelopePoint pt;
    pt.t = t;
    pt.abs_f = b.f_abs;
    pt.lower = std::exp(-coeffs.C_const * t2);
    pt.upper = std::exp(-0.5 * coeffs.beta * t2);
    pt.lower_holds = pt.lower <= pt.abs_f + b.f_error;
    pt.upper_holds = pt.abs_f - b.f_error <= pt.upper;
    pt.remainder = std::abs(gamma - Complex(0.0, coeffs.alpha * t) + coeffs.beta * t2);
    pt.remainder_bound = coeffs.B_const * t2 * std::abs(t);
    const double slack = b.f_error / (b.f_abs - b.f_error) +
                         coeffs.alpha_error * std::abs(t) + coeffs.beta_error * t2 +
                         8.0 * kEps * (1.0 + std::abs(gamma));
    pt.remainder_holds = pt.remainder <= pt.remainder_bound + slack;
    out.all_hold = out.all_hold && pt.lower_holds && pt.upper_holds && pt.remainder_holds;
    out.points.push_back(pt);
  }
  return out;
}

}  // namespace zeta
