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


#include "zeta/limit_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeta/convolution.hpp"
#include "zeta/errors.hpp"
#include "zeta/numeric.hpp"
#include "zeta/parallel.hpp"
#include "zeta/rng.hpp"

namespace zeta {

namespace {

constexpr std::uint64_t kSampleChunk = 4096;
constexpr double kExactIndexLimit = 9007199254740992.0;  // 2^53

Complex int_power(Complex z, int n) {
  Complex result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

// Lipschitz constant of t -> |f(t)|: |f'(t)| <= E|X| = -zeta'/zeta.
double char_fn_lipschitz(const ZetaParams& params) {
  const ZetaValue z = zeta(params, 0.0);
  const RealValue d1 = zeta_deriv1(params);
  const double z0 = z.value.real();
  return (std::abs(d1.value) + d1.error_bound) / (z0 - z.error_bound);
}

}  // namespace

double heat_kernel(const HeatKernelParams& hk, double x) {
  if (!(hk.beta > 0.0)) throw InvalidArgument("heat kernel needs beta > 0");
  return std::exp(-x * x / (4.0 * hk.beta)) / std::sqrt(4.0 * kPi * hk.beta);
}

Complex char_fn_power(const ZetaParams& params, const TaylorCoefficients& coeffs, int n,
                      double t) {
  if (n < 1) throw InvalidArgument("power n must be >= 1");
  const Complex f = char_fn(params, t).value;
  if (std::abs(t) < coeffs.delta) {
    // f e^{-i alpha t} stays near the positive real axis on the neighborhood,
    // so its principal log is the continuous branch.
    const Complex demod = f * std::exp(Complex(0.0, -coeffs.alpha * t));
    const Complex log_f = Complex(0.0, coeffs.alpha * t) + std::log(demod);
    return std::exp(static_cast<double>(n) * log_f);
  }
  return int_power(f, n);
}

InversionResult inversion_quadrature(const ZetaParams& params,
                                     const TaylorCoefficients& coeffs, int n,
                                     std::uint64_t m, const QuadratureOptions& options) {
  params.validate();
  if (m < 1) throw InvalidArgument("m must be >= 1");
  const double x = -std::log(static_cast<double>(m));
  auto integrand = [&](double t) {
    return char_fn_power(params, coeffs, n, t) * std::exp(Complex(0.0, -x * t));
  };
  const auto right = integrate(integrand, 0.0, kPi, options);
  const auto left = integrate(integrand, -kPi, 0.0, options);
  const Complex total = (right.value + left.value) / (2.0 * kPi);

  InversionResult out;
  out.n = n;
  out.m = m;
  out.value = total.real();
  out.imag_residual = std::abs(total.imag());
  out.exact_mass = convolution_mass(params, n, m);
  out.discrepancy = out.value - out.exact_mass;
  out.refinement_delta =
      std::max(right.refinement_delta, left.refinement_delta) / (2.0 * kPi);
  out.level = std::max(right.level, left.level);
  return out;
}

GaussianBlock gaussian_block_bound(const ZetaParams& params, const TaylorCoefficients& coeffs,
                                   int n, const QuadratureOptions& options) {
  params.validate();
  if (n < 1) throw InvalidArgument("n must be >= 1");
  GaussianBlock out;
  out.n = n;
  out.x = coeffs.alpha * n;
  const double x = out.x;
  // Conjugate symmetry folds (-delta, delta) onto (0, delta).
  const auto half = integrate(
      [&](double t) {
        return char_fn_power(params, coeffs, n, t) * std::exp(Complex(0.0, -x * t));
      },
      0.0, coeffs.delta, options);
  out.integral = std::abs(half.value.real()) / kPi;
  out.refinement_delta = half.refinement_delta / kPi;
  out.bound = 1.0 / std::sqrt(n * coeffs.beta);
  out.ratio = out.integral / out.bound;
  return out;
}

double modulus_block_integral(const ZetaParams& params, int n, double half_width,
                              const QuadratureOptions& options) {
  params.validate();
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (!(half_width >= 0.0)) throw InvalidArgument("half width must be >= 0");
  const double half = integrate_real(
      [&](double t) { return std::pow(std::abs(char_fn(params, t).value), n); }, 0.0,
      half_width, options);
  return half / kPi;
}

OutsideSup outside_neighborhood_sup(const ZetaParams& params, double delta, double t_max,
                                    double grid_step) {
  params.validate();
  if (!(delta > 0.0) || !(t_max > delta)) {
    throw InvalidArgument("outside_neighborhood_sup needs 0 < delta < t_max");
  }
  if (!(grid_step > 0.0)) throw InvalidArgument("grid step must be > 0");
  const auto cells = static_cast<int>(std::ceil((t_max - delta) / grid_step));
  const double h = (t_max - delta) / cells;
  std::vector<double> values(static_cast<std::size_t>(cells) + 1);
  double f_error = 0.0;
  for (int i = 0; i <= cells; ++i) {
    const ZetaValue f = char_fn(params, i == cells ? t_max : delta + i * h);
    values[static_cast<std::size_t>(i)] = std::abs(f.value);
    f_error = std::max(f_error, f.error_bound);
  }

  OutsideSup out;
  out.delta = delta;
  out.t_max = t_max;
  out.grid_step = h;
  out.grid_points = cells + 1;
  out.lipschitz = char_fn_lipschitz(params);
  const auto best = std::max_element(values.begin(), values.end());
  const double grid_max = *best;
  out.sup = grid_max;
  out.argmax_t = delta + static_cast<double>(best - values.begin()) * h;

  // Golden-section refinement around every grid point within reach of the max.
  const double reach = out.lipschitz * h;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i <= cells; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    if (v < grid_max - reach) continue;
    const bool left_ok = i == 0 || values[static_cast<std::size_t>(i) - 1] <= v;
    const bool right_ok = i == cells || values[static_cast<std::size_t>(i) + 1] <= v;
    if (!left_ok || !right_ok) continue;
    double a = std::max(delta, delta + (i - 1) * h);
    double b = std::min(t_max, delta + (i + 1) * h);
    auto g = [&](double t) { return std::abs(char_fn(params, t).value); };
    double c = b - golden * (b - a);
    double d = a + golden * (b - a);
    double gc = g(c);
    double gd = g(d);
    for (int iter = 0; iter < 60 && b - a > 1e-12; ++iter) {
      if (gc >= gd) {
        b = d;
        d = c;
        gd = gc;
        c = b - golden * (b - a);
        gc = g(c);
      } else {
        a = c;
        c = d;
        gc = gd;
        d = a + golden * (b - a);
        gd = g(d);
      }
    }
    const double t_best = gc >= gd ? c : d;
    const double v_best = std::max(gc, gd);
    if (v_best > out.sup) {
      out.sup = v_best;
      out.argmax_t = t_best;
    }
  }
  // Within a cell |f| exceeds its larger endpoint by at most L h / 2.
  out.certified_upper = std::max(out.sup, grid_max + 0.5 * reach) + f_error;
  out.margin = 1.0 - out.certified_upper;
  if (out.sup >= 1.0 - 16.0 * kEps - f_error) {
    throw MarginTooSmall("sup of |f| on [" + std::to_string(delta) + ", " +
                         std::to_string(t_max) + "] is not below 1");
  }
  return out;
}

SampleBatch sample(const ZetaParams& params, std::uint64_t count, std::uint64_t seed) {
  params.validate();
  if (count < 1) throw InvalidArgument("sample count must be >= 1");
  const double sigma = params.sigma;
  const double z0 = zeta(params, 0.0).value.real();

  // cdf[m - 1] = P(index <= m) for m <= kSamplerTableSize.
  std::vector<double> cdf(kSamplerTableSize);
  CompensatedSum acc;
  for (std::uint64_t m = 1; m <= kSamplerTableSize; ++m) {
    acc.add(std::pow(static_cast<double>(m), -sigma));
    cdf[m - 1] = acc.value() / z0;
  }
  const double head_mass = cdf.back();
  const double m0 = static_cast<double>(kSamplerTableSize);
  const double log_m0 = std::log(m0);

  SampleBatch batch;
  batch.sigma = sigma;
  batch.count = count;
  batch.seed = seed;
  batch.index.resize(count);
  batch.values.resize(count);
  const std::size_t chunks = chunk_count_for(count, kSampleChunk);
  for_each_chunk(chunks, params.threads, [&](std::size_t chunk) {
    const std::uint64_t lo = chunk * kSampleChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(count, lo + kSampleChunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      CounterRng rng(seed, i);
      const double u = rng.next_open01();
      double index = 0.0;
      double log_index = 0.0;
      if (u <= head_mass) {
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        index = static_cast<double>(it - cdf.begin() + 1);
        log_index = std::log(index);
      } else {
        // Pareto proposal Y = m0 V^{-1/(sigma-1)}, candidate ceil(Y), accepted
        // with probability (sigma-1) m^{-sigma} / ((m-1)^{1-sigma} - m^{1-sigma}).
        while (true) {
          const double v = rng.next_open01();
          const double log_y = log_m0 - std::log(v) / (sigma - 1.0);
          const double y = std::exp(log_y);
          if (!(y < kExactIndexLimit)) {
            index = y;
            log_index = log_y;
            break;
          }
          const double m = std::max(std::ceil(y), m0 + 1.0);
          const double cell = std::expm1((1.0 - sigma) * std::log1p(-1.0 / m));
          const double accept = (sigma - 1.0) / (m * cell);
          if (rng.next_open01() <= accept) {
            index = m;
            log_index = std::log(m);
            break;
          }
        }
      }
      batch.index[i] = index;
      batch.values[i] = log_index == 0.0 ? 0.0 : -log_index;
    }
  });
  return batch;
}

double ks_distance_normal(std::vector<double> values, double mean, double sd) {
  if (values.empty()) throw InvalidArgument("KS distance of an empty sample");
  if (!(sd > 0.0)) throw InvalidArgument("KS reference needs sd > 0");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double cdf = 0.5 * std::erfc(-(values[i] - mean) / (sd * std::sqrt(2.0)));
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - cdf,
                  cdf - static_cast<double>(i) / n});
  }
  return d;
}

double clt_check(const SampleBatch& batch, std::uint64_t group_size, double alpha,
                 double beta) {
  if (group_size < 1) throw InvalidArgument("group size must be >= 1");
  if (batch.count % group_size != 0 || batch.count < group_size) {
    throw InvalidArgument("sample count " + std::to_string(batch.count) +
                          " is not a multiple of group size " + std::to_string(group_size));
  }
  if (!(beta > 0.0)) throw InvalidArgument("beta must be > 0");
  const std::uint64_t groups = batch.count / group_size;
  const double k = static_cast<double>(group_size);
  std::vector<double> z(groups);
  for (std::uint64_t g = 0; g < groups; ++g) {
    CompensatedSum s;
    for (std::uint64_t j = 0; j < group_size; ++j) s.add(batch.values[g * group_size + j]);
    z[g] = (s.value() - k * alpha) / std::sqrt(k);
  }
  return ks_distance_normal(std::move(z), 0.0, std::sqrt(2.0 * beta));
}

LltReport llt_report(const ZetaParams& params, const TaylorCoefficients& coeffs,
                     const std::vector<int>& n_values, const LltOptions& options) {
  params.validate();
  if (n_values.empty()) throw InvalidArgument("llt_report needs at least one n");
  const HeatKernelParams hk{coeffs.beta, coeffs.alpha};
  LltReport report;
  report.sigma = params.sigma;
  report.alpha = coeffs.alpha;
  report.beta = coeffs.beta;
  report.heat_kernel_peak = heat_kernel(hk, 0.0);
  report.n_values = n_values;

  for (int n : n_values) {
    if (n < 1) throw InvalidArgument("n values must be >= 1");
    LltRecord rec;
    rec.n = n;
    rec.max_m = options.max_m.value_or(default_max_m(n, params.memory_budget_bytes));
    const double root_n = std::sqrt(static_cast<double>(n));
    const double center = coeffs.alpha * n;
    std::uint64_t retained_argmax = 1;
    {
      const ConvolutionTable table = convolution_table(params, n, rec.max_m);
      rec.tail_mass_bound = table.tail_mass_bound;
      for (const TableEntry& e : table.entries) {
        const double x = -std::log(static_cast<double>(e.m));
        const double err = std::abs(root_n * e.mass - heat_kernel(hk, (x - center) / root_n));
        if (err > rec.sup_abs_error) {
          rec.sup_abs_error = err;
          rec.argmax_x = x;
        }
        if (e.mass > rec.retained_sup_norm) {
          rec.retained_sup_norm = e.mass;
          retained_argmax = e.m;
        }
      }
    }
    const SupNorm global = global_sup(params, n);
    rec.sup_norm = global.value;
    rec.argmax_m = global.argmax_m.str();
    rec.sqrt_n_sup_norm = root_n * global.value;
    rec.mode_abs_error = std::abs(
        rec.sqrt_n_sup_norm - heat_kernel(hk, (-global.log_argmax - center) / root_n));
    const double x_cut = -std::log(static_cast<double>(rec.max_m) + 1.0);
    rec.omitted_heat_kernel_max =
        center <= x_cut ? report.heat_kernel_peak : heat_kernel(hk, (x_cut - center) / root_n);
    rec.omitted_point_mass_bound =
        root_n * std::min(rec.tail_mass_bound, global.value);
    if (options.with_quadrature) {
      rec.quad_discrepancy =
          inversion_quadrature(params, coeffs, n, retained_argmax).discrepancy;
    }
    report.per_n.push_back(rec);
  }
  for (const auto& rec : report.per_n) {
    report.measured_C = std::max(report.measured_C, rec.sqrt_n_sup_norm);
  }
  for (auto& rec : report.per_n) rec.measured_C = report.measured_C;
  return report;
}

}  // namespace zeta
