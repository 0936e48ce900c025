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


#include "zeta/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "zeta/errors.hpp"
#include "zeta/numeric.hpp"
#include "zeta/parallel.hpp"

namespace zeta {

namespace {

constexpr int kPoints = 20;

struct GaussLegendre {
  std::array<double, kPoints> nodes{};
  std::array<double, kPoints> weights{};
};

// Nodes by Newton iteration on P_20 from the Chebyshev-like initial guess.
GaussLegendre make_rule() {
  GaussLegendre rule;
  for (int i = 0; i < kPoints; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (kPoints + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= kPoints; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = kPoints * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendre& rule() {
  static const GaussLegendre r = make_rule();
  return r;
}

std::complex<double> composite(const std::function<std::complex<double>(double)>& f,
                               double a, double b, int level, unsigned threads) {
  const std::size_t panels = std::size_t{1} << level;
  const double h = (b - a) / static_cast<double>(panels);
  const GaussLegendre& gl = rule();
  std::vector<std::complex<double>> sums(panels);
  for_each_chunk(panels, threads, [&](std::size_t p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    std::complex<double> s(0.0, 0.0);
    for (int i = 0; i < kPoints; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      s += gl.weights[idx] * f(mid + 0.5 * h * gl.nodes[idx]);
    }
    sums[p] = 0.5 * h * s;
  });
  CompensatedComplexSum total;
  for (const auto& s : sums) total.add(s);
  return total.value();
}

}  // namespace

ComplexQuadrature integrate(const std::function<std::complex<double>(double)>& f, double a,
                            double b, const QuadratureOptions& options) {
  if (!(b >= a)) throw InvalidArgument("integration bounds must satisfy a <= b");
  if (options.min_level < 0 || options.max_level <= options.min_level) {
    throw InvalidArgument("quadrature levels must satisfy 0 <= min_level < max_level");
  }
  ComplexQuadrature out;
  std::complex<double> prev = composite(f, a, b, options.min_level, options.threads);
  out.evaluations = static_cast<long>(kPoints) << options.min_level;
  double delta = kInf;
  for (int level = options.min_level + 1; level <= options.max_level; ++level) {
    const std::complex<double> cur = composite(f, a, b, level, options.threads);
    out.evaluations += static_cast<long>(kPoints) << level;
    delta = std::abs(cur - prev);
    prev = cur;
    if (delta <= options.tolerance) {
      out.value = cur;
      out.refinement_delta = delta;
      out.level = level;
      return out;
    }
  }
  throw QuadratureNotConverged("quadrature on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "] still changes by " +
                               std::to_string(delta) + " at 2^" +
                               std::to_string(options.max_level) + " panels");
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& options, double* refinement_delta) {
  const auto result = integrate(
      [&f](double t) { return std::complex<double>(f(t), 0.0); }, a, b, options);
  if (refinement_delta != nullptr) *refinement_delta = result.refinement_delta;
  return result.value.real();
}

}  // namespace zeta
