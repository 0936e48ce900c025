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


#include "zeta/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "zeta/cli.hpp"
#include "zeta/convolution.hpp"
#include "zeta/errors.hpp"
#include "zeta/limit_analysis.hpp"
#include "zeta/numeric.hpp"
#include "zeta/prime_levy.hpp"
#include "zeta/primes.hpp"
#include "zeta/zeta_core.hpp"

namespace zeta {

namespace {

constexpr std::uint64_t kFullPrimeLimit = 100'000'000;
constexpr std::uint64_t kLevyPrimeLimit = 10'000'000;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

const PrimeTable& cached_table(std::uint64_t limit) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<PrimeTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[limit];
  if (!slot) slot = std::make_unique<PrimeTable>(sieve(limit));
  return *slot;
}

ZetaParams params_for(double sigma, std::uint64_t prime_limit, const AcceptanceOptions& o) {
  ZetaParams p;
  p.sigma = sigma;
  p.prime_limit = prime_limit;
  p.threads = o.threads;
  p.validate();
  return p;
}

CriterionResult dual_representation(const AcceptanceOptions& o) {
  CriterionResult r{1, "dual-representation agreement", true, ""};
  std::ostringstream d;
  for (double sigma : {1.5, 2.0, 3.0, 5.0}) {
    const ZetaParams p = params_for(sigma, kFullPrimeLimit, o);
    const DualConstants dual = alpha_beta_dual(p, cached_table(kFullPrimeLimit));
    const double da = std::abs(dual.alpha_prime_sum - dual.alpha_deriv);
    const double db = std::abs(dual.beta_prime_sum - dual.beta_deriv);
    r.pass = r.pass && da <= 1e-8 && db <= 1e-8;
    d << "sigma=" << sigma << " |dalpha|=" << sci(da) << " |dbeta|=" << sci(db) << "; ";
  }
  r.detail = d.str() + "tolerance 1e-8";
  return r;
}

CriterionResult levy_khintchine(const AcceptanceOptions& o) {
  CriterionResult r{2, "Levy-Khintchine consistency", true, ""};
  const ZetaParams p = params_for(2.0, kLevyPrimeLimit, o);
  const LevyMeasure measure = levy_atoms(p, cached_table(kLevyPrimeLimit));
  const auto grid = symmetric_grid(5.0, 201);
  double worst = 0.0;
  for (double t : grid) {
    const Complex lk = std::exp(levy_khintchine_exponent(measure, t).value);
    worst = std::max(worst, std::abs(lk - char_fn(p, t).value));
  }
  r.pass = worst <= 1e-7;
  r.detail = "max |exp(Gamma) - f| over 201 points on [-5,5] = " + sci(worst) +
             " (tolerance 1e-7, P=1e7)";
  return r;
}

CriterionResult oracle_equivalence(const AcceptanceOptions& o) {
  CriterionResult r{3, "multiplicative vs naive convolution", true, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  double worst = 0.0;
  bool counts_equal = true;
  for (int n = 1; n <= 4; ++n) {
    const auto fast = convolution_table(p, n, 200);
    const auto slow = naive_convolution(p, n, 200);
    for (std::size_t i = 0; i < fast.entries.size(); ++i) {
      counts_equal = counts_equal && fast.entries[i].count == slow.entries[i].count &&
                     fast.entries[i].m == slow.entries[i].m;
      worst = std::max(worst, std::abs(fast.entries[i].mass - slow.entries[i].mass));
    }
  }
  r.pass = counts_equal && worst <= 1e-12;
  r.detail = std::string("counts ") + (counts_equal ? "identical" : "DIFFER") +
             ", max mass difference " + sci(worst) + " (tolerance 1e-12), n=1..4, max_m=200";
  return r;
}

CriterionResult normalization(const AcceptanceOptions& o) {
  CriterionResult r{4, "normalization bracket", true, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  std::ostringstream d;
  for (int n = 1; n <= 3; ++n) {
    const auto t = convolution_table(p, n, 100'000);
    const double upper = t.retained_mass + t.tail_mass_bound;
    const bool ok = upper >= 1.0 && upper - 1.0 <= 1e-10 &&
                    t.retained_mass <= 1.0 + t.mass_rel_error;
    r.pass = r.pass && ok;
    d << "n=" << n << " 1-retained=" << sci(1.0 - t.retained_mass)
      << " retained+tail-1=" << sci(upper - 1.0) << "; ";
  }
  r.detail = d.str() + "tolerance 1e-10";
  return r;
}

CriterionResult envelopes(const AcceptanceOptions& o) {
  CriterionResult r{5, "Gaussian envelopes and cubic remainder", true, ""};
  std::ostringstream d;
  for (double sigma : {1.5, 2.0, 3.0}) {
    const ZetaParams p = params_for(sigma, kFullPrimeLimit, o);
    const auto coeffs = taylor_coefficients(p, cached_table(kFullPrimeLimit));
    const auto rep = envelope_check(p, coeffs, symmetric_grid(coeffs.delta, 41));
    int failures = 0;
    for (const auto& pt : rep.points) {
      failures += !pt.lower_holds + !pt.upper_holds + !pt.remainder_holds;
    }
    r.pass = r.pass && rep.all_hold && rep.points.size() == 41;
    d << "sigma=" << sigma << " delta=" << sci(coeffs.delta) << " violations=" << failures
      << "; ";
  }
  r.detail = d.str() + "41 points on |t| <= delta";
  return r;
}

CriterionResult llt_convergence(const AcceptanceOptions& o) {
  CriterionResult r{6, "local limit convergence", false, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  const auto coeffs = taylor_coefficients(p, cached_table(kFullPrimeLimit));
  const std::vector<int> ns = {4, 16, 64, 256};
  const auto rep = llt_report(p, coeffs, ns);
  std::vector<double> e;
  for (const auto& rec : rep.per_n) e.push_back(rec.sup_abs_error);
  int inversions = 0;
  bool small_inversions = true;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i + 1] > e[i]) {
      ++inversions;
      small_inversions = small_inversions && e[i + 1] <= 1.1 * e[i];
    }
  }
  const bool decrease = e.back() < e.front() && inversions <= 1 && small_inversions;
  const double peak = rep.heat_kernel_peak;
  const double scaled = rep.per_n.back().sqrt_n_sup_norm;
  const bool near_peak = std::abs(scaled - peak) <= 0.25 * peak;
  r.pass = decrease && near_peak;
  std::ostringstream d;
  d << "sup_abs_error n=4,16,64,256: " << sci(e[0]) << ", " << sci(e[1]) << ", " << sci(e[2])
    << ", " << sci(e[3]) << " (decrease " << (decrease ? "ok" : "FAILS") << "); "
    << "sqrt(256) sup = " << sci(scaled) << " vs p(0) = " << sci(peak) << " +-25% ("
    << (near_peak ? "ok" : "FAILS") << ")";
  r.detail = d.str();
  return r;
}

CriterionResult supnorm_bound(const AcceptanceOptions& o) {
  CriterionResult r{7, "sup-norm bound", false, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  const auto coeffs = taylor_coefficients(p, cached_table(kFullPrimeLimit));
  const double peak = heat_kernel({coeffs.beta, coeffs.alpha}, 0.0);
  double measured_C = 0.0;
  int argmax_n = 0;
  bool below_band = true;
  bool below_C = true;
  std::vector<std::pair<int, double>> scaled;
  for (int n = 1; n <= 256; n *= 2) {
    const double s = std::sqrt(static_cast<double>(n)) * global_sup(p, n).value;
    scaled.emplace_back(n, s);
    if (s > measured_C) {
      measured_C = s;
      argmax_n = n;
    }
    if (n >= 4) below_band = below_band && s <= 3.0 * peak;
  }
  for (const auto& [n, s] : scaled) below_C = below_C && s <= measured_C;
  r.pass = std::isfinite(measured_C) && argmax_n <= 4 && below_band && below_C;
  r.detail = "measured_C = " + sci(measured_C) + " at n=" + std::to_string(argmax_n) +
             ", max over n>=4 of sqrt(n) sup <= 3 p(0) = " + sci(3.0 * peak) + ": " +
             (below_band ? "ok" : "FAILS");
  return r;
}

CriterionResult gaussian_block(const AcceptanceOptions& o) {
  CriterionResult r{8, "Gaussian block bound", true, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  const auto coeffs = taylor_coefficients(p, cached_table(kFullPrimeLimit));
  std::ostringstream d;
  for (int n : {4, 16, 64}) {
    const auto b = gaussian_block_bound(p, coeffs, n);
    r.pass = r.pass && b.ratio <= 1.0;
    d << "n=" << n << " ratio=" << sci(b.ratio) << "; ";
  }
  r.detail = d.str() + "block at x = alpha n must not exceed 1/sqrt(n beta)";
  return r;
}

CriterionResult outside_decay(const AcceptanceOptions& o) {
  CriterionResult r{9, "decay away from t = 0", false, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  const auto s = outside_neighborhood_sup(p, 0.5, kPi);
  r.pass = s.certified_upper < 1.0 - 1e-3;
  r.detail = "sup |f| on [0.5, pi] = " + sci(s.sup) + " at t=" + sci(s.argmax_t) +
             ", certified upper " + sci(s.certified_upper) + " (must be < 0.999)";
  return r;
}

CriterionResult monte_carlo_clt(const AcceptanceOptions& o) {
  CriterionResult r{10, "Monte Carlo CLT", false, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  const auto coeffs = taylor_coefficients(p, cached_table(kFullPrimeLimit));
  const auto batch = sample(p, 4000 * 256, 7);
  const double ks = clt_check(batch, 256, coeffs.alpha, coeffs.beta);
  const double control = clt_check(batch, 1, coeffs.alpha, coeffs.beta);
  r.pass = ks < 0.05 && control >= 0.05;
  r.detail = "KS(group 256) = " + sci(ks) + " < 0.05; negative control KS(group 1) = " +
             sci(control) + " >= 0.05";
  return r;
}

CriterionResult inversion_audit(const AcceptanceOptions& o) {
  CriterionResult r{11, "inversion-formula audit", true, ""};
  const ZetaParams p = params_for(2.0, kFullPrimeLimit, o);
  const auto coeffs = taylor_coefficients(p, cached_table(kFullPrimeLimit));
  std::ostringstream d;
  for (int n : {1, 2}) {
    for (std::uint64_t m : {1, 2, 3}) {
      const auto inv = inversion_quadrature(p, coeffs, n, m);
      r.pass = r.pass && inv.refinement_delta <= 1e-10 && inv.imag_residual <= 1e-10;
      d << "(" << n << "," << m << ") discrepancy=" << sci(inv.discrepancy) << "; ";
    }
  }
  r.detail = d.str() + "quadrature converged to 1e-10; equality not asserted";
  return r;
}

CriterionResult determinism(const AcceptanceOptions&) {
  CriterionResult r{12, "CLI determinism", true, ""};
  const std::vector<std::vector<std::string>> runs = {
      {"constants", "--sigma", "2", "--prime-limit", "1000000"},
      {"constants", "--sigma", "2", "--prime-limit", "1000000", "--format", "csv"},
      {"pmf", "--sigma", "2", "--max-m", "2000"},
      {"conv", "--sigma", "2", "--n", "3", "--max-m", "2000", "--format", "csv"},
      {"llt", "--sigma", "2", "--n-values", "4,16", "--max-m", "20000", "--prime-limit",
       "1000000"},
      {"supnorm", "--sigma", "2", "--n-values", "1,4,16,64"},
      {"invert", "--sigma", "2", "--n-values", "1", "--m-values", "1,2", "--prime-limit",
       "1000000"},
      {"envelope", "--sigma", "2", "--points", "11", "--prime-limit", "1000000"},
      {"block", "--sigma", "2", "--n-values", "4", "--prime-limit", "1000000"},
      {"sample", "--sigma", "2", "--count", "1000", "--seed", "7"},
      {"sample", "--sigma", "2", "--count", "4096", "--seed", "7", "--group-size", "16",
       "--prime-limit", "1000000", "--format", "csv"},
  };
  int compared = 0;
  std::string failed;
  for (const auto& base : runs) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "3"}) {
      auto args = base;
      args.insert(args.end(), {"--threads", threads});
      std::ostringstream out;
      std::ostringstream err;
      const int code = run_cli(args, out, err);
      outputs.push_back(std::to_string(code) + "\n" + out.str());
      if (code != kExitOk) failed += base.front() + "(exit " + std::to_string(code) + ") ";
    }
    ++compared;
    if (outputs[0] != outputs[1] || outputs[0] != outputs[2]) failed += base.front() + " ";
  }
  r.pass = failed.empty();
  r.detail = std::to_string(compared) + " invocations run twice at --threads 1 and once at 3" +
             (failed.empty() ? ", all byte-identical" : "; differing: " + failed);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  static const std::vector<std::function<CriterionResult(const AcceptanceOptions&)>> table = {
      dual_representation, levy_khintchine, oracle_equivalence, normalization,
      envelopes,           llt_convergence, supnorm_bound,      gaussian_block,
      outside_decay,       monte_carlo_clt, inversion_audit,    determinism};
  if (id < 1 || id > kCriterionCount) {
    throw InvalidArgument("criterion id must lie in 1.." + std::to_string(kCriterionCount));
  }
  try {
    return table[static_cast<std::size_t>(id - 1)](options);
  } catch (const std::exception& e) {
    return CriterionResult{id, "criterion " + std::to_string(id), false,
                           std::string("error: ") + e.what()};
  }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& result) {
  char head[16];
  std::snprintf(head, sizeof head, "%s %2d ", result.pass ? "PASS" : "FAIL", result.id);
  return head + result.name + ": " + result.detail;
}

}  // namespace zeta
