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


#include "zeta/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeta/errors.hpp"
#include "zeta/numeric.hpp"
#include "zeta/parallel.hpp"
#include "zeta/primes.hpp"
#include "zeta/zeta_core.hpp"

namespace zeta {

namespace {

constexpr std::uint64_t kCountChunk = std::uint64_t{1} << 14;
constexpr std::uint64_t kMinDefaultMaxM = 100'000;
constexpr int kMaxNaiveN = 5;

double log_bigint(const BigInt& x) {
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

std::vector<BigInt> binomials(int n, int max_k) {
  // C(n+k-1, k) = C(n+k-2, k-1) * (n+k-1) / k.
  std::vector<BigInt> c(static_cast<std::size_t>(max_k) + 1);
  c[0] = 1;
  for (int k = 1; k <= max_k; ++k) {
    c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) - 1] * (n + k - 1) / k;
  }
  return c;
}

int max_exponent(std::uint64_t max_m) {
  int k = 0;
  for (std::uint64_t v = max_m; v > 1; v >>= 1) ++k;
  return std::max(k, 1);
}

void check_n(int n) {
  if (n < 1) throw InvalidArgument("convolution power n must be >= 1");
}

void check_budget(std::uint64_t max_m, std::size_t budget) {
  if (max_m == 0) throw InvalidArgument("max_m must be >= 1");
  const long double bytes =
      static_cast<long double>(max_m) * static_cast<long double>(table_bytes_per_entry());
  if (max_m >= (std::uint64_t{1} << 32) || bytes > static_cast<long double>(budget)) {
    throw LimitTooLarge("a table with max_m=" + std::to_string(max_m) +
                        " exceeds the memory budget of " + std::to_string(budget >> 20) +
                        " MiB");
  }
}

struct LogZetaPower {
  double log_zeta = 0.0;
  double rel_error = 0.0;  // relative error of zeta^n
};

LogZetaPower log_zeta_power(const ZetaParams& params, int n) {
  const ZetaValue z = zeta(params, 0.0);
  const double z0 = z.value.real();
  LogZetaPower out;
  out.log_zeta = std::log(z0);
  out.rel_error = std::expm1(n * std::log1p(z.error_bound / (z0 - z.error_bound)));
  return out;
}

// Fills mass/log_mass, the retained sum and the tail bound from the counts.
void finish_table(ConvolutionTable& table, const LogZetaPower& lz, double max_log_scale) {
  CompensatedSum retained;
  for (std::size_t i = table.entries.size(); i-- > 0;) retained.add(table.entries[i].mass);
  table.retained_mass = retained.value();
  table.mass_rel_error = lz.rel_error + 16.0 * kEps * (1.0 + max_log_scale);
  const double s = table.retained_mass;
  const double rounding = 4.0 * kEps * s;
  table.tail_mass_bound =
      std::max(0.0, 1.0 - s) + s * table.mass_rel_error + rounding;
}

}  // namespace

std::size_t table_bytes_per_entry() {
  return sizeof(TableEntry) + sizeof(std::uint32_t) + sizeof(BigInt) + 16;
}

std::uint64_t default_max_m(int n, std::size_t memory_budget_bytes) {
  check_n(n);
  const double wanted = std::max(static_cast<double>(kMinDefaultMaxM),
                                 std::ldexp(1000.0, n / 2));
  const double cap = static_cast<double>(memory_budget_bytes / table_bytes_per_entry());
  const double chosen = std::min({wanted, cap, 4294967295.0});
  return static_cast<std::uint64_t>(chosen);
}

std::vector<double> log_binomials(int n, int max_k) {
  check_n(n);
  const auto c = binomials(n, max_k);
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = log_bigint(c[k]);
  return out;
}

std::vector<BigInt> divisor_power_counts(int n, std::uint64_t max_m, unsigned threads,
                                         std::size_t memory_budget_bytes) {
  check_n(n);
  check_budget(max_m, memory_budget_bytes);
  const SmallestPrimeFactors spf(max_m, memory_budget_bytes);
  const auto c = binomials(n, max_exponent(max_m));
  std::vector<BigInt> counts(max_m + 1);
  const std::size_t chunks = chunk_count_for(max_m, kCountChunk);
  for_each_chunk(chunks, threads, [&](std::size_t chunk) {
    const std::uint64_t lo = chunk * kCountChunk + 1;
    const std::uint64_t hi = std::min(max_m, lo + kCountChunk - 1);
    for (std::uint64_t m = lo; m <= hi; ++m) {
      BigInt d = 1;
      spf.factor(m, [&](std::uint32_t, int k) { d *= c[static_cast<std::size_t>(k)]; });
      counts[m] = std::move(d);
    }
  });
  return counts;
}

ConvolutionTable convolution_table(const ZetaParams& params, int n, std::uint64_t max_m,
                                   std::optional<double> tail_tolerance) {
  params.validate();
  check_n(n);
  check_budget(max_m, params.memory_budget_bytes);
  const double sigma = params.sigma;
  const LogZetaPower lz = log_zeta_power(params, n);
  const double log_norm = n * lz.log_zeta;

  const SmallestPrimeFactors spf(max_m, params.memory_budget_bytes);
  const int kmax = max_exponent(max_m);
  const auto c = binomials(n, kmax);
  std::vector<double> log_c(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) log_c[k] = log_bigint(c[k]);

  ConvolutionTable table;
  table.sigma = sigma;
  table.n = n;
  table.max_m = max_m;
  table.entries.resize(max_m);
  const std::size_t chunks = chunk_count_for(max_m, kCountChunk);
  std::vector<double> chunk_scale(chunks, 0.0);
  for_each_chunk(chunks, params.threads, [&](std::size_t chunk) {
    const std::uint64_t lo = chunk * kCountChunk + 1;
    const std::uint64_t hi = std::min(max_m, lo + kCountChunk - 1);
    double scale = 0.0;
    for (std::uint64_t m = lo; m <= hi; ++m) {
      TableEntry& e = table.entries[m - 1];
      e.m = m;
      e.count = 1;
      double log_d = 0.0;
      spf.factor(m, [&](std::uint32_t, int k) {
        e.count *= c[static_cast<std::size_t>(k)];
        log_d += log_c[static_cast<std::size_t>(k)];
      });
      const double log_m = std::log(static_cast<double>(m));
      e.log_mass = log_d - sigma * log_m - log_norm;
      e.mass = std::exp(e.log_mass);
      scale = std::max(scale, log_d + sigma * log_m + log_norm);
    }
    chunk_scale[chunk] = scale;
  });
  finish_table(table, lz, *std::max_element(chunk_scale.begin(), chunk_scale.end()));
  if (tail_tolerance && table.tail_mass_bound > *tail_tolerance) {
    throw TailNotCertified("tail mass bound " + std::to_string(table.tail_mass_bound) +
                           " for n=" + std::to_string(n) + ", max_m=" +
                           std::to_string(max_m) + " exceeds tolerance " +
                           std::to_string(*tail_tolerance));
  }
  return table;
}

ConvolutionTable naive_convolution(const ZetaParams& params, int n, std::uint64_t max_m) {
  params.validate();
  check_n(n);
  if (n > kMaxNaiveN) {
    throw InvalidArgument("naive_convolution is an oracle for n <= " +
                          std::to_string(kMaxNaiveN));
  }
  check_budget(max_m, params.memory_budget_bytes);
  const double sigma = params.sigma;
  const LogZetaPower lz = log_zeta_power(params, n);
  const double z0 = std::exp(lz.log_zeta);

  std::vector<double> pmf(max_m + 1, 0.0);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    pmf[m] = std::pow(static_cast<double>(m), -sigma) / z0;
  }
  std::vector<BigInt> count(max_m + 1, 0);
  std::vector<double> mass = pmf;
  for (std::uint64_t m = 1; m <= max_m; ++m) count[m] = 1;

  // Every factorization of m <= max_m uses factors <= max_m, so truncating
  // both operands at max_m loses nothing on the retained support.
  for (int step = 2; step <= n; ++step) {
    std::vector<BigInt> next_count(max_m + 1, 0);
    std::vector<double> next_mass(max_m + 1, 0.0);
    for (std::uint64_t a = 1; a <= max_m; ++a) {
      for (std::uint64_t b = 1; b <= max_m / a; ++b) {
        next_count[a * b] += count[a];
        next_mass[a * b] += mass[a] * pmf[b];
      }
    }
    count = std::move(next_count);
    mass = std::move(next_mass);
  }

  ConvolutionTable table;
  table.sigma = sigma;
  table.n = n;
  table.max_m = max_m;
  table.entries.resize(max_m);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    TableEntry& e = table.entries[m - 1];
    e.m = m;
    e.count = count[m];
    e.mass = mass[m];
    e.log_mass = std::log(mass[m]);
  }
  finish_table(table, lz, n * std::abs(lz.log_zeta) + sigma * std::log(max_m) + n);
  return table;
}

BigInt global_argmax(double sigma, int n) {
  if (!(sigma > 1.0)) throw InvalidArgument("sigma must satisfy sigma > 1");
  check_n(n);
  const bool integral = sigma == std::floor(sigma) && sigma <= 60.0;
  BigInt m = 1;
  // mode_p = ceil(x) - 1 with x = (n-1) q/(1-q), q = p^{-sigma}; it vanishes once
  // x <= 1, i.e. p^sigma >= n.
  for (std::uint64_t p = 2;; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    const double p_sigma = std::pow(static_cast<double>(p), sigma);
    if (p_sigma >= static_cast<double>(n)) break;
    std::uint64_t mode = 0;
    if (integral) {
      // x = (n-1)/(p^sigma - 1) exactly.
      const BigInt denom = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(sigma)) - 1;
      const BigInt num = n - 1;
      const BigInt q = num / denom;
      mode = static_cast<std::uint64_t>(num % denom == 0 ? q - 1 : q);
    } else {
      const double x = (n - 1) / (p_sigma - 1.0);
      mode = static_cast<std::uint64_t>(std::ceil(x)) - 1;
    }
    m *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(mode));
  }
  return m;
}

SupNorm global_sup(const ZetaParams& params, int n) {
  params.validate();
  const BigInt m_star = global_argmax(params.sigma, n);
  const LogZetaPower lz = log_zeta_power(params, n);
  const auto logc = log_binomials(n, std::max<int>(1, static_cast<int>(
                                             boost::multiprecision::msb(m_star)) + 1));
  double log_d = 0.0;
  double log_m = 0.0;
  BigInt rest = m_star;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k > 0) {
      log_d += logc[static_cast<std::size_t>(k)];
      log_m += k * std::log(static_cast<double>(p));
    }
  }
  SupNorm out;
  out.argmax_m = m_star;
  out.log_argmax = log_m;
  out.log_value = log_d - params.sigma * log_m - n * lz.log_zeta;
  out.value = std::exp(out.log_value);
  out.certified = true;
  return out;
}

SupNorm sup_norm(const ConvolutionTable& table) {
  if (table.entries.empty()) throw InvalidArgument("sup_norm of an empty table");
  const bool integral = table.sigma == std::floor(table.sigma) && table.sigma <= 60.0;
  const auto exp_sigma = static_cast<unsigned>(table.sigma);
  const TableEntry* best = &table.entries.front();
  for (const TableEntry& e : table.entries) {
    if (e.log_mass > best->log_mass + 1e-12) {
      best = &e;
    } else if (integral && e.log_mass > best->log_mass - 1e-12) {
      // Near-tie: compare count * m^{-sigma} exactly.
      const BigInt lhs = e.count * boost::multiprecision::pow(BigInt(best->m), exp_sigma);
      const BigInt rhs = best->count * boost::multiprecision::pow(BigInt(e.m), exp_sigma);
      if (lhs > rhs) best = &e;
    } else if (!integral && e.log_mass > best->log_mass) {
      best = &e;
    }
  }
  SupNorm out;
  out.argmax_m = best->m;
  out.value = best->mass;
  out.log_value = best->log_mass;
  out.log_argmax = std::log(static_cast<double>(best->m));
  const BigInt m_star = global_argmax(table.sigma, table.n);
  out.certified = m_star <= table.max_m || table.tail_mass_bound <= out.value;
  if (!out.certified) {
    throw SupNotCertified("retained maximum " + std::to_string(out.value) +
                          " is below the tail bound " +
                          std::to_string(table.tail_mass_bound) + " for n=" +
                          std::to_string(table.n));
  }
  return out;
}

double convolution_mass(const ZetaParams& params, int n, std::uint64_t m) {
  params.validate();
  check_n(n);
  if (m == 0) throw InvalidArgument("m must be >= 1");
  const LogZetaPower lz = log_zeta_power(params, n);
  const auto logc = log_binomials(n, 64);
  double log_d = 0.0;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    log_d += logc[static_cast<std::size_t>(k)];
  }
  if (rest > 1) log_d += logc[1];
  return std::exp(log_d - params.sigma * std::log(static_cast<double>(m)) -
                  n * lz.log_zeta);
}

}  // namespace zeta
