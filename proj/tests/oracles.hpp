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


// Test-side oracles that share no code with the library.

#ifndef ZETA_TESTS_ORACLES_HPP_
#define ZETA_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

// sum_{m=1}^{M} (log m)^k m^{-s} in long double, ascending.
inline long double log_weighted_partial(int k, double s, std::int64_t M) {
  long double total = 0.0L;
  for (std::int64_t m = M; m >= 1; --m) {
    const long double lm = std::log(static_cast<long double>(m));
    total += std::pow(lm, k) * std::exp(-s * lm);
  }
  return total;
}

// sum_{m=1}^{M} m^{-s} for complex s, plus the leading integral tail
// M^{1-s}/(s-1) - M^{-s}/2.
inline std::complex<long double> zeta_partial_with_tail(double sigma, double t,
                                                        std::int64_t M) {
  std::complex<long double> total(0.0L, 0.0L);
  for (std::int64_t m = M; m >= 1; --m) {
    const long double lm = std::log(static_cast<long double>(m));
    const long double mag = std::exp(-sigma * lm);
    total += std::complex<long double>(mag * std::cos(t * lm), -mag * std::sin(t * lm));
  }
  const std::complex<long double> s(sigma, t);
  const long double lM = std::log(static_cast<long double>(M));
  const std::complex<long double> m_pow = std::exp(-s * lM);
  return total + m_pow * static_cast<long double>(M) / (s - 1.0L) - 0.5L * m_pow;
}

// Number of ordered n-tuples of positive integers with product m, by
// recursion over the first factor.
inline std::uint64_t ordered_factorizations(int n, std::uint64_t m) {
  if (n == 1) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) total += ordered_factorizations(n - 1, m / d);
  }
  return total;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace oracle

#endif  // ZETA_TESTS_ORACLES_HPP_
