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


#ifndef ZETA_PRIMES_HPP_
#define ZETA_PRIMES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zeta/params.hpp"

namespace zeta {

// All primes <= limit, ascending. Immutable after construction.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;

  std::size_t size() const { return primes.size(); }
};

// Segmented sieve of Eratosthenes over odd numbers. Throws LimitTooLarge when
// limit >= 2^32 or the table would exceed memory_budget_bytes.
PrimeTable sieve(std::uint64_t limit,
                 std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes);

// spf[m] is the smallest prime factor of m for 2 <= m <= limit; spf[0] and
// spf[1] are 0.
class SmallestPrimeFactors {
 public:
  explicit SmallestPrimeFactors(std::uint64_t limit,
                                std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes);

  std::uint64_t limit() const { return spf_.size() - 1; }
  std::uint32_t operator[](std::uint64_t m) const { return spf_[m]; }

  // (prime, exponent) pairs of m in ascending prime order.
  template <typename Fn>
  void factor(std::uint64_t m, Fn&& on_prime_power) const {
    while (m > 1) {
      const std::uint32_t p = spf_[m];
      int k = 0;
      do {
        m /= p;
        ++k;
      } while (m % p == 0);
      on_prime_power(p, k);
    }
  }

 private:
  std::vector<std::uint32_t> spf_;
};

}  // namespace zeta

#endif  // ZETA_PRIMES_HPP_
