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


#include "zeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 18;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Upper bound on pi(x) (Rosser-Schoenfeld, x >= 17), used for reservation.
std::size_t prime_count_upper(std::uint64_t x) {
  if (x < 17) return 7;
  const double dx = static_cast<double>(x);
  return static_cast<std::size_t>(1.25506 * dx / std::log(dx)) + 1;
}

}  // namespace

PrimeTable sieve(std::uint64_t limit, std::size_t memory_budget_bytes) {
  if (limit < 2) throw InvalidArgument("sieve limit must be >= 2");
  if (limit >= (std::uint64_t{1} << 32)) {
    throw LimitTooLarge("sieve limit " + std::to_string(limit) +
                        " exceeds the 32-bit prime table range");
  }
  const std::size_t expected = prime_count_upper(limit);
  const std::size_t bytes = expected * sizeof(std::uint32_t) + kSegmentSize;
  if (bytes > memory_budget_bytes) {
    throw LimitTooLarge("prime table up to " + std::to_string(limit) + " needs ~" +
                        std::to_string(bytes >> 20) + " MiB, above the memory budget");
  }

  PrimeTable table;
  table.limit = limit;
  table.primes.reserve(expected);
  table.primes.push_back(2);

  // Odd base primes up to sqrt(limit) by a plain sieve.
  const std::uint64_t root = isqrt(limit);
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint32_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }

  // Segment covers odd numbers lo, lo+2, ..., bit i <-> lo + 2i.
  std::vector<char> seg(kSegmentSize);
  for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentSize) {
    const std::uint64_t hi = std::min(limit, lo + 2 * kSegmentSize - 1);
    const std::uint64_t len = (hi - lo) / 2 + 1;
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(len), 1);
    for (const std::uint32_t p : base) {
      const std::uint64_t pp = std::uint64_t{p} * p;
      if (pp > hi) break;
      std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t j = (start - lo) / 2; j < len; j += p) seg[j] = 0;
    }
    for (std::uint64_t i = 0; i < len; ++i) {
      if (seg[i]) table.primes.push_back(static_cast<std::uint32_t>(lo + 2 * i));
    }
  }
  return table;
}

SmallestPrimeFactors::SmallestPrimeFactors(std::uint64_t limit,
                                           std::size_t memory_budget_bytes) {
  if (limit < 1) throw InvalidArgument("factor table limit must be >= 1");
  if (limit >= (std::uint64_t{1} << 32) ||
      (limit + 1) * sizeof(std::uint32_t) > memory_budget_bytes) {
    throw LimitTooLarge("smallest-prime-factor table up to " + std::to_string(limit) +
                        " exceeds the memory budget");
  }
  spf_.assign(limit + 1, 0);
  for (std::uint64_t m = 2; m <= limit; m += 2) spf_[m] = 2;
  const std::uint64_t root = isqrt(limit);
  for (std::uint64_t p = 3; p <= limit; p += 2) {
    if (spf_[p] != 0) continue;
    spf_[p] = static_cast<std::uint32_t>(p);
    if (p > root) continue;
    for (std::uint64_t j = p * p; j <= limit; j += 2 * p) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(p);
    }
  }
}

}  // namespace zeta
