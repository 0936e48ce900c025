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

#ifndef ZETA_PARAMS_HPP_
#define ZETA_PARAMS_HPP_

#include <cstddef>
#include <cstdint>

namespace zeta {

inline constexpr std::size_t kDefaultMemoryBudgetBytes = std::size_t{256} << 20;

// Reads ZETA_MEMORY_BUDGET_MB, falling back to kDefaultMemoryBudgetBytes.
std::size_t memory_budget_from_env();

// The distribution parameter sigma together with the truncation policy every
// truncated sum in the library is held to.
struct ZetaParams {
  double sigma = 2.0;
  // Upper limit M on Dirichlet-series terms; evaluations use the smallest
  // M <= series_terms that certifies target_abs_error.
  std::int64_t series_terms = 1'000'000;
  // Sieve bound P for every prime sum.
  std::uint64_t prime_limit = 100'000'000;
  // Requested absolute error of zeta, zeta', zeta'' and derived quantities.
  double target_abs_error = 1e-12;
  // Requested absolute error of the prime-sum constants alpha and beta.
  double prime_abs_error = 1e-6;
  unsigned threads = 1;
  std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes;

  // Throws InvalidArgument on sigma <= 1, series_terms < 2, prime_limit < 2,
  // or a non-positive tolerance.
  void validate() const;

  static ZetaParams with_sigma(double sigma);
};

}  // namespace zeta

#endif  // ZETA_PARAMS_HPP_
