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

#include "zeta/params.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "zeta/errors.hpp"

namespace zeta {

std::size_t memory_budget_from_env() {
  const char* raw = std::getenv("ZETA_MEMORY_BUDGET_MB");
  if (raw == nullptr || *raw == '\0') return kDefaultMemoryBudgetBytes;
  char* end = nullptr;
  const unsigned long long mb = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || mb == 0) {
    throw InvalidArgument("ZETA_MEMORY_BUDGET_MB must be a positive integer");
  }
  return static_cast<std::size_t>(mb) << 20;
}

void ZetaParams::validate() const {
  if (!(sigma > 1.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("sigma must satisfy sigma > 1 (got " +
                          std::to_string(sigma) + ")");
  }
  if (series_terms < 2) throw InvalidArgument("series_terms must be >= 2");
  if (prime_limit < 2) throw InvalidArgument("prime_limit must be >= 2");
  if (!(target_abs_error > 0.0)) {
    throw InvalidArgument("target_abs_error must be > 0");
  }
  if (!(prime_abs_error > 0.0)) {
    throw InvalidArgument("prime_abs_error must be > 0");
  }
  if (memory_budget_bytes == 0) {
    throw InvalidArgument("memory budget must be positive");
  }
}

ZetaParams ZetaParams::with_sigma(double sigma) {
  ZetaParams params;
  params.sigma = sigma;
  params.validate();
  return params;
}

}  // namespace zeta
