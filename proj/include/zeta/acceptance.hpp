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


#ifndef ZETA_ACCEPTANCE_HPP_
#define ZETA_ACCEPTANCE_HPP_

#include <string>
#include <vector>

namespace zeta {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  unsigned threads = 1;
};

inline constexpr int kCriterionCount = 12;

// Criterion ids run from 1 to kCriterionCount. Errors thrown by the
// computation are reported as FAIL with the message as detail.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// "PASS  3  name: detail".
std::string format_result(const CriterionResult& result);

}  // namespace zeta

#endif  // ZETA_ACCEPTANCE_HPP_
