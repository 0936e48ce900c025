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


#ifndef ZETA_CLI_HPP_
#define ZETA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace zeta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertification = 2;
inline constexpr int kExitInvalid = 3;

// Runs one command line (args excludes the program name). Reports go to
// `out` or --output; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeta

#endif  // ZETA_CLI_HPP_
