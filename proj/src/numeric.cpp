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

#include "zeta/numeric.hpp"

#include <cmath>

namespace zeta {

namespace {

// -x^{1-s} * sum_j k!/j! u^j / c^{k-j+1} with u = log x, c = s - 1.
double antiderivative(int k, double c, double x) {
  if (std::isinf(x)) return 0.0;
  const double u = std::log(x);
  double coef = 1.0 / c;  // j = k
  double poly = 0.0;
  for (int j = k; j >= 0; --j) {
    poly += coef * std::pow(u, j);
    coef *= j / c;
  }
  return -std::exp(-c * u) * poly;
}

}  // namespace

double log_power_integral(int k, double s, double a, double b) {
  if (!(b > a)) return 0.0;
  const double c = s - 1.0;
  return antiderivative(k, c, b) - antiderivative(k, c, a);
}

}  // namespace zeta
