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


#ifndef ZETA_QUADRATURE_HPP_
#define ZETA_QUADRATURE_HPP_

#include <complex>
#include <functional>

namespace zeta {

struct QuadratureOptions {
  double tolerance = 1e-10;  // absolute, between successive levels
  int min_level = 3;         // 2^min_level panels before the first comparison
  int max_level = 14;
  unsigned threads = 1;
};

struct ComplexQuadrature {
  std::complex<double> value;
  double refinement_delta = 0.0;  // |I_L - I_{L-1}| at the accepted level
  int level = 0;
  long evaluations = 0;
};

// Composite 20-point Gauss-Legendre on 2^L equal panels of [a, b], L doubling
// until two successive levels agree. Throws QuadratureNotConverged.
ComplexQuadrature integrate(const std::function<std::complex<double>(double)>& f, double a,
                            double b, const QuadratureOptions& options = {});

// Real-valued convenience wrapper.
double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& options = {}, double* refinement_delta = nullptr);

}  // namespace zeta

#endif  // ZETA_QUADRATURE_HPP_
