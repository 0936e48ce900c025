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

#ifndef ZETA_NUMERIC_HPP_
#define ZETA_NUMERIC_HPP_

#include <cmath>
#include <complex>
#include <limits>

namespace zeta {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Neumaier's variant of Kahan summation. The error of the final value is
// bounded by 2*eps*sum|x_i| independently of the number of terms.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

// Integral of (log x)^k x^{-s} over [a, b] for 1 <= a <= b, k >= 0, s != 1.
// b may be +infinity when s > 1. Uses the elementary antiderivative
//   -x^{1-s} * sum_{j=0}^{k} k!/j! (log x)^j / (s-1)^{k-j+1}.
double log_power_integral(int k, double s, double a, double b = kInf);

// (log x)^k x^{-s}
inline double log_power(int k, double s, double x) {
  const double u = std::log(x);
  return std::pow(u, k) * std::exp(-s * u);
}

}  // namespace zeta

#endif  // ZETA_NUMERIC_HPP_
