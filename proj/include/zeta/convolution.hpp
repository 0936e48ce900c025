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


#ifndef ZETA_CONVOLUTION_HPP_
#define ZETA_CONVOLUTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zeta/params.hpp"

namespace zeta {

using BigInt = boost::multiprecision::cpp_int;

// Mass of the n-fold convolution at -log m: count * m^{-sigma} / zeta(sigma)^n.
struct TableEntry {
  std::uint64_t m = 0;
  BigInt count;  // d_n(m), the number of ordered n-tuples with product m
  double mass = 0.0;
  double log_mass = 0.0;
};

struct ConvolutionTable {
  double sigma = 0.0;
  int n = 0;
  std::uint64_t max_m = 0;
  std::vector<TableEntry> entries;  // m = 1..max_m, ascending
  double retained_mass = 0.0;
  // Certified upper bound on the total mass at m > max_m.
  double tail_mass_bound = 0.0;
  // Relative error bound shared by every entry's mass.
  double mass_rel_error = 0.0;
};

// d_n(1..max_m) from the multiplicative formula d_n(p^k) = C(n+k-1, k);
// index 0 holds 0.
std::vector<BigInt> divisor_power_counts(int n, std::uint64_t max_m, unsigned threads = 1,
                                         std::size_t memory_budget_bytes =
                                             kDefaultMemoryBudgetBytes);

// Approximate bytes held per table entry, used for budget checks.
std::size_t table_bytes_per_entry();

// max(1e5, 2^{n/2} * 1e3), capped by the memory budget.
std::uint64_t default_max_m(int n, std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes);

// Throws TailNotCertified when tail_mass_bound exceeds tail_tolerance and
// LimitTooLarge when the table would exceed the memory budget.
ConvolutionTable convolution_table(const ZetaParams& params, int n, std::uint64_t max_m,
                                   std::optional<double> tail_tolerance = {});

// Brute-force oracle for n <= 5: repeated pairwise Dirichlet convolution of
// counts and masses, keyed by the integer product.
ConvolutionTable naive_convolution(const ZetaParams& params, int n, std::uint64_t max_m);

struct SupNorm {
  BigInt argmax_m;
  double value = 0.0;
  double log_value = 0.0;
  double log_argmax = 0.0;  // log of argmax_m
  bool certified = false;
};

// Largest retained mass, smallest m on ties. Throws SupNotCertified unless the
// global maximizer is retained or the tail bound is below the retained maximum.
SupNorm sup_norm(const ConvolutionTable& table);

// The law factors into independent negative-binomial exponents per prime, so
// the global maximizer is prod_p p^{mode_p}; smallest mode on ties.
SupNorm global_sup(const ZetaParams& params, int n);
BigInt global_argmax(double sigma, int n);

// Mass at -log m computed from the factorization of m.
double convolution_mass(const ZetaParams& params, int n, std::uint64_t m);

// log C(n+k-1, k) for k = 0..max_k, from exact binomials.
std::vector<double> log_binomials(int n, int max_k);

}  // namespace zeta

#endif  // ZETA_CONVOLUTION_HPP_
