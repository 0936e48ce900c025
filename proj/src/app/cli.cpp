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


#include "zeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeta/acceptance.hpp"
#include "zeta/convolution.hpp"
#include "zeta/errors.hpp"
#include "zeta/limit_analysis.hpp"
#include "zeta/numeric.hpp"
#include "zeta/prime_levy.hpp"
#include "zeta/primes.hpp"
#include "zeta/zeta_core.hpp"

namespace zeta {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaPrefix = "zeta-llt/";

struct RunConfig {
  double sigma = 2.0;
  std::uint64_t prime_limit = 100'000'000;
  std::int64_t series_terms = 1'000'000;
  double target_abs_error = 1e-12;
  double prime_abs_error = 1e-6;
  std::optional<std::uint64_t> max_m;
  std::optional<double> tail_tolerance;
  int n = 1;
  std::vector<int> n_values;
  std::vector<std::uint64_t> m_values;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1000;
  std::optional<std::uint64_t> group_size;
  int L = 8;
  int points = 41;
  double outside_delta = 0.5;
  double t_max = kPi;
  std::string format = "json";
  std::string output;
  unsigned threads = 1;

  bool csv() const { return format == "csv"; }

  ZetaParams params() const {
    ZetaParams p;
    p.sigma = sigma;
    p.series_terms = series_terms;
    p.prime_limit = prime_limit;
    p.target_abs_error = target_abs_error;
    p.prime_abs_error = prime_abs_error;
    p.threads = threads;
    p.memory_budget_bytes = memory_budget_from_env();
    p.validate();
    return p;
  }

  std::vector<int> n_values_or(std::vector<int> fallback) const {
    const auto& v = n_values.empty() ? fallback : n_values;
    for (int n : v) {
      if (n < 1) throw InvalidArgument("--n-values entries must be >= 1");
    }
    return v;
  }
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json schema_header(const std::string& name) {
  Json j;
  j["schema"] = std::string(kSchemaPrefix) + name + "/v1";
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Coefficients {
  PrimeTable table;
  TaylorCoefficients coeffs;
};

Coefficients load_coefficients(const RunConfig& cfg, const ZetaParams& params) {
  Coefficients c;
  c.table = sieve(params.prime_limit, params.memory_budget_bytes);
  c.coeffs = taylor_coefficients(params, c.table, cfg.L);
  return c;
}

std::string cmd_constants(const RunConfig& cfg) {
  const ZetaParams params = cfg.params();
  const Coefficients c = load_coefficients(cfg, params);
  const DualConstants dual = alpha_beta_dual(params, c.table);
  const ZetaValue z = zeta(params, 0.0);
  const RealValue d1 = zeta_deriv1(params);
  const RealValue d2 = zeta_deriv2(params);
  const TaylorCoefficients& tc = c.coeffs;
  const double alpha_diff = std::abs(dual.alpha_prime_sum - dual.alpha_deriv);
  const double beta_diff = std::abs(dual.beta_prime_sum - dual.beta_deriv);

  if (cfg.csv()) {
    std::ostringstream os;
    os << "key,value\n";
    auto row = [&os](const std::string& k, double v) { os << k << ',' << fmt(v) << '\n'; };
    os << "sigma," << fmt(params.sigma) << '\n';
    os << "prime_limit," << params.prime_limit << '\n';
    os << "prime_count," << c.table.size() << '\n';
    row("zeta", z.value.real());
    row("zeta_error", z.error_bound);
    row("zeta_deriv1", d1.value);
    row("zeta_deriv1_error", d1.error_bound);
    row("zeta_deriv2", d2.value);
    row("zeta_deriv2_error", d2.error_bound);
    row("alpha_prime_sum", dual.alpha_prime_sum);
    row("alpha_prime_error", dual.alpha_prime_error);
    row("alpha_deriv", dual.alpha_deriv);
    row("alpha_deriv_error", dual.alpha_deriv_error);
    row("abs_diff", alpha_diff);
    row("beta_prime_sum", dual.beta_prime_sum);
    row("beta_prime_error", dual.beta_prime_error);
    row("beta_deriv", dual.beta_deriv);
    row("beta_deriv_error", dual.beta_deriv_error);
    row("beta_abs_diff", beta_diff);
    for (std::size_t l = 1; l < tc.a.size(); ++l) {
      const std::string k = "a_" + std::to_string(l);
      row(k + "_re", tc.a[l].real());
      row(k + "_im", tc.a[l].imag());
      row(k + "_error", tc.a_errors[l]);
    }
    row("B_const", tc.B_const);
    row("C_const", tc.C_const);
    row("radius", tc.radius);
    row("delta", tc.delta);
    row("truncation_error", tc.truncation_error);
    return os.str();
  }
  Json j = schema_header("constants");
  j["sigma"] = params.sigma;
  j["prime_limit"] = params.prime_limit;
  j["prime_count"] = c.table.size();
  j["zeta"] = {{"value", z.value.real()}, {"error_bound", z.error_bound}, {"terms", z.terms}};
  j["zeta_deriv1"] = {{"value", d1.value}, {"error_bound", d1.error_bound}, {"terms", d1.terms}};
  j["zeta_deriv2"] = {{"value", d2.value}, {"error_bound", d2.error_bound}, {"terms", d2.terms}};
  j["alpha_prime_sum"] = dual.alpha_prime_sum;
  j["alpha_prime_error"] = dual.alpha_prime_error;
  j["alpha_deriv"] = dual.alpha_deriv;
  j["alpha_deriv_error"] = dual.alpha_deriv_error;
  j["abs_diff"] = alpha_diff;
  j["beta_prime_sum"] = dual.beta_prime_sum;
  j["beta_prime_error"] = dual.beta_prime_error;
  j["beta_deriv"] = dual.beta_deriv;
  j["beta_deriv_error"] = dual.beta_deriv_error;
  j["beta_abs_diff"] = beta_diff;
  Json a = Json::array();
  for (std::size_t l = 1; l < tc.a.size(); ++l) {
    a.push_back({{"l", l}, {"re", tc.a[l].real()}, {"im", tc.a[l].imag()},
                 {"error", tc.a_errors[l]}});
  }
  j["a"] = a;
  j["B_const"] = tc.B_const;
  j["C_const"] = tc.C_const;
  j["radius"] = tc.radius;
  j["delta"] = tc.delta;
  j["truncation_error"] = tc.truncation_error;
  return dump(j);
}

std::string table_output(const RunConfig& cfg, const ConvolutionTable& t) {
  if (cfg.csv()) {
    std::ostringstream os;
    os << "# sigma=" << fmt(t.sigma) << '\n'
       << "# n=" << t.n << '\n'
       << "# max_m=" << t.max_m << '\n'
       << "# retained_mass=" << fmt(t.retained_mass) << '\n'
       << "# tail_mass_bound=" << fmt(t.tail_mass_bound) << '\n'
       << "# mass_rel_error=" << fmt(t.mass_rel_error) << '\n'
       << "m,d_n,mass,log_mass\n";
    for (const auto& e : t.entries) {
      os << e.m << ',' << e.count.str() << ',' << fmt(e.mass) << ',' << fmt(e.log_mass) << '\n';
    }
    return os.str();
  }
  Json j = schema_header("table");
  j["sigma"] = t.sigma;
  j["n"] = t.n;
  j["max_m"] = t.max_m;
  j["retained_mass"] = t.retained_mass;
  j["tail_mass_bound"] = t.tail_mass_bound;
  j["mass_rel_error"] = t.mass_rel_error;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    entries.push_back(
        {{"m", e.m}, {"d_n", e.count.str()}, {"mass", e.mass}, {"log_mass", e.log_mass}});
  }
  j["entries"] = std::move(entries);
  return dump(j);
}

std::string cmd_table(const RunConfig& cfg, int n) {
  const ZetaParams params = cfg.params();
  const std::uint64_t max_m = cfg.max_m.value_or(default_max_m(n, params.memory_budget_bytes));
  return table_output(cfg, convolution_table(params, n, max_m, cfg.tail_tolerance));
}

std::string cmd_llt(const RunConfig& cfg) {
  const ZetaParams params = cfg.params();
  const Coefficients c = load_coefficients(cfg, params);
  LltOptions opts;
  opts.max_m = cfg.max_m;
  opts.with_quadrature = true;
  const LltReport r = llt_report(params, c.coeffs, cfg.n_values_or({4, 16, 64, 256}), opts);
  if (cfg.csv()) {
    std::ostringstream os;
    os << "n,sup_abs_error,sup_norm,sqrt_n_sup_norm,quad_discrepancy\n";
    for (const auto& rec : r.per_n) {
      os << rec.n << ',' << fmt(rec.sup_abs_error) << ',' << fmt(rec.sup_norm) << ','
         << fmt(rec.sqrt_n_sup_norm) << ',' << fmt(rec.quad_discrepancy.value_or(0.0)) << '\n';
    }
    return os.str();
  }
  Json j = schema_header("llt");
  j["sigma"] = r.sigma;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["heat_kernel_peak"] = r.heat_kernel_peak;
  j["measured_C"] = r.measured_C;
  j["n_values"] = r.n_values;
  Json rows = Json::array();
  for (const auto& rec : r.per_n) {
    Json row;
    row["n"] = rec.n;
    row["max_m"] = rec.max_m;
    row["sup_abs_error"] = rec.sup_abs_error;
    row["argmax_x"] = rec.argmax_x;
    row["sup_norm"] = rec.sup_norm;
    row["argmax_m"] = rec.argmax_m;
    row["sqrt_n_sup_norm"] = rec.sqrt_n_sup_norm;
    row["measured_C"] = rec.measured_C;
    row["mode_abs_error"] = rec.mode_abs_error;
    row["retained_sup_norm"] = rec.retained_sup_norm;
    row["tail_mass_bound"] = rec.tail_mass_bound;
    row["omitted_heat_kernel_max"] = rec.omitted_heat_kernel_max;
    row["omitted_point_mass_bound"] = rec.omitted_point_mass_bound;
    row["quad_discrepancy"] = rec.quad_discrepancy.value_or(0.0);
    rows.push_back(std::move(row));
  }
  j["per_n"] = std::move(rows);
  return dump(j);
}

std::string cmd_supnorm(const RunConfig& cfg) {
  const ZetaParams params = cfg.params();
  const auto ns = cfg.n_values_or({1, 2, 4, 8, 16, 32, 64, 128, 256});
  std::vector<SupNorm> sups;
  double measured_C = 0.0;
  for (int n : ns) {
    sups.push_back(global_sup(params, n));
    measured_C = std::max(measured_C, std::sqrt(static_cast<double>(n)) * sups.back().value);
  }
  if (cfg.csv()) {
    std::ostringstream os;
    os << "# measured_C=" << fmt(measured_C) << '\n'
       << "n,argmax_m,sup_norm,log_sup_norm,sqrt_n_sup_norm\n";
    for (std::size_t i = 0; i < ns.size(); ++i) {
      os << ns[i] << ',' << sups[i].argmax_m.str() << ',' << fmt(sups[i].value) << ','
         << fmt(sups[i].log_value) << ','
         << fmt(std::sqrt(static_cast<double>(ns[i])) * sups[i].value) << '\n';
    }
    return os.str();
  }
  Json j = schema_header("supnorm");
  j["sigma"] = params.sigma;
  j["measured_C"] = measured_C;
  Json rows = Json::array();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    rows.push_back({{"n", ns[i]},
                    {"argmax_m", sups[i].argmax_m.str()},
                    {"sup_norm", sups[i].value},
                    {"log_sup_norm", sups[i].log_value},
                    {"sqrt_n_sup_norm", std::sqrt(static_cast<double>(ns[i])) * sups[i].value}});
  }
  j["per_n"] = std::move(rows);
  return dump(j);
}

std::string cmd_invert(const RunConfig& cfg) {
  const ZetaParams params = cfg.params();
  const Coefficients c = load_coefficients(cfg, params);
  const auto ns = cfg.n_values_or({1, 2});
  const std::vector<std::uint64_t> ms =
      cfg.m_values.empty() ? std::vector<std::uint64_t>{1, 2, 3} : cfg.m_values;
  QuadratureOptions q;
  q.threads = params.threads;
  std::vector<InversionResult> rows;
  for (int n : ns) {
    for (std::uint64_t m : ms) rows.push_back(inversion_quadrature(params, c.coeffs, n, m, q));
  }
  if (cfg.csv()) {
    std::ostringstream os;
    os << "n,m,value,exact_mass,discrepancy,imag_residual,refinement_delta\n";
    for (const auto& r : rows) {
      os << r.n << ',' << r.m << ',' << fmt(r.value) << ',' << fmt(r.exact_mass) << ','
         << fmt(r.discrepancy) << ',' << fmt(r.imag_residual) << ','
         << fmt(r.refinement_delta) << '\n';
    }
    return os.str();
  }
  Json j = schema_header("invert");
  j["sigma"] = params.sigma;
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"m", r.m},
                   {"value", r.value},
                   {"exact_mass", r.exact_mass},
                   {"discrepancy", r.discrepancy},
                   {"imag_residual", r.imag_residual},
                   {"refinement_delta", r.refinement_delta},
                   {"level", r.level}});
  }
  j["rows"] = std::move(arr);
  return dump(j);
}

std::string cmd_envelope(const RunConfig& cfg) {
  const ZetaParams params = cfg.params();
  const Coefficients c = load_coefficients(cfg, params);
  const EnvelopeReport r =
      envelope_check(params, c.coeffs, symmetric_grid(c.coeffs.delta, cfg.points));
  if (cfg.csv()) {
    std::ostringstream os;
    os << "# sigma=" << fmt(r.sigma) << '\n'
       << "# delta=" << fmt(r.delta) << '\n'
       << "# beta=" << fmt(c.coeffs.beta) << '\n'
       << "# B_const=" << fmt(c.coeffs.B_const) << '\n'
       << "# C_const=" << fmt(c.coeffs.C_const) << '\n'
       << "# all_hold=" << (r.all_hold ? 1 : 0) << '\n'
       << "t,abs_f,lower,upper,lower_holds,upper_holds,remainder,remainder_bound,"
          "remainder_holds\n";
    for (const auto& p : r.points) {
      os << fmt(p.t) << ',' << fmt(p.abs_f) << ',' << fmt(p.lower) << ',' << fmt(p.upper)
         << ',' << p.lower_holds << ',' << p.upper_holds << ',' << fmt(p.remainder) << ','
         << fmt(p.remainder_bound) << ',' << p.remainder_holds << '\n';
    }
    return os.str();
  }
  Json j = schema_header("envelope");
  j["sigma"] = r.sigma;
  j["delta"] = r.delta;
  j["beta"] = c.coeffs.beta;
  j["B_const"] = c.coeffs.B_const;
  j["C_const"] = c.coeffs.C_const;
  j["all_hold"] = r.all_hold;
  Json pts = Json::array();
  for (const auto& p : r.points) {
    pts.push_back({{"t", p.t},
                   {"abs_f", p.abs_f},
                   {"lower", p.lower},
                   {"upper", p.upper},
                   {"lower_holds", p.lower_holds},
                   {"upper_holds", p.upper_holds},
                   {"remainder", p.remainder},
                   {"remainder_bound", p.remainder_bound},
                   {"remainder_holds", p.remainder_holds}});
  }
  j["points"] = std::move(pts);
  return dump(j);
}

std::string cmd_block(const RunConfig& cfg) {
  const ZetaParams params = cfg.params();
  const Coefficients c = load_coefficients(cfg, params);
  QuadratureOptions q;
  q.threads = params.threads;
  std::vector<GaussianBlock> blocks;
  for (int n : cfg.n_values_or({4, 16, 64})) {
    blocks.push_back(gaussian_block_bound(params, c.coeffs, n, q));
  }
  const OutsideSup o = outside_neighborhood_sup(params, cfg.outside_delta, cfg.t_max);
  if (cfg.csv()) {
    std::ostringstream os;
    os << "# sigma=" << fmt(params.sigma) << '\n'
       << "# delta=" << fmt(c.coeffs.delta) << '\n'
       << "# outside_sup=" << fmt(o.sup) << '\n'
       << "# outside_argmax_t=" << fmt(o.argmax_t) << '\n'
       << "# outside_certified_upper=" << fmt(o.certified_upper) << '\n'
       << "n,x,integral,bound,ratio\n";
    for (const auto& b : blocks) {
      os << b.n << ',' << fmt(b.x) << ',' << fmt(b.integral) << ',' << fmt(b.bound) << ','
         << fmt(b.ratio) << '\n';
    }
    return os.str();
  }
  Json j = schema_header("block");
  j["sigma"] = params.sigma;
  j["delta"] = c.coeffs.delta;
  Json arr = Json::array();
  for (const auto& b : blocks) {
    arr.push_back({{"n", b.n},
                   {"x", b.x},
                   {"integral", b.integral},
                   {"bound", b.bound},
                   {"ratio", b.ratio},
                   {"refinement_delta", b.refinement_delta}});
  }
  j["gaussian_blocks"] = std::move(arr);
  j["outside"] = {{"delta", o.delta},
                  {"t_max", o.t_max},
                  {"sup", o.sup},
                  {"argmax_t", o.argmax_t},
                  {"grid_step", o.grid_step},
                  {"lipschitz", o.lipschitz},
                  {"certified_upper", o.certified_upper},
                  {"margin", o.margin}};
  return dump(j);
}

std::string cmd_sample(const RunConfig& cfg) {
  if (!cfg.seed) throw InvalidArgument("sample requires --seed");
  const ZetaParams params = cfg.params();
  const SampleBatch batch = sample(params, cfg.count, *cfg.seed);
  CompensatedSum total;
  for (double v : batch.values) total.add(v);
  const double mean = total.value() / static_cast<double>(batch.count);
  std::optional<double> ks;
  if (cfg.group_size) {
    const Coefficients c = load_coefficients(cfg, params);
    ks = clt_check(batch, *cfg.group_size, c.coeffs.alpha, c.coeffs.beta);
  }
  constexpr double kExact = 9007199254740992.0;
  if (cfg.csv()) {
    std::ostringstream os;
    os << "# sigma=" << fmt(batch.sigma) << '\n'
       << "# count=" << batch.count << '\n'
       << "# seed=" << batch.seed << '\n'
       << "# mean=" << fmt(mean) << '\n';
    if (ks) os << "# group_size=" << *cfg.group_size << "\n# ks_distance=" << fmt(*ks) << '\n';
    os << "i,m,value\n";
    for (std::uint64_t i = 0; i < batch.count; ++i) {
      const double m = batch.index[i];
      os << i << ',';
      if (m < kExact) {
        os << static_cast<std::uint64_t>(m);
      } else {
        os << fmt(m);
      }
      os << ',' << fmt(batch.values[i]) << '\n';
    }
    return os.str();
  }
  Json j = schema_header("sample");
  j["sigma"] = batch.sigma;
  j["count"] = batch.count;
  j["seed"] = batch.seed;
  j["mean"] = mean;
  if (ks) {
    j["group_size"] = *cfg.group_size;
    j["ks_distance"] = *ks;
  }
  Json idx = Json::array();
  for (double m : batch.index) {
    if (m < kExact) {
      idx.push_back(static_cast<std::uint64_t>(m));
    } else {
      idx.push_back(m);
    }
  }
  j["index"] = std::move(idx);
  j["values"] = batch.values;
  return dump(j);
}

std::string cmd_verify(const RunConfig& cfg, bool& all_pass) {
  AcceptanceOptions opts;
  opts.threads = cfg.threads;
  std::ostringstream os;
  all_pass = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, opts);
    all_pass = all_pass && r.pass;
    os << format_result(r) << '\n';
  }
  return os.str();
}

void add_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--sigma", cfg.sigma, "Real parameter sigma > 1");
  app.add_option("--prime-limit", cfg.prime_limit, "Sieve bound P for prime sums");
  app.add_option("--series-terms", cfg.series_terms, "Maximum Dirichlet-series terms");
  app.add_option("--target-abs-error", cfg.target_abs_error,
                 "Absolute error target for zeta, zeta', zeta''");
  app.add_option("--prime-abs-error", cfg.prime_abs_error,
                 "Absolute error target for the prime-sum constants");
  app.add_option("--max-m", cfg.max_m, "Largest retained integer m");
  app.add_option("--tail-tolerance", cfg.tail_tolerance,
                 "Fail when the certified tail mass exceeds this");
  app.add_option("--n", cfg.n, "Convolution power for conv")->check(CLI::PositiveNumber);
  app.add_option("--n-values", cfg.n_values, "Comma-separated convolution powers")
      ->delimiter(',');
  app.add_option("--m-values", cfg.m_values, "Comma-separated integers m for invert")
      ->delimiter(',');
  app.add_option("--seed", cfg.seed, "Seed of the counter-based generator");
  app.add_option("--count", cfg.count, "Number of samples")->check(CLI::PositiveNumber);
  app.add_option("--group-size", cfg.group_size, "Group size for the CLT check")
      ->check(CLI::PositiveNumber);
  app.add_option("--L", cfg.L, "Highest Taylor coefficient order")->check(CLI::Range(2, 40));
  app.add_option("--points", cfg.points, "Envelope grid points")->check(CLI::Range(1, 100000));
  app.add_option("--outside-delta", cfg.outside_delta, "Lower end for the |f| < 1 check");
  app.add_option("--t-max", cfg.t_max, "Upper end for the |f| < 1 check");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", cfg.output, "Write the report to this path");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.set_config("--config", "", "key=value file; command-line flags win");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Riemann zeta distribution: constants, convolution powers, limit checks"};
  app.name("zeta_llt");
  add_options(app, cfg);
  app.fallthrough();
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"constants", "alpha, beta by both routes, a_l, envelope constants"},
      {"pmf", "Point masses of the law (n = 1)"},
      {"conv", "Point masses of the n-fold convolution"},
      {"llt", "Local-limit comparison against the heat kernel"},
      {"supnorm", "Largest point mass of each convolution power"},
      {"invert", "Fourier-inversion quadrature against exact masses"},
      {"envelope", "Gaussian envelope and cubic remainder near t = 0"},
      {"block", "Gaussian block integral and sup of |f| away from 0"},
      {"sample", "Draws from the law; KS check with --group-size"},
      {"verify", "Run every acceptance criterion"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  int code = kExitOk;
  std::string report;
  try {
    if (command == "constants") {
      report = cmd_constants(cfg);
    } else if (command == "pmf") {
      report = cmd_table(cfg, 1);
    } else if (command == "conv") {
      report = cmd_table(cfg, cfg.n);
    } else if (command == "llt") {
      report = cmd_llt(cfg);
    } else if (command == "supnorm") {
      report = cmd_supnorm(cfg);
    } else if (command == "invert") {
      report = cmd_invert(cfg);
    } else if (command == "envelope") {
      report = cmd_envelope(cfg);
    } else if (command == "block") {
      report = cmd_block(cfg);
    } else if (command == "sample") {
      report = cmd_sample(cfg);
    } else {
      bool all_pass = false;
      report = cmd_verify(cfg, all_pass);
      if (!all_pass) code = kExitCertification;
    }
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << '\n';
    return kExitCertification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCertification;
  }

  if (cfg.output.empty()) {
    out << report;
  } else {
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    file << report;
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kExitInvalid;
    }
  }
  return code;
}

}  // namespace zeta
