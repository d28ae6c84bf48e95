#include "wtrv/gof.hpp"

#include <algorithm>
#include <cmath>

namespace wtrv {

GofTest parse_gof_test(const std::string& name) {
  if (name == "ks") return GofTest::ks;
  if (name == "ad") return GofTest::ad;
  if (name == "cvm") return GofTest::cvm;
  if (name == "chisq") return GofTest::chisq;
  throw ParseError("unknown test '" + name + "'");
}

std::string to_string(GofTest test) {
  switch (test) {
    case GofTest::ks: return "ks";
    case GofTest::ad: return "ad";
    case GofTest::cvm: return "cvm";
    case GofTest::chisq: return "chisq";
  }
  return "?";
}

std::string to_string(PValueMethod method) {
  return method == PValueMethod::bootstrap ? "bootstrap" : "asymptotic";
}

namespace {

void require_sorted(const std::vector<double>& s, std::size_t min_n, const char* who) {
  if (s.size() < min_n) throw DomainError(std::string(who) + ": sample too small");
  if (!std::is_sorted(s.begin(), s.end())) throw DomainError(std::string(who) + ": sample must be sorted");
}

// u_i = F(x_i) nudged off {0, 1}
std::vector<double> pit(const std::vector<double>& s, const Distribution& model, const char* who) {
  constexpr double kNudge = 1e-12;
  std::vector<double> u(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    double v = model.cdf(s[i]);
    if (v <= 0.0) v = kNudge;
    if (v >= 1.0) v = 1.0 - kNudge;
    if (!(v > 0.0 && v < 1.0)) throw BoundaryError(std::string(who) + ": F(x) outside (0, 1)");
    u[i] = v;
  }
  return u;
}

}  // namespace

TestResult ks_test(const std::vector<double>& s, const Distribution& model) {
  require_sorted(s, 2, "ks_test");
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = model.cdf(s[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  TestResult r;
  r.test = GofTest::ks;
  r.statistic = d;
  r.p_value = numerics::kolmogorov_sf(std::sqrt(n) * d);
  return r;
}

TestResult ad_test(const std::vector<double>& s, const Distribution& model) {
  require_sorted(s, 2, "ad_test");
  const auto u = pit(s, model, "ad_test");
  const std::size_t n = u.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += (2.0 * (i + 1) - 1.0) * (std::log(u[i]) + std::log1p(-u[n - 1 - i]));
  }
  TestResult r;
  r.test = GofTest::ad;
  r.statistic = -static_cast<double>(n) - sum / static_cast<double>(n);
  r.p_value = std::clamp(1.0 - numerics::anderson_darling_cdf(r.statistic), 0.0, 1.0);
  return r;
}

TestResult cvm_test(const std::vector<double>& s, const Distribution& model) {
  require_sorted(s, 2, "cvm_test");
  const auto u = pit(s, model, "cvm_test");
  const double n = static_cast<double>(u.size());
  double w2 = 1.0 / (12.0 * n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - (2.0 * (i + 1) - 1.0) / (2.0 * n);
    w2 += d * d;
  }
  TestResult r;
  r.test = GofTest::cvm;
  r.statistic = w2;
  r.p_value = std::clamp(1.0 - numerics::cramer_von_mises_cdf(w2), 0.0, 1.0);
  return r;
}

TestResult chisq_test(const std::vector<double>& s, const Distribution& model, const ChiSquareOptions& opts) {
  if (opts.bins < 2) throw BinningError("chisq_test: at least 2 bins required");
  if (s.size() < opts.bins) throw BinningError("chisq_test: fewer observations than bins");
  const double n = static_cast<double>(s.size());
  const double expected = n / static_cast<double>(opts.bins);
  if (expected < 1.0) throw BinningError("chisq_test: expected count below 1");

  std::vector<double> observed(opts.bins, 0.0);
  for (double x : s) {
    const double u = model.cdf(x);
    const auto j = std::min(opts.bins - 1, static_cast<std::size_t>(std::max(0.0, u) * static_cast<double>(opts.bins)));
    observed[j] += 1.0;
  }
  double stat = 0.0;
  for (double o : observed) stat += (o - expected) * (o - expected) / expected;

  int df = 0;
  switch (opts.convention) {
    case DfConvention::bins_minus_1: df = static_cast<int>(opts.bins) - 1; break;
    case DfConvention::bins_minus_1_minus_k:
      df = static_cast<int>(opts.bins) - 1 - static_cast<int>(opts.fitted_params);
      break;
    case DfConvention::explicit_df: df = opts.df; break;
  }
  if (df < 1) throw BinningError("chisq_test: degrees of freedom below 1");
  TestResult r;
  r.test = GofTest::chisq;
  r.statistic = stat;
  r.df = df;
  r.p_value = numerics::chi_square_sf(stat, df);
  return r;
}

std::vector<int> chisq_df_sweep(double statistic, double p_value, double tol, int max_df) {
  std::vector<int> out;
  for (int df = 1; df <= max_df; ++df)
    if (std::fabs(numerics::chi_square_sf(statistic, df) - p_value) <= tol) out.push_back(df);
  return out;
}

namespace {

TestResult run_test(GofTest test, const std::vector<double>& s, const Distribution& model,
                    const ChiSquareOptions& chisq) {
  switch (test) {
    case GofTest::ks: return ks_test(s, model);
    case GofTest::ad: return ad_test(s, model);
    case GofTest::cvm: return cvm_test(s, model);
    case GofTest::chisq: return chisq_test(s, model, chisq);
  }
  return {};
}

}  // namespace

BootstrapResult bootstrap_pvalue(const std::vector<double>& sample, Model model, const std::vector<double>& params,
                                 GofTest test, const BootstrapOptions& opts) {
  if (opts.replicates < 99) throw BootstrapError("bootstrap_pvalue: at least 99 replicates required");
  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  const auto fitted = make_model(model, params);
  BootstrapResult out;
  out.observed = run_test(test, sorted, *fitted, opts.chisq);
  out.observed.method = PValueMethod::bootstrap;
  out.replicates = opts.replicates;

  std::vector<double> stats(opts.replicates, numerics::kInf);
  std::vector<char> ok(opts.replicates, 0);
  parallel::for_each_index(opts.replicates, opts.mode, [&](std::size_t b) {
    try {
      auto xs = wtrv::sample(*fitted, sorted.size(), parallel::substream_seed(opts.seed, b));
      for (double& x : xs) x = std::clamp(x, 1e-15, 1.0 - 1e-15);
      std::sort(xs.begin(), xs.end());
      FitOptions fo;
      fo.starts = opts.refit_starts;
      fo.seed = parallel::substream_seed(opts.seed ^ 0x5bd1e995ULL, b);
      fo.mode = parallel::Mode::serial;
      fo.extra_starts = {params};
      const FitResult refit = fit_values(xs, model, fo);
      stats[b] = run_test(test, xs, *make_model(model, refit.values()), opts.chisq).statistic;
      ok[b] = 1;
    } catch (const Error&) {
      ok[b] = 0;
    }
  });
  for (std::size_t b = 0; b < opts.replicates; ++b) {
    if (!ok[b]) {
      ++out.failures;
      continue;
    }
    if (stats[b] >= out.observed.statistic) ++out.exceed;
  }
  if (out.failures * 10 > opts.replicates) {
    throw BootstrapError("bootstrap_pvalue: " + std::to_string(out.failures) + " of " +
                         std::to_string(opts.replicates) + " refits failed");
  }
  const double used = static_cast<double>(opts.replicates - out.failures);
  out.observed.p_value = (1.0 + static_cast<double>(out.exceed)) / (used + 1.0);
  return out;
}

GofReport run_gof(const std::vector<double>& sample, Model model, const std::vector<double>& params,
                  const std::vector<GofTest>& tests, PValueMethod method, const BootstrapOptions& opts) {
  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  const auto fitted = make_model(model, params);
  GofReport report;
  report.model = to_string(model);
  report.n = sorted.size();
  for (GofTest t : tests) {
    if (method == PValueMethod::bootstrap) report.tests.push_back(bootstrap_pvalue(sorted, model, params, t, opts).observed);
    else report.tests.push_back(run_test(t, sorted, *fitted, opts.chisq));
  }
  return report;
}

}  // namespace wtrv
