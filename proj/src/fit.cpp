#include "wtrv/fit.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "wtrv/wtrv.hpp"

namespace wtrv {

using numerics::Interval;

BoundaryPolicy parse_boundary_policy(const std::string& name) {
  std::string n = name;
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "exclude_boundary") return BoundaryPolicy::exclude_boundary;
  if (n == "shrink") return BoundaryPolicy::shrink;
  throw ParseError("unknown boundary policy '" + name + "'");
}

std::string to_string(BoundaryPolicy policy) {
  return policy == BoundaryPolicy::shrink ? "shrink" : "exclude_boundary";
}

NormalizedSample normalize(const std::vector<double>& z, BoundaryPolicy policy) {
  if (z.size() < 3) throw DomainError("normalize: need at least 3 observations");
  for (double v : z)
    if (!std::isfinite(v)) throw DomainError("normalize: non-finite observation");
  const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
  if (!(*hi > *lo)) throw DegenerateSampleError("normalize: all observations are equal");

  NormalizedSample s;
  s.z_min = *lo;
  s.z_max = *hi;
  s.n = z.size();
  s.policy = policy;
  const double range = s.z_max - s.z_min;
  s.values.reserve(z.size());
  for (double v : z) s.values.push_back(v == s.z_max ? 1.0 : (v - s.z_min) / range);
  std::sort(s.values.begin(), s.values.end());

  const double n = static_cast<double>(s.n);
  for (double x : s.values) {
    if (policy == BoundaryPolicy::shrink) s.likelihood.push_back((x * (n - 1.0) + 0.5) / n);
    else if (x > 0.0 && x < 1.0) s.likelihood.push_back(x);
  }
  if (s.likelihood.empty()) throw DegenerateSampleError("normalize: no interior observations");
  return s;
}

Model parse_model(const std::string& name) {
  if (name == "beta") return Model::beta;
  if (name == "kw" || name == "kumaraswamy") return Model::kw;
  if (name == "wk" || name == "weighted_kumaraswamy") return Model::wk;
  throw ParseError("unknown model '" + name + "'");
}

std::string to_string(Model model) {
  switch (model) {
    case Model::beta: return "beta";
    case Model::kw: return "kw";
    case Model::wk: return "wk";
  }
  return "?";
}

std::vector<std::string> parameter_names(Model model) {
  switch (model) {
    case Model::beta: return {"alpha", "beta"};
    case Model::kw: return {"a", "b"};
    case Model::wk: return {"a", "b", "c"};
  }
  return {};
}

DistributionHandle make_model(Model model, const std::vector<double>& p) {
  if (p.size() != parameter_names(model).size()) throw DomainError("make_model: wrong parameter count");
  switch (model) {
    case Model::beta: return beta_dist(p[0], p[1]);
    case Model::kw: return kumaraswamy(p[0], p[1]);
    case Model::wk: return weighted_kumaraswamy(p[0], p[1], p[2]);
  }
  return nullptr;
}

namespace {

struct LogSums {
  double n = 0.0;
  double log_x = 0.0;
  double log_1mx = 0.0;
};

LogSums sums(const std::vector<double>& xs) {
  LogSums s;
  s.n = static_cast<double>(xs.size());
  for (double x : xs) {
    if (!(x > 0.0 && x < 1.0)) throw BoundaryError("loglik: observation " + std::to_string(x) + " not inside (0, 1)");
    s.log_x += std::log(x);
    s.log_1mx += std::log1p(-x);
  }
  return s;
}

double sum_log1m_pow(const std::vector<double>& xs, double a) {
  double s = 0.0;
  for (double x : xs) s += std::log1p(-std::pow(x, a));
  return s;
}

double loglik_with(Model model, const std::vector<double>& xs, const LogSums& s, const std::vector<double>& p) {
  for (double v : p)
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("loglik: parameters must be positive and finite");
  switch (model) {
    case Model::beta:
      return -s.n * numerics::ln_beta(p[0], p[1]) + (p[0] - 1.0) * s.log_x + (p[1] - 1.0) * s.log_1mx;
    case Model::kw:
      return s.n * std::log(p[0] * p[1]) + (p[0] - 1.0) * s.log_x + (p[1] - 1.0) * sum_log1m_pow(xs, p[0]);
    case Model::wk: {
      const double a = p[0], b = p[1], c = p[2];
      const double log_norm = std::log(c) - std::log(b) - numerics::ln_beta(1.0 + c / a, b);
      return s.n * log_norm + (c - 1.0) * s.log_x + b * sum_log1m_pow(xs, a);
    }
  }
  return 0.0;
}

std::vector<double> moment_start(Model model, const std::vector<double>& xs, double lo, double hi) {
  double m = 0.0;
  for (double x : xs) m += x;
  m /= static_cast<double>(xs.size());
  double v = 0.0;
  for (double x : xs) v += (x - m) * (x - m);
  v /= std::max<double>(1.0, static_cast<double>(xs.size()) - 1.0);
  double common = v > 0.0 ? m * (1.0 - m) / v - 1.0 : 2.0;
  if (!(common > 0.0)) common = 2.0;
  const double al = m * common, be = (1.0 - m) * common;
  std::vector<double> out;
  switch (model) {
    case Model::beta: out = {al, be}; break;
    case Model::kw: out = {al, be}; break;
    case Model::wk: out = {al, std::max(be - 1.0, 0.5), al}; break;
  }
  for (double& x : out) x = std::clamp(x, lo, hi);
  return out;
}

}  // namespace

double loglik(Model model, const std::vector<double>& xs, const std::vector<double>& params) {
  if (params.size() != parameter_names(model).size()) throw DomainError("loglik: wrong parameter count");
  if (xs.empty()) throw EmptyDataError("loglik: empty likelihood set");
  return loglik_with(model, xs, sums(xs), params);
}

double loglik_beta(const NormalizedSample& s, double alpha, double beta) {
  return loglik(Model::beta, s.likelihood, {alpha, beta});
}
double loglik_kw(const NormalizedSample& s, double a, double b) { return loglik(Model::kw, s.likelihood, {a, b}); }
double loglik_wk(const NormalizedSample& s, double a, double b, double c) {
  return loglik(Model::wk, s.likelihood, {a, b, c});
}

std::vector<double> FitResult::values() const {
  std::vector<double> v;
  for (const auto& [k, x] : params) v.push_back(x);
  return v;
}

FitResult fit_values(const std::vector<double>& xs, Model model, const FitOptions& opts) {
  if (xs.empty()) throw EmptyDataError("fit: empty likelihood set");
  if (opts.starts + opts.extra_starts.size() < 1) throw DomainError("fit: at least one start required");
  const LogSums s = sums(xs);
  const std::size_t k = parameter_names(model).size();
  const std::vector<Interval> box(k, Interval(opts.lower, opts.upper));

  std::vector<std::vector<double>> starts = opts.extra_starts;
  for (auto& st : starts)
    for (double& x : st) x = std::clamp(x, opts.lower, opts.upper);
  const std::size_t total = opts.extra_starts.size() + opts.starts;
  if (opts.moment_start && starts.size() < total) starts.push_back(moment_start(model, xs, opts.lower, opts.upper));
  std::mt19937_64 engine(opts.seed);
  std::uniform_real_distribution<double> unit(std::log(opts.lower), std::log(opts.upper));
  while (starts.size() < total) {
    std::vector<double> st(k);
    for (double& x : st) x = std::exp(unit(engine));
    starts.push_back(st);
  }

  // per-observation scale keeps finite-difference noise independent of n
  const numerics::VectorFunction objective = [&](std::span<const double> p) {
    return -loglik_with(model, xs, s, std::vector<double>(p.begin(), p.end())) / s.n;
  };
  numerics::MinimizeOptions mopts;
  mopts.tol = opts.tol;

  std::vector<std::optional<numerics::OptimizeResult>> results(starts.size());
  std::vector<std::string> errors(starts.size());
  parallel::for_each_index(starts.size(), opts.mode, [&](std::size_t i) {
    try {
      results[i] = numerics::minimize_bounded(objective, starts[i], box, mopts);
      if (!std::isfinite(results[i]->objective)) results[i].reset();
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  // best objective, ties broken by start index
  std::optional<std::size_t> best;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) {
      ++failed;
      continue;
    }
    if (!best || results[i]->objective < results[*best]->objective) best = i;
  }
  if (!best) {
    std::ostringstream os;
    os << "fit: all " << starts.size() << " starts failed";
    for (const auto& e : errors)
      if (!e.empty()) {
        os << "; first error: " << e;
        break;
      }
    throw FitError(os.str());
  }

  FitResult r;
  r.model = model;
  r.optimizer = *results[*best];
  const auto names = parameter_names(model);
  for (std::size_t i = 0; i < k; ++i) r.params.emplace_back(names[i], r.optimizer.argmin[i]);
  r.loglik = -r.optimizer.objective * s.n;
  r.n = xs.size();
  r.aic = 2.0 * static_cast<double>(k) - 2.0 * r.loglik;
  r.bic = static_cast<double>(k) * std::log(static_cast<double>(r.n)) - 2.0 * r.loglik;
  r.starts_tried = starts.size();
  r.starts_failed = failed;
  return r;
}

FitResult refit_from(const std::vector<double>& xs, Model model, const std::vector<double>& params) {
  FitOptions opts;
  opts.starts = 0;
  opts.extra_starts = {params};
  opts.mode = parallel::Mode::serial;
  return fit_values(xs, model, opts);
}

FitResult fit_mle(const NormalizedSample& sample, Model model, const FitOptions& opts) {
  FitResult r = fit_values(sample.likelihood, model, opts);
  r.policy = sample.policy;
  r.rmse = rmse_metric(sample, *make_model(model, r.values()));
  return r;
}

FitResult fit_mle(const NormalizedSample& sample, Model model, std::size_t starts, std::uint64_t seed) {
  FitOptions opts;
  opts.starts = starts;
  opts.seed = seed;
  return fit_mle(sample, model, opts);
}

double rmse_metric(const NormalizedSample& sample, const Distribution& fitted, std::size_t bins) {
  if (bins < 2) throw DomainError("rmse_metric: bins must be at least 2");
  if (sample.values.empty()) throw EmptyDataError("rmse_metric: empty sample");
  std::vector<double> counts(bins, 0.0);
  for (double x : sample.values) {
    const auto j = std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, x) * static_cast<double>(bins)));
    counts[j] += 1.0;
  }
  const double width = 1.0 / static_cast<double>(bins);
  const double n = static_cast<double>(sample.values.size());
  double ss = 0.0;
  for (std::size_t j = 0; j < bins; ++j) {
    const double height = counts[j] / (n * width);
    const double d = height - fitted.pdf((static_cast<double>(j) + 0.5) * width);
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(bins));
}

}  // namespace wtrv
