#include "wtrv/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "wtrv/wtrv.hpp"

namespace wtrv {

using numerics::kInf;

// ---------------------------------------------------------------------------
// Distribution defaults

double Distribution::quantile(double u) const { return invert_numerically(u); }

double Distribution::invert_numerically(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError(name() + ": quantile level outside [0,1]");
  const Interval s = support();
  if (u == 0.0) return s.lo;
  if (u == 1.0) return s.hi;

  double lo = s.lo;
  double hi;
  if (s.bounded_above()) {
    hi = s.hi;
  } else {
    hi = s.lo + 1.0;
    while (sf(hi) > 1.0 - u && hi < 1e300) hi = s.lo + 2.0 * (hi - s.lo);
  }
  // Work on whichever tail keeps relative precision; both have derivative pdf.
  const double upper = 1.0 - u;
  auto g = [&](double x) { return u <= 0.5 ? cdf(x) - u : upper - sf(x); };

  // Newton steps safeguarded by bisection of the bracket.
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    const double gx = g(x);
    if (gx == 0.0) return x;
    if (gx < 0.0) lo = x; else hi = x;
    const double d = pdf(x);
    double next = x - gx / d;
    if (!(d > 0.0) || !std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 4e-16 * std::fabs(x) + 1e-300 || hi - lo <= 4e-16 * std::fabs(hi)) return next;
    x = next;
  }
  return x;
}

double Distribution::pdf_derivative(double x) const {
  const Interval s = support();
  const double h = 1e-5 * (1.0 + std::fabs(x));
  double up = x + h;
  double dn = x - h;
  if (dn <= s.lo) dn = x;
  if (up >= s.hi) up = x;
  if (up == dn) throw DomainError(name() + ": pdf_derivative needs an interior point");
  return (pdf(up) - pdf(dn)) / (up - dn);
}

std::string Distribution::spec() const {
  std::ostringstream os;
  os.precision(17);
  os << name() << '(';
  bool first = true;
  for (const auto& [k, v] : params()) {
    if (!first) os << ',';
    os << k << '=' << v;
    first = false;
  }
  os << ')';
  return os.str();
}

namespace {

void require_positive(const std::string& family, const std::string& param, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(family + ": parameter " + param + " must be positive and finite");
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

class Exponential final : public Distribution {
 public:
  explicit Exponential(double lambda) : lambda_(lambda) { require_positive("exponential", "lambda", lambda); }
  std::string name() const override { return "exponential"; }
  ParamList params() const override { return {{"lambda", lambda_}}; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override { return x < 0.0 ? 0.0 : lambda_ * std::exp(-lambda_ * x); }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-lambda_ * x); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : std::exp(-lambda_ * x); }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("exponential: quantile level outside [0,1]");
    return -std::log1p(-u) / lambda_;
  }
  double pdf_derivative(double x) const override { return -lambda_ * pdf(x); }

 private:
  double lambda_;
};

class Gamma final : public Distribution {
 public:
  Gamma(double shape, double rate, std::string label = "gamma") : k_(shape), lambda_(rate), label_(std::move(label)) {
    require_positive(label_, "k", shape);
    require_positive(label_, "lambda", rate);
    log_norm_ = k_ * std::log(lambda_) - numerics::ln_gamma(k_);
  }
  std::string name() const override { return label_; }
  ParamList params() const override {
    if (label_ == "chi_square") return {{"k", 2.0 * k_}};
    return {{"k", k_}, {"lambda", lambda_}};
  }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    if (x < 0.0) return 0.0;
    if (x == 0.0) return k_ < 1.0 ? kInf : (k_ == 1.0 ? lambda_ : 0.0);
    return std::exp(log_norm_ + (k_ - 1.0) * std::log(x) - lambda_ * x);
  }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : numerics::gamma_p(k_, lambda_ * x); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : numerics::gamma_q(k_, lambda_ * x); }
  double pdf_derivative(double x) const override { return pdf(x) * ((k_ - 1.0) / x - lambda_); }

 private:
  double k_, lambda_;
  std::string label_;
  double log_norm_;
};

class Weibull final : public Distribution {
 public:
  Weibull(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    require_positive("weibull", "alpha", alpha);
    require_positive("weibull", "beta", beta);
  }
  std::string name() const override { return "weibull"; }
  ParamList params() const override { return {{"alpha", alpha_}, {"beta", beta_}}; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    if (x < 0.0) return 0.0;
    const double z = x / beta_;
    return alpha_ / beta_ * std::pow(z, alpha_ - 1.0) * std::exp(-std::pow(z, alpha_));
  }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / beta_, alpha_)); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : std::exp(-std::pow(x / beta_, alpha_)); }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("weibull: quantile level outside [0,1]");
    return beta_ * std::pow(-std::log1p(-u), 1.0 / alpha_);
  }
  double pdf_derivative(double x) const override {
    const double z = x / beta_;
    return pdf(x) * ((alpha_ - 1.0) / x - alpha_ / beta_ * std::pow(z, alpha_ - 1.0));
  }

 private:
  double alpha_, beta_;
};

class Rayleigh final : public Distribution {
 public:
  explicit Rayleigh(double sigma) : sigma_(sigma) { require_positive("rayleigh", "sigma", sigma); }
  std::string name() const override { return "rayleigh"; }
  ParamList params() const override { return {{"sigma", sigma_}}; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    if (x < 0.0) return 0.0;
    return x / (sigma_ * sigma_) * std::exp(-x * x / (2.0 * sigma_ * sigma_));
  }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-x * x / (2.0 * sigma_ * sigma_)); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : std::exp(-x * x / (2.0 * sigma_ * sigma_)); }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("rayleigh: quantile level outside [0,1]");
    return sigma_ * std::sqrt(-2.0 * std::log1p(-u));
  }
  double pdf_derivative(double x) const override { return pdf(x) * (1.0 / x - x / (sigma_ * sigma_)); }

 private:
  double sigma_;
};

class HalfNormal final : public Distribution {
 public:
  explicit HalfNormal(double sigma) : sigma_(sigma) { require_positive("half_normal", "sigma", sigma); }
  std::string name() const override { return "half_normal"; }
  ParamList params() const override { return {{"sigma", sigma_}}; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    if (x < 0.0) return 0.0;
    return std::numbers::sqrt2 / (sigma_ * std::sqrt(std::numbers::pi)) * std::exp(-x * x / (2.0 * sigma_ * sigma_));
  }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : std::erf(x / (sigma_ * std::numbers::sqrt2)); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : std::erfc(x / (sigma_ * std::numbers::sqrt2)); }
  double pdf_derivative(double x) const override { return -pdf(x) * x / (sigma_ * sigma_); }

 private:
  double sigma_;
};

class GeneralizedGamma final : public Distribution {
 public:
  GeneralizedGamma(double p, double a, double d) : p_(p), a_(a), d_(d) {
    require_positive("generalized_gamma", "p", p);
    require_positive("generalized_gamma", "a", a);
    require_positive("generalized_gamma", "d", d);
    log_norm_ = std::log(p_) - d_ * std::log(a_) - numerics::ln_gamma(d_ / p_);
  }
  std::string name() const override { return "generalized_gamma"; }
  ParamList params() const override { return {{"p", p_}, {"a", a_}, {"d", d_}}; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    if (x <= 0.0) return 0.0;
    return std::exp(log_norm_ + (d_ - 1.0) * std::log(x) - std::pow(x / a_, p_));
  }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : numerics::gamma_p(d_ / p_, std::pow(x / a_, p_)); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : numerics::gamma_q(d_ / p_, std::pow(x / a_, p_)); }

 private:
  double p_, a_, d_;
  double log_norm_;
};

class Burr12 final : public Distribution {
 public:
  Burr12(double c, double k) : c_(c), k_(k) {
    require_positive("burr12", "c", c);
    require_positive("burr12", "k", k);
  }
  std::string name() const override { return "burr12"; }
  ParamList params() const override { return {{"c", c_}, {"k", k_}}; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    if (x <= 0.0) return 0.0;
    const double xc = std::pow(x, c_);
    return c_ * k_ * std::pow(x, c_ - 1.0) * std::exp(-(k_ + 1.0) * std::log1p(xc));
  }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-k_ * std::log1p(std::pow(x, c_))); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : std::exp(-k_ * std::log1p(std::pow(x, c_))); }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("burr12: quantile level outside [0,1]");
    return std::pow(std::expm1(-std::log1p(-u) / k_), 1.0 / c_);
  }

 private:
  double c_, k_;
};

class Lomax final : public Distribution {
 public:
  explicit Lomax(double alpha) : alpha_(alpha) { require_positive("pareto_lomax", "alpha", alpha); }
  std::string name() const override { return "pareto_lomax"; }
  ParamList params() const override { return {{"alpha", alpha_}}; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override { return x < 0.0 ? 0.0 : alpha_ * std::pow(1.0 + x, -alpha_ - 1.0); }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-alpha_ * std::log1p(x)); }
  double sf(double x) const override { return x <= 0.0 ? 1.0 : std::pow(1.0 + x, -alpha_); }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("pareto_lomax: quantile level outside [0,1]");
    return std::expm1(-std::log1p(-u) / alpha_);
  }
  double pdf_derivative(double x) const override { return -(alpha_ + 1.0) * pdf(x) / (1.0 + x); }

 private:
  double alpha_;
};

class Uniform final : public Distribution {
 public:
  Uniform(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) throw DomainError("uniform: requires finite lo < hi");
  }
  std::string name() const override { return "uniform"; }
  ParamList params() const override { return {{"lo", lo_}, {"hi", hi_}}; }
  Interval support() const override { return {lo_, hi_}; }
  double pdf(double x) const override { return (x < lo_ || x > hi_) ? 0.0 : 1.0 / (hi_ - lo_); }
  double cdf(double x) const override { return clamp01((x - lo_) / (hi_ - lo_)); }
  double sf(double x) const override { return clamp01((hi_ - x) / (hi_ - lo_)); }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("uniform: quantile level outside [0,1]");
    return lo_ + u * (hi_ - lo_);
  }
  double pdf_derivative(double) const override { return 0.0; }

 private:
  double lo_, hi_;
};

class Beta final : public Distribution {
 public:
  Beta(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    require_positive("beta", "alpha", alpha);
    require_positive("beta", "beta", beta);
    ln_b_ = numerics::ln_beta(alpha_, beta_);
  }
  std::string name() const override { return "beta"; }
  ParamList params() const override { return {{"alpha", alpha_}, {"beta", beta_}}; }
  Interval support() const override { return {0.0, 1.0}; }
  double pdf(double x) const override {
    if (x < 0.0 || x > 1.0) return 0.0;
    if (x == 0.0) return alpha_ < 1.0 ? kInf : (alpha_ == 1.0 ? beta_ : 0.0);
    if (x == 1.0) return beta_ < 1.0 ? kInf : (beta_ == 1.0 ? alpha_ : 0.0);
    return std::exp((alpha_ - 1.0) * std::log(x) + (beta_ - 1.0) * std::log1p(-x) - ln_b_);
  }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return numerics::regularized_beta(x, alpha_, beta_);
  }
  double sf(double x) const override {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return numerics::regularized_beta_complement(x, alpha_, beta_);
  }
  double pdf_derivative(double x) const override {
    return pdf(x) * ((alpha_ - 1.0) / x - (beta_ - 1.0) / (1.0 - x));
  }

 private:
  double alpha_, beta_;
  double ln_b_;
};

class Kumaraswamy final : public Distribution {
 public:
  Kumaraswamy(double a, double b) : a_(a), b_(b) {
    require_positive("kumaraswamy", "a", a);
    require_positive("kumaraswamy", "b", b);
  }
  std::string name() const override { return "kumaraswamy"; }
  ParamList params() const override { return {{"a", a_}, {"b", b_}}; }
  Interval support() const override { return {0.0, 1.0}; }
  double pdf(double x) const override {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    const double xa = std::pow(x, a_);
    return a_ * b_ * std::pow(x, a_ - 1.0) * std::exp((b_ - 1.0) * std::log1p(-xa));
  }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return -std::expm1(b_ * std::log1p(-std::pow(x, a_)));
  }
  double sf(double x) const override {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return std::exp(b_ * std::log1p(-std::pow(x, a_)));
  }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("kumaraswamy: quantile level outside [0,1]");
    // (1 - (1-u)^{1/b})^{1/a}
    return std::pow(-std::expm1(std::log1p(-u) / b_), 1.0 / a_);
  }
  double pdf_derivative(double x) const override {
    const double xa = std::pow(x, a_);
    return pdf(x) * ((a_ - 1.0) / x - (b_ - 1.0) * a_ * xa / (x * (1.0 - xa)));
  }

 private:
  double a_, b_;
};

class TruncatedPower final : public Distribution {
 public:
  explicit TruncatedPower(double beta) : beta_(beta) {
    if (!(beta > 1.0) || !std::isfinite(beta)) throw DomainError("truncated_power: beta must exceed 1");
  }
  std::string name() const override { return "truncated_power"; }
  ParamList params() const override { return {{"beta", beta_}}; }
  Interval support() const override { return {0.0, 1.0}; }
  double pdf(double x) const override {
    if (x < 0.0 || x > 1.0) return 0.0;
    return (beta_ - 1.0) * std::pow(1.0 - x, beta_ - 2.0);
  }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return -std::expm1((beta_ - 1.0) * std::log1p(-x));
  }
  double sf(double x) const override {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return std::pow(1.0 - x, beta_ - 1.0);
  }
  double quantile(double u) const override {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("truncated_power: quantile level outside [0,1]");
    return -std::expm1(std::log1p(-u) / (beta_ - 1.0));
  }
  double pdf_derivative(double x) const override { return -(beta_ - 2.0) * pdf(x) / (1.0 - x); }

 private:
  double beta_;
};

// Parameter lookup with defaults and unknown-key rejection.
class ParamReader {
 public:
  ParamReader(std::string family, const ParamMap& params) : family_(std::move(family)), params_(params) {}

  double get(const std::string& key) {
    used_.push_back(key);
    auto it = params_.find(key);
    if (it == params_.end()) throw DomainError(family_ + ": missing parameter '" + key + "'");
    return it->second;
  }
  double get(const std::string& key, double fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }
  void finish() const {
    for (const auto& [k, v] : params_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) {
        throw DomainError(family_ + ": unknown parameter '" + k + "'");
      }
    }
  }

 private:
  std::string family_;
  const ParamMap& params_;
  std::vector<std::string> used_;
};

}  // namespace

DistributionHandle exponential(double lambda) { return std::make_shared<Exponential>(lambda); }
DistributionHandle gamma_dist(double shape, double rate) { return std::make_shared<Gamma>(shape, rate); }
DistributionHandle weibull(double shape, double scale) { return std::make_shared<Weibull>(shape, scale); }
DistributionHandle uniform(double lo, double hi) { return std::make_shared<Uniform>(lo, hi); }
DistributionHandle beta_dist(double alpha, double beta) { return std::make_shared<Beta>(alpha, beta); }
DistributionHandle kumaraswamy(double a, double b) { return std::make_shared<Kumaraswamy>(a, b); }
DistributionHandle pareto_lomax(double alpha) { return std::make_shared<Lomax>(alpha); }
DistributionHandle burr12(double c, double k) { return std::make_shared<Burr12>(c, k); }
DistributionHandle truncated_power(double beta) { return std::make_shared<TruncatedPower>(beta); }

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "exponential", "gamma",  "weibull",     "rayleigh",    "half_normal",          "generalized_gamma", "burr12",
      "pareto_lomax", "uniform", "beta",      "kumaraswamy", "weighted_kumaraswamy", "chi_square",        "truncated_power"};
  return names;
}

DistributionHandle make_catalog(const std::string& name, const ParamMap& params) {
  ParamReader r(name, params);
  DistributionHandle out;
  if (name == "exponential") {
    out = exponential(r.get("lambda"));
  } else if (name == "gamma") {
    const double k = r.get("k");
    out = gamma_dist(k, r.get("lambda"));
  } else if (name == "weibull") {
    const double alpha = r.get("alpha");
    out = weibull(alpha, r.get("beta"));
  } else if (name == "rayleigh") {
    out = std::make_shared<Rayleigh>(r.get("sigma"));
  } else if (name == "half_normal") {
    out = std::make_shared<HalfNormal>(r.get("sigma"));
  } else if (name == "generalized_gamma") {
    const double p = r.get("p");
    const double a = r.get("a");
    out = std::make_shared<GeneralizedGamma>(p, a, r.get("d"));
  } else if (name == "burr12") {
    const double c = r.get("c");
    out = burr12(c, r.get("k"));
  } else if (name == "pareto_lomax") {
    out = pareto_lomax(r.get("alpha"));
  } else if (name == "uniform") {
    const double lo = r.get("lo", 0.0);
    out = uniform(lo, r.get("hi", 1.0));
  } else if (name == "beta") {
    const double a = r.get("alpha");
    out = beta_dist(a, r.get("beta"));
  } else if (name == "kumaraswamy") {
    const double a = r.get("a");
    out = kumaraswamy(a, r.get("b"));
  } else if (name == "weighted_kumaraswamy") {
    const double a = r.get("a");
    const double b = r.get("b");
    out = weighted_kumaraswamy(a, b, r.get("c"));
  } else if (name == "chi_square") {
    const double k = r.get("k");
    require_positive("chi_square", "k", k);
    out = std::make_shared<Gamma>(0.5 * k, 0.5, "chi_square");
  } else if (name == "truncated_power") {
    out = truncated_power(r.get("beta"));
  } else {
    throw CatalogError("unknown distribution '" + name + "'");
  }
  r.finish();
  return out;
}

std::vector<double> sample(const Distribution& dist, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) {
    double u = unit(engine);
    while (u <= 0.0) u = unit(engine);
    v = dist.quantile(u);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MinimumDistribution

MinimumDistribution::MinimumDistribution(std::vector<DistributionHandle> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("minimum: at least one component required");
  support_ = parts_.front()->support();
  for (const auto& p : parts_) {
    if (!(p->support() == support_)) throw DomainError("minimum: components must share the same support");
  }
}

ParamList MinimumDistribution::params() const {
  ParamList out;
  out.emplace_back("n", static_cast<double>(parts_.size()));
  return out;
}

double MinimumDistribution::sf(double x) const {
  double s = 1.0;
  for (const auto& p : parts_) s *= p->sf(x);
  return s;
}

double MinimumDistribution::cdf(double x) const {
  // 1 - Π(1 - F_i), evaluated without cancellation for small F_i.
  double log_s = 0.0;
  for (const auto& p : parts_) {
    const double s = p->sf(x);
    if (s <= 0.0) return 1.0;
    const double c = p->cdf(x);
    log_s += c < 0.5 ? std::log1p(-c) : std::log(s);
  }
  return -std::expm1(log_s);
}

double MinimumDistribution::pdf(double x) const {
  double total = 0.0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    double term = parts_[i]->pdf(x);
    if (term == 0.0) continue;
    for (std::size_t j = 0; j < parts_.size(); ++j)
      if (j != i) term *= parts_[j]->sf(x);
    total += term;
  }
  return total;
}

}  // namespace wtrv
