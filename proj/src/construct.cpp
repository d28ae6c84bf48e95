#include <algorithm>
#include <cmath>
#include <numeric>

#include "wtrv/wtrv.hpp"

namespace wtrv {

using numerics::kInf;

namespace {

constexpr std::size_t kInitialCells = 512;
constexpr std::size_t kMaxCells = 200000;

Interval construction_range(const Distribution& dist, const WeightFunction& w) {
  const Interval s = dist.support();
  return Interval(s.lo, std::min(s.hi, w.domain_hint.hi));
}

}  // namespace

double expected_weight(const Distribution& dist, const WeightFunction& w) {
  const Interval range = construction_range(dist, w);
  numerics::QuadratureOptions opts;
  opts.abs_tol = 1e-14;
  opts.rel_tol = 1e-12;
  opts.max_subdivisions = 5000;
  auto integrand = [&](double x) { return weighted_tail(w, dist, x); };
  double value;
  try {
    value = numerics::integrate_adaptive(integrand, range, opts).value;
  } catch (const AccuracyError& e) {
    if (!(e.error_estimate() <= 1e-9 * (1.0 + std::fabs(e.best_estimate())))) {
      throw IntegrabilityError("E[w(X)] diverges for " + w.spec() + " under " + dist.spec() +
                               " (quadrature did not settle)");
    }
    value = e.best_estimate();
  } catch (const EvaluationError&) {
    throw IntegrabilityError("E[w(X)] diverges for " + w.spec() + " under " + dist.spec() +
                             " (w'·sf is not finite)");
  }
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw IntegrabilityError("E[w(X)] is not a finite positive number for " + w.spec());
  }
  return value;
}

// ---------------------------------------------------------------------------
// WtrvDistribution

WtrvDistribution::WtrvDistribution(DistributionHandle base, WeightFunction weight)
    : base_(std::move(base)), weight_(std::move(weight)) {
  if (!base_) throw DomainError("construct: null base distribution");
  const WeightValidity v = validate_weight(weight_, *base_);
  if (!v.integrability_ok) throw IntegrabilityError(v.detail);
  if (!v.starts_at_zero) throw DomainError("construct: " + weight_.spec() + " does not vanish at 0");
  if (!v.nondecreasing_on_grid) throw DomainError("construct: " + weight_.spec() + " is not nondecreasing");
  if (!v.domain_covers_support) {
    throw DomainError("construct: " + weight_.spec() + " is undefined on part of the support of " + base_->spec());
  }
  support_ = construction_range(*base_, weight_);
  normalizer_ = expected_weight(*base_, weight_);
  build_table();
}

ParamList WtrvDistribution::params() const {
  ParamList out;
  for (const auto& [k, v] : base_->params()) out.emplace_back("base." + k, v);
  for (const auto& [k, v] : weight_.params) out.emplace_back("weight." + k, v);
  return out;
}

double WtrvDistribution::density(double x) const { return weighted_tail(weight_, *base_, x); }

double WtrvDistribution::pdf(double x) const {
  if (!(x > support_.lo) || !(x < support_.hi)) return 0.0;
  return density(x) / normalizer_;
}

double WtrvDistribution::integrate(double a, double b, bool relative_only) const {
  if (!(b > a)) return 0.0;
  numerics::QuadratureOptions opts;
  // tail integrals are tiny; only a relative target keeps sf accurate there
  opts.abs_tol = (relative_only || !std::isfinite(b)) ? 1e-300 : 1e-16 * normalizer_;
  opts.rel_tol = 1e-12;
  opts.max_subdivisions = 400;
  auto f = [this](double x) { return density(x); };
  try {
    return numerics::integrate_adaptive(f, Interval(a, b), opts).value;
  } catch (const AccuracyError& e) {
    return e.best_estimate();
  }
}

constexpr double kDirectTail = 1e-6;

double WtrvDistribution::tail_mass_beyond(double x) const {
  return integrate(x, kInf);
}

void WtrvDistribution::build_table() {
  const double lo = support_.lo;
  const bool bounded = support_.bounded_above();

  std::vector<double> xs;
  xs.reserve(kInitialCells + 80);
  if (bounded) {
    const double width = support_.hi - lo;
    for (std::size_t i = 0; i <= kInitialCells; ++i) xs.push_back(lo + width * static_cast<double>(i) / kInitialCells);
    xs.back() = support_.hi;
  } else {
    double scale = base_->quantile(0.5) - lo;
    if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
    for (std::size_t i = 0; i < kInitialCells; ++i) {
      const double t = static_cast<double>(i) / kInitialCells;
      xs.push_back(lo + scale * t / (1.0 - t));
    }
  }
  for (int k = 1; k < 64; ++k) {
    const double q = base_->quantile(k / 64.0);
    if (q > lo && q < support_.hi) xs.push_back(q);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  if (!bounded) {
    // Grow geometrically until the remaining tail is negligible.
    double last = xs.back();
    double tail = tail_mass_beyond(last);
    while (tail > 1e-14 * normalizer_ && last < 1e300) {
      const double next = lo + (last - lo) * 1.189207115002721;  // 2^{1/4}
      xs.push_back(next);
      last = next;
      tail = tail_mass_beyond(last);
    }
    upper_tail_ = tail;
  }

  auto make_cell = [this](double a, double b, double mass) {
    Cell c{a, b, density(a), density(b), mass, false};
    c.direct = !std::isfinite(c.fa) || !std::isfinite(c.fb);
    return c;
  };

  std::vector<Cell> pending;
  pending.reserve(xs.size());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    pending.push_back(make_cell(xs[i], xs[i + 1], integrate(xs[i], xs[i + 1])));
  }

  // Depth-first refinement, keeping cells in order.
  std::vector<Cell> done;
  done.reserve(pending.size() * 2);
  std::reverse(pending.begin(), pending.end());
  const double abs_floor = 1e-15 * normalizer_;
  while (!pending.empty()) {
    Cell c = pending.back();
    pending.pop_back();
    const double h = c.b - c.a;
    const double mid = 0.5 * (c.a + c.b);
    const bool too_narrow = !(mid > c.a && mid < c.b) || h < 1e-12 * (1.0 + std::fabs(c.a));
    if (c.direct || c.mass <= abs_floor || too_narrow || done.size() + pending.size() >= kMaxCells) {
      done.push_back(c);
      continue;
    }
    const double left = integrate(c.a, mid);
    const double right = integrate(mid, c.b);
    const double hermite_mid = 0.5 * c.mass + h * (c.fa - c.fb) / 8.0;
    const double err = std::fabs(hermite_mid - left);
    const double slope = (left + right) / h;
    const double alpha = c.fa / slope;
    const double beta = c.fb / slope;
    const bool monotone = alpha * alpha + beta * beta <= 9.0;
    if (err <= 1e-10 * c.mass + abs_floor && monotone) {
      c.mass = left + right;
      done.push_back(c);
      continue;
    }
    pending.push_back(make_cell(mid, c.b, right));
    pending.push_back(make_cell(c.a, mid, left));
  }
  cells_ = std::move(done);

  nodes_.clear();
  nodes_.reserve(cells_.size() + 1);
  for (const auto& c : cells_) nodes_.push_back(c.a);
  nodes_.push_back(cells_.back().b);

  const std::size_t n = cells_.size();
  std::vector<double> left_raw(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) left_raw[i + 1] = left_raw[i] + cells_[i].mass;
  std::vector<double> right_raw(n, 0.0);
  double acc = upper_tail_;
  for (std::size_t i = n; i-- > 0;) {
    right_raw[i] = acc;
    acc += cells_[i].mass;
  }
  const double total = left_raw[n] + upper_tail_;
  table_mass_ = total / normalizer_;
  left_cum_.resize(n + 1);
  right_cum_.resize(n);
  for (std::size_t i = 0; i <= n; ++i) left_cum_[i] = left_raw[i] / total;
  for (std::size_t i = 0; i < n; ++i) right_cum_[i] = right_raw[i] / total;
  upper_tail_ /= total;
  for (auto& c : cells_) {
    c.mass /= total;
    c.fa /= total;
    c.fb /= total;
  }
}

std::size_t WtrvDistribution::locate(double x) const {
  // index of the cell containing x; nodes_ is sorted
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, cells_.size() - 1);
}

double WtrvDistribution::partial_mass(const Cell& c, double x) const {
  if (x <= c.a) return 0.0;
  if (x >= c.b) return c.mass;
  if (c.direct) {
    const double scale = c.mass > 0.0 ? 1.0 / (table_mass_ * normalizer_) : 0.0;
    return std::clamp(integrate(c.a, x) * scale, 0.0, c.mass);
  }
  const double h = c.b - c.a;
  const double s = (x - c.a) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double p = c.mass * (3.0 * s2 - 2.0 * s3) + h * c.fa * (s - 2.0 * s2 + s3) + h * c.fb * (s3 - s2);
  return std::clamp(p, 0.0, c.mass);
}

double WtrvDistribution::cdf(double x) const {
  if (x <= support_.lo) return 0.0;
  if (x >= support_.hi) return 1.0;
  if (x >= nodes_.back()) return 1.0 - sf(x);
  const std::size_t i = locate(x);
  const double v = std::min(1.0, left_cum_[i] + partial_mass(cells_[i], x));
  // summed cells carry an absolute error floor; far tails are integrated directly
  if (v < kDirectTail) return integrate(support_.lo, x, true) / (table_mass_ * normalizer_);
  return v;
}

double WtrvDistribution::sf(double x) const {
  if (x <= support_.lo) return 1.0;
  if (x >= support_.hi) return 0.0;
  if (x >= nodes_.back()) {
    return tail_mass_beyond(x) / (table_mass_ * normalizer_);
  }
  const std::size_t i = locate(x);
  const Cell& c = cells_[i];
  const double v = std::min(1.0, right_cum_[i] + (c.mass - partial_mass(c, x)));
  if (v < kDirectTail) return integrate(x, support_.hi, true) / (table_mass_ * normalizer_);
  return v;
}

double WtrvDistribution::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("wtrv: quantile level outside [0,1]");
  if (u == 0.0) return support_.lo;
  if (u == 1.0) return support_.hi;

  const double upper = 1.0 - u;
  auto g = [&](double x) { return u <= 0.5 ? cdf(x) - u : upper - sf(x); };

  double lo, hi;
  const std::size_t n = cells_.size();
  if (u > left_cum_[n]) {
    // beyond the table: only the upper tail remains
    lo = nodes_.back();
    hi = lo + 1.0;
    while (g(hi) < 0.0 && hi < 1e300) hi = lo + 2.0 * (hi - lo);
  } else {
    auto it = std::lower_bound(left_cum_.begin(), left_cum_.end(), u);
    std::size_t i = static_cast<std::size_t>(it - left_cum_.begin());
    i = i == 0 ? 0 : i - 1;
    // widen by a cell on each side to absorb rounding between the two sums
    lo = nodes_[i == 0 ? 0 : i - 1];
    hi = nodes_[std::min(i + 2, n)];
    if (g(lo) > 0.0) lo = nodes_.front();
    if (g(hi) < 0.0) hi = nodes_.back();
  }
  if (lo <= support_.lo && g(lo) >= 0.0) return support_.lo;
  return numerics::brent_root(g, lo, hi, 1e-300, 0.0, 300);
}

WtrvHandle construct(DistributionHandle dist, const WeightFunction& w) {
  return std::make_shared<WtrvDistribution>(std::move(dist), w);
}

WtrvHandle equilibrium(DistributionHandle dist) { return construct(std::move(dist), linear_weight()); }

// ---------------------------------------------------------------------------
// Weighted Kumaraswamy

namespace {

class WeightedKumaraswamy final : public Distribution {
 public:
  WeightedKumaraswamy(double a, double b, double c) : a_(a), b_(b), c_(c) {
    for (auto [k, v] : {std::pair<const char*, double>{"a", a}, {"b", b}, {"c", c}}) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string("weighted_kumaraswamy: parameter ") + k + " must be positive and finite");
      }
    }
    log_norm_ = std::log(c_) - std::log(b_) - numerics::ln_beta(1.0 + c_ / a_, b_);
  }
  std::string name() const override { return "weighted_kumaraswamy"; }
  ParamList params() const override { return {{"a", a_}, {"b", b_}, {"c", c_}}; }
  Interval support() const override { return {0.0, 1.0}; }
  double pdf(double x) const override {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return std::exp(log_norm_ + (c_ - 1.0) * std::log(x) + b_ * std::log1p(-std::pow(x, a_)));
  }
  // x^a ~ Beta(c/a, b+1)
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return numerics::regularized_beta(std::pow(x, a_), c_ / a_, b_ + 1.0);
  }
  double sf(double x) const override {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return numerics::regularized_beta_complement(std::pow(x, a_), c_ / a_, b_ + 1.0);
  }
  double pdf_derivative(double x) const override {
    const double xa = std::pow(x, a_);
    return pdf(x) * ((c_ - 1.0) / x - b_ * a_ * xa / (x * (1.0 - xa)));
  }

 private:
  double a_, b_, c_;
  double log_norm_;
};

}  // namespace

DistributionHandle weighted_kumaraswamy(double a, double b, double c) {
  return std::make_shared<WeightedKumaraswamy>(a, b, c);
}

double wk_moment(double a, double b, double c, double n) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw DomainError("wk_moment: parameters must be positive");
  if (!(c + n > 0.0)) throw DomainError("wk_moment: order too negative");
  return std::exp(std::log(c) + numerics::ln_beta((c + n) / a, b + 1.0) - std::log(a) - std::log(b) -
                  numerics::ln_beta(1.0 + c / a, b));
}

// ---------------------------------------------------------------------------
// Minimum of independent variables

MinimumConstruction wtrv_of_minimum(const std::vector<DistributionHandle>& dists, const WeightFunction& w) {
  if (dists.size() < 2) throw DomainError("wtrv_of_minimum: at least two distributions required");
  MinimumConstruction out;
  out.minimum = std::make_shared<MinimumDistribution>(dists);
  out.wtrv_of_minimum = construct(out.minimum, w);
  std::vector<DistributionHandle> parts;
  parts.reserve(dists.size());
  for (const auto& d : dists) parts.push_back(construct(d, w));
  out.minimum_of_wtrvs = std::make_shared<MinimumDistribution>(parts);
  return out;
}

}  // namespace wtrv
