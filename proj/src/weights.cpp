#include "wtrv/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wtrv/wtrv.hpp"

namespace wtrv {

using numerics::kInf;

std::string WeightFunction::spec() const {
  std::ostringstream os;
  os.precision(17);
  os << name;
  if (!params.empty()) {
    os << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) os << ',';
      os << params[i].first << '=' << params[i].second;
    }
    os << ')';
  }
  return os.str();
}

namespace {

double param(const std::string& weight, const ParamMap& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError(weight + ": missing parameter '" + key + "'");
  if (!(it->second > 0.0) || !std::isfinite(it->second)) {
    throw DomainError(weight + ": parameter " + key + " must be positive and finite");
  }
  return it->second;
}

void reject_unknown(const std::string& weight, const ParamMap& params, std::initializer_list<const char*> known) {
  for (const auto& [k, v] : params) {
    if (std::none_of(known.begin(), known.end(), [&](const char* n) { return k == n; })) {
      throw DomainError(weight + ": unknown parameter '" + k + "'");
    }
  }
}

}  // namespace

WeightFunction linear_weight() { return make_weight("linear"); }
WeightFunction power_weight(double c) { return make_weight("power", {{"c", c}}); }
WeightFunction scaled_power_weight(double alpha, double beta) {
  return make_weight("scaled_power", {{"alpha", alpha}, {"beta", beta}});
}

const std::vector<std::string>& weight_names() {
  static const std::vector<std::string> names = {"power",        "scaled_power", "log1p_power", "neg_log_sq",
                                                 "exp_shift_sq", "expm1",        "neg_x_log1m", "linear"};
  return names;
}

WeightFunction make_weight(const std::string& name, const ParamMap& params) {
  WeightFunction out;
  out.name = name;
  out.domain_hint = Interval(0.0, kInf);
  if (name == "power") {
    reject_unknown(name, params, {"c"});
    const double c = param(name, params, "c");
    out.params = {{"c", c}};
    out.w = [c](double x) { return std::pow(x, c); };
    out.w_prime = [c](double x) { return c * std::pow(x, c - 1.0); };
    out.log_w_prime = [c](double x) { return std::log(c) + (c - 1.0) * std::log(x); };
  } else if (name == "scaled_power") {
    reject_unknown(name, params, {"alpha", "beta"});
    const double a = param(name, params, "alpha");
    const double b = param(name, params, "beta");
    out.params = {{"alpha", a}, {"beta", b}};
    out.w = [a, b](double x) { return std::pow(x / b, a); };
    out.w_prime = [a, b](double x) { return a / b * std::pow(x / b, a - 1.0); };
    out.log_w_prime = [a, b](double x) { return std::log(a / b) + (a - 1.0) * std::log(x / b); };
  } else if (name == "log1p_power") {
    reject_unknown(name, params, {"c"});
    const double c = param(name, params, "c");
    out.params = {{"c", c}};
    out.w = [c](double x) { return std::log1p(std::pow(x, c)); };
    out.w_prime = [c](double x) { return c * std::pow(x, c - 1.0) / (1.0 + std::pow(x, c)); };
    out.log_w_prime = [c](double x) {
      return std::log(c) + (c - 1.0) * std::log(x) - std::log1p(std::pow(x, c));
    };
  } else if (name == "neg_log_sq") {
    reject_unknown(name, params, {});
    out.domain_hint = Interval(0.0, 1.0);
    out.w = [](double x) { return -std::log1p(-x * x); };
    out.w_prime = [](double x) { return 2.0 * x / (1.0 - x * x); };
    out.log_w_prime = [](double x) { return std::log(2.0 * x) - std::log1p(-x * x); };
  } else if (name == "exp_shift_sq") {
    reject_unknown(name, params, {});
    out.w = [](double x) { return std::exp((x + 1.0) * (x + 1.0)) - std::numbers::e; };
    out.w_prime = [](double x) { return 2.0 * (x + 1.0) * std::exp((x + 1.0) * (x + 1.0)); };
    out.log_w_prime = [](double x) { return std::log(2.0 * (x + 1.0)) + (x + 1.0) * (x + 1.0); };
  } else if (name == "expm1") {
    reject_unknown(name, params, {});
    out.w = [](double x) { return std::expm1(x); };
    out.w_prime = [](double x) { return std::exp(x); };
    out.log_w_prime = [](double x) { return x; };
  } else if (name == "neg_x_log1m") {
    reject_unknown(name, params, {});
    out.domain_hint = Interval(0.0, 1.0);
    out.w = [](double x) { return -x - std::log1p(-x); };
    out.w_prime = [](double x) { return x / (1.0 - x); };
    out.log_w_prime = [](double x) { return std::log(x) - std::log1p(-x); };
  } else if (name == "linear") {
    reject_unknown(name, params, {});
    out.w = [](double x) { return x; };
    out.w_prime = [](double) { return 1.0; };
    out.log_w_prime = [](double) { return 0.0; };
  } else {
    throw DomainError("unknown weight '" + name + "'");
  }
  return out;
}

double weighted_tail(const WeightFunction& w, const Distribution& dist, double x) {
  const double s = dist.sf(x);
  if (s <= 0.0) return 0.0;
  const double wp = w.w_prime(x);
  if (std::isfinite(wp)) return wp * s;
  if (std::isnan(wp)) return wp;
  return std::exp(w.log_w_prime(x) + std::log(s));
}

WeightValidity validate_weight(const WeightFunction& w, const Distribution& dist) {
  WeightValidity v;
  const Interval s = dist.support();
  if (s.lo != 0.0) throw DomainError("validate_weight: distribution must have lower bound 0");

  const double w0 = w.w(0.0);
  if (std::isnan(w0)) throw EvaluationError("validate_weight: w(0) is not a number");
  v.starts_at_zero = std::fabs(w0) <= 1e-12;
  v.domain_covers_support = s.hi <= w.domain_hint.hi;

  const double hi = std::min(s.hi, w.domain_hint.hi);
  const double top = std::isfinite(hi) ? hi : dist.quantile(0.999);
  constexpr int kGrid = 256;
  v.nondecreasing_on_grid = true;
  double prev = w0;
  for (int i = 1; i < kGrid; ++i) {
    // stay off a finite upper end where w may blow up
    const double x = top * i / (std::isfinite(hi) ? kGrid : kGrid - 1);
    const double cur = w.w(x);
    if (std::isnan(cur)) throw EvaluationError("validate_weight: w is not a number at x = " + std::to_string(x));
    if (cur < prev - 1e-12 * (1.0 + std::fabs(prev))) {
      v.nondecreasing_on_grid = false;
      v.detail += "w decreases near x = " + std::to_string(x) + "; ";
      break;
    }
    prev = cur;
  }

  try {
    expected_weight(dist, w);
    v.integrability_ok = true;
  } catch (const IntegrabilityError& e) {
    v.integrability_ok = false;
    v.detail += e.what();
  }
  return v;
}

}  // namespace wtrv
