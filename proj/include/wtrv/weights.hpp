#pragma once

// Weight functions w on [0, u) and their admissibility checks.

#include <functional>
#include <string>
#include <vector>

#include "wtrv/distributions.hpp"

namespace wtrv {

struct WeightFunction {
  std::string name;
  ParamList params;
  std::function<double(double)> w;
  std::function<double(double)> w_prime;
  // log w'(x); stays finite where w' itself overflows.
  std::function<double(double)> log_w_prime;
  Interval domain_hint;  // [0, u)

  double operator()(double x) const { return w(x); }
  std::string spec() const;
};

/// Catalog: power(c), scaled_power(alpha, beta), log1p_power(c), neg_log_sq,
/// exp_shift_sq, expm1, neg_x_log1m, linear. Throws DomainError on an unknown
/// name or bad parameters.
WeightFunction make_weight(const std::string& name, const ParamMap& params = {});
const std::vector<std::string>& weight_names();

WeightFunction linear_weight();
WeightFunction power_weight(double c);
WeightFunction scaled_power_weight(double alpha, double beta);

struct WeightValidity {
  bool starts_at_zero = false;
  bool nondecreasing_on_grid = false;
  bool domain_covers_support = false;
  bool integrability_ok = false;
  std::string detail;

  bool ok() const { return starts_at_zero && nondecreasing_on_grid && domain_covers_support && integrability_ok; }
};

/// Checks w(0) = 0, monotonicity on a 256-point grid, that the weight's domain
/// reaches the upper end of the support, and finiteness of ∫ w'·sf.
WeightValidity validate_weight(const WeightFunction& w, const Distribution& dist);

/// w'(x)·sf(x), evaluated in log space when w' overflows.
double weighted_tail(const WeightFunction& w, const Distribution& dist, double x);

}  // namespace wtrv
