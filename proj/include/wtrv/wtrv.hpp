#pragma once

// Construction of weighted tail random variables: density w'(x)·sf(x)/E[w(X)].

#include <memory>
#include <string>
#include <vector>

#include "wtrv/distributions.hpp"
#include "wtrv/weights.hpp"

namespace wtrv {

/// E[w(X)] = ∫ w'(x) sf(x) dx over the support. Throws IntegrabilityError
/// when the integral diverges or cannot be resolved.
double expected_weight(const Distribution& dist, const WeightFunction& w);

class WtrvDistribution final : public Distribution {
 public:
  WtrvDistribution(DistributionHandle base, WeightFunction weight);

  std::string name() const override { return "wtrv"; }
  ParamList params() const override;
  Interval support() const override { return support_; }
  double pdf(double x) const override;
  double cdf(double x) const override;
  double sf(double x) const override;
  double quantile(double u) const override;

  const DistributionHandle& base() const { return base_; }
  const WeightFunction& weight() const { return weight_; }
  double normalizer() const { return normalizer_; }
  std::size_t table_size() const { return nodes_.size(); }
  // Total mass of the table before normalization; 1 up to quadrature error.
  double table_mass() const { return table_mass_; }

 private:
  struct Cell {
    double a, b;
    double fa, fb;   // density at the ends (unnormalized)
    double mass;     // unnormalized
    bool direct;     // no usable interpolant; integrate on demand
  };

  double density(double x) const;  // w'·sf, unnormalized
  double partial_mass(const Cell& c, double x) const;
  std::size_t locate(double x) const;
  double tail_mass_beyond(double x) const;
  void build_table();
  double integrate(double a, double b, bool relative_only = false) const;

  DistributionHandle base_;
  WeightFunction weight_;
  double normalizer_ = 0.0;
  Interval support_;

  std::vector<double> nodes_;     // cell left ends plus the final right end
  std::vector<Cell> cells_;
  std::vector<double> left_cum_;  // mass left of cell i (normalized)
  std::vector<double> right_cum_; // mass right of cell i (normalized)
  double upper_tail_ = 0.0;       // normalized mass beyond the last node
  double table_mass_ = 0.0;
};

using WtrvHandle = std::shared_ptr<const WtrvDistribution>;

WtrvHandle construct(DistributionHandle dist, const WeightFunction& w);

/// construct(dist, linear): density sf/μ.
WtrvHandle equilibrium(DistributionHandle dist);

/// WK(a, b, c), the WTRV of Kumaraswamy(a, b) under w = x^c, in closed form.
DistributionHandle weighted_kumaraswamy(double a, double b, double c);

/// n-th raw moment of WK(a, b, c).
double wk_moment(double a, double b, double c, double n);

struct MinimumConstruction {
  DistributionHandle minimum;        // min(X_1, ..., X_n)
  WtrvHandle wtrv_of_minimum;        // (min X_i)_w
  DistributionHandle minimum_of_wtrvs;  // min((X_i)_w)
};

MinimumConstruction wtrv_of_minimum(const std::vector<DistributionHandle>& dists, const WeightFunction& w);

struct Table1Row {
  int row = 0;
  std::string base;
  std::string weight;
  std::string target;
  double sup_norm = 0.0;
  double tolerance = 1e-6;
  bool passed = false;
  std::string note;
};

/// Builds each of the twelve catalog constructions numerically and reports
/// the sup-norm distance of the density from its closed form on a 512-point
/// interior grid.
std::vector<Table1Row> table1_oracle_suite();

}  // namespace wtrv
