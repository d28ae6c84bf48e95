#pragma once

// Base-distribution abstraction and the catalog of input distributions.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wtrv/numerics.hpp"

namespace wtrv {

using numerics::Interval;
using ParamList = std::vector<std::pair<std::string, double>>;
using ParamMap = std::map<std::string, double>;

/// A continuous univariate distribution. Implementations are immutable, so a
/// handle can be shared across threads.
class Distribution {
 public:
  virtual ~Distribution() = default;

  virtual std::string name() const = 0;
  virtual ParamList params() const = 0;
  virtual Interval support() const = 0;

  virtual double pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;
  virtual double sf(double x) const = 0;

  /// Inverse CDF. The default inverts cdf (or sf in the upper half) with
  /// safeguarded Newton steps.
  virtual double quantile(double u) const;

  /// d/dx pdf. Default: central differences kept inside the support.
  virtual double pdf_derivative(double x) const;

  /// "name(k1=v1,k2=v2)"
  std::string spec() const;

 protected:
  double invert_numerically(double u) const;
};

using DistributionHandle = std::shared_ptr<const Distribution>;

/// Builds a catalog distribution. Names: exponential, gamma, weibull,
/// rayleigh, half_normal, generalized_gamma, burr12, pareto_lomax, uniform,
/// beta, kumaraswamy, weighted_kumaraswamy, chi_square, truncated_power.
/// Throws CatalogError for an unknown name, DomainError for bad parameters.
DistributionHandle make_catalog(const std::string& name, const ParamMap& params);

/// Names accepted by make_catalog, in catalog order.
const std::vector<std::string>& catalog_names();

/// n i.i.d. draws by inverse transform; deterministic for a fixed seed.
std::vector<double> sample(const Distribution& dist, std::size_t n, std::uint64_t seed);

// Convenience constructors for the families used throughout the tests and
// fixtures.
DistributionHandle exponential(double lambda);
DistributionHandle gamma_dist(double shape, double rate);
DistributionHandle weibull(double shape, double scale);
DistributionHandle uniform(double lo = 0.0, double hi = 1.0);
DistributionHandle beta_dist(double alpha, double beta);
DistributionHandle kumaraswamy(double a, double b);
DistributionHandle pareto_lomax(double alpha);
DistributionHandle burr12(double c, double k);
DistributionHandle truncated_power(double beta);

/// Minimum of independent variables: SF is the product of the component
/// SFs. All components must share the same support.
class MinimumDistribution final : public Distribution {
 public:
  explicit MinimumDistribution(std::vector<DistributionHandle> parts);

  std::string name() const override { return "minimum"; }
  ParamList params() const override;
  Interval support() const override { return support_; }
  double pdf(double x) const override;
  double cdf(double x) const override;
  double sf(double x) const override;

  const std::vector<DistributionHandle>& parts() const { return parts_; }

 private:
  std::vector<DistributionHandle> parts_;
  Interval support_;
};

}  // namespace wtrv
