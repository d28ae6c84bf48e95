#pragma once

// Maximum-likelihood fitting of Beta, Kumaraswamy and weighted Kumaraswamy
// models to data min-max normalized onto [0, 1].

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wtrv/distributions.hpp"
#include "wtrv/numerics.hpp"
#include "wtrv/parallel.hpp"

namespace wtrv {

enum class BoundaryPolicy { exclude_boundary, shrink };
BoundaryPolicy parse_boundary_policy(const std::string& name);  // accepts '-' or '_'
std::string to_string(BoundaryPolicy policy);

struct NormalizedSample {
  std::vector<double> values;      // all normalized observations, sorted
  std::vector<double> likelihood;  // observations entering the likelihood
  double z_min = 0.0;
  double z_max = 0.0;
  std::size_t n = 0;
  BoundaryPolicy policy = BoundaryPolicy::exclude_boundary;
};

/// x = (z - z_min)/(z_max - z_min). exclude_boundary drops the points mapping
/// exactly to 0 or 1 from the likelihood set; shrink maps x to (x(n-1)+0.5)/n.
NormalizedSample normalize(const std::vector<double>& z, BoundaryPolicy policy = BoundaryPolicy::exclude_boundary);

enum class Model { beta, kw, wk };
Model parse_model(const std::string& name);
std::string to_string(Model model);
std::vector<std::string> parameter_names(Model model);
DistributionHandle make_model(Model model, const std::vector<double>& params);

double loglik(Model model, const std::vector<double>& xs, const std::vector<double>& params);
double loglik_beta(const NormalizedSample& s, double alpha, double beta);
double loglik_kw(const NormalizedSample& s, double a, double b);
double loglik_wk(const NormalizedSample& s, double a, double b, double c);

struct FitResult {
  Model model = Model::wk;
  std::vector<std::pair<std::string, double>> params;
  double loglik = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  double rmse = 0.0;
  std::size_t n = 0;  // observations in the likelihood
  BoundaryPolicy policy = BoundaryPolicy::exclude_boundary;
  numerics::OptimizeResult optimizer;
  std::size_t starts_tried = 0;
  std::size_t starts_failed = 0;

  std::vector<double> values() const;
};

struct FitOptions {
  std::size_t starts = 16;  // generated starts: the moment start plus random ones
  std::uint64_t seed = 42;
  double lower = 1e-3;
  double upper = 1e3;
  double tol = 1e-7;
  parallel::Mode mode = parallel::Mode::openmp;
  bool moment_start = true;
  std::vector<std::vector<double>> extra_starts;  // tried before the generated ones
};

/// Multi-start bounded minimization of -loglik. Random starts are log-uniform
/// over the box; a moment-matched start is always included.
FitResult fit_mle(const NormalizedSample& sample, Model model, const FitOptions& opts = {});
FitResult fit_mle(const NormalizedSample& sample, Model model, std::size_t starts, std::uint64_t seed);

/// Fit on raw values in (0, 1); rmse is left at zero.
FitResult fit_values(const std::vector<double>& xs, Model model, const FitOptions& opts = {});

/// Single local run from `params`, for idempotence checks.
FitResult refit_from(const std::vector<double>& xs, Model model, const std::vector<double>& params);

/// Root-mean-square gap between equal-width histogram density heights on
/// [0, 1] and the fitted pdf at the bin midpoints.
double rmse_metric(const NormalizedSample& sample, const Distribution& fitted, std::size_t bins = 10);

}  // namespace wtrv
