#pragma once

// Goodness-of-fit statistics with asymptotic parameters-known p-values and a
// parametric bootstrap alternative.

#include <cstdint>
#include <string>
#include <vector>

#include "wtrv/distributions.hpp"
#include "wtrv/fit.hpp"

namespace wtrv {

enum class GofTest { ks, ad, cvm, chisq };
GofTest parse_gof_test(const std::string& name);
std::string to_string(GofTest test);

enum class PValueMethod { asymptotic, bootstrap };
std::string to_string(PValueMethod method);

struct TestResult {
  GofTest test = GofTest::ks;
  double statistic = 0.0;
  double p_value = 1.0;
  PValueMethod method = PValueMethod::asymptotic;
  int df = 0;  // chi-square only
};

/// sample must be sorted ascending.
TestResult ks_test(const std::vector<double>& sample, const Distribution& model);
TestResult ad_test(const std::vector<double>& sample, const Distribution& model);
TestResult cvm_test(const std::vector<double>& sample, const Distribution& model);

enum class DfConvention { bins_minus_1, bins_minus_1_minus_k, explicit_df };

struct ChiSquareOptions {
  std::size_t bins = 10;
  DfConvention convention = DfConvention::bins_minus_1_minus_k;
  std::size_t fitted_params = 0;  // k
  int df = 0;                     // used by explicit_df
};

/// Equal-probability bins under the model; E_j = n/bins.
TestResult chisq_test(const std::vector<double>& sample, const Distribution& model, const ChiSquareOptions& opts = {});

/// Degrees of freedom d in [1, max_df] whose survival value at `statistic`
/// is within `tol` of `p_value`.
std::vector<int> chisq_df_sweep(double statistic, double p_value, double tol = 5e-4, int max_df = 20);

struct BootstrapOptions {
  std::size_t replicates = 199;
  std::uint64_t seed = 42;
  std::size_t refit_starts = 4;
  ChiSquareOptions chisq;
  parallel::Mode mode = parallel::Mode::openmp;
};

struct BootstrapResult {
  TestResult observed;  // statistic of the data, bootstrap p-value
  std::size_t replicates = 0;
  std::size_t exceed = 0;
  std::size_t failures = 0;
};

/// Parametric bootstrap: simulate from the fitted model, refit, recompute the
/// statistic; p = (1 + #{T* >= T})/(B + 1).
BootstrapResult bootstrap_pvalue(const std::vector<double>& sample, Model model, const std::vector<double>& params,
                                 GofTest test, const BootstrapOptions& opts = {});

struct GofReport {
  std::string model;
  std::size_t n = 0;
  std::vector<TestResult> tests;
};

GofReport run_gof(const std::vector<double>& sample, Model model, const std::vector<double>& params,
                  const std::vector<GofTest>& tests, PValueMethod method, const BootstrapOptions& opts = {});

}  // namespace wtrv
