#pragma once

// Shared numeric kernels: special functions, adaptive quadrature, root
// finding, box-constrained minimization and finite differences.
//
// All functions are pure; none keeps state between calls.

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "wtrv/errors.hpp"

namespace wtrv::numerics {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Open interval (lo, hi). `lo` is finite; `hi` may be +infinity.
struct Interval {
  double lo = 0.0;
  double hi = kInf;

  Interval() = default;
  Interval(double lo_, double hi_);

  bool bounded_above() const noexcept { return hi < kInf; }
  bool contains(double x) const noexcept { return x > lo && x < hi; }
  bool contains_closed(double x) const noexcept { return x >= lo && x <= hi; }
  double clamp(double x) const noexcept { return x < lo ? lo : (x > hi ? hi : x); }
  bool operator==(const Interval&) const = default;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct OptimizeResult {
  std::vector<double> argmin;
  double objective = 0.0;
  double gradient_norm = 0.0;  // projected gradient, 2-norm
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using RealFunction = std::function<double(double)>;
using VectorFunction = std::function<double(std::span<const double>)>;

// ---------------------------------------------------------------------------
// Special functions

/// ln Γ(x) for x > 0 (Lanczos, g = 7). Throws DomainError for x <= 0.
double ln_gamma(double x);

/// B(p, q) = Γ(p)Γ(q)/Γ(p+q).
double beta_fn(double p, double q);
double ln_beta(double p, double q);

/// Regularized incomplete beta I_x(p, q) and its complement 1 - I_x(p, q).
/// The complement is computed directly, so it keeps relative accuracy when
/// it is small.
double regularized_beta(double x, double p, double q);
double regularized_beta_complement(double x, double p, double q);

/// B₁(y, 1; p, q) = ∫_y^1 t^{p-1}(1-t)^{q-1} dt.
double incomplete_beta_upper(double y, double p, double q);

/// Regularized lower/upper incomplete gamma P(a, x) and Q(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution with `df` degrees of
/// freedom.
double chi_square_sf(double x, double df);

/// Standard normal CDF and survival function.
double normal_cdf(double x);
double normal_sf(double x);

/// Q(λ) = 2 Σ_{k≥1} (-1)^{k-1} exp(-2k²λ²), the asymptotic Kolmogorov
/// survival function.
double kolmogorov_sf(double lambda);

/// Asymptotic (parameters-known) CDFs of the Anderson-Darling A² and
/// Cramér-von Mises W² statistics.
double anderson_darling_cdf(double a2);
double cramer_von_mises_cdf(double w2);

// ---------------------------------------------------------------------------
// Quadrature

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_subdivisions = 2000;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature over `range`. A range with an
/// infinite upper end is mapped to (0, 1) by t = (x-lo)/(1+x-lo) first.
/// The integrand is never evaluated at the endpoints.
/// Throws AccuracyError (carrying the best estimate) when the subdivision
/// budget is exhausted before the tolerance is met.
QuadratureResult integrate_adaptive(const RealFunction& f, Interval range,
                                    const QuadratureOptions& opts = {});

QuadratureResult integrate_adaptive(const RealFunction& f, Interval range, double abs_tol,
                                    double rel_tol);

// ---------------------------------------------------------------------------
// Root finding

/// Brent's method on [lo, hi]. Requires f(lo)·f(hi) <= 0 (BracketError
/// otherwise). Terminates when |f(x)| <= ftol or the bracket is narrower
/// than xtol.
double brent_root(const RealFunction& f, double lo, double hi, double tol);
double brent_root(const RealFunction& f, double lo, double hi, double xtol, double ftol,
                  std::size_t max_iter = 200);

// ---------------------------------------------------------------------------
// Optimization

struct MinimizeOptions {
  double tol = 1e-6;           // projected-gradient norm for convergence
  std::size_t memory = 10;     // limited-memory history length
  std::size_t max_iter = 1000;
  double step_scale = 1e-6;    // FD step h = step_scale·(1+|x|)
};

/// Box-constrained limited-memory quasi-Newton minimization with central
/// finite-difference gradients. Iterates are projected onto the box.
OptimizeResult minimize_bounded(const VectorFunction& objective, std::vector<double> x0,
                                std::span<const Interval> bounds, const MinimizeOptions& opts);
OptimizeResult minimize_bounded(const VectorFunction& objective, std::vector<double> x0,
                                std::span<const Interval> bounds, double tol);

/// Central-difference gradient with a common step h. Throws DomainError on a
/// non-finite evaluation.
std::vector<double> finite_diff_grad(const VectorFunction& f, std::span<const double> x, double h);

/// Gradient with per-coordinate steps h_i = scale·(1+|x_i|), clipped to the
/// box (one-sided differences at active bounds). Used by the optimizer.
std::vector<double> box_gradient(const VectorFunction& f, std::span<const double> x,
                                 std::span<const Interval> bounds, double scale);

/// ‖P(x - g) - x‖₂, the projected-gradient norm over the closed box.
double projected_gradient_norm(std::span<const double> x, std::span<const double> g,
                               std::span<const Interval> bounds);

}  // namespace wtrv::numerics
