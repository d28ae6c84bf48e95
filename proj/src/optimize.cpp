#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "wtrv/numerics.hpp"

namespace wtrv::numerics {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

struct CorrectionPair {
  std::vector<double> s;
  std::vector<double> y;
  double rho;
};

// Coordinates pinned at a bound with the gradient pushing outward.
std::vector<bool> active_set(std::span<const double> x, std::span<const double> g,
                             std::span<const Interval> bounds) {
  std::vector<bool> active(x.size(), false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double scale = 1e-12 * (1.0 + std::fabs(x[i]));
    if (x[i] <= bounds[i].lo + scale && g[i] > 0.0) active[i] = true;
    if (x[i] >= bounds[i].hi - scale && g[i] < 0.0) active[i] = true;
  }
  return active;
}

// Two-loop recursion restricted to the free coordinates.
std::vector<double> lbfgs_direction(std::span<const double> g, const std::deque<CorrectionPair>& memory,
                                    const std::vector<bool>& active) {
  const std::size_t n = g.size();
  std::vector<double> q(g.begin(), g.end());
  for (std::size_t i = 0; i < n; ++i)
    if (active[i]) q[i] = 0.0;
  std::vector<double> alpha(memory.size());
  for (std::size_t k = memory.size(); k-- > 0;) {
    alpha[k] = memory[k].rho * dot(memory[k].s, q);
    for (std::size_t i = 0; i < n; ++i) q[i] -= alpha[k] * memory[k].y[i];
  }
  if (!memory.empty()) {
    const auto& last = memory.back();
    const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
    for (auto& v : q) v *= gamma;
  }
  for (std::size_t k = 0; k < memory.size(); ++k) {
    const double beta = memory[k].rho * dot(memory[k].y, q);
    for (std::size_t i = 0; i < n; ++i) q[i] += memory[k].s[i] * (alpha[k] - beta);
  }
  for (std::size_t i = 0; i < n; ++i) q[i] = active[i] ? 0.0 : -q[i];
  return q;
}

void project(std::vector<double>& x, std::span<const Interval> bounds) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], bounds[i].lo, bounds[i].hi);
}

}  // namespace

OptimizeResult minimize_bounded(const VectorFunction& objective, std::vector<double> x0,
                                std::span<const Interval> bounds, double tol) {
  MinimizeOptions opts;
  opts.tol = tol;
  return minimize_bounded(objective, std::move(x0), bounds, opts);
}

OptimizeResult minimize_bounded(const VectorFunction& objective, std::vector<double> x0,
                                std::span<const Interval> bounds, const MinimizeOptions& opts) {
  const std::size_t n = x0.size();
  if (bounds.size() != n) throw DomainError("minimize_bounded: one interval per coordinate required");
  for (std::size_t i = 0; i < n; ++i) {
    if (!bounds[i].bounded_above()) throw DomainError("minimize_bounded: bounds must be finite");
    if (!bounds[i].contains_closed(x0[i])) throw StartError("minimize_bounded: start point outside bounds");
  }

  std::size_t evaluations = 0;
  auto f = [&](std::span<const double> x) {
    ++evaluations;
    return objective(x);
  };

  std::vector<double> x = std::move(x0);
  double fx = f(x);
  if (!std::isfinite(fx)) throw StartError("minimize_bounded: objective is not finite at the start point");

  auto gradient = [&](std::span<const double> at) { return box_gradient(f, at, bounds, opts.step_scale); };
  std::vector<double> g = gradient(x);
  std::deque<CorrectionPair> memory;

  OptimizeResult result;
  std::size_t stalls = 0;
  std::size_t iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    const double pg = projected_gradient_norm(x, g, bounds);
    if (pg <= opts.tol) {
      result.converged = true;
      break;
    }
    const auto active = active_set(x, g, bounds);
    std::vector<double> d = lbfgs_direction(g, memory, active);
    double slope = dot(d, g);
    if (!(slope < 0.0)) {
      memory.clear();
      d = lbfgs_direction(g, memory, active);
      slope = dot(d, g);
      if (!(slope < 0.0)) break;
    }

    double step = 1.0;
    if (memory.empty()) {
      const double dn = std::sqrt(dot(d, d));
      step = std::min(1.0, 1.0 / std::max(dn, 1e-300));
    }

    std::vector<double> x_new(n);
    double f_new = fx;
    bool accepted = false;
    for (int trial = 0; trial < 60; ++trial) {
      for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + step * d[i];
      project(x_new, bounds);
      f_new = f(x_new);
      double decrease = 0.0;
      for (std::size_t i = 0; i < n; ++i) decrease += g[i] * (x_new[i] - x[i]);
      if (std::isfinite(f_new) && f_new <= fx + 1e-4 * decrease) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!memory.empty()) {
        memory.clear();
        continue;
      }
      break;
    }

    std::vector<double> g_new = gradient(x_new);
    CorrectionPair pair{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      pair.s[i] = x_new[i] - x[i];
      pair.y[i] = g_new[i] - g[i];
    }
    const double sy = dot(pair.s, pair.y);
    if (sy > 1e-12 * std::sqrt(dot(pair.s, pair.s) * dot(pair.y, pair.y))) {
      pair.rho = 1.0 / sy;
      memory.push_back(std::move(pair));
      if (memory.size() > opts.memory) memory.pop_front();
    }

    const double change = fx - f_new;
    stalls = (change <= 1e-15 * (1.0 + std::fabs(fx))) ? stalls + 1 : 0;
    x = std::move(x_new);
    fx = f_new;
    g = std::move(g_new);
    if (stalls >= 5) break;
  }

  result.gradient_norm = projected_gradient_norm(x, g, bounds);
  if (result.gradient_norm <= opts.tol) result.converged = true;
  result.argmin = std::move(x);
  result.objective = fx;
  result.iterations = iter;
  result.evaluations = evaluations;
  return result;
}

}  // namespace wtrv::numerics
