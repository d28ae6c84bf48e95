#pragma once

// Hazard, reversed hazard, mean residual life and Glaser functions; grid
// checks of aging classes and of the hypotheses of the aging theorems.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtrv/distributions.hpp"
#include "wtrv/weights.hpp"

namespace wtrv {

double hazard(const Distribution& dist, double x);           // TailError when sf(x) = 0
double reversed_hazard(const Distribution& dist, double x);  // TailError when cdf(x) = 0
double mrl(const Distribution& dist, double x);              // IntegrabilityError when infinite
double glaser(const Distribution& dist, double x);           // -pdf'/pdf

/// Quantile-spaced interior grid, u from 0.005 to 0.995.
std::vector<double> quantile_grid(const Distribution& dist, std::size_t n);

struct Witness {
  double x1 = 0.0;
  double x2 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  std::string what;
};

enum class Shape { increasing, decreasing, concave, convex };

struct ShapeCheck {
  bool holds = true;
  std::optional<Witness> witness;
  std::size_t skipped = 0;  // non-finite values left out
};

/// Tests a shape of the sampled function on a sorted grid. Monotonicity uses a
/// relative slack; concavity compares consecutive secant slopes with a slack
/// scaled by the local spacing.
ShapeCheck check_shape(const std::vector<double>& xs, const std::vector<double>& values, Shape shape,
                       double slack = 1e-9);

struct AgingReport {
  bool ilr = false, dlr = false;
  bool ifr = false, dfr = false;
  bool dmrl = false, imrl = false;
  std::vector<double> grid;
  std::vector<std::pair<std::string, Witness>> witnesses;  // first violation per rejected class
  std::vector<std::string> notes;
};

/// Grid checks never prove a class; a flag means no violation was found.
AgingReport classify_aging(const Distribution& dist, std::size_t grid_size = 256);
AgingReport classify_aging_on(const Distribution& dist, std::vector<double> grid);

enum class AgingTheorem { prop1, thm1, thm2, thm3, thm4, prop2 };
AgingTheorem parse_aging_theorem(const std::string& name);
std::string to_string(AgingTheorem which);

struct ConditionReport {
  AgingTheorem which = AgingTheorem::thm1;
  std::string variant;  // e.g. "IFR" or "DFR" for the bracketed reading
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_hold = false;
  bool weight_admissible = false;
  std::string conclusion;
  bool conclusion_evaluated = false;
  bool conclusion_holds = false;
  std::string note;

  // A failing conclusion under passing hypotheses is a counterexample.
  bool consistent() const { return !hypotheses_hold || !conclusion_evaluated || conclusion_holds; }
};

ConditionReport check_theorem_conditions(DistributionHandle dist, const WeightFunction& w, AgingTheorem which,
                                         std::size_t grid_size = 256);

}  // namespace wtrv
