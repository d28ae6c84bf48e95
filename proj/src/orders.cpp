#include "wtrv/orders.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "wtrv/parallel.hpp"

namespace wtrv {

using numerics::Interval;
using numerics::kInf;

namespace {

constexpr double kLogSlack = 1e-9;
constexpr double kPointSlack = 1e-10;

std::vector<double> merged_grid(const Distribution& x, const Distribution& y, std::size_t n) {
  auto a = quantile_grid(x, n);
  const auto b = quantile_grid(y, n);
  a.insert(a.end(), b.begin(), b.end());
  // a few far-tail levels; ratios can turn beyond the 0.5% quantiles
  for (double u : {1e-6, 1e-5, 1e-4, 1e-3}) {
    for (const Distribution* d : {&x, &y}) {
      a.push_back(d->quantile(u));
      a.push_back(d->quantile(1.0 - u));
    }
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

double log_ratio(double num, double den) {
  if (den <= 0.0) return num <= 0.0 ? std::nan("") : kInf;
  if (num <= 0.0) return -kInf;
  return std::log(num) - std::log(den);
}

// Nondecreasing check of log(num/den). 0/0 points are skipped.
std::optional<Witness> ratio_violation(const std::vector<double>& xs, const std::vector<double>& num,
                                       const std::vector<double>& den, const std::string& label) {
  bool have_prev = false;
  double px = 0.0, pr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = log_ratio(num[i], den[i]);
    if (std::isnan(r)) continue;
    if (have_prev) {
      bool bad;
      if (pr == kInf) bad = r != kInf;
      else if (pr == -kInf) bad = false;
      else bad = r < pr - kLogSlack * (1.0 + std::fabs(pr));
      if (bad) return Witness{px, xs[i], pr, r, label + " decreases"};
    }
    have_prev = true;
    px = xs[i];
    pr = r;
  }
  return std::nullopt;
}

std::optional<Witness> pointwise_violation(const std::vector<double>& xs, const std::vector<double>& sx,
                                           const std::vector<double>& sy) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (sx[i] > sy[i] + kPointSlack) return Witness{xs[i], xs[i], sx[i], sy[i], "sf_X exceeds sf_Y"};
  }
  return std::nullopt;
}

std::vector<double> eval(const std::vector<double>& xs, const std::function<double(double)>& f) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
  return out;
}

Interval wtrv_support(const Distribution& d, const WeightFunction& w) {
  const Interval s = d.support();
  return Interval(s.lo, std::min(s.hi, w.domain_hint.hi));
}

std::vector<double> inside(const std::vector<double>& xs, const Interval& s) {
  std::vector<double> out;
  for (double x : xs)
    if (s.contains(x)) out.push_back(x);
  return out;
}

Interval intersect(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

bool same_support(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

// log of wn'/wd' nondecreasing on the points
bool weight_ratio_increasing(const WeightFunction& wn, const WeightFunction& wd, const std::vector<double>& xs) {
  if (xs.size() < 2) return true;
  const auto v = eval(xs, [&](double x) { return wn.log_w_prime(x) - wd.log_w_prime(x); });
  return check_shape(xs, v, Shape::increasing).holds;
}

bool derivative_nonzero(const WeightFunction& w, const std::vector<double>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](double x) {
    const double d = w.w_prime(x);
    return d > 0.0 || d < 0.0;
  });
}

// w'/r_X on X's quantile grid (inside the weight domain)
bool weight_over_hazard(const Distribution& d, const WeightFunction& w, Shape shape, std::size_t n) {
  const auto xs = inside(quantile_grid(d, n), wtrv_support(d, w));
  if (xs.size() < 2) return true;
  const auto v = eval(xs, [&](double x) { return w.log_w_prime(x) - std::log(hazard(d, x)); });
  return check_shape(xs, v, shape).holds;
}

std::string describe(const Distribution& d) { return d.spec(); }

}  // namespace

Order parse_order(const std::string& name) {
  if (name == "lr") return Order::lr;
  if (name == "fr") return Order::fr;
  if (name == "rfr") return Order::rfr;
  if (name == "st") return Order::st;
  throw ParseError("unknown order '" + name + "'");
}

std::string to_string(Order order) {
  switch (order) {
    case Order::lr: return "lr";
    case Order::fr: return "fr";
    case Order::rfr: return "rfr";
    case Order::st: return "st";
  }
  return "?";
}

OrderVerdict check_order(const Distribution& x, const Distribution& y, Order order, std::size_t grid_size) {
  if (grid_size < 64) throw DomainError("check_order: grid_size must be at least 64");
  auto v = check_order_on(x, y, order, merged_grid(x, y, grid_size));
  v.grid = "merged quantile grids, " + std::to_string(v.grid_points) + " points";
  return v;
}

OrderVerdict check_order_on(const Distribution& x, const Distribution& y, Order order, std::vector<double> grid) {
  const Interval sx = x.support(), sy = y.support();
  const Interval hull(std::min(sx.lo, sy.lo), std::max(sx.hi, sy.hi));
  const Interval common = intersect(sx, sy);
  grid = inside(grid, hull);
  // finite outer endpoints anchor the ratio at 1 (both sf = 1 or both cdf = 1)
  if (order != Order::lr) {
    if (std::isfinite(hull.lo)) grid.push_back(hull.lo);
    if (std::isfinite(hull.hi)) grid.push_back(hull.hi);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  OrderVerdict v;
  v.order = order;
  v.bounds_ok = sx.lo <= sy.lo && sx.hi <= sy.hi;
  v.grid_points = grid.size();
  v.grid = "caller grid, " + std::to_string(grid.size()) + " points";
  const auto on_common = inside(grid, common);

  std::optional<Witness> full, restricted;
  switch (order) {
    case Order::lr: {
      auto pdf = [](const Distribution& d) { return [&d](double t) { return d.pdf(t); }; };
      restricted = ratio_violation(on_common, eval(on_common, pdf(y)), eval(on_common, pdf(x)), "f_Y/f_X");
      full = restricted;
      break;
    }
    case Order::fr: {
      auto sf = [](const Distribution& d) { return [&d](double t) { return d.sf(t); }; };
      full = ratio_violation(grid, eval(grid, sf(y)), eval(grid, sf(x)), "sf_Y/sf_X");
      restricted = ratio_violation(on_common, eval(on_common, sf(y)), eval(on_common, sf(x)), "sf_Y/sf_X");
      break;
    }
    case Order::rfr: {
      auto cdf = [](const Distribution& d) { return [&d](double t) { return d.cdf(t); }; };
      full = ratio_violation(grid, eval(grid, cdf(y)), eval(grid, cdf(x)), "F_Y/F_X");
      restricted = ratio_violation(on_common, eval(on_common, cdf(y)), eval(on_common, cdf(x)), "F_Y/F_X");
      // With both upper ends infinite the ratio tends to 1, so an increasing
      // ratio can never exceed 1.
      if (!hull.bounded_above() && !grid.empty()) {
        const double top = grid.back();
        const double r = log_ratio(y.cdf(top), x.cdf(top));
        if (r > kLogSlack) {
          const Witness w{top, kInf, std::exp(r), 1.0, "F_Y/F_X exceeds its limit 1 at +inf"};
          if (!full) full = w;
          if (!restricted && !common.bounded_above()) restricted = w;
        }
      }
      break;
    }
    case Order::st: {
      auto sf = [](const Distribution& d) { return [&d](double t) { return d.sf(t); }; };
      full = pointwise_violation(grid, eval(grid, sf(x)), eval(grid, sf(y)));
      restricted = pointwise_violation(on_common, eval(on_common, sf(x)), eval(on_common, sf(y)));
      break;
    }
  }
  v.holds_on_common_support = !restricted.has_value();
  v.holds_on_grid = v.bounds_ok && !full.has_value();
  v.first_violation = full;
  if (!v.first_violation && !v.bounds_ok) {
    v.first_violation = Witness{sx.lo, sx.hi, sy.lo, sy.hi, "support bounds: need l_X <= l_Y and u_X <= u_Y"};
  }
  return v;
}

OrderTheorem parse_order_theorem(const std::string& name) {
  static const std::pair<const char*, OrderTheorem> table[] = {
      {"thm5i", OrderTheorem::thm5i}, {"thm5ii", OrderTheorem::thm5ii}, {"thm6", OrderTheorem::thm6},
      {"thm7", OrderTheorem::thm7},   {"thm8", OrderTheorem::thm8},     {"thm9", OrderTheorem::thm9},
      {"thm10", OrderTheorem::thm10}};
  for (const auto& [key, value] : table)
    if (name == key) return value;
  throw ParseError("unknown theorem '" + name + "'");
}

std::string to_string(OrderTheorem which) {
  switch (which) {
    case OrderTheorem::thm5i: return "thm5i";
    case OrderTheorem::thm5ii: return "thm5ii";
    case OrderTheorem::thm6: return "thm6";
    case OrderTheorem::thm7: return "thm7";
    case OrderTheorem::thm8: return "thm8";
    case OrderTheorem::thm9: return "thm9";
    case OrderTheorem::thm10: return "thm10";
  }
  return "?";
}

namespace {

TheoremReport evaluate_theorem(DistributionHandle x, DistributionHandle y, const WeightFunction& w1,
                               const WeightFunction& w2, OrderTheorem which, std::size_t n,
                               bool conclude_when_hypotheses_fail) {
  TheoremReport r;
  r.which = which;
  const Interval sx = x->support(), sy = y->support();
  const Interval s1 = wtrv_support(*x, w1), s2 = wtrv_support(*y, w2);
  const auto grid = merged_grid(*x, *y, n);

  auto add = [&r](const std::string& label, bool ok) {
    r.hypotheses.emplace_back(label, ok);
    return ok;
  };
  WtrvHandle xw, yw;
  auto build = [&]() -> bool {
    try {
      if (!xw) xw = construct(x, w1);
      if (!yw) yw = construct(y, w2);
      return true;
    } catch (const Error& e) {
      r.note = std::string("WTRV not constructible: ") + e.what();
      return false;
    }
  };
  auto conclude = [&](const Distribution& a, const Distribution& b, Order order, const std::string& text) {
    r.conclusion = text;
    if (!r.hypotheses_hold && !conclude_when_hypotheses_fail) return;
    r.verdict = check_order(a, b, order, n);
    r.conclusion_evaluated = true;
    r.conclusion_holds = r.verdict->holds_on_grid;
  };

  switch (which) {
    case OrderTheorem::thm5i: {
      bool ok = add("l1 <= l2", s1.lo <= s2.lo);
      ok &= add("u1 <= u2", s1.hi <= s2.hi);
      ok &= add("X <=fr Y", check_order(*x, *y, Order::fr, n).holds_on_grid);
      ok &= add("w2'/w1' increasing on S1 ∩ S2", weight_ratio_increasing(w2, w1, inside(grid, intersect(s1, s2))));
      ok &= add("w1' != 0 on S1", derivative_nonzero(w1, inside(grid, s1)));
      r.hypotheses_hold = ok;
      if ((ok || conclude_when_hypotheses_fail) && build()) conclude(*xw, *yw, Order::lr, "X_w1 <=lr Y_w2");
      else r.conclusion = "X_w1 <=lr Y_w2";
      break;
    }
    case OrderTheorem::thm5ii:
    case OrderTheorem::thm6: {
      const bool thm6 = which == OrderTheorem::thm6;
      bool ok = add("S_X = S1", same_support(sx, s1));
      ok &= add("S_Y = S2", same_support(sy, s2));
      const bool built = build();
      ok &= add("X_w1, Y_w2 constructible", built);
      if (built) {
        const Order o = thm6 ? Order::rfr : Order::lr;
        ok &= add(thm6 ? "X_w1 <=rfr Y_w2" : "X_w1 <=lr Y_w2", check_order(*xw, *yw, o, n).holds_on_grid);
      }
      ok &= add("w1'/w2' increasing on S1 ∩ S2", weight_ratio_increasing(w1, w2, inside(grid, intersect(s1, s2))));
      if (thm6) {
        ok &= add("w2' != 0 on S_X ∩ S_Y", derivative_nonzero(w2, inside(grid, intersect(sx, sy))));
        const double d0 = w1.w_prime(0.0);
        ok &= add("w1'(0) != 0", d0 > 0.0 || d0 < 0.0);
      } else {
        ok &= add("w2' != 0 on S2", derivative_nonzero(w2, inside(grid, s2)));
      }
      r.hypotheses_hold = ok;
      conclude(*x, *y, thm6 ? Order::st : Order::fr, thm6 ? "X <=st Y" : "X <=fr Y");
      break;
    }
    case OrderTheorem::thm7: {
      bool ok = add("S_X = S_Y", same_support(sx, sy));
      if (!ok) {
        r.hypotheses_hold = false;
        r.conclusion = "X_w ∧ Y_w <=lr (X ∧ Y)_w";
        r.note = "supports differ";
        break;
      }
      std::optional<MinimumConstruction> mc;
      try {
        mc = wtrv_of_minimum({x, y}, w1);
        xw = construct(x, w1);
        yw = construct(y, w1);
      } catch (const Error& e) {
        r.note = std::string("WTRV not constructible: ") + e.what();
        add("X_w, Y_w constructible", false);
        r.hypotheses_hold = false;
        r.conclusion = "X_w ∧ Y_w <=lr (X ∧ Y)_w";
        break;
      }
      const bool below = check_order(*xw, *x, Order::fr, n).holds_on_grid &&
                         check_order(*yw, *y, Order::fr, n).holds_on_grid;
      const bool above = !below && check_order(*x, *xw, Order::fr, n).holds_on_grid &&
                         check_order(*y, *yw, Order::fr, n).holds_on_grid;
      if (above) {
        add("X <=fr X_w and Y <=fr Y_w", true);
        r.hypotheses_hold = ok;
        conclude(*mc->wtrv_of_minimum, *mc->minimum_of_wtrvs, Order::lr, "(X ∧ Y)_w <=lr X_w ∧ Y_w");
      } else {
        ok &= add("X_w <=fr X and Y_w <=fr Y", below);
        r.hypotheses_hold = ok;
        conclude(*mc->minimum_of_wtrvs, *mc->wtrv_of_minimum, Order::lr, "X_w ∧ Y_w <=lr (X ∧ Y)_w");
      }
      break;
    }
    case OrderTheorem::thm8:
    case OrderTheorem::thm9:
    case OrderTheorem::thm10: {
      const Order base_order = which == OrderTheorem::thm8 ? Order::st
                               : which == OrderTheorem::thm9 ? Order::fr
                                                             : Order::rfr;
      const std::string o = to_string(base_order);
      bool ok = true;
      if (which != OrderTheorem::thm8) {
        ok &= add("l1 <= l2", s1.lo <= s2.lo);
        ok &= add("u1 <= u2", s1.hi <= s2.hi);
      }
      bool dec = false, inc = false;
      try {
        dec = weight_over_hazard(*x, w1, Shape::decreasing, n);
        inc = weight_over_hazard(*y, w2, Shape::increasing, n);
      } catch (const Error& e) {
        r.note = e.what();
      }
      ok &= add("w1'/r_X decreasing on S_X", dec);
      ok &= add("w2'/r_Y increasing on S_Y", inc);
      ok &= add("X <=" + o + " Y", check_order(*x, *y, base_order, n).holds_on_grid);
      r.hypotheses_hold = ok;
      if ((ok || conclude_when_hypotheses_fail) && build()) conclude(*xw, *yw, base_order, "X_w1 <=" + o + " Y_w2");
      else r.conclusion = "X_w1 <=" + o + " Y_w2";
      break;
    }
  }
  if (!r.hypotheses_hold && r.note.empty()) r.note = "hypotheses not met";
  return r;
}

struct Tuple {
  DistributionHandle x, y;
  WeightFunction w1, w2;
};

double uniform_in(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

DistributionHandle random_lifetime(std::mt19937_64& g) {
  switch (std::uniform_int_distribution<int>(0, 4)(g)) {
    case 0: return exponential(uniform_in(g, 0.5, 3.0));
    case 1: return weibull(uniform_in(g, 0.5, 3.0), uniform_in(g, 0.5, 2.0));
    case 2: return gamma_dist(uniform_in(g, 0.5, 3.0), uniform_in(g, 0.5, 3.0));
    case 3: return uniform(0.0, uniform_in(g, 0.5, 1.0));
    default: return kumaraswamy(uniform_in(g, 1.0, 3.0), uniform_in(g, 1.0, 3.0));
  }
}

WeightFunction random_weight(std::mt19937_64& g, const Distribution& d) {
  const bool unit = d.support().hi == 1.0;
  switch (std::uniform_int_distribution<int>(0, unit ? 3 : 2)(g)) {
    case 0: return power_weight(uniform_in(g, 0.3, 3.0));
    case 1: return linear_weight();
    case 2: return make_weight("log1p_power", {{"c", uniform_in(g, 0.5, 3.0)}});
    default: return make_weight("neg_x_log1m");
  }
}

Tuple random_tuple(OrderTheorem which, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  if (which == OrderTheorem::thm5i) {
    double l1 = uniform_in(g, 0.2, 4.0), l2 = uniform_in(g, 0.2, 4.0);
    if (l1 < l2) std::swap(l1, l2);
    double k1 = uniform_in(g, 0.3, 4.0), k2 = uniform_in(g, 0.3, 4.0);
    if (k1 > k2) std::swap(k1, k2);
    return {exponential(l1), exponential(l2), power_weight(k1), power_weight(k2)};
  }
  if (which == OrderTheorem::thm7) {
    DistributionHandle x = random_lifetime(g);
    while (x->support().hi != kInf) x = random_lifetime(g);
    DistributionHandle y = random_lifetime(g);
    while (y->support().hi != kInf) y = random_lifetime(g);
    const WeightFunction w = power_weight(uniform_in(g, 0.3, 3.0));
    return {x, y, w, w};
  }
  if (std::bernoulli_distribution(0.5)(g)) {
    // same family, ordered scales, power weights on either side of the shape
    const double shape = uniform_in(g, 0.5, 3.0);
    double s1 = uniform_in(g, 0.3, 3.0), s2 = uniform_in(g, 0.3, 3.0);
    if (s1 > s2) std::swap(s1, s2);
    const double k1 = uniform_in(g, 0.2, shape), k2 = uniform_in(g, shape, 4.0);
    switch (std::uniform_int_distribution<int>(0, 2)(g)) {
      case 0: return {exponential(1.0 / s1), exponential(1.0 / s2), power_weight(std::min(k1, 1.0)),
                      power_weight(std::max(k2, 1.0))};
      case 1: return {weibull(shape, s1), weibull(shape, s2), power_weight(k1), power_weight(k2)};
      default: return {gamma_dist(shape, 1.0 / s1), gamma_dist(shape, 1.0 / s2), power_weight(k1), power_weight(k2)};
    }
  }
  Tuple t;
  t.x = random_lifetime(g);
  t.y = random_lifetime(g);
  t.w1 = random_weight(g, *t.x);
  t.w2 = random_weight(g, *t.y);
  return t;
}

std::string describe_tuple(const Tuple& t) {
  return "X=" + describe(*t.x) + " Y=" + describe(*t.y) + " w1=" + t.w1.spec() + " w2=" + t.w2.spec();
}

}  // namespace

TheoremReport verify_theorem(DistributionHandle x, DistributionHandle y, const WeightFunction& w1,
                             const WeightFunction& w2, OrderTheorem which, std::size_t grid_size) {
  return evaluate_theorem(std::move(x), std::move(y), w1, w2, which, grid_size, true);
}

namespace {

std::vector<TheoremFixture> fixtures() {
  return {
      {"thm5i-example4", OrderTheorem::thm5i, exponential(2.0), exponential(1.0), power_weight(1.5), power_weight(2.5)},
      {"thm5ii-example4", OrderTheorem::thm5ii, exponential(2.0), exponential(1.0), power_weight(1.5),
       power_weight(1.5)},
      {"thm6-example6", OrderTheorem::thm6, exponential(2.0), exponential(1.0), power_weight(2.0), linear_weight()},
      {"thm7-equilibrium", OrderTheorem::thm7, exponential(1.0), exponential(2.0), linear_weight(), linear_weight()},
      {"thm8-exponential", OrderTheorem::thm8, exponential(2.0), exponential(1.0), power_weight(0.5),
       power_weight(2.0)},
      {"thm9-example7", OrderTheorem::thm9, uniform(0.0, 1.0), exponential(1.0), make_weight("expm1"),
       linear_weight()},
      {"thm10-example8", OrderTheorem::thm10, exponential(1.0), uniform(0.0, 1.0), linear_weight(),
       make_weight("neg_x_log1m")},
  };
}

}  // namespace

TheoremFixture theorem_fixture(const std::string& name) {
  for (auto& f : fixtures())
    if (f.name == name) return f;
  throw ParseError("unknown fixture '" + name + "'");
}

std::vector<std::string> theorem_fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixtures()) out.push_back(f.name);
  return out;
}

AuditReport randomized_theorem_audit(OrderTheorem which, std::size_t trials, std::uint64_t seed,
                                     std::size_t grid_size) {
  if (trials < 1) throw DomainError("randomized_theorem_audit: trials must be at least 1");
  AuditReport report;
  report.which = which;
  report.requested = trials;
  const std::size_t cap = 50 * trials;
  const std::size_t batch = std::max<std::size_t>(16, parallel::max_threads() * 4);

  std::uint64_t next = 0;
  while (report.hypothesis_passing < trials && next < cap) {
    const std::size_t count = std::min(batch, cap - next);
    std::vector<std::optional<TheoremReport>> results(count);
    std::vector<std::string> labels(count);
    parallel::for_each_index(count, parallel::Mode::openmp, [&](std::size_t i) {
      const Tuple t = random_tuple(which, parallel::substream_seed(seed, next + i));
      labels[i] = describe_tuple(t);
      try {
        results[i] = evaluate_theorem(t.x, t.y, t.w1, t.w2, which, grid_size, false);
      } catch (const Error&) {
        results[i].reset();
      }
    });
    for (std::size_t i = 0; i < count && report.hypothesis_passing < trials; ++i) {
      ++report.attempts;
      const auto& r = results[i];
      if (!r || !r->hypotheses_hold || !r->conclusion_evaluated) {
        ++report.skipped;
        continue;
      }
      ++report.hypothesis_passing;
      if (r->conclusion_holds) {
        ++report.conclusion_passes;
      } else {
        std::string w = labels[i] + ": " + r->conclusion + " fails";
        if (r->verdict && r->verdict->first_violation) {
          std::ostringstream os;
          os.precision(6);
          os << " at x in [" << r->verdict->first_violation->x1 << ", " << r->verdict->first_violation->x2 << "]";
          w += os.str();
        }
        report.counterexamples.push_back(w);
      }
    }
    next += count;
  }
  return report;
}

DistributionHandle random_catalog_distribution(std::uint64_t seed) {
  std::mt19937_64 g(seed);
  // shape parameters kept away from the constant-hazard boundary
  auto away_from_one = [&](double lo, double hi) {
    double v = uniform_in(g, lo, hi);
    while (std::fabs(v - 1.0) < 0.15) v = uniform_in(g, lo, hi);
    return v;
  };
  switch (std::uniform_int_distribution<int>(0, 9)(g)) {
    case 0: return exponential(uniform_in(g, 0.3, 3.0));
    case 1: return gamma_dist(away_from_one(0.4, 4.0), uniform_in(g, 0.5, 3.0));
    case 2: return weibull(away_from_one(0.4, 4.0), uniform_in(g, 0.5, 2.0));
    case 3: return uniform(0.0, uniform_in(g, 0.5, 2.0));
    case 4: return beta_dist(uniform_in(g, 1.2, 4.0), uniform_in(g, 1.0, 4.0));
    case 5: return kumaraswamy(uniform_in(g, 1.2, 4.0), uniform_in(g, 1.0, 4.0));
    case 6: return pareto_lomax(uniform_in(g, 2.5, 6.0));
    case 7: return make_catalog("half_normal", {{"sigma", uniform_in(g, 0.5, 2.0)}});
    case 8: return make_catalog("rayleigh", {{"sigma", uniform_in(g, 0.5, 2.0)}});
    default: return truncated_power(uniform_in(g, 1.5, 5.0));
  }
}

ImplicationAudit order_implication_audit(std::size_t pairs, std::uint64_t seed, std::size_t grid_size) {
  ImplicationAudit audit;
  audit.pairs = pairs;
  std::vector<std::array<bool, 4>> held(pairs);
  std::vector<std::string> labels(pairs);
  parallel::for_each_index(pairs, parallel::Mode::openmp, [&](std::size_t i) {
    const auto x = random_catalog_distribution(parallel::substream_seed(seed, 2 * i));
    const auto y = random_catalog_distribution(parallel::substream_seed(seed, 2 * i + 1));
    labels[i] = describe(*x) + " vs " + describe(*y);
    const auto grid = merged_grid(*x, *y, grid_size);
    for (Order o : {Order::lr, Order::fr, Order::rfr, Order::st}) {
      held[i][static_cast<int>(o)] = check_order_on(*x, *y, o, grid).holds_on_grid;
    }
  });
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& h = held[i];
    const bool lr = h[0], fr = h[1], rfr = h[2], st = h[3];
    audit.lr_holds += lr;
    audit.fr_holds += fr;
    audit.rfr_holds += rfr;
    audit.st_holds += st;
    if (lr && !fr) audit.violations.push_back(labels[i] + ": lr without fr");
    if (lr && !rfr) audit.violations.push_back(labels[i] + ": lr without rfr");
    if (fr && !st) audit.violations.push_back(labels[i] + ": fr without st");
    if (rfr && !st) audit.violations.push_back(labels[i] + ": rfr without st");
  }
  return audit;
}

CorollaryAudit equilibrium_corollary_audit(std::size_t count, std::uint64_t seed, std::size_t grid_size) {
  CorollaryAudit audit;
  audit.distributions = count;
  audit.pairs = count / 2;
  std::vector<DistributionHandle> base(count);
  std::vector<WtrvHandle> eq(count);
  std::vector<std::string> notes(count);
  parallel::for_each_index(count, parallel::Mode::openmp, [&](std::size_t i) {
    base[i] = random_catalog_distribution(parallel::substream_seed(seed, i));
    eq[i] = equilibrium(base[i]);
    // X IFR <=> equilibrium(X) ILR <=> equilibrium(X) <=lr X, all judged on one grid
    auto grid = merged_grid(*base[i], *eq[i], grid_size);
    const bool ifr = classify_aging_on(*base[i], grid).ifr;
    const bool ilr = classify_aging_on(*eq[i], grid).ilr;
    const bool lr = check_order_on(*eq[i], *base[i], Order::lr, grid).holds_on_grid;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    notes[i] = ifr ? "1" : "0";
    if (ifr != ilr) notes[i] += describe(*base[i]) + ": IFR=" + yn(ifr) + " but equilibrium ILR=" + yn(ilr) + "; ";
    if (ifr != lr) notes[i] += describe(*base[i]) + ": IFR=" + yn(ifr) + " but equilibrium <=lr X is " + yn(lr);
  });
  for (const auto& n : notes) {
    audit.ifr_count += n[0] == '1';
    if (n.size() > 1) audit.contradictions.push_back(n.substr(1));
  }

  std::vector<std::string> pair_notes(audit.pairs);
  parallel::for_each_index(audit.pairs, parallel::Mode::openmp, [&](std::size_t p) {
    const auto& x = base[2 * p];
    const auto& y = base[2 * p + 1];
    auto grid = merged_grid(*x, *y, grid_size);
    const auto eg = merged_grid(*eq[2 * p], *eq[2 * p + 1], grid_size);
    grid.insert(grid.end(), eg.begin(), eg.end());
    const bool fr = check_order_on(*x, *y, Order::fr, grid).holds_on_grid;
    const bool lr = check_order_on(*eq[2 * p], *eq[2 * p + 1], Order::lr, grid).holds_on_grid;
    pair_notes[p] = std::string(fr ? "1" : "0") +
                    (fr == lr ? "" : describe(*x) + " vs " + describe(*y) + ": fr=" + (fr ? "yes" : "no") +
                                         " but equilibria lr=" + (lr ? "yes" : "no"));
  });
  for (const auto& n : pair_notes) {
    audit.fr_count += n[0] == '1';
    if (n.size() > 1) audit.contradictions.push_back(n.substr(1));
  }
  return audit;
}

}  // namespace wtrv
