#include "wtrv/reliability.hpp"

#include <algorithm>
#include <cmath>

#include "wtrv/orders.hpp"
#include "wtrv/wtrv.hpp"

namespace wtrv {

double hazard(const Distribution& dist, double x) {
  const double s = dist.sf(x);
  if (!(s > 0.0)) throw TailError("hazard: survival function vanishes at x = " + std::to_string(x));
  return dist.pdf(x) / s;
}

double reversed_hazard(const Distribution& dist, double x) {
  const double c = dist.cdf(x);
  if (!(c > 0.0)) throw TailError("reversed_hazard: cdf vanishes at x = " + std::to_string(x));
  return dist.pdf(x) / c;
}

namespace {

double integrate_sf(const Distribution& dist, double a, double b) {
  if (!(b > a)) return 0.0;
  numerics::QuadratureOptions opts;
  opts.abs_tol = 1e-15;
  opts.rel_tol = 1e-12;
  opts.max_subdivisions = 3000;
  auto f = [&dist](double t) { return dist.sf(t); };
  try {
    return numerics::integrate_adaptive(f, Interval(a, b), opts).value;
  } catch (const AccuracyError& e) {
    if (e.error_estimate() <= 1e-9 * (1.0 + std::fabs(e.best_estimate()))) return e.best_estimate();
    throw IntegrabilityError("mean residual life is infinite for " + dist.spec());
  } catch (const EvaluationError&) {
    throw IntegrabilityError("mean residual life is infinite for " + dist.spec());
  }
}

// m(x_i) for a sorted grid, from cell integrals summed right to left.
std::vector<double> mrl_on_grid(const Distribution& dist, const std::vector<double>& xs) {
  const double hi = dist.support().hi;
  std::vector<double> out(xs.size());
  double acc = integrate_sf(dist, xs.back(), hi);
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (i + 1 < xs.size()) acc += integrate_sf(dist, xs[i], xs[i + 1]);
    const double s = dist.sf(xs[i]);
    out[i] = s > 0.0 ? acc / s : numerics::kInf;
  }
  return out;
}

std::vector<double> logs(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double a) { return std::log(a); });
  return out;
}

std::vector<double> sample_fn(const std::vector<double>& xs, const std::function<double(double)>& f) {
  std::vector<double> out(xs.size());
  std::transform(xs.begin(), xs.end(), out.begin(), f);
  return out;
}

}  // namespace

double mrl(const Distribution& dist, double x) {
  const double s = dist.sf(x);
  if (!(s > 0.0)) throw TailError("mrl: survival function vanishes at x = " + std::to_string(x));
  return integrate_sf(dist, x, dist.support().hi) / s;
}

double glaser(const Distribution& dist, double x) {
  const double f = dist.pdf(x);
  if (!(f > 0.0)) throw TailError("glaser: density vanishes at x = " + std::to_string(x));
  return -dist.pdf_derivative(x) / f;
}

std::vector<double> quantile_grid(const Distribution& dist, std::size_t n) {
  if (n < 2) throw DomainError("quantile_grid: at least two points required");
  std::vector<double> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 0.005 + 0.99 * static_cast<double>(i) / static_cast<double>(n - 1);
    xs.push_back(dist.quantile(u));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

ShapeCheck check_shape(const std::vector<double>& xs_in, const std::vector<double>& vs_in, Shape shape,
                       double slack) {
  ShapeCheck out;
  std::vector<double> xs, vs;
  for (std::size_t i = 0; i < xs_in.size(); ++i) {
    if (std::isfinite(vs_in[i])) {
      xs.push_back(xs_in[i]);
      vs.push_back(vs_in[i]);
    } else {
      ++out.skipped;
    }
  }
  if (shape == Shape::increasing || shape == Shape::decreasing) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const double tol = slack * (std::fabs(vs[i]) + std::fabs(vs[i + 1])) + 1e-300;
      const double step = vs[i + 1] - vs[i];
      const bool bad = shape == Shape::increasing ? step < -tol : step > tol;
      if (bad) {
        out.holds = false;
        out.witness = Witness{xs[i], xs[i + 1], vs[i], vs[i + 1],
                              shape == Shape::increasing ? "decrease" : "increase"};
        return out;
      }
    }
    return out;
  }
  for (std::size_t i = 0; i + 2 < vs.size(); ++i) {
    const double d1 = xs[i + 1] - xs[i];
    const double d2 = xs[i + 2] - xs[i + 1];
    const double s1 = (vs[i + 1] - vs[i]) / d1;
    const double s2 = (vs[i + 2] - vs[i + 1]) / d2;
    const double scale = 1.0 + std::max({std::fabs(vs[i]), std::fabs(vs[i + 1]), std::fabs(vs[i + 2])});
    const double tol = slack * scale * (1.0 / d1 + 1.0 / d2);
    const bool bad = shape == Shape::concave ? s2 > s1 + tol : s2 < s1 - tol;
    if (bad) {
      out.holds = false;
      out.witness = Witness{xs[i], xs[i + 2], s1, s2, shape == Shape::concave ? "secant slope rises" : "secant slope falls"};
      return out;
    }
  }
  return out;
}

AgingReport classify_aging(const Distribution& dist, std::size_t grid_size) {
  if (grid_size < 64) throw DomainError("classify_aging: grid_size must be at least 64");
  return classify_aging_on(dist, quantile_grid(dist, grid_size));
}

AgingReport classify_aging_on(const Distribution& dist, std::vector<double> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.size() < 3) throw DomainError("classify_aging: grid needs at least 3 points");
  AgingReport r;
  r.grid = std::move(grid);
  const auto& xs = r.grid;

  auto record = [&r](const char* label, bool& flag, const ShapeCheck& c) {
    flag = c.holds;
    if (!c.holds && c.witness) r.witnesses.emplace_back(label, *c.witness);
    if (c.skipped) r.notes.push_back(std::string(label) + ": " + std::to_string(c.skipped) + " points not evaluable");
  };

  const auto log_pdf = logs(sample_fn(xs, [&](double x) { return dist.pdf(x); }));
  record("ILR", r.ilr, check_shape(xs, log_pdf, Shape::concave));
  record("DLR", r.dlr, check_shape(xs, log_pdf, Shape::convex));

  const auto log_sf = logs(sample_fn(xs, [&](double x) { return dist.sf(x); }));
  record("IFR", r.ifr, check_shape(xs, log_sf, Shape::concave));
  record("DFR", r.dfr, check_shape(xs, log_sf, Shape::convex));

  try {
    const auto m = mrl_on_grid(dist, xs);
    record("DMRL", r.dmrl, check_shape(xs, m, Shape::decreasing));
    record("IMRL", r.imrl, check_shape(xs, m, Shape::increasing));
  } catch (const IntegrabilityError& e) {
    r.dmrl = r.imrl = false;
    r.notes.push_back(e.what());
  }
  return r;
}

AgingTheorem parse_aging_theorem(const std::string& name) {
  if (name == "prop1") return AgingTheorem::prop1;
  if (name == "thm1") return AgingTheorem::thm1;
  if (name == "thm2") return AgingTheorem::thm2;
  if (name == "thm3") return AgingTheorem::thm3;
  if (name == "thm4") return AgingTheorem::thm4;
  if (name == "prop2") return AgingTheorem::prop2;
  throw ParseError("unknown aging theorem '" + name + "'");
}

std::string to_string(AgingTheorem which) {
  switch (which) {
    case AgingTheorem::prop1: return "prop1";
    case AgingTheorem::thm1: return "thm1";
    case AgingTheorem::thm2: return "thm2";
    case AgingTheorem::thm3: return "thm3";
    case AgingTheorem::thm4: return "thm4";
    case AgingTheorem::prop2: return "prop2";
  }
  return "?";
}

ConditionReport check_theorem_conditions(DistributionHandle dist, const WeightFunction& w, AgingTheorem which,
                                         std::size_t grid_size) {
  ConditionReport r;
  r.which = which;

  std::vector<double> xs;
  for (double x : quantile_grid(*dist, grid_size))
    if (x < w.domain_hint.hi) xs.push_back(x);

  const AgingReport base = classify_aging(*dist, grid_size);
  const auto log_wp = sample_fn(xs, [&](double x) { return w.log_w_prime(x); });
  const auto log_ratio = sample_fn(xs, [&](double x) { return w.log_w_prime(x) - std::log(hazard(*dist, x)); });

  WtrvHandle xw;
  try {
    r.weight_admissible = validate_weight(w, *dist).ok();
    xw = construct(dist, w);
  } catch (const Error& e) {
    r.note = std::string("X_w not constructible: ") + e.what();
  }
  std::optional<AgingReport> aged;
  auto aging_w = [&]() -> const AgingReport& {
    if (!aged) aged = classify_aging(*xw, grid_size);
    return *aged;
  };

  auto add = [&r](const std::string& name, bool v) {
    r.hypotheses.emplace_back(name, v);
    return v;
  };

  switch (which) {
    case AgingTheorem::prop1: {
      const bool up = add("X IFR", base.ifr) & add("w' log-concave", check_shape(xs, log_wp, Shape::concave).holds);
      const bool down = add("X DFR", base.dfr) & add("w' log-convex", check_shape(xs, log_wp, Shape::convex).holds);
      r.hypotheses_hold = up || down;
      r.variant = up && down ? "ILR+DLR" : (down ? "DLR" : "ILR");
      r.conclusion = "X_w is " + r.variant;
      if (xw) {
        r.conclusion_evaluated = true;
        const auto& a = aging_w();
        r.conclusion_holds = (!up || a.ilr) && (!down || a.dlr) && (up || down || a.ilr);
      }
      break;
    }
    case AgingTheorem::thm1:
    case AgingTheorem::thm2: {
      const bool increasing_variant = which == AgingTheorem::thm1;
      r.variant = increasing_variant ? "IFR" : "DFR";
      bool ok = add(increasing_variant ? "X IFR" : "X DFR", increasing_variant ? base.ifr : base.dfr);
      ok &= add("w'/r_X increasing", check_shape(xs, log_ratio, Shape::increasing).holds);
      ok &= add(increasing_variant ? "w'/r_X log-concave" : "w'/r_X log-convex",
                check_shape(xs, log_ratio, increasing_variant ? Shape::concave : Shape::convex).holds);
      r.hypotheses_hold = ok;
      r.conclusion = "X_w is " + r.variant;
      if (xw) {
        r.conclusion_evaluated = true;
        r.conclusion_holds = increasing_variant ? aging_w().ifr : aging_w().dfr;
      }
      break;
    }
    case AgingTheorem::thm3:
    case AgingTheorem::thm4: {
      const bool dmrl_variant = which == AgingTheorem::thm3;
      r.variant = dmrl_variant ? "IFR" : "DFR";
      bool ok = add(dmrl_variant ? "X DMRL" : "X IMRL", dmrl_variant ? base.dmrl : base.imrl);
      ok &= add("w'/r_X increasing", check_shape(xs, log_ratio, Shape::increasing).holds);
      ok &= add(dmrl_variant ? "w'/r_X log-concave" : "w'/r_X log-convex",
                check_shape(xs, log_ratio, dmrl_variant ? Shape::concave : Shape::convex).holds);
      bool m_shape = false;
      try {
        const auto log_m = logs(mrl_on_grid(*dist, xs));
        m_shape = check_shape(xs, log_m, dmrl_variant ? Shape::convex : Shape::concave).holds;
      } catch (const IntegrabilityError&) {
        m_shape = false;
      }
      ok &= add(dmrl_variant ? "m_X log-convex" : "m_X log-concave", m_shape);
      r.hypotheses_hold = ok;
      r.conclusion = dmrl_variant ? "X_w is IFR and DMRL" : "X_w is DFR and IMRL";
      if (xw) {
        r.conclusion_evaluated = true;
        const auto& a = aging_w();
        r.conclusion_holds = dmrl_variant ? (a.ifr && a.dmrl) : (a.dfr && a.imrl);
      }
      break;
    }
    case AgingTheorem::prop2: {
      const auto wv = sample_fn(xs, [&](double x) { return w.w(x); });
      const bool strictly = check_shape(xs, wv, Shape::increasing).holds && wv.back() > wv.front();
      const bool up = add("X IFR", base.ifr) & add("w strictly increasing", strictly) &
                      add("w concave", check_shape(xs, wv, Shape::concave).holds);
      const bool down = base.dfr && strictly && check_shape(xs, wv, Shape::convex).holds;
      r.hypotheses.emplace_back("X DFR", base.dfr);
      r.hypotheses.emplace_back("w convex", check_shape(xs, wv, Shape::convex).holds);
      r.hypotheses_hold = up || down;
      r.variant = down && !up ? "DFR" : "IFR";
      r.conclusion = r.variant == "IFR" ? "X_w <=lr X" : "X <=lr X_w";
      if (xw) {
        r.conclusion_evaluated = true;
        bool holds = true;
        if (up || !down) holds &= check_order(*xw, *dist, Order::lr, grid_size).holds_on_grid;
        if (down) holds &= check_order(*dist, *xw, Order::lr, grid_size).holds_on_grid;
        r.conclusion_holds = holds;
      }
      break;
    }
  }
  return r;
}

}  // namespace wtrv
