#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "wtrv/numerics.hpp"

namespace wtrv::numerics {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo)) throw DomainError("Interval: lower bound must be finite");
  if (!(lo < hi) || std::isnan(hi) || hi == -kInf) throw DomainError("Interval: requires lo < hi");
}

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

namespace {

template <class G>
QuadratureResult adapt(const G& g, double a, double b, const QuadratureOptions& opts) {
  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(g, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  std::size_t subdivisions = 1;
  // Segments too narrow to split further; their error is frozen in.
  std::vector<Segment> frozen;

  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
    if (heap.empty() || subdivisions >= opts.max_subdivisions) {
      throw AccuracyError("integrate_adaptive: subdivision budget exhausted (estimate " +
                              std::to_string(total) + ", error " + std::to_string(total_err) + ")",
                          total, total_err);
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 1e-15 * std::fabs(mid)) {
      frozen.push_back(worst);
      continue;
    }
    Segment left = gauss_kronrod(g, worst.a, mid);
    Segment right = gauss_kronrod(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // re-sum to shed accumulated cancellation
  double sum = 0.0;
  double err = 0.0;
  std::vector<Segment> rest = std::move(frozen);
  while (!heap.empty()) {
    rest.push_back(heap.top());
    heap.pop();
  }
  std::sort(rest.begin(), rest.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const auto& s : rest) {
    sum += s.value;
    err += s.error;
  }
  return {sum, err, 0};
}

double checked(double v) {
  if (!std::isfinite(v)) throw EvaluationError("integrate_adaptive: integrand is not finite at an interior node");
  return v;
}

// Largest u with expm1(u) finite, less a margin.
constexpr double kLogMax = 700.0;

}  // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, Interval range, const QuadratureOptions& opts) {
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol > 0.0)) throw DomainError("integrate_adaptive: tolerances must be positive");

  std::size_t evaluations = 0;
  if (range.bounded_above()) {
    auto r = adapt([&](double x) { ++evaluations; return checked(f(x)); }, range.lo, range.hi, opts);
    r.evaluations = evaluations;
    return r;
  }

  const double lo = range.lo;
  auto rational = [&](double t) {
    ++evaluations;
    const double one_minus = 1.0 - t;
    return checked(f(lo + t / one_minus) / (one_minus * one_minus));
  };
  try {
    auto r = adapt(rational, 0.0, 1.0, opts);
    r.evaluations = evaluations;
    return r;
  } catch (const EvaluationError&) {
  } catch (const AccuracyError&) {
  }

  // Power-law tails: x = lo + expm1(u), u = t/(1-t). A tail that still
  // carries mass at u = kLogMax cannot be resolved in double precision.
  auto tail_term = [&](double u) { return f(lo + std::expm1(u)) * std::exp(u); };
  auto logarithmic = [&](double t) {
    ++evaluations;
    const double one_minus = 1.0 - t;
    const double u = t / one_minus;
    if (u > kLogMax) return 0.0;
    return checked(tail_term(u) / (one_minus * one_minus));
  };
  auto r = adapt(logarithmic, 0.0, 1.0, opts);
  r.evaluations = evaluations;
  // The integrand may underflow to zero long before it has decayed; the last
  // representable probe must already be negligible.
  double edge = 0.0;
  for (double u = 20.0; u <= kLogMax; u += 20.0) {
    const double h = std::fabs(tail_term(u));
    if (!std::isfinite(h)) {
      throw AccuracyError("integrate_adaptive: integrand is not finite far in the tail", r.value, h);
    }
    if (h > 0.0) edge = h;
  }
  if (edge > std::max(opts.abs_tol, opts.rel_tol * std::fabs(r.value))) {
    throw AccuracyError("integrate_adaptive: integrand does not decay on the infinite range", r.value, edge);
  }
  return r;
}

QuadratureResult integrate_adaptive(const RealFunction& f, Interval range, double abs_tol, double rel_tol) {
  QuadratureOptions opts;
  opts.abs_tol = abs_tol;
  opts.rel_tol = rel_tol;
  return integrate_adaptive(f, range, opts);
}

double brent_root(const RealFunction& f, double lo, double hi, double tol) {
  return brent_root(f, lo, hi, tol, tol);
}

double brent_root(const RealFunction& f, double lo, double hi, double xtol, double ftol, std::size_t max_iter) {
  if (!(xtol > 0.0)) throw DomainError("brent_root: tolerance must be positive");
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (std::isnan(fa) || std::isnan(fb)) throw EvaluationError("brent_root: NaN at bracket end");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw BracketError("brent_root: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * 2.2e-16 * std::fabs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0 || std::fabs(fb) <= ftol) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
    if (std::isnan(fb)) throw EvaluationError("brent_root: NaN inside bracket");
  }
  return b;
}

std::vector<double> finite_diff_grad(const VectorFunction& f, std::span<const double> x, double h) {
  if (!(h > 0.0)) throw DomainError("finite_diff_grad: step must be positive");
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm)) throw DomainError("finite_diff_grad: non-finite evaluation");
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

std::vector<double> box_gradient(const VectorFunction& f, std::span<const double> x,
                                 std::span<const Interval> bounds, double scale) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size());
  double f0 = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = scale * (1.0 + std::fabs(x[i]));
    const double up = std::min(x[i] + h, bounds[i].hi);
    const double dn = std::max(x[i] - h, bounds[i].lo);
    double fp, fm;
    if (up > x[i] && dn < x[i]) {
      probe[i] = up;
      fp = f(probe);
      probe[i] = dn;
      fm = f(probe);
    } else {
      if (std::isnan(f0)) f0 = f(x);
      if (up > x[i]) {
        probe[i] = up;
        fp = f(probe);
        fm = f0;
      } else {
        fp = f0;
        probe[i] = dn;
        fm = f(probe);
      }
    }
    probe[i] = x[i];
    const double span = (up > x[i] ? up : x[i]) - (dn < x[i] ? dn : x[i]);
    if (!std::isfinite(fp) || !std::isfinite(fm) || !(span > 0.0)) {
      throw DomainError("box_gradient: non-finite evaluation");
    }
    grad[i] = (fp - fm) / span;
  }
  return grad;
}

double projected_gradient_norm(std::span<const double> x, std::span<const double> g,
                               std::span<const Interval> bounds) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = std::clamp(x[i] - g[i], bounds[i].lo, bounds[i].hi) - x[i];
    s += p * p;
  }
  return std::sqrt(s);
}

}  // namespace wtrv::numerics
