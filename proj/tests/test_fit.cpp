#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "wtrv/fit.hpp"
#include "wtrv/wtrv.hpp"

using namespace wtrv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("min-max normalization", "[fit]") {
  const std::vector<double> z = {10.0, 30.0, 20.0, 15.0, 10.0};
  auto s = normalize(z);
  CHECK(s.n == 5);
  CHECK(s.values == std::vector<double>{0.0, 0.0, 0.25, 0.5, 1.0});
  CHECK(s.likelihood == std::vector<double>{0.25, 0.5});

  auto sh = normalize(z, BoundaryPolicy::shrink);
  REQUIRE(sh.likelihood.size() == 5);
  CHECK_THAT(sh.likelihood.front(), WithinAbs(0.1, 1e-15));
  CHECK_THAT(sh.likelihood.back(), WithinAbs(0.9, 1e-15));

  CHECK_THROWS_AS(normalize({3.0, 3.0, 3.0}), DegenerateSampleError);
  CHECK_THROWS_AS(normalize({1.0, 2.0, NAN}), DomainError);
  CHECK(parse_boundary_policy("exclude-boundary") == BoundaryPolicy::exclude_boundary);
  CHECK(parse_boundary_policy("shrink") == BoundaryPolicy::shrink);
  CHECK_THROWS_AS(parse_boundary_policy("clip"), ParseError);
}

TEST_CASE("log-likelihoods agree with the model densities", "[fit]") {
  const std::vector<double> xs = {0.05, 0.2, 0.33, 0.5, 0.71, 0.9};
  struct Case {
    Model m;
    std::vector<double> p;
  };
  for (const auto& c : {Case{Model::beta, {2.0, 3.0}}, Case{Model::kw, {1.5, 4.0}}, Case{Model::wk, {2.0, 13.0, 6.0}}}) {
    INFO(to_string(c.m));
    auto d = make_model(c.m, c.p);
    double direct = 0.0;
    for (double x : xs) direct += std::log(d->pdf(x));
    CHECK_THAT(loglik(c.m, xs, c.p), WithinRel(direct, 1e-10));
  }
  auto s = normalize({0.0, 0.05, 0.2, 0.33, 0.5, 0.71, 0.9, 1.0});
  CHECK_THAT(loglik_wk(s, 2.0, 13.0, 6.0), WithinRel(loglik(Model::wk, s.likelihood, {2.0, 13.0, 6.0}), 1e-12));
  CHECK_THAT(loglik_kw(s, 1.5, 4.0), WithinRel(loglik(Model::kw, s.likelihood, {1.5, 4.0}), 1e-12));
  CHECK_THAT(loglik_beta(s, 2.0, 3.0), WithinRel(loglik(Model::beta, s.likelihood, {2.0, 3.0}), 1e-12));

  CHECK_THROWS_AS(loglik(Model::kw, {0.0, 0.5}, {1.0, 1.0}), BoundaryError);
  CHECK_THROWS_AS(loglik(Model::kw, {0.5}, {-1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(make_model(Model::wk, {1.0, 2.0}), DomainError);
}

TEST_CASE("model names", "[fit]") {
  CHECK(parse_model("kumaraswamy") == Model::kw);
  CHECK(parse_model("wk") == Model::wk);
  CHECK(parameter_names(Model::wk) == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(parse_model("gamma"), ParseError);
}

TEST_CASE("maximum likelihood recovers known parameters", "[fit]") {
  auto truth = kumaraswamy(2.0, 5.0);
  auto xs = sample(*truth, 4000, 17);
  FitOptions opts;
  opts.starts = 6;
  auto r = fit_values(xs, Model::kw, opts);
  CHECK(r.optimizer.converged);
  CHECK_THAT(r.params[0].second, WithinRel(2.0, 0.06));
  CHECK_THAT(r.params[1].second, WithinRel(5.0, 0.12));
  CHECK(r.loglik >= loglik(Model::kw, xs, {2.0, 5.0}));
  CHECK(r.n == xs.size());
  CHECK_THAT(r.aic, WithinRel(4.0 - 2.0 * r.loglik, 1e-12));
  CHECK_THAT(r.bic, WithinRel(2.0 * std::log(4000.0) - 2.0 * r.loglik, 1e-12));
}

TEST_CASE("nested models: WK at least as good as Kw on the same data", "[fit]") {
  auto xs = sample(*weighted_kumaraswamy(2.0, 13.0, 6.0), 1500, 3);
  FitOptions opts;
  opts.starts = 6;
  auto kw = fit_values(xs, Model::kw, opts);
  opts.extra_starts = {{kw.params[0].second, std::max(kw.params[1].second - 1.0, 1e-3), 1.0}};
  auto wk = fit_values(xs, Model::wk, opts);
  // Kw(a, b) has the same density as WK(a, b-1, c) at c = a.
  CHECK(wk.loglik >= kw.loglik - 1e-6);
}

TEST_CASE("refit from the optimum is idempotent", "[fit]") {
  auto xs = sample(*beta_dist(2.0, 3.0), 800, 5);
  FitOptions opts;
  opts.starts = 4;
  auto r = fit_values(xs, Model::beta, opts);
  auto again = refit_from(xs, Model::beta, r.values());
  CHECK_THAT(again.loglik, WithinAbs(r.loglik, 1e-8));
  for (std::size_t i = 0; i < 2; ++i) CHECK_THAT(again.values()[i], WithinRel(r.values()[i], 1e-5));
}

TEST_CASE("fit is identical in serial and parallel mode", "[fit][parallel]") {
  auto xs = sample(*kumaraswamy(1.5, 3.0), 600, 9);
  FitOptions opts;
  opts.starts = 5;
  opts.mode = parallel::Mode::serial;
  auto a = fit_values(xs, Model::wk, opts);
  opts.mode = parallel::Mode::openmp;
  auto b = fit_values(xs, Model::wk, opts);
  CHECK(a.values() == b.values());
  CHECK(a.loglik == b.loglik);
}

TEST_CASE("histogram rmse", "[fit]") {
  std::vector<double> z;
  for (int i = 0; i <= 1000; ++i) z.push_back(i / 1000.0);
  auto s = normalize(z);
  CHECK_THAT(rmse_metric(s, *uniform()), WithinAbs(0.0, 0.02));
  CHECK(rmse_metric(s, *beta_dist(2.0, 2.0)) > 0.1);
  CHECK_THROWS_AS(rmse_metric(s, *uniform(), 1), DomainError);

  auto r = fit_mle(s, Model::beta, 4, 1);
  CHECK(r.rmse >= 0.0);
  CHECK(r.rmse < 0.05);
}
