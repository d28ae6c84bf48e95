#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "wtrv/gof.hpp"
#include "wtrv/wtrv.hpp"

using namespace wtrv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> sorted_sample(const Distribution& d, std::size_t n, std::uint64_t seed) {
  auto xs = sample(d, n, seed);
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

TEST_CASE("EDF statistics on a hand-worked sample", "[gof]") {
  const std::vector<double> u = {0.1, 0.25, 0.5, 0.6, 0.9};
  auto unif = uniform();
  auto ks = ks_test(u, *unif);
  CHECK_THAT(ks.statistic, WithinAbs(0.2, 1e-12));
  CHECK_THAT(ks.p_value, WithinRel(numerics::kolmogorov_sf(0.2 * std::sqrt(5.0)), 1e-12));
  CHECK_THAT(ad_test(u, *unif).statistic, WithinAbs(0.1860880851869906, 1e-12));
  CHECK_THAT(cvm_test(u, *unif).statistic, WithinAbs(0.02916666666666666, 1e-12));
  CHECK_THROWS_AS(ks_test({0.5, 0.2}, *unif), DomainError);
}

TEST_CASE("statistics depend only on the probability integral transform", "[gof]") {
  auto d = gamma_dist(2.5, 1.5);
  auto xs = sorted_sample(*d, 300, 4);
  std::vector<double> us;
  for (double x : xs) us.push_back(d->cdf(x));
  auto unif = uniform();
  CHECK_THAT(ks_test(xs, *d).statistic, WithinAbs(ks_test(us, *unif).statistic, 1e-12));
  CHECK_THAT(ad_test(xs, *d).statistic, WithinAbs(ad_test(us, *unif).statistic, 1e-9));
  CHECK_THAT(cvm_test(xs, *d).statistic, WithinAbs(cvm_test(us, *unif).statistic, 1e-12));
}

TEST_CASE("CvM lower bound is attained at the plotting positions", "[gof]") {
  const std::size_t n = 8;
  std::vector<double> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back((2.0 * i + 1.0) / (2.0 * n));
  CHECK_THAT(cvm_test(u, *uniform()).statistic, WithinAbs(1.0 / (12.0 * n), 1e-15));
}

TEST_CASE("chi-square with equal-probability bins", "[gof]") {
  std::vector<double> u;
  for (int i = 0; i < 100; ++i) u.push_back((i + 0.5) / 100.0);
  ChiSquareOptions opts;
  opts.fitted_params = 2;
  auto r = chisq_test(u, *uniform(), opts);
  CHECK_THAT(r.statistic, WithinAbs(0.0, 1e-12));
  CHECK(r.df == 7);
  CHECK_THAT(r.p_value, WithinAbs(1.0, 1e-12));

  opts.convention = DfConvention::explicit_df;
  opts.df = 5;
  CHECK(chisq_test(u, *uniform(), opts).df == 5);
  opts.convention = DfConvention::bins_minus_1;
  CHECK(chisq_test(u, *uniform(), opts).df == 9);

  opts.bins = 200;
  CHECK_THROWS_AS(chisq_test(u, *uniform(), opts), BinningError);
  opts.bins = 10;
  opts.convention = DfConvention::explicit_df;
  opts.df = 0;
  CHECK_THROWS_AS(chisq_test(u, *uniform(), opts), BinningError);
}

TEST_CASE("degrees-of-freedom sweep recovers the reported layouts", "[gof]") {
  struct Row {
    double stat, p;
    int df;
  };
  for (auto r : {Row{9.2350, 0.1608, 6}, Row{6.6068, 0.3587, 6}, Row{5.8144, 0.3247, 5}, Row{4.3261, 0.7415, 7},
                 Row{3.4122, 0.8444, 7}, Row{3.5281, 0.7402, 6}}) {
    CHECK(chisq_df_sweep(r.stat, r.p) == std::vector<int>{r.df});
  }
}

TEST_CASE("KS rejection rate under the null", "[gof]") {
  auto d = weibull(1.7, 2.0);
  int rejected = 0;
  const int sims = 400;
  for (int i = 0; i < sims; ++i) {
    if (ks_test(sorted_sample(*d, 200, 1000 + i), *d).p_value < 0.05) ++rejected;
  }
  const double rate = static_cast<double>(rejected) / sims;
  CHECK(rate > 0.02);
  CHECK(rate < 0.08);
}

TEST_CASE("tests detect a wrong model", "[gof]") {
  auto xs = sorted_sample(*beta_dist(2.0, 5.0), 500, 8);
  auto wrong = uniform();
  CHECK(ks_test(xs, *wrong).p_value < 1e-6);
  CHECK(ad_test(xs, *wrong).p_value < 1e-3);
  CHECK(cvm_test(xs, *wrong).p_value < 1e-3);
}

TEST_CASE("parametric bootstrap", "[gof][bootstrap]") {
  auto truth = kumaraswamy(2.0, 5.0);
  auto xs = sorted_sample(*truth, 150, 12);
  BootstrapOptions opts;
  opts.replicates = 99;
  opts.refit_starts = 2;
  auto r = bootstrap_pvalue(xs, Model::kw, {2.0, 5.0}, GofTest::ks, opts);
  CHECK(r.replicates == 99);
  CHECK(r.observed.method == PValueMethod::bootstrap);
  CHECK(r.observed.p_value >= 1.0 / 100.0);
  CHECK(r.observed.p_value <= 1.0);
  CHECK(r.observed.p_value > 0.01);
  const auto used = static_cast<double>(r.replicates - r.failures);
  CHECK_THAT(r.observed.p_value, WithinAbs((1.0 + r.exceed) / (used + 1.0), 1e-15));

  opts.mode = parallel::Mode::serial;
  auto s = bootstrap_pvalue(xs, Model::kw, {2.0, 5.0}, GofTest::ks, opts);
  CHECK(s.exceed == r.exceed);

  opts.replicates = 50;
  CHECK_THROWS_AS(bootstrap_pvalue(xs, Model::kw, {2.0, 5.0}, GofTest::ks, opts), BootstrapError);
}

TEST_CASE("run_gof collects every requested test", "[gof]") {
  auto xs = sorted_sample(*kumaraswamy(2.0, 5.0), 200, 2);
  auto rep = run_gof(xs, Model::kw, {2.0, 5.0}, {GofTest::ks, GofTest::ad, GofTest::cvm, GofTest::chisq},
                     PValueMethod::asymptotic);
  REQUIRE(rep.tests.size() == 4);
  CHECK(rep.n == 200);
  for (const auto& t : rep.tests) {
    CHECK(t.p_value >= 0.0);
    CHECK(t.p_value <= 1.0);
  }
  CHECK(parse_gof_test("cvm") == GofTest::cvm);
  CHECK_THROWS_AS(parse_gof_test("sw"), ParseError);
}
