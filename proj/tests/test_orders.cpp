#include <catch_amalgamated.hpp>

#include <cmath>

#include "wtrv/orders.hpp"
#include "wtrv/spec_parse.hpp"

using namespace wtrv;

TEST_CASE("order names", "[orders]") {
  for (auto o : {Order::lr, Order::fr, Order::rfr, Order::st}) CHECK(parse_order(to_string(o)) == o);
  CHECK_THROWS_AS(parse_order("hr"), ParseError);
  CHECK_THROWS_AS(parse_order_theorem("thm11"), ParseError);
  CHECK_THROWS_AS(theorem_fixture("nope"), ParseError);
}

TEST_CASE("exponential rates are ordered in every sense", "[orders]") {
  auto fast = exponential(2.0), slow = exponential(1.0);
  for (auto o : {Order::lr, Order::fr, Order::rfr, Order::st}) {
    INFO(to_string(o));
    auto v = check_order(*fast, *slow, o);
    CHECK(v.holds_on_grid);
    CHECK(v.bounds_ok);
    CHECK(v.grid_points > 0);
    auto back = check_order(*slow, *fast, o);
    CHECK_FALSE(back.holds_on_grid);
    CHECK(back.first_violation.has_value());
  }
}

TEST_CASE("support bounds enter the order checks", "[orders]") {
  // F_U/F_E increases on (0, 1) but the upper endpoints are in the wrong order.
  auto v = check_order(*exponential(1.0), *uniform(), Order::rfr);
  CHECK_FALSE(v.bounds_ok);
  CHECK_FALSE(v.holds_on_grid);
  CHECK(v.holds_on_common_support);

  auto st = check_order(*uniform(), *exponential(0.5), Order::st);
  CHECK(st.holds_on_grid);
}

TEST_CASE("crossing survival functions are not st-ordered", "[orders]") {
  auto a = weibull(0.7, 1.0), b = weibull(3.0, 1.0);
  CHECK_FALSE(check_order(*a, *b, Order::st).holds_on_grid);
  CHECK_FALSE(check_order(*b, *a, Order::st).holds_on_grid);
}

TEST_CASE("custom grids", "[orders]") {
  auto v = check_order_on(*exponential(2.0), *exponential(1.0), Order::lr, {-1.0, 0.5, 1.0, 2.0});
  CHECK(v.holds_on_grid);
  CHECK(v.grid.starts_with("caller grid"));
}

TEST_CASE("theorem fixtures", "[orders][fixtures]") {
  for (const auto& name : theorem_fixture_names()) {
    INFO(name);
    auto fx = theorem_fixture(name);
    auto rep = verify_theorem(fx.x, fx.y, fx.w1, fx.w2, fx.which);
    CHECK(rep.consistent());
  }

  SECTION("exponential pair with power weights is lr-ordered") {
    auto fx = theorem_fixture("thm5i-example4");
    auto rep = verify_theorem(fx.x, fx.y, fx.w1, fx.w2, fx.which);
    CHECK(rep.hypotheses_hold);
    CHECK(rep.conclusion_holds);
  }
  SECTION("uniform against exponential: fr holds, lr does not") {
    auto fx = theorem_fixture("thm9-example7");
    auto rep = verify_theorem(fx.x, fx.y, fx.w1, fx.w2, fx.which);
    CHECK(rep.hypotheses_hold);
    CHECK(rep.conclusion_holds);
    auto xw = construct(fx.x, fx.w1), yw = construct(fx.y, fx.w2);
    auto lr = check_order(*xw, *yw, Order::lr);
    CHECK_FALSE(lr.holds_on_grid);
    REQUIRE(lr.first_violation);
    // The density ratio turns down before x = 1/2.
    CHECK(lr.first_violation->x1 < 0.5);
  }
  SECTION("the equilibrium minimum fixture") {
    auto fx = theorem_fixture("thm7-equilibrium");
    auto rep = verify_theorem(fx.x, fx.y, fx.w1, fx.w2, fx.which);
    CHECK(rep.hypotheses_hold);
    CHECK(rep.conclusion_holds);
  }
}

TEST_CASE("randomized theorem audits", "[orders][audit]") {
  for (auto which : {OrderTheorem::thm5i, OrderTheorem::thm8, OrderTheorem::thm9, OrderTheorem::thm10}) {
    INFO(to_string(which));
    auto a = randomized_theorem_audit(which, 12, 2024);
    CHECK(a.hypothesis_passing == 12);
    CHECK(a.conclusion_passes == a.hypothesis_passing);
    CHECK(a.counterexamples.empty());
  }
}

TEST_CASE("audits are reproducible", "[orders][audit]") {
  auto a = randomized_theorem_audit(OrderTheorem::thm8, 5, 99);
  auto b = randomized_theorem_audit(OrderTheorem::thm8, 5, 99);
  CHECK(a.attempts == b.attempts);
  CHECK(a.skipped == b.skipped);
  CHECK(random_catalog_distribution(5)->spec() == random_catalog_distribution(5)->spec());
}

TEST_CASE("order implications", "[orders][audit]") {
  auto a = order_implication_audit(20, 7);
  CHECK(a.pairs == 20);
  CHECK(a.violations.empty());
  CHECK(a.st_holds >= a.lr_holds);
}

TEST_CASE("equilibrium corollaries", "[orders][audit]") {
  auto a = equilibrium_corollary_audit(6, 11);
  CHECK(a.distributions == 6);
  CHECK(a.contradictions.empty());
}
