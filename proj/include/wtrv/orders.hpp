#pragma once

// Grid checks of the lr, fr, rfr and st orders, the ordering theorems, and
// randomized audits over their hypothesis classes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wtrv/reliability.hpp"
#include "wtrv/wtrv.hpp"

namespace wtrv {

enum class Order { lr, fr, rfr, st };
Order parse_order(const std::string& name);
std::string to_string(Order order);

struct OrderVerdict {
  Order order = Order::lr;
  bool holds_on_grid = false;
  bool bounds_ok = false;  // l_X <= l_Y and u_X <= u_Y
  // Ratio (or pointwise) condition alone, restricted to S_X ∩ S_Y.
  bool holds_on_common_support = false;
  std::optional<Witness> first_violation;
  std::size_t grid_points = 0;
  std::string grid;
};

/// Is X <= Y in the given order? Grid is the merged quantile grids of X and Y.
OrderVerdict check_order(const Distribution& x, const Distribution& y, Order order, std::size_t grid_size = 256);
/// Same check on a caller-supplied grid; points outside both supports are dropped.
OrderVerdict check_order_on(const Distribution& x, const Distribution& y, Order order, std::vector<double> grid);

enum class OrderTheorem { thm5i, thm5ii, thm6, thm7, thm8, thm9, thm10 };
OrderTheorem parse_order_theorem(const std::string& name);
std::string to_string(OrderTheorem which);

struct TheoremReport {
  OrderTheorem which = OrderTheorem::thm5i;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_hold = false;
  std::string conclusion;
  bool conclusion_evaluated = false;
  bool conclusion_holds = false;
  std::optional<OrderVerdict> verdict;
  std::string note;

  bool consistent() const { return !hypotheses_hold || !conclusion_evaluated || conclusion_holds; }
};

/// For thm7 only w1 is used (common weight).
TheoremReport verify_theorem(DistributionHandle x, DistributionHandle y, const WeightFunction& w1,
                             const WeightFunction& w2, OrderTheorem which, std::size_t grid_size = 256);

/// Named example tuples, e.g. "thm9-example7".
struct TheoremFixture {
  std::string name;
  OrderTheorem which;
  DistributionHandle x, y;
  WeightFunction w1, w2;
};
TheoremFixture theorem_fixture(const std::string& name);
std::vector<std::string> theorem_fixture_names();

struct AuditReport {
  OrderTheorem which = OrderTheorem::thm5i;
  std::size_t requested = 0;
  std::size_t attempts = 0;
  std::size_t hypothesis_passing = 0;
  std::size_t skipped = 0;  // hypotheses failed or construction impossible
  std::size_t conclusion_passes = 0;
  std::vector<std::string> counterexamples;
};

/// Samples random parameterized tuples until `trials` of them pass the
/// hypotheses (or an attempt cap is hit) and checks each conclusion.
AuditReport randomized_theorem_audit(OrderTheorem which, std::size_t trials, std::uint64_t seed,
                                     std::size_t grid_size = 128);

/// Random catalog distribution with a monotone hazard, for property audits.
DistributionHandle random_catalog_distribution(std::uint64_t seed);

struct ImplicationAudit {
  std::size_t pairs = 0;
  std::size_t lr_holds = 0, fr_holds = 0, rfr_holds = 0, st_holds = 0;
  std::vector<std::string> violations;
};

/// lr => fr, lr => rfr, fr => st, rfr => st on random pairs.
ImplicationAudit order_implication_audit(std::size_t pairs, std::uint64_t seed, std::size_t grid_size = 256);

struct CorollaryAudit {
  std::size_t distributions = 0;
  std::size_t pairs = 0;
  std::size_t ifr_count = 0;
  std::size_t fr_count = 0;
  std::vector<std::string> contradictions;
};

/// X IFR <=> equilibrium(X) ILR <=> equilibrium(X) <=lr X, and
/// X <=fr Y <=> equilibrium(X) <=lr equilibrium(Y).
CorollaryAudit equilibrium_corollary_audit(std::size_t count, std::uint64_t seed, std::size_t grid_size = 256);

}  // namespace wtrv
