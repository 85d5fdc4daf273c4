#include <cmath>
#include <random>

#include "doctest.h"
#include "lotsizer/solve.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"
#include "support/naive_cost.hpp"
#include "support/test_seed.hpp"

using namespace lotsizer;
using lotsizer::testing::naive_plan_cost;
using lotsizer::testing::single_part_instance;

namespace {

// lead 1, holding 1, prices 10/10/9/10, demand 5 at t = 3 and t = 4.
PlanningInstance price_dip_instance(double ordering_cost) {
  return single_part_instance(1, ordering_cost, 1.0, {0, 0, 5, 5},
                              {10, 10, 9, 10});
}

double total(const PlanningInstance& instance, const OrderPlan& plan,
             CostSemantics semantics) {
  return check_plan(instance, plan, semantics).cost.overall.total();
}

}  // namespace

TEST_CASE("pairwise solver buys each period at its cheapest unit cost") {
  const auto instance = price_dip_instance(2.0);
  const OrderPlan plan = solve_pairwise(instance);
  REQUIRE(plan.entries().size() == 2);
  // t = 3: period 2 (10 + 1) beats period 1 (10 + 2).
  CHECK(plan.entries()[0].order_period == 2);
  // t = 4: period 3 (9 + 1) beats periods 1 and 2.
  CHECK(plan.entries()[1].order_period == 3);
  CHECK(total(instance, plan, CostSemantics::kPairwiseAsWritten) == 109);

  const OrderPlan oracle =
      solve_bruteforce(instance, CostSemantics::kPairwiseAsWritten);
  CHECK(total(instance, oracle, CostSemantics::kPairwiseAsWritten) == 109);
}

TEST_CASE("zero net demand yields an empty plan") {
  const auto instance = single_part_instance(1, 1, 1, {0, -3, 0}, {10});
  CHECK(solve_pairwise(instance).empty());
  CHECK(solve_consolidated(instance).empty());
  CHECK(solve_bruteforce(instance, CostSemantics::kPairwiseAsWritten).empty());
  CHECK(solve_bruteforce(instance, CostSemantics::kConsolidatedOrdering).empty());
}

TEST_CASE("constant prices push orders to the latest legal period") {
  std::vector<double> raw(5, 0.0);
  raw[4] = 10;  // demand 10 at t = 5
  const auto instance = single_part_instance(1, 0.0, 1.0, raw, {100});
  const OrderPlan plan = solve_pairwise(instance);
  REQUIRE(plan.entries().size() == 1);
  CHECK(plan.entries()[0].order_period == 4);
  CHECK(total(instance, plan, CostSemantics::kPairwiseAsWritten) == 1010);
}

TEST_CASE("ties break to the earliest order period") {
  // Constant price, no holding cost: every order period costs the same.
  std::vector<double> raw = {0, 0, 0, 8};
  const auto instance = single_part_instance(1, 1.0, 0.0, raw, {50});
  const OrderPlan plan = solve_pairwise(instance);
  REQUIRE(plan.entries().size() == 1);
  CHECK(plan.entries()[0].order_period == 1);
  const OrderPlan oracle =
      solve_bruteforce(instance, CostSemantics::kPairwiseAsWritten);
  REQUIRE(oracle.entries().size() == 1);
  CHECK(oracle.entries()[0].order_period == 1);
}

TEST_CASE("consolidated solver weighs event count against unit cost") {
  SUBCASE("cheap ordering keeps two events") {
    const auto instance = price_dip_instance(2.0);
    const OrderPlan plan = solve_consolidated(instance);
    CHECK(plan.order_events(1) == 2);
    CHECK(total(instance, plan, CostSemantics::kConsolidatedOrdering) == 109);
  }
  SUBCASE("expensive ordering forces one event") {
    const auto instance = price_dip_instance(20.0);
    const OrderPlan plan = solve_consolidated(instance);
    CHECK(plan.order_events(1) == 1);
    CHECK(total(instance, plan, CostSemantics::kConsolidatedOrdering) == 135);
    const OrderPlan oracle =
        solve_bruteforce(instance, CostSemantics::kConsolidatedOrdering);
    CHECK(total(instance, oracle, CostSemantics::kConsolidatedOrdering) == 135);
  }
}

TEST_CASE("bruteforce handles the single-pair degenerate case") {
  const auto instance = single_part_instance(1, 3.0, 1.0, {0, 4}, {7});
  const OrderPlan plan =
      solve_bruteforce(instance, CostSemantics::kPairwiseAsWritten);
  REQUIRE(plan.entries().size() == 1);
  CHECK(plan.entries()[0].order_period == 1);
  CHECK(plan.entries()[0].quantity == 4);
  CHECK(total(instance, plan, CostSemantics::kPairwiseAsWritten) == 4 * 8 + 3);
}

TEST_CASE("bruteforce consolidates a two-period toy when ordering dominates") {
  const auto instance =
      single_part_instance(0, 100.0, 1.0, {3, 3}, {10, 10});
  const OrderPlan plan =
      solve_bruteforce(instance, CostSemantics::kConsolidatedOrdering);
  CHECK(plan.order_events(1) == 1);
  const OrderPlan solved = solve_consolidated(instance);
  CHECK(total(instance, solved, CostSemantics::kConsolidatedOrdering) ==
        total(instance, plan, CostSemantics::kConsolidatedOrdering));
}

TEST_CASE("bruteforce refuses instances beyond its enumeration bounds") {
  SUBCASE("too many pairwise pairs") {
    // lead 0, demand in every one of 7 periods: 1+2+...+7 = 28 pairs.
    std::vector<double> raw(7, 5.0);
    const auto instance = single_part_instance(0, 1, 1, raw, {10});
    CHECK_THROWS_AS(solve_bruteforce(instance, CostSemantics::kPairwiseAsWritten),
                    EnumerationLimitError);
  }
  SUBCASE("horizon too long for consolidated enumeration") {
    std::vector<double> raw(9, 1.0);
    const auto instance = single_part_instance(0, 1, 1, raw, {10});
    CHECK_THROWS_AS(
        solve_bruteforce(instance, CostSemantics::kConsolidatedOrdering),
        EnumerationLimitError);
  }
}

TEST_CASE("solvers raise infeasibility naming the cell") {
  const auto instance = single_part_instance(2, 1, 1, {0, 5, 0, 0}, {10});
  CHECK_THROWS_AS(solve_pairwise(instance), InfeasibleError);
  CHECK_THROWS_AS(solve_consolidated(instance), InfeasibleError);
  try {
    solve_pairwise(instance);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.part_id() == 1);
    CHECK(e.period() == 2);
  }
}

TEST_CASE("check_plan accepts solver output and flags broken plans") {
  const auto instance = price_dip_instance(2.0);
  const OrderPlan plan = solve_pairwise(instance);
  CHECK(check_plan(instance, plan, CostSemantics::kPairwiseAsWritten).ok());

  SUBCASE("assignment one period past the window") {
    // lead 1 makes t' = t - L + 1 = 4 illegal for t = 4.
    const auto broken = OrderPlan::from_entries({{1, 4, 4, 5}, {1, 3, 2, 5}});
    const auto report =
        check_plan(instance, broken, CostSemantics::kPairwiseAsWritten);
    REQUIRE_FALSE(report.ok());
    bool window = false;
    for (const Violation& v : report.violations) {
      if (v.message.find("window") != std::string::npos) window = true;
    }
    CHECK(window);
  }

  SUBCASE("coverage short by one unit") {
    const auto broken = OrderPlan::from_entries({{1, 3, 2, 4}, {1, 4, 3, 5}});
    const auto report =
        check_plan(instance, broken, CostSemantics::kPairwiseAsWritten);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().message.find("coverage") !=
          std::string::npos);
  }

  SUBCASE("split assignments are accepted") {
    const auto split = OrderPlan::from_entries(
        {{1, 3, 1, 2}, {1, 3, 2, 3}, {1, 4, 3, 5}});
    CHECK(check_plan(instance, split, CostSemantics::kPairwiseAsWritten).ok());
  }
}

TEST_CASE("both exact solvers match the oracle on random instances") {
  std::mt19937_64 rng(lotsizer::testing::test_seed() ^ 0x50bULL);
  lotsizer::testing::GenOptions options;
  options.allow_negative_raw = true;
  for (int trial = 0; trial < 60; ++trial) {
    const auto instance = lotsizer::testing::random_instance(rng, options);

    const OrderPlan fast_pair = solve_pairwise(instance);
    const OrderPlan slow_pair =
        solve_bruteforce(instance, CostSemantics::kPairwiseAsWritten);
    const double fast_pair_cost =
        total(instance, fast_pair, CostSemantics::kPairwiseAsWritten);
    CHECK(fast_pair_cost ==
          total(instance, slow_pair, CostSemantics::kPairwiseAsWritten));
    CHECK(fast_pair_cost ==
          naive_plan_cost(instance, slow_pair, CostSemantics::kPairwiseAsWritten));

    const OrderPlan fast_cons = solve_consolidated(instance);
    const OrderPlan slow_cons =
        solve_bruteforce(instance, CostSemantics::kConsolidatedOrdering);
    const double fast_cons_cost =
        total(instance, fast_cons, CostSemantics::kConsolidatedOrdering);
    CHECK(fast_cons_cost ==
          total(instance, slow_cons, CostSemantics::kConsolidatedOrdering));
    CHECK(fast_cons_cost ==
          naive_plan_cost(instance, slow_cons, CostSemantics::kConsolidatedOrdering));
  }
}

TEST_CASE("uncapacitated feasibility survives demand increases") {
  std::mt19937_64 rng(lotsizer::testing::test_seed() ^ 0xd00dULL);
  std::uniform_int_distribution<int> bump(1, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto base = lotsizer::testing::random_instance(rng);
    REQUIRE(validate(base).ok());

    // Raise one serviceable period's demand and re-solve.
    std::uniform_int_distribution<int> part_dist(1, base.num_parts());
    const int i = part_dist(rng);
    const int lead = base.part(i).lead_time;
    std::uniform_int_distribution<int> period_dist(lead + 1, base.horizon());
    const int t = period_dist(rng);

    Grid raw = base.demand().raw;
    raw.at(i, t) = std::max(raw.at(i, t), 0.0) + bump(rng);
    const auto bigger =
        PlanningInstance::make(base.parts(), base.horizon(), std::move(raw),
                               base.prices().price, base.safety_stock());
    CHECK(validate(bigger).ok());
    const OrderPlan plan = solve_pairwise(bigger);
    CHECK(check_plan(bigger, plan, CostSemantics::kPairwiseAsWritten).ok());
  }
}
