#include <random>

#include "doctest.h"
#include "lotsizer/instance.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"
#include "support/test_seed.hpp"

using namespace lotsizer;
using lotsizer::testing::single_part_instance;

TEST_CASE("net_demand adds the buffer to positive demand") {
  CHECK(net_demand(50, 17) == 67);
  CHECK(net_demand(0, 0) == 0);
  // A positive buffer is required even in a zero-demand period.
  CHECK(net_demand(0, 17) == 17);
}

TEST_CASE("net_demand treats surplus stock as covering the buffer") {
  CHECK(net_demand(-17, 17) == 0);
  CHECK(net_demand(-30, 17) == 0);
  // Partial surplus still owes the difference.
  CHECK(net_demand(-5, 17) == 12);
}

TEST_CASE("net_demand is non-negative and dominates positive raw demand") {
  std::mt19937_64 rng(lotsizer::testing::test_seed());
  std::uniform_real_distribution<double> raw_dist(-50, 50);
  std::uniform_real_distribution<double> ss_dist(0, 30);
  for (int k = 0; k < 1000; ++k) {
    const double raw = raw_dist(rng);
    const double ss = ss_dist(rng);
    const double net = net_demand(raw, ss);
    CHECK(net >= 0);
    if (raw > 0) CHECK(net >= raw);
  }
}

TEST_CASE("big_m sums net requirements and takes the worst part") {
  SUBCASE("single part") {
    // Summing these by hand gives 635.
    const std::vector<double> nets = {0, 0, 67, 89, 89, 89, 89, 83, 83, 29, 17, 0};
    double expected = 0;
    for (double n : nets) expected += n;
    CHECK(expected == 635);

    auto instance = single_part_instance(2, 0.5, 0.5, nets, {10});
    CHECK(big_m(instance) == 635);
  }

  SUBCASE("all-zero demand floors at one") {
    auto instance = single_part_instance(1, 1, 1, {0, 0, 0}, {10});
    CHECK(big_m(instance) == 1);
  }

  SUBCASE("max over parts") {
    PartSpec a{1, 1, 1, 1, 0, Uom::kUnit};
    PartSpec b{2, 1, 1, 1, 0, Uom::kUnit};
    Grid raw(2, 4), prices(2, 4, 10.0), ss(2, 4);
    raw.at(1, 2) = 40;
    raw.at(1, 3) = 60;   // part 1 totals 100
    raw.at(2, 2) = 250;  // part 2 totals 250
    auto instance = PlanningInstance::make({a, b}, 4, raw, prices, ss);
    CHECK(big_m(instance) == 250);
    CHECK(per_part_big_m(instance, 1) == 100);
    CHECK(per_part_big_m(instance, 2) == 250);
  }
}

TEST_CASE("big_m dominates every net cell") {
  std::mt19937_64 rng(lotsizer::testing::test_seed());
  for (int k = 0; k < 200; ++k) {
    auto instance = lotsizer::testing::random_instance(rng);
    const double m = big_m(instance);
    for (int i = 1; i <= instance.num_parts(); ++i) {
      for (int t = 1; t <= instance.horizon(); ++t) {
        CHECK(m >= instance.net(i, t));
      }
    }
  }
}

TEST_CASE("validate accepts a serviceable boundary demand") {
  // lead 2, demand first appears at t = 3: the window is exactly {1}.
  auto instance =
      single_part_instance(2, 1, 1, {0, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {10});
  const auto report = validate(instance);
  CHECK(report.ok());
}

TEST_CASE("validate flags unserviceable demand") {
  auto instance = single_part_instance(2, 1, 1, {0, 5, 0, 0}, {10});
  const auto report = validate(instance);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().part_id == 1);
  CHECK(report.violations.front().period == 2);
  CHECK(report.violations.front().message.find("unserviceable") !=
        std::string::npos);
}

TEST_CASE("validate flags bad part data") {
  SUBCASE("lead time swallows the horizon") {
    auto instance = single_part_instance(4, 1, 1, {0, 0, 0, 0}, {10});
    CHECK_FALSE(validate(instance).ok());
  }
  SUBCASE("negative ordering cost") {
    auto instance = single_part_instance(1, -1, 1, {0, 0}, {10});
    CHECK_FALSE(validate(instance).ok());
  }
  SUBCASE("negative price") {
    auto instance = single_part_instance(1, 1, 1, {0, 0}, {-2});
    CHECK_FALSE(validate(instance).ok());
  }
}

TEST_CASE("validate is pure and repeatable") {
  auto instance = single_part_instance(2, 1, 1, {0, 5, 7, 0}, {10});
  const auto first = validate(instance);
  const auto second = validate(instance);
  REQUIRE(first.violations.size() == second.violations.size());
  for (size_t k = 0; k < first.violations.size(); ++k) {
    CHECK(first.violations[k].part_id == second.violations[k].part_id);
    CHECK(first.violations[k].period == second.violations[k].period);
    CHECK(first.violations[k].message == second.violations[k].message);
  }
}

TEST_CASE("mismatched grid shapes are rejected at construction") {
  PartSpec part{1, 1, 1, 1, 0, Uom::kUnit};
  Grid demand(1, 4), prices(1, 3), ss(1, 4);
  CHECK_THROWS_AS(PlanningInstance::make({part}, 4, demand, prices, ss),
                  ContractError);
}
