#ifndef LOTSIZER_TESTS_SUPPORT_BUILD_HPP_
#define LOTSIZER_TESTS_SUPPORT_BUILD_HPP_

#include <vector>

#include "lotsizer/instance.hpp"

namespace lotsizer::testing {

// Single-part instance from period vectors. Prices may be shorter than the
// horizon; the last value is repeated (keeps call sites compact).
inline PlanningInstance single_part_instance(
    int lead_time, double ordering_cost, double holding_cost,
    const std::vector<double>& raw, const std::vector<double>& prices,
    const std::vector<double>& safety_stock = {}) {
  const int T = static_cast<int>(raw.size());
  PartSpec part;
  part.part_id = 1;
  part.lead_time = lead_time;
  part.ordering_cost = ordering_cost;
  part.holding_cost = holding_cost;

  Grid raw_grid(1, T), price_grid(1, T), ss_grid(1, T);
  for (int t = 1; t <= T; ++t) {
    raw_grid.at(1, t) = raw[t - 1];
    price_grid.at(1, t) =
        prices.empty() ? 0.0
                       : prices[std::min<size_t>(t - 1, prices.size() - 1)];
    ss_grid.at(1, t) =
        safety_stock.empty() ? 0.0 : safety_stock[std::min<size_t>(t - 1, safety_stock.size() - 1)];
  }
  return PlanningInstance::make({part}, T, std::move(raw_grid),
                                std::move(price_grid), std::move(ss_grid));
}

}  // namespace lotsizer::testing

#endif  // LOTSIZER_TESTS_SUPPORT_BUILD_HPP_
