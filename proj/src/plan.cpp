#include "lotsizer/plan.hpp"

#include <algorithm>

namespace lotsizer {

OrderPlan OrderPlan::from_entries(std::vector<PlanEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const PlanEntry& a, const PlanEntry& b) {
    if (a.part_id != b.part_id) return a.part_id < b.part_id;
    if (a.need_period != b.need_period) return a.need_period < b.need_period;
    return a.order_period < b.order_period;
  });
  OrderPlan plan;
  for (const PlanEntry& e : entries) {
    if (e.quantity == 0) continue;
    if (!plan.entries_.empty()) {
      PlanEntry& last = plan.entries_.back();
      if (last.part_id == e.part_id && last.need_period == e.need_period &&
          last.order_period == e.order_period) {
        last.quantity += e.quantity;
        continue;
      }
    }
    plan.entries_.push_back(e);
  }
  return plan;
}

double OrderPlan::assigned_total(int part_id, int need_period) const {
  double sum = 0;
  for (const PlanEntry& e : entries_) {
    if (e.part_id == part_id && e.need_period == need_period) sum += e.quantity;
  }
  return sum;
}

std::vector<std::pair<int, double>> OrderPlan::order_totals(int part_id) const {
  std::vector<std::pair<int, double>> totals;
  for (const PlanEntry& e : entries_) {
    if (e.part_id != part_id) continue;
    auto it = std::find_if(totals.begin(), totals.end(),
                           [&](const auto& p) { return p.first == e.order_period; });
    if (it == totals.end()) {
      totals.emplace_back(e.order_period, e.quantity);
    } else {
      it->second += e.quantity;
    }
  }
  std::erase_if(totals, [](const auto& p) { return p.second <= 0; });
  std::sort(totals.begin(), totals.end());
  return totals;
}

int OrderPlan::order_events(int part_id) const {
  return static_cast<int>(order_totals(part_id).size());
}

}  // namespace lotsizer
