#ifndef LOTSIZER_PLAN_HPP_
#define LOTSIZER_PLAN_HPP_

#include <utility>
#include <vector>

namespace lotsizer {

// One assignment: quantity of a part, needed in need_period, bought in
// order_period.
struct PlanEntry {
  int part_id = 0;
  int need_period = 0;
  int order_period = 0;
  double quantity = 0;

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

// An ordering schedule. Entries are kept sorted by (part, need period,
// order period) and unique; duplicates passed to from_entries are merged by
// summing their quantities. Splits (one need period served from several
// order periods) are representable; the solvers never emit them but the
// checker accepts them.
class OrderPlan {
 public:
  OrderPlan() = default;
  static OrderPlan from_entries(std::vector<PlanEntry> entries);

  const std::vector<PlanEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Total quantity assigned to one need period.
  double assigned_total(int part_id, int need_period) const;

  // (order period, total quantity bought then) pairs with positive totals,
  // ascending by period. This is the per-period "order quantity" view.
  std::vector<std::pair<int, double>> order_totals(int part_id) const;

  // Number of distinct order periods the part actually buys in.
  int order_events(int part_id) const;

 private:
  std::vector<PlanEntry> entries_;
};

// Cost of a schedule split into the three objective components.
struct PartCost {
  double purchasing = 0;
  double ordering = 0;
  double holding = 0;
  double total() const { return purchasing + ordering + holding; }
};

struct CostBreakdown {
  std::vector<PartCost> per_part;  // indexed part_id - 1
  PartCost overall;
};

}  // namespace lotsizer

#endif  // LOTSIZER_PLAN_HPP_
