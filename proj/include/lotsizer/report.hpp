#ifndef LOTSIZER_REPORT_HPP_
#define LOTSIZER_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lotsizer/instance.hpp"
#include "lotsizer/plan.hpp"
#include "lotsizer/solve.hpp"

namespace lotsizer {

struct ServedFrom {
  int order_period = 0;
  double quantity = 0;
};

// One period of a part's schedule, seen both ways: what this period needs
// (and where it is served from) and what is bought in this period.
struct PartReportRow {
  int period = 0;
  double raw_demand = 0;
  double amount_ordered = 0;        // total assigned to this need period
  std::vector<ServedFrom> sources;  // ascending by order period
  double quantity_placed = 0;       // total bought in this period
  int order_events = 0;             // events counted under the semantics
};

struct PartReport {
  int part_id = 0;
  std::vector<PartReportRow> rows;  // one per period, 1..T
  PartCost cost;
};

// Published totals to compare a run against. part 0 carries the grand total.
struct ReferenceTotals {
  std::map<int, double> per_part;
  std::optional<double> grand;
};

struct TotalReportRow {
  int part_id = 0;
  PartCost cost;
  std::optional<double> reference;
  double delta = 0;  // computed - reference, meaningful when reference set
};

struct TotalReport {
  std::vector<TotalReportRow> rows;
  PartCost grand;
  std::optional<double> grand_reference;
  double grand_delta = 0;
};

// Renders one part's schedule. The plan must already have passed
// check_plan. Under consolidated semantics the per-period event count
// collapses to one per order period used.
PartReport render_part_report(const PlanningInstance& instance,
                              const OrderPlan& plan, int part_id,
                              CostSemantics semantics);

// Per-part cost totals plus the grand total, with an optional delta column
// against published reference totals.
TotalReport render_total_report(
    const PlanningInstance& instance, const OrderPlan& plan,
    CostSemantics semantics,
    const std::optional<ReferenceTotals>& reference = std::nullopt);

std::string part_report_to_text(const PartReport& report);
std::string part_report_to_csv(const PartReport& report);
std::string total_report_to_text(const TotalReport& report);
std::string total_report_to_csv(const TotalReport& report);

}  // namespace lotsizer

#endif  // LOTSIZER_REPORT_HPP_
