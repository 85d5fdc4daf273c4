#ifndef LOTSIZER_IO_HPP_
#define LOTSIZER_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lotsizer/instance.hpp"
#include "lotsizer/plan.hpp"
#include "lotsizer/report.hpp"
#include "lotsizer/solve.hpp"

namespace lotsizer {

// Sparse price data is expanded by carrying the last seen price forward,
// then the first seen price backward over any leading gap. Strict mode
// refuses gaps instead.
enum class PriceFillMode { kForwardBackwardFill, kStrict };

struct RunConfig {
  std::string parts_path;
  std::string demand_path;
  std::string prices_path;
  std::string safety_stock_path;  // empty: compute from the parts table
  double service_level = 0.95;
  std::optional<double> z_override;
  CostSemantics semantics = CostSemantics::kPairwiseAsWritten;
  std::string out_dir = ".";
  PriceFillMode price_fill = PriceFillMode::kForwardBackwardFill;
};

struct PriceCell {
  int part_id = 0;
  int period = 0;
};

// parts.csv: part_id,lead_time,ordering_cost,holding_cost,sigma,uom.
// Part ids must be exactly 1..P with no duplicates.
std::vector<PartSpec> load_parts(const std::string& path);

// demand.csv: part_id,period,demand (signed). The horizon is the largest
// period present; absent cells are zero demand. Duplicate cells are parse
// errors naming the line.
Grid load_demand(const std::string& path, int num_parts, int* horizon);

// prices.csv: part_id,period,price, sparse. Missing cells are NaN until
// filled.
Grid load_prices_sparse(const std::string& path, int num_parts, int horizon);

// Cells still unpopulated, in (part, period) order.
std::vector<PriceCell> price_gaps(const Grid& prices);

// Forward- then backward-fill along each part's horizon. A part with no
// price at all stays unpopulated and is reported by price_gaps afterwards.
void fill_prices(Grid& prices);

// safety_stock.csv: part_id,period,ss. Every (part, period) cell must be
// present exactly once.
Grid load_safety_stock(const std::string& path, int num_parts, int horizon);

// Loads everything in the config, expands prices per the fill mode, and
// computes safety stock when no file is given. Does not validate; callers
// that want a hard gate use load_instance.
PlanningInstance load_instance_raw(const RunConfig& config);

// load_instance_raw plus validation; throws DomainError carrying the full
// violation report when the instance is invalid.
PlanningInstance load_instance(const RunConfig& config);

// Canonical exporters. Loading files produced here reproduces the same
// instance, and re-exporting reproduces the same bytes.
std::string parts_to_csv(const std::vector<PartSpec>& parts);
std::string demand_to_csv(const PlanningInstance& instance);
std::string prices_to_csv(const PlanningInstance& instance);
std::string safety_stock_to_csv(const PlanningInstance& instance);

// plan.csv: part_id,need_period,order_period,quantity.
std::string plan_to_csv(const OrderPlan& plan);
OrderPlan read_plan_csv(const std::string& path);

// reference totals: part_id,total with part 0 as the grand total.
ReferenceTotals read_reference_totals(const std::string& path);

}  // namespace lotsizer

#endif  // LOTSIZER_IO_HPP_
