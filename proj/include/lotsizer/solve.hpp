#ifndef LOTSIZER_SOLVE_HPP_
#define LOTSIZER_SOLVE_HPP_

#include <string>
#include <vector>

#include "lotsizer/instance.hpp"
#include "lotsizer/plan.hpp"

namespace lotsizer {

// How ordering cost is counted.
//   kPairwiseAsWritten:     once per active (need period, order period) pair,
//                           exactly as the model's indicator objective charges.
//   kConsolidatedOrdering:  once per distinct order period with any quantity,
//                           the way order events are counted on schedules.
enum class CostSemantics { kPairwiseAsWritten, kConsolidatedOrdering };

std::string to_string(CostSemantics semantics);
CostSemantics semantics_from_string(const std::string& s);

// Unit cost of buying one unit of the part in order_period for need_period:
// price plus holding for the periods in between.
double unit_order_cost(const PlanningInstance& instance, int part_id,
                       int need_period, int order_period);

// Optimal plan under pairwise ordering cost. Each (part, need period)
// decouples, so every positive requirement is served entirely from the
// cheapest legal order period (earliest on ties). Throws InfeasibleError
// naming the cell when a positive requirement has no ordering window.
OrderPlan solve_pairwise(const PlanningInstance& instance);

// Optimal plan when ordering cost is charged once per distinct order
// period used. Per part, a dynamic program over blocks of consecutive
// positive-demand periods served from one order period. Blocks suffice:
// the preference between two order periods (price plus holding offset)
// does not depend on the need period, so as the legal window grows an
// optimal assignment switches order periods at most once per opened period
// and never switches back.
OrderPlan solve_consolidated(const PlanningInstance& instance);

// Exhaustive verification oracle. Pairwise: enumerates every indicator
// subset over pairs that serve positive requirements (at most 20 pairs).
// Consolidated: per part, enumerates every subset of order periods
// (horizon at most 8). Ties broken like the main solvers, earliest order
// period first. Throws EnumerationLimitError beyond those bounds rather
// than truncating.
OrderPlan solve_bruteforce(const PlanningInstance& instance,
                           CostSemantics semantics);

struct FeasibilityReport {
  std::vector<Violation> violations;
  CostBreakdown cost;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Verifies coverage of every positive requirement, ordering-window
// legality, quantity positivity, and the linking bound, then recomputes
// the plan's cost under the given semantics. Problems are reported, never
// thrown.
FeasibilityReport check_plan(const PlanningInstance& instance,
                             const OrderPlan& plan, CostSemantics semantics);

// Cost recomputation alone (the checker's cost path).
CostBreakdown plan_cost(const PlanningInstance& instance, const OrderPlan& plan,
                        CostSemantics semantics);

}  // namespace lotsizer

#endif  // LOTSIZER_SOLVE_HPP_
