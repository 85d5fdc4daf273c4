#include "lotsizer/solve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "lotsizer/numfmt.hpp"
#include "lotsizer/stable_sum.hpp"

namespace lotsizer {

namespace {

constexpr int kMaxPairwiseOraclePairs = 20;
constexpr int kMaxConsolidatedOracleHorizon = 8;

// Periods t <= lead time cannot be served at all; a positive requirement
// there is infeasible no matter what the solver does.
void require_serviceable(const PlanningInstance& instance) {
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const int lead = instance.part(i).lead_time;
    for (int t = 1; t <= std::min(lead, instance.horizon()); ++t) {
      if (instance.net(i, t) > 0) {
        throw InfeasibleError(
            i, t,
            "part " + std::to_string(i) + " period " + std::to_string(t) +
                ": net requirement " + format_number(instance.net(i, t)) +
                " cannot be served (lead time " + std::to_string(lead) + ")");
      }
    }
  }
}

// Cheapest legal order period for one need period, earliest on ties.
int argmin_order_period(const PlanningInstance& instance, int part_id,
                        int need_period) {
  const int last = need_period - instance.part(part_id).lead_time;
  int best = 1;
  double best_cost = unit_order_cost(instance, part_id, need_period, 1);
  for (int tp = 2; tp <= last; ++tp) {
    const double cost = unit_order_cost(instance, part_id, need_period, tp);
    if (cost < best_cost) {
      best = tp;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace

std::string to_string(CostSemantics semantics) {
  return semantics == CostSemantics::kPairwiseAsWritten ? "pairwise"
                                                        : "consolidated";
}

CostSemantics semantics_from_string(const std::string& s) {
  if (s == "pairwise") return CostSemantics::kPairwiseAsWritten;
  if (s == "consolidated") return CostSemantics::kConsolidatedOrdering;
  throw DomainError("unknown cost semantics '" + s +
                    "' (expected pairwise|consolidated)");
}

double unit_order_cost(const PlanningInstance& instance, int part_id,
                       int need_period, int order_period) {
  return instance.price(part_id, order_period) +
         instance.part(part_id).holding_cost * (need_period - order_period);
}

OrderPlan solve_pairwise(const PlanningInstance& instance) {
  require_serviceable(instance);
  std::vector<PlanEntry> entries;
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const int lead = instance.part(i).lead_time;
    for (int t = lead + 1; t <= instance.horizon(); ++t) {
      const double net = instance.net(i, t);
      if (net <= 0) continue;
      entries.push_back({i, t, argmin_order_period(instance, i, t), net});
    }
  }
  return OrderPlan::from_entries(std::move(entries));
}

OrderPlan solve_consolidated(const PlanningInstance& instance) {
  require_serviceable(instance);
  std::vector<PlanEntry> entries;
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const PartSpec& part = instance.part(i);
    std::vector<int> need;  // periods with a positive requirement, ascending
    for (int t = part.lead_time + 1; t <= instance.horizon(); ++t) {
      if (instance.net(i, t) > 0) need.push_back(t);
    }
    const int m = static_cast<int>(need.size());
    if (m == 0) continue;

    // best[j]: cheapest way to serve need[j..m). One transition serves the
    // consecutive block need[j..k] from a single order period legal for the
    // whole block, paying the ordering cost once.
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> best(m + 1, kInf);
    std::vector<int> block_end(m, -1);
    std::vector<int> block_from(m, -1);
    best[m] = 0;
    for (int j = m - 1; j >= 0; --j) {
      const int last_legal = need[j] - part.lead_time;
      for (int k = j; k < m; ++k) {
        if (best[k + 1] == kInf) continue;
        for (int tp = 1; tp <= last_legal; ++tp) {
          double block = 0;
          for (int r = j; r <= k; ++r) {
            block += instance.net(i, need[r]) *
                     unit_order_cost(instance, i, need[r], tp);
          }
          const double cost = part.ordering_cost + block + best[k + 1];
          if (cost < best[j]) {
            best[j] = cost;
            block_end[j] = k;
            block_from[j] = tp;
          }
        }
      }
    }

    for (int j = 0; j < m;) {
      const int k = block_end[j];
      const int tp = block_from[j];
      for (int r = j; r <= k; ++r) {
        entries.push_back({i, need[r], tp, instance.net(i, need[r])});
      }
      j = k + 1;
    }
  }
  return OrderPlan::from_entries(std::move(entries));
}

namespace {

struct OraclePair {
  int part_id;
  int need_period;
  int order_period;
  double unit_cost;
  double order_cost;
};

OrderPlan bruteforce_pairwise(const PlanningInstance& instance) {
  std::vector<OraclePair> pairs;
  // Groups of pair indices per (part, need period), in pair order.
  std::vector<std::pair<double, std::vector<int>>> groups;  // net, pair idxs
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const PartSpec& part = instance.part(i);
    for (int t = part.lead_time + 1; t <= instance.horizon(); ++t) {
      const double net = instance.net(i, t);
      if (net <= 0) continue;
      std::vector<int> idxs;
      for (int tp = 1; tp <= t - part.lead_time; ++tp) {
        idxs.push_back(static_cast<int>(pairs.size()));
        pairs.push_back({i, t, tp, unit_order_cost(instance, i, t, tp),
                         part.ordering_cost});
      }
      groups.emplace_back(net, std::move(idxs));
    }
  }
  const int n = static_cast<int>(pairs.size());
  if (n > kMaxPairwiseOraclePairs) {
    throw EnumerationLimitError(
        "pairwise enumeration handles at most " +
        std::to_string(kMaxPairwiseOraclePairs) + " order pairs, instance has " +
        std::to_string(n));
  }

  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<int> best_choice;
  std::vector<int> choice(groups.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double cost = 0;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) cost += pairs[p].order_cost;
    }
    bool feasible = true;
    for (size_t g = 0; g < groups.size(); ++g) {
      int chosen = -1;
      double chosen_cost = 0;
      for (int idx : groups[g].second) {
        if (!(mask & (1u << idx))) continue;
        if (chosen < 0 || pairs[idx].unit_cost < chosen_cost) {
          chosen = idx;
          chosen_cost = pairs[idx].unit_cost;
        }
      }
      if (chosen < 0) {
        feasible = false;
        break;
      }
      choice[g] = chosen;
      cost += groups[g].first * chosen_cost;
    }
    if (feasible && cost < best_cost) {
      best_cost = cost;
      best_choice = choice;
    }
  }

  std::vector<PlanEntry> entries;
  for (size_t g = 0; g < groups.size(); ++g) {
    const OraclePair& p = pairs[best_choice[g]];
    entries.push_back({p.part_id, p.need_period, p.order_period, groups[g].first});
  }
  return OrderPlan::from_entries(std::move(entries));
}

OrderPlan bruteforce_consolidated(const PlanningInstance& instance) {
  if (instance.horizon() > kMaxConsolidatedOracleHorizon) {
    throw EnumerationLimitError(
        "consolidated enumeration handles horizons up to " +
        std::to_string(kMaxConsolidatedOracleHorizon) + " periods, instance has " +
        std::to_string(instance.horizon()));
  }
  std::vector<PlanEntry> entries;
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const PartSpec& part = instance.part(i);
    std::vector<int> need;
    for (int t = part.lead_time + 1; t <= instance.horizon(); ++t) {
      if (instance.net(i, t) > 0) need.push_back(t);
    }
    if (need.empty()) continue;

    const int max_tp = need.back() - part.lead_time;  // latest useful period
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best_assign;
    std::vector<int> assign(need.size());
    for (std::uint32_t mask = 0; mask < (1u << max_tp); ++mask) {
      bool feasible = true;
      double unit_total = 0;
      std::uint32_t used = 0;
      for (size_t r = 0; r < need.size(); ++r) {
        const int last_legal = need[r] - part.lead_time;
        int chosen = -1;
        double chosen_cost = 0;
        for (int tp = 1; tp <= last_legal; ++tp) {
          if (!(mask & (1u << (tp - 1)))) continue;
          const double cost = unit_order_cost(instance, i, need[r], tp);
          if (chosen < 0 || cost < chosen_cost) {
            chosen = tp;
            chosen_cost = cost;
          }
        }
        if (chosen < 0) {
          feasible = false;
          break;
        }
        assign[r] = chosen;
        unit_total += instance.net(i, need[r]) * chosen_cost;
        used |= 1u << (chosen - 1);
      }
      if (!feasible) continue;
      const double cost =
          unit_total + part.ordering_cost * std::popcount(used);
      if (cost < best_cost) {
        best_cost = cost;
        best_assign = assign;
      }
    }
    for (size_t r = 0; r < need.size(); ++r) {
      entries.push_back({i, need[r], best_assign[r], instance.net(i, need[r])});
    }
  }
  return OrderPlan::from_entries(std::move(entries));
}

}  // namespace

OrderPlan solve_bruteforce(const PlanningInstance& instance,
                           CostSemantics semantics) {
  require_serviceable(instance);
  return semantics == CostSemantics::kPairwiseAsWritten
             ? bruteforce_pairwise(instance)
             : bruteforce_consolidated(instance);
}

std::string FeasibilityReport::to_string() const {
  if (ok()) return "feasible\n";
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << "violation:";
    if (v.part_id > 0) out << " part " << v.part_id;
    if (v.period > 0) out << " period " << v.period;
    out << ": " << v.message << "\n";
  }
  return out.str();
}

CostBreakdown plan_cost(const PlanningInstance& instance, const OrderPlan& plan,
                        CostSemantics semantics) {
  CostBreakdown breakdown;
  breakdown.per_part.resize(instance.num_parts());
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const PartSpec& part = instance.part(i);
    PartCost& cost = breakdown.per_part[i - 1];
    int active_pairs = 0;
    for (const PlanEntry& e : plan.entries()) {
      if (e.part_id != i || e.quantity <= 0) continue;
      if (e.order_period < 1 || e.order_period > instance.horizon() ||
          e.need_period < 1 || e.need_period > instance.horizon()) {
        continue;  // out-of-range entries are reported by check_plan
      }
      cost.purchasing += e.quantity * instance.price(i, e.order_period);
      cost.holding += e.quantity * part.holding_cost *
                      (e.need_period - e.order_period);
      ++active_pairs;
    }
    const int events = semantics == CostSemantics::kPairwiseAsWritten
                           ? active_pairs
                           : plan.order_events(i);
    cost.ordering = part.ordering_cost * events;
  }
  StableSum purchasing, ordering, holding;
  for (const PartCost& cost : breakdown.per_part) {
    purchasing.add(cost.purchasing);
    ordering.add(cost.ordering);
    holding.add(cost.holding);
  }
  breakdown.overall = {purchasing.value(), ordering.value(), holding.value()};
  return breakdown;
}

FeasibilityReport check_plan(const PlanningInstance& instance,
                             const OrderPlan& plan, CostSemantics semantics) {
  FeasibilityReport report;
  auto flag = [&](int part_id, int period, std::string msg) {
    report.violations.push_back({part_id, period, std::move(msg)});
  };
  const double m = big_m(instance);

  for (const PlanEntry& e : plan.entries()) {
    if (e.part_id < 1 || e.part_id > instance.num_parts()) {
      flag(e.part_id, e.need_period, "unknown part");
      continue;
    }
    if (e.need_period < 1 || e.need_period > instance.horizon() ||
        e.order_period < 1 || e.order_period > instance.horizon()) {
      flag(e.part_id, e.need_period, "period outside the horizon");
      continue;
    }
    if (e.quantity <= 0) {
      flag(e.part_id, e.need_period,
           "non-positive quantity " + format_number(e.quantity) +
               " ordered in period " + std::to_string(e.order_period));
    }
    const int lead = instance.part(e.part_id).lead_time;
    if (e.order_period > e.need_period - lead) {
      flag(e.part_id, e.need_period,
           "order period " + std::to_string(e.order_period) +
               " is after the legal window 1.." +
               std::to_string(e.need_period - lead) + " (lead time " +
               std::to_string(lead) + ")");
    }
    if (e.quantity > m * (1 + 1e-9)) {
      flag(e.part_id, e.need_period,
           "quantity " + format_number(e.quantity) +
               " exceeds the linking constant " + format_number(m));
    }
  }

  for (int i = 1; i <= instance.num_parts(); ++i) {
    for (int t = 1; t <= instance.horizon(); ++t) {
      const double net = instance.net(i, t);
      if (net <= 0) continue;
      const double assigned = plan.assigned_total(i, t);
      if (assigned + 1e-9 * std::max(1.0, net) < net) {
        flag(i, t, "coverage short: assigned " + format_number(assigned) +
                       " of net requirement " + format_number(net));
      }
    }
  }

  report.cost = plan_cost(instance, plan, semantics);
  return report;
}

}  // namespace lotsizer
