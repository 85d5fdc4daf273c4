#include "lotsizer/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lotsizer {

std::string to_string(Uom uom) {
  return uom == Uom::kUnit ? "unit" : "kg";
}

Uom uom_from_string(const std::string& s) {
  if (s == "unit") return Uom::kUnit;
  if (s == "kg") return Uom::kKg;
  throw DomainError("unknown unit of measure '" + s + "' (expected unit|kg)");
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok\n";
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << "violation:";
    if (v.part_id > 0) out << " part " << v.part_id;
    if (v.period > 0) out << " period " << v.period;
    out << ": " << v.message << "\n";
  }
  return out.str();
}

double net_demand(double raw, double safety_stock) {
  return std::max(raw + safety_stock, 0.0);
}

PlanningInstance PlanningInstance::make(std::vector<PartSpec> parts, int horizon,
                                        Grid raw_demand, Grid prices,
                                        Grid safety_stock) {
  const int num_parts = static_cast<int>(parts.size());
  auto check_shape = [&](const Grid& g, const char* name) {
    if (g.parts() != num_parts || g.periods() != horizon) {
      throw ContractError(std::string(name) + " grid is " +
                          std::to_string(g.parts()) + "x" +
                          std::to_string(g.periods()) + ", expected " +
                          std::to_string(num_parts) + "x" +
                          std::to_string(horizon));
    }
  };
  check_shape(raw_demand, "demand");
  check_shape(prices, "price");
  check_shape(safety_stock, "safety stock");

  PlanningInstance instance;
  instance.parts_ = std::move(parts);
  instance.horizon_ = horizon;
  instance.demand_.raw = std::move(raw_demand);
  instance.demand_.net = Grid(num_parts, horizon);
  for (int i = 1; i <= num_parts; ++i) {
    for (int t = 1; t <= horizon; ++t) {
      instance.demand_.net.at(i, t) =
          net_demand(instance.demand_.raw.at(i, t), safety_stock.at(i, t));
    }
  }
  instance.prices_.price = std::move(prices);
  instance.safety_stock_ = std::move(safety_stock);
  return instance;
}

const PartSpec& PlanningInstance::part(int part_id) const {
  if (part_id < 1 || part_id > num_parts()) {
    throw ContractError("unknown part id " + std::to_string(part_id));
  }
  return parts_[part_id - 1];
}

ValidationReport validate(const PlanningInstance& instance) {
  ValidationReport report;
  auto flag = [&](int part_id, int period, std::string msg) {
    report.violations.push_back({part_id, period, std::move(msg)});
  };

  const int T = instance.horizon();
  if (T < 1) flag(0, 0, "horizon must be at least 1 period");

  for (int k = 0; k < instance.num_parts(); ++k) {
    const PartSpec& p = instance.parts()[k];
    if (p.part_id != k + 1) {
      flag(p.part_id, 0, "part ids must be contiguous starting at 1");
    }
    if (p.lead_time < 0) flag(p.part_id, 0, "lead time must be non-negative");
    if (p.lead_time >= T) {
      flag(p.part_id, 0, "lead time " + std::to_string(p.lead_time) +
                             " leaves no serviceable period in a horizon of " +
                             std::to_string(T));
    }
    if (!(std::isfinite(p.ordering_cost) && p.ordering_cost >= 0)) {
      flag(p.part_id, 0, "ordering cost must be finite and non-negative");
    }
    if (!(std::isfinite(p.holding_cost) && p.holding_cost >= 0)) {
      flag(p.part_id, 0, "holding cost must be finite and non-negative");
    }
    if (!(std::isfinite(p.demand_sigma) && p.demand_sigma >= 0)) {
      flag(p.part_id, 0, "demand sigma must be finite and non-negative");
    }
  }

  for (int i = 1; i <= instance.num_parts(); ++i) {
    const PartSpec& p = instance.part(i);
    for (int t = 1; t <= T; ++t) {
      const double ss = instance.safety_stock().at(i, t);
      if (!(std::isfinite(ss) && ss >= 0)) {
        flag(i, t, "safety stock must be finite and non-negative");
      }
      const double price = instance.price(i, t);
      if (!(std::isfinite(price) && price >= 0)) {
        flag(i, t, "price must be populated, finite, and non-negative");
      }
      if (!std::isfinite(instance.raw(i, t))) {
        flag(i, t, "demand must be finite");
      }
      // Positive requirement with an empty ordering window cannot be served
      // without backlogging.
      if (instance.net(i, t) > 0 && t < p.lead_time + 1) {
        flag(i, t, "unserviceable demand: net requirement " +
                       std::to_string(instance.net(i, t)) +
                       " has no ordering period (lead time " +
                       std::to_string(p.lead_time) + ")");
      }
    }
  }
  return report;
}

double per_part_big_m(const PlanningInstance& instance, int part_id) {
  double sum = 0;
  for (int t = 1; t <= instance.horizon(); ++t) sum += instance.net(part_id, t);
  return sum > 0 ? sum : 1.0;
}

double big_m(const PlanningInstance& instance) {
  double best = 0;
  for (int i = 1; i <= instance.num_parts(); ++i) {
    double sum = 0;
    for (int t = 1; t <= instance.horizon(); ++t) sum += instance.net(i, t);
    best = std::max(best, sum);
  }
  return best > 0 ? best : 1.0;
}

}  // namespace lotsizer
