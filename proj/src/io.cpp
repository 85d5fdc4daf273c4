#include "lotsizer/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "lotsizer/csv.hpp"
#include "lotsizer/numfmt.hpp"
#include "lotsizer/safety_stock.hpp"

namespace lotsizer {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

bool is_set(double v) { return !std::isnan(v); }

int checked_part_id(const CsvTable& table, const CsvRow& row, int column,
                    int num_parts) {
  const int part_id = parse_int_field(table, row, column);
  if (part_id < 1 || part_id > num_parts) {
    throw ParseError(table.path, row.line, column,
                     "part id " + std::to_string(part_id) +
                         " outside 1.." + std::to_string(num_parts));
  }
  return part_id;
}

int checked_period(const CsvTable& table, const CsvRow& row, int column,
                   int horizon) {
  const int period = parse_int_field(table, row, column);
  if (period < 1 || period > horizon) {
    throw ParseError(table.path, row.line, column,
                     "period " + std::to_string(period) + " outside 1.." +
                         std::to_string(horizon));
  }
  return period;
}

}  // namespace

std::vector<PartSpec> load_parts(const std::string& path) {
  const CsvTable table = read_csv(
      path, {"part_id", "lead_time", "ordering_cost", "holding_cost", "sigma",
             "uom"});
  std::vector<PartSpec> parts;
  std::set<int> seen;
  for (const CsvRow& row : table.rows) {
    PartSpec part;
    part.part_id = parse_int_field(table, row, 1);
    part.lead_time = parse_int_field(table, row, 2);
    part.ordering_cost = parse_double_field(table, row, 3);
    part.holding_cost = parse_double_field(table, row, 4);
    part.demand_sigma = parse_double_field(table, row, 5);
    try {
      part.uom = uom_from_string(string_field(table, row, 6));
    } catch (const DomainError& e) {
      throw ParseError(path, row.line, 6, e.what());
    }
    if (!seen.insert(part.part_id).second) {
      throw ParseError(path, row.line, 1,
                       "duplicate part id " + std::to_string(part.part_id));
    }
    parts.push_back(part);
  }
  if (parts.empty()) throw DomainError("'" + path + "' lists no parts");
  std::sort(parts.begin(), parts.end(),
            [](const PartSpec& a, const PartSpec& b) { return a.part_id < b.part_id; });
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].part_id != static_cast<int>(k) + 1) {
      throw DomainError("'" + path + "': part ids must be contiguous 1..P, missing " +
                        std::to_string(k + 1));
    }
  }
  return parts;
}

Grid load_demand(const std::string& path, int num_parts, int* horizon) {
  const CsvTable table = read_csv(path, {"part_id", "period", "demand"});
  int max_period = 0;
  for (const CsvRow& row : table.rows) {
    max_period = std::max(max_period, parse_int_field(table, row, 2));
  }
  if (max_period < 1) {
    throw DomainError("'" + path + "' contains no demand periods");
  }
  Grid grid(num_parts, max_period, 0.0);
  std::set<std::pair<int, int>> seen;
  for (const CsvRow& row : table.rows) {
    const int part_id = checked_part_id(table, row, 1, num_parts);
    const int period = checked_period(table, row, 2, max_period);
    if (!seen.insert({part_id, period}).second) {
      throw ParseError(path, row.line, 1,
                       "duplicate demand cell for part " + std::to_string(part_id) +
                           " period " + std::to_string(period));
    }
    grid.at(part_id, period) = parse_double_field(table, row, 3);
  }
  *horizon = max_period;
  return grid;
}

Grid load_prices_sparse(const std::string& path, int num_parts, int horizon) {
  const CsvTable table = read_csv(path, {"part_id", "period", "price"});
  Grid grid(num_parts, horizon, kUnset);
  std::set<std::pair<int, int>> seen;
  for (const CsvRow& row : table.rows) {
    const int part_id = checked_part_id(table, row, 1, num_parts);
    const int period = checked_period(table, row, 2, horizon);
    if (!seen.insert({part_id, period}).second) {
      throw ParseError(path, row.line, 1,
                       "duplicate price cell for part " + std::to_string(part_id) +
                           " period " + std::to_string(period));
    }
    grid.at(part_id, period) = parse_double_field(table, row, 3);
  }
  return grid;
}

std::vector<PriceCell> price_gaps(const Grid& prices) {
  std::vector<PriceCell> gaps;
  for (int i = 1; i <= prices.parts(); ++i) {
    for (int t = 1; t <= prices.periods(); ++t) {
      if (!is_set(prices.at(i, t))) gaps.push_back({i, t});
    }
  }
  return gaps;
}

void fill_prices(Grid& prices) {
  for (int i = 1; i <= prices.parts(); ++i) {
    double carry = kUnset;
    for (int t = 1; t <= prices.periods(); ++t) {
      if (is_set(prices.at(i, t))) {
        carry = prices.at(i, t);
      } else if (is_set(carry)) {
        prices.at(i, t) = carry;
      }
    }
    carry = kUnset;
    for (int t = prices.periods(); t >= 1; --t) {
      if (is_set(prices.at(i, t))) {
        carry = prices.at(i, t);
      } else if (is_set(carry)) {
        prices.at(i, t) = carry;
      }
    }
  }
}

Grid load_safety_stock(const std::string& path, int num_parts, int horizon) {
  const CsvTable table = read_csv(path, {"part_id", "period", "ss"});
  Grid grid(num_parts, horizon, 0.0);
  std::set<std::pair<int, int>> seen;
  for (const CsvRow& row : table.rows) {
    const int part_id = checked_part_id(table, row, 1, num_parts);
    const int period = checked_period(table, row, 2, horizon);
    if (!seen.insert({part_id, period}).second) {
      throw ParseError(path, row.line, 1,
                       "duplicate safety stock cell for part " +
                           std::to_string(part_id) + " period " +
                           std::to_string(period));
    }
    grid.at(part_id, period) = parse_double_field(table, row, 3);
  }
  const size_t expected = static_cast<size_t>(num_parts) * horizon;
  if (seen.size() != expected) {
    throw DomainError("'" + path + "' covers " + std::to_string(seen.size()) +
                      " of " + std::to_string(expected) +
                      " (part, period) cells; the grid must be complete");
  }
  return grid;
}

PlanningInstance load_instance_raw(const RunConfig& config) {
  std::vector<PartSpec> parts = load_parts(config.parts_path);
  const int num_parts = static_cast<int>(parts.size());
  int horizon = 0;
  Grid demand = load_demand(config.demand_path, num_parts, &horizon);

  Grid prices = load_prices_sparse(config.prices_path, num_parts, horizon);
  if (config.price_fill == PriceFillMode::kStrict) {
    const std::vector<PriceCell> gaps = price_gaps(prices);
    if (!gaps.empty()) {
      throw DomainError("strict price mode: " + std::to_string(gaps.size()) +
                        " missing price cells in '" + config.prices_path +
                        "' (first: part " + std::to_string(gaps.front().part_id) +
                        " period " + std::to_string(gaps.front().period) + ")");
    }
  } else {
    fill_prices(prices);
    const std::vector<PriceCell> gaps = price_gaps(prices);
    if (!gaps.empty()) {
      throw DomainError("part " + std::to_string(gaps.front().part_id) +
                        " has no price data in '" + config.prices_path + "'");
    }
  }

  Grid safety;
  if (!config.safety_stock_path.empty()) {
    safety = load_safety_stock(config.safety_stock_path, num_parts, horizon);
  } else {
    const ServicePolicy policy =
        config.z_override ? ServicePolicy::from_z(*config.z_override)
                          : ServicePolicy::from_service_level(config.service_level);
    safety = compute_safety_stock(parts, horizon, policy);
  }

  return PlanningInstance::make(std::move(parts), horizon, std::move(demand),
                                std::move(prices), std::move(safety));
}

PlanningInstance load_instance(const RunConfig& config) {
  PlanningInstance instance = load_instance_raw(config);
  const ValidationReport report = validate(instance);
  if (!report.ok()) {
    throw DomainError("invalid instance:\n" + report.to_string());
  }
  return instance;
}

std::string parts_to_csv(const std::vector<PartSpec>& parts) {
  std::ostringstream out;
  out << "part_id,lead_time,ordering_cost,holding_cost,sigma,uom\n";
  for (const PartSpec& p : parts) {
    out << p.part_id << "," << p.lead_time << "," << format_number(p.ordering_cost)
        << "," << format_number(p.holding_cost) << ","
        << format_number(p.demand_sigma) << "," << to_string(p.uom) << "\n";
  }
  return out.str();
}

std::string demand_to_csv(const PlanningInstance& instance) {
  std::ostringstream out;
  out << "part_id,period,demand\n";
  for (int i = 1; i <= instance.num_parts(); ++i) {
    for (int t = 1; t <= instance.horizon(); ++t) {
      out << i << "," << t << "," << format_number(instance.raw(i, t)) << "\n";
    }
  }
  return out.str();
}

std::string prices_to_csv(const PlanningInstance& instance) {
  std::ostringstream out;
  out << "part_id,period,price\n";
  for (int i = 1; i <= instance.num_parts(); ++i) {
    for (int t = 1; t <= instance.horizon(); ++t) {
      out << i << "," << t << "," << format_number(instance.price(i, t)) << "\n";
    }
  }
  return out.str();
}

std::string safety_stock_to_csv(const PlanningInstance& instance) {
  std::ostringstream out;
  out << "part_id,period,ss\n";
  for (int i = 1; i <= instance.num_parts(); ++i) {
    for (int t = 1; t <= instance.horizon(); ++t) {
      out << i << "," << t << "," << format_number(instance.safety_stock().at(i, t))
          << "\n";
    }
  }
  return out.str();
}

std::string plan_to_csv(const OrderPlan& plan) {
  std::ostringstream out;
  out << "part_id,need_period,order_period,quantity\n";
  for (const PlanEntry& e : plan.entries()) {
    out << e.part_id << "," << e.need_period << "," << e.order_period << ","
        << format_number(e.quantity) << "\n";
  }
  return out.str();
}

OrderPlan read_plan_csv(const std::string& path) {
  const CsvTable table =
      read_csv(path, {"part_id", "need_period", "order_period", "quantity"});
  std::vector<PlanEntry> entries;
  for (const CsvRow& row : table.rows) {
    PlanEntry e;
    e.part_id = parse_int_field(table, row, 1);
    e.need_period = parse_int_field(table, row, 2);
    e.order_period = parse_int_field(table, row, 3);
    e.quantity = parse_double_field(table, row, 4);
    entries.push_back(e);
  }
  return OrderPlan::from_entries(std::move(entries));
}

ReferenceTotals read_reference_totals(const std::string& path) {
  const CsvTable table = read_csv(path, {"part_id", "total"});
  ReferenceTotals totals;
  for (const CsvRow& row : table.rows) {
    const int part_id = parse_int_field(table, row, 1);
    const double total = parse_double_field(table, row, 2);
    if (part_id == 0) {
      totals.grand = total;
    } else {
      if (!totals.per_part.emplace(part_id, total).second) {
        throw ParseError(path, row.line, 1,
                         "duplicate total for part " + std::to_string(part_id));
      }
    }
  }
  return totals;
}

}  // namespace lotsizer
