#include "lotsizer/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lotsizer/numfmt.hpp"
#include "lotsizer/stable_sum.hpp"

namespace lotsizer {

namespace {

// Quantities print as integers when they are whole, else with two decimals.
std::string format_quantity(double v) {
  if (std::abs(v - std::round(v)) < 1e-9) {
    return format_number(std::round(v));
  }
  return format_fixed(v, 2);
}

std::string format_sources(const std::vector<ServedFrom>& sources) {
  if (sources.empty()) return "-";
  std::string out;
  for (const ServedFrom& s : sources) {
    if (!out.empty()) out += ";";
    out += std::to_string(s.order_period) + ":" + format_quantity(s.quantity);
  }
  return out;
}

void pad(std::ostringstream& out, const std::string& s, size_t width) {
  out << s;
  for (size_t i = s.size(); i < width; ++i) out << ' ';
}

}  // namespace

PartReport render_part_report(const PlanningInstance& instance,
                              const OrderPlan& plan, int part_id,
                              CostSemantics semantics) {
  PartReport report;
  report.part_id = part_id;
  report.rows.resize(instance.horizon());

  for (int t = 1; t <= instance.horizon(); ++t) {
    PartReportRow& row = report.rows[t - 1];
    row.period = t;
    row.raw_demand = instance.raw(part_id, t);
  }
  for (const PlanEntry& e : plan.entries()) {
    if (e.part_id != part_id) continue;
    PartReportRow& need_row = report.rows[e.need_period - 1];
    need_row.amount_ordered += e.quantity;
    need_row.sources.push_back({e.order_period, e.quantity});
    PartReportRow& order_row = report.rows[e.order_period - 1];
    order_row.quantity_placed += e.quantity;
    order_row.order_events += 1;
  }
  for (PartReportRow& row : report.rows) {
    std::sort(row.sources.begin(), row.sources.end(),
              [](const ServedFrom& a, const ServedFrom& b) {
                return a.order_period < b.order_period;
              });
    if (semantics == CostSemantics::kConsolidatedOrdering) {
      row.order_events = row.quantity_placed > 0 ? 1 : 0;
    }
  }

  const CostBreakdown cost = plan_cost(instance, plan, semantics);
  report.cost = cost.per_part[part_id - 1];
  return report;
}

TotalReport render_total_report(const PlanningInstance& instance,
                                const OrderPlan& plan, CostSemantics semantics,
                                const std::optional<ReferenceTotals>& reference) {
  TotalReport report;
  const CostBreakdown cost = plan_cost(instance, plan, semantics);
  StableSum purchasing, ordering, holding;
  for (int i = 1; i <= instance.num_parts(); ++i) {
    TotalReportRow row;
    row.part_id = i;
    row.cost = cost.per_part[i - 1];
    if (reference) {
      auto it = reference->per_part.find(i);
      if (it != reference->per_part.end()) {
        row.reference = it->second;
        row.delta = row.cost.total() - it->second;
      }
    }
    purchasing.add(row.cost.purchasing);
    ordering.add(row.cost.ordering);
    holding.add(row.cost.holding);
    report.rows.push_back(row);
  }
  report.grand = {purchasing.value(), ordering.value(), holding.value()};
  if (reference && reference->grand) {
    report.grand_reference = reference->grand;
    report.grand_delta = report.grand.total() - *reference->grand;
  }
  return report;
}

std::string part_report_to_text(const PartReport& report) {
  std::ostringstream out;
  out << "part " << report.part_id << "\n";
  const std::vector<std::string> headers = {"period", "demand",  "ordered",
                                            "from",   "placed",  "events"};
  std::vector<std::vector<std::string>> cells;
  for (const PartReportRow& row : report.rows) {
    cells.push_back({std::to_string(row.period), format_quantity(row.raw_demand),
                     format_quantity(row.amount_ordered),
                     format_sources(row.sources),
                     format_quantity(row.quantity_placed),
                     std::to_string(row.order_events)});
  }
  std::vector<size_t> widths;
  for (size_t c = 0; c < headers.size(); ++c) {
    size_t w = headers[c].size();
    for (const auto& row : cells) w = std::max(w, row[c].size());
    widths.push_back(w + 2);
  }
  for (size_t c = 0; c < headers.size(); ++c) pad(out, headers[c], widths[c]);
  out << "\n";
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) pad(out, row[c], widths[c]);
    out << "\n";
  }
  out << "total cost: " << format_fixed(report.cost.total(), 2)
      << " (purchasing " << format_fixed(report.cost.purchasing, 2)
      << ", ordering " << format_fixed(report.cost.ordering, 2) << ", holding "
      << format_fixed(report.cost.holding, 2) << ")\n";
  return out.str();
}

std::string part_report_to_csv(const PartReport& report) {
  std::ostringstream out;
  out << "part_id,period,demand,amount_ordered,sources,quantity_placed,order_events\n";
  for (const PartReportRow& row : report.rows) {
    out << report.part_id << "," << row.period << ","
        << format_number(row.raw_demand) << ","
        << format_number(row.amount_ordered) << ","
        << format_sources(row.sources) << ","
        << format_number(row.quantity_placed) << "," << row.order_events
        << "\n";
  }
  return out.str();
}

std::string total_report_to_text(const TotalReport& report) {
  std::ostringstream out;
  const bool with_reference =
      std::any_of(report.rows.begin(), report.rows.end(),
                  [](const TotalReportRow& r) { return r.reference.has_value(); });
  std::vector<std::string> headers = {"part", "purchasing", "ordering",
                                      "holding", "total"};
  if (with_reference) {
    headers.push_back("reference");
    headers.push_back("delta");
  }
  std::vector<std::vector<std::string>> cells;
  auto money = [](double v) { return format_fixed(v, 2); };
  for (const TotalReportRow& row : report.rows) {
    std::vector<std::string> line = {
        std::to_string(row.part_id), money(row.cost.purchasing),
        money(row.cost.ordering), money(row.cost.holding),
        money(row.cost.total())};
    if (with_reference) {
      line.push_back(row.reference ? money(*row.reference) : "-");
      line.push_back(row.reference ? money(row.delta) : "-");
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::string> grand = {"all", money(report.grand.purchasing),
                                    money(report.grand.ordering),
                                    money(report.grand.holding),
                                    money(report.grand.total())};
  if (with_reference) {
    grand.push_back(report.grand_reference ? money(*report.grand_reference) : "-");
    grand.push_back(report.grand_reference ? money(report.grand_delta) : "-");
  }
  cells.push_back(std::move(grand));

  std::vector<size_t> widths;
  for (size_t c = 0; c < headers.size(); ++c) {
    size_t w = headers[c].size();
    for (const auto& row : cells) w = std::max(w, row[c].size());
    widths.push_back(w + 2);
  }
  for (size_t c = 0; c < headers.size(); ++c) pad(out, headers[c], widths[c]);
  out << "\n";
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) pad(out, row[c], widths[c]);
    out << "\n";
  }
  return out.str();
}

std::string total_report_to_csv(const TotalReport& report) {
  std::ostringstream out;
  const bool with_reference =
      std::any_of(report.rows.begin(), report.rows.end(),
                  [](const TotalReportRow& r) { return r.reference.has_value(); });
  out << "part_id,purchasing,ordering,holding,total";
  if (with_reference) out << ",reference,delta";
  out << "\n";
  auto money = [](double v) { return format_fixed(v, 2); };
  for (const TotalReportRow& row : report.rows) {
    out << row.part_id << "," << money(row.cost.purchasing) << ","
        << money(row.cost.ordering) << "," << money(row.cost.holding) << ","
        << money(row.cost.total());
    if (with_reference) {
      out << "," << (row.reference ? money(*row.reference) : "")
          << "," << (row.reference ? money(row.delta) : "");
    }
    out << "\n";
  }
  // part_id 0 carries the grand total.
  out << 0 << "," << money(report.grand.purchasing) << ","
      << money(report.grand.ordering) << "," << money(report.grand.holding)
      << "," << money(report.grand.total());
  if (with_reference) {
    out << "," << (report.grand_reference ? money(*report.grand_reference) : "")
        << "," << (report.grand_reference ? money(report.grand_delta) : "");
  }
  out << "\n";
  return out.str();
}

}  // namespace lotsizer
