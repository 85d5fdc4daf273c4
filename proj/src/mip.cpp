#include "lotsizer/mip.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <tuple>

#include "lotsizer/numfmt.hpp"
#include "lotsizer/stable_sum.hpp"

namespace lotsizer {

namespace {

std::string pair_suffix(int part_id, int need_period, int order_period) {
  return std::to_string(part_id) + "_" + std::to_string(need_period) + "_" +
         std::to_string(order_period);
}

}  // namespace

VarRef MipModel::variable(int column) const {
  const PairEntry& p = pairs_.at(column / 2);
  return {column % 2 == 0 ? VarKind::kQuantity : VarKind::kIndicator,
          p.part_id, p.need_period, p.order_period};
}

double MipModel::objective_coefficient(int column) const {
  const PairEntry& p = pairs_.at(column / 2);
  return column % 2 == 0 ? p.purchase_coeff + p.holding_coeff : p.order_coeff;
}

std::string MipModel::variable_name(int column) const {
  const PairEntry& p = pairs_.at(column / 2);
  return (column % 2 == 0 ? "Q_" : "Y_") +
         pair_suffix(p.part_id, p.need_period, p.order_period);
}

int MipModel::pair_index(int part_id, int need_period, int order_period) const {
  const auto key = std::tuple(part_id, need_period, order_period);
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key,
                             [](const PairEntry& p, const auto& k) {
                               return std::tuple(p.part_id, p.need_period,
                                                 p.order_period) < k;
                             });
  if (it == pairs_.end() ||
      std::tuple(it->part_id, it->need_period, it->order_period) != key) {
    return -1;
  }
  return static_cast<int>(it - pairs_.begin());
}

MipModel build_model(const PlanningInstance& instance, const BuildOptions& options) {
  const ValidationReport report = validate(instance);
  if (!report.ok()) {
    throw DomainError("cannot build model for an invalid instance:\n" +
                      report.to_string());
  }

  MipModel model;
  model.num_parts_ = instance.num_parts();
  model.horizon_ = instance.horizon();
  model.big_m_ = big_m(instance);

  const int T = instance.horizon();
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const PartSpec& part = instance.part(i);
    const double m =
        options.per_part_big_m ? per_part_big_m(instance, i) : model.big_m_;
    for (int t = part.lead_time + 1; t <= T; ++t) {
      for (int tp = 1; tp <= t - part.lead_time; ++tp) {
        model.pairs_.push_back({i, t, tp, instance.price(i, tp),
                                part.holding_cost * (t - tp),
                                part.ordering_cost, m});
      }
    }
  }

  // One coverage row per (part, need period), then one linking row per pair,
  // both in pair order.
  int k = 0;
  for (int i = 1; i <= instance.num_parts(); ++i) {
    const PartSpec& part = instance.part(i);
    for (int t = part.lead_time + 1; t <= T; ++t) {
      ConstraintRow cover;
      cover.kind = ConstraintRow::Kind::kCover;
      cover.part_id = i;
      cover.need_period = t;
      cover.sense = RowSense::kGreaterEqual;
      cover.rhs = instance.net(i, t);
      for (int tp = 1; tp <= t - part.lead_time; ++tp, ++k) {
        cover.terms.push_back({MipModel::q_column(k), 1.0});
      }
      model.rows_.push_back(std::move(cover));
    }
  }
  for (int idx = 0; idx < static_cast<int>(model.pairs_.size()); ++idx) {
    const PairEntry& p = model.pairs_[idx];
    ConstraintRow link;
    link.kind = ConstraintRow::Kind::kLink;
    link.part_id = p.part_id;
    link.need_period = p.need_period;
    link.order_period = p.order_period;
    link.sense = RowSense::kLessEqual;
    link.rhs = 0;
    link.terms.push_back({MipModel::q_column(idx), 1.0});
    link.terms.push_back({MipModel::y_column(idx), -p.link_big_m});
    model.rows_.push_back(std::move(link));
  }
  return model;
}

namespace {

// Appends "c name" with the sign folded into the separator, wrapping after
// a few terms to keep lines short.
class TermWriter {
 public:
  TermWriter(std::ostream& out, int terms_per_line)
      : out_(out), terms_per_line_(terms_per_line) {}

  void add(double coeff, const std::string& name) {
    if (count_ == 0) {
      out_ << (coeff < 0 ? "- " : "");
    } else if (count_ % terms_per_line_ == 0) {
      out_ << "\n      " << (coeff < 0 ? "- " : "+ ");
    } else {
      out_ << (coeff < 0 ? " - " : " + ");
    }
    out_ << format_number(std::abs(coeff)) << " " << name;
    ++count_;
  }

 private:
  std::ostream& out_;
  int terms_per_line_;
  int count_ = 0;
};

}  // namespace

void export_lp(const MipModel& model, std::ostream& out) {
  out << "\\ lot-sizing model: parts=" << model.num_parts()
      << " periods=" << model.horizon()
      << " variables=" << model.num_variables() << "\n";
  out << "Minimize\n obj: ";
  TermWriter objective(out, 4);
  for (int k = 0; k < static_cast<int>(model.pairs().size()); ++k) {
    objective.add(model.objective_coefficient(MipModel::q_column(k)),
                  model.variable_name(MipModel::q_column(k)));
    objective.add(model.objective_coefficient(MipModel::y_column(k)),
                  model.variable_name(MipModel::y_column(k)));
  }
  out << "\nSubject To\n";
  for (const ConstraintRow& row : model.rows()) {
    const std::string suffix =
        row.kind == ConstraintRow::Kind::kCover
            ? std::to_string(row.part_id) + "_" + std::to_string(row.need_period)
            : pair_suffix(row.part_id, row.need_period, row.order_period);
    out << " " << (row.kind == ConstraintRow::Kind::kCover ? "cover_" : "link_")
        << suffix << ":";
    bool first = true;
    for (const RowTerm& term : row.terms) {
      if (first) {
        out << " " << (term.coeff < 0 ? "- " : "");
        first = false;
      } else {
        out << (term.coeff < 0 ? " - " : " + ");
      }
      out << format_number(std::abs(term.coeff)) << " "
          << model.variable_name(term.column);
    }
    out << (row.sense == RowSense::kGreaterEqual ? " >= " : " <= ")
        << format_number(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (int k = 0; k < static_cast<int>(model.pairs().size()); ++k) {
    out << " 0 <= " << model.variable_name(MipModel::q_column(k)) << "\n";
  }
  out << "Binary\n";
  for (int k = 0; k < static_cast<int>(model.pairs().size()); ++k) {
    out << " " << model.variable_name(MipModel::y_column(k)) << "\n";
  }
  out << "End\n";
}

void export_lp_file(const MipModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  export_lp(model, out);
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

CostBreakdown evaluate_objective(const MipModel& model, const OrderPlan& plan) {
  CostBreakdown breakdown;
  breakdown.per_part.resize(model.num_parts());
  for (const PlanEntry& e : plan.entries()) {
    const int k = model.pair_index(e.part_id, e.need_period, e.order_period);
    if (k < 0) {
      throw ContractError("plan entry (part " + std::to_string(e.part_id) +
                          ", need " + std::to_string(e.need_period) +
                          ", order " + std::to_string(e.order_period) +
                          ") is not in the model's index set");
    }
    const PairEntry& p = model.pairs()[k];
    PartCost& cost = breakdown.per_part[e.part_id - 1];
    cost.purchasing += p.purchase_coeff * e.quantity;
    cost.holding += p.holding_coeff * e.quantity;
    if (e.quantity > 0) cost.ordering += p.order_coeff;
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

std::vector<std::string> model_violations(const MipModel& model,
                                          const OrderPlan& plan) {
  std::vector<std::string> problems;
  std::vector<double> q(model.pairs().size(), 0.0);
  for (const PlanEntry& e : plan.entries()) {
    const int k = model.pair_index(e.part_id, e.need_period, e.order_period);
    if (k < 0) {
      problems.push_back("entry (part " + std::to_string(e.part_id) + ", need " +
                         std::to_string(e.need_period) + ", order " +
                         std::to_string(e.order_period) +
                         ") outside the index set");
      continue;
    }
    q[k] += e.quantity;
  }
  for (size_t k = 0; k < q.size(); ++k) {
    const PairEntry& p = model.pairs()[k];
    if (q[k] < 0) {
      problems.push_back("negative quantity on pair " +
                         pair_suffix(p.part_id, p.need_period, p.order_period));
    }
    if (q[k] > p.link_big_m * (1 + 1e-9)) {
      problems.push_back("quantity " + format_number(q[k]) +
                         " exceeds the linking constant " +
                         format_number(p.link_big_m) + " on pair " +
                         pair_suffix(p.part_id, p.need_period, p.order_period));
    }
  }
  for (const ConstraintRow& row : model.rows()) {
    if (row.kind != ConstraintRow::Kind::kCover) continue;
    StableSum lhs;
    for (const RowTerm& term : row.terms) lhs.add(term.coeff * q[term.column / 2]);
    if (lhs.value() + 1e-9 * std::max(1.0, std::abs(row.rhs)) < row.rhs) {
      problems.push_back("coverage short for part " + std::to_string(row.part_id) +
                         " period " + std::to_string(row.need_period) + ": " +
                         format_number(lhs.value()) + " < " +
                         format_number(row.rhs));
    }
  }
  return problems;
}

}  // namespace lotsizer
