#ifndef LOTSIZER_MIP_HPP_
#define LOTSIZER_MIP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "lotsizer/instance.hpp"
#include "lotsizer/plan.hpp"

namespace lotsizer {

enum class VarKind { kQuantity, kIndicator };  // continuous Q / binary Y

struct VarRef {
  VarKind kind = VarKind::kQuantity;
  int part_id = 0;
  int need_period = 0;
  int order_period = 0;
};

// One (part, need period, order period) pair of the index set, owning a
// continuous quantity column and its binary indicator column. The objective
// stores the purchase and holding pieces separately so cost reports can
// split them back out; the exported coefficient is their sum.
struct PairEntry {
  int part_id = 0;
  int need_period = 0;
  int order_period = 0;
  double purchase_coeff = 0;  // price in the order period
  double holding_coeff = 0;   // holding cost x periods held
  double order_coeff = 0;     // ordering cost on the indicator
  double link_big_m = 0;      // indicator coupling constant for this pair
};

enum class RowSense { kGreaterEqual, kLessEqual };

struct RowTerm {
  int column = 0;
  double coeff = 0;
};

struct ConstraintRow {
  enum class Kind { kCover, kLink };
  Kind kind = Kind::kCover;
  int part_id = 0;
  int need_period = 0;
  int order_period = 0;  // 0 for cover rows
  std::vector<RowTerm> terms;
  RowSense sense = RowSense::kGreaterEqual;
  double rhs = 0;
};

struct BuildOptions {
  // Use each part's own net-demand sum as the linking constant instead of
  // the one global value. Tighter relaxation, opt-in to keep the default
  // export faithful to the single-constant formulation.
  bool per_part_big_m = false;
};

// Explicit sparse materialization of the lot-sizing model: a minimization
// objective over interleaved (Q, Y) columns, one coverage row per (part,
// need period) and one linking row per pair. Immutable after build.
class MipModel {
 public:
  const std::vector<PairEntry>& pairs() const { return pairs_; }
  const std::vector<ConstraintRow>& rows() const { return rows_; }
  double big_m() const { return big_m_; }
  int num_parts() const { return num_parts_; }
  int horizon() const { return horizon_; }

  int num_variables() const { return 2 * static_cast<int>(pairs_.size()); }
  // Column layout: pair k owns Q at column 2k and Y at column 2k + 1.
  static int q_column(int pair_index) { return 2 * pair_index; }
  static int y_column(int pair_index) { return 2 * pair_index + 1; }

  VarRef variable(int column) const;
  double objective_coefficient(int column) const;
  std::string variable_name(int column) const;

  // Index of the (part, need period, order period) pair, or -1.
  int pair_index(int part_id, int need_period, int order_period) const;

 private:
  friend MipModel build_model(const PlanningInstance&, const BuildOptions&);

  std::vector<PairEntry> pairs_;
  std::vector<ConstraintRow> rows_;
  double big_m_ = 1;
  int num_parts_ = 0;
  int horizon_ = 0;
};

// Materializes the model for a validated instance. Refuses instances with
// validation errors. Deterministic: identical instances produce identical
// models, ordered by part, then need period, then order period.
MipModel build_model(const PlanningInstance& instance,
                     const BuildOptions& options = {});

// Writes the model in LP text format (Minimize / Subject To / Bounds /
// Binary / End) with variable names Q_i_t_tp and Y_i_t_tp. Byte-exact
// deterministic for a given model.
void export_lp(const MipModel& model, std::ostream& out);

// Convenience: export to a file, propagating I/O failures.
void export_lp_file(const MipModel& model, const std::string& path);

// Recomputes the objective for a plan against this model, split into
// purchasing / ordering / holding per part. The indicator of every pair
// with a positive quantity is charged. Entries outside the model's index
// set are contract errors.
CostBreakdown evaluate_objective(const MipModel& model, const OrderPlan& plan);

// Model-level feasibility: coverage rows hold, quantities are within
// [0, big M], and every entry sits in the index set. Returns one message
// per broken condition, empty when the plan satisfies the model.
std::vector<std::string> model_violations(const MipModel& model,
                                          const OrderPlan& plan);

}  // namespace lotsizer

#endif  // LOTSIZER_MIP_HPP_
