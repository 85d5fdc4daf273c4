#ifndef LOTSIZER_INSTANCE_HPP_
#define LOTSIZER_INSTANCE_HPP_

#include <string>
#include <vector>

#include "lotsizer/errors.hpp"

namespace lotsizer {

// Unit of measure of a part. Discrete parts are planned in whole units,
// bulk material in kilograms.
enum class Uom { kUnit, kKg };

std::string to_string(Uom uom);
Uom uom_from_string(const std::string& s);

// Static data of one part. part_id values are contiguous 1..P.
struct PartSpec {
  int part_id = 0;
  int lead_time = 0;         // whole periods between ordering and receipt
  double ordering_cost = 0;  // currency per order event
  double holding_cost = 0;   // currency per unit (or kg) per period held
  double demand_sigma = 0;   // stddev of historical per-period demand
  Uom uom = Uom::kUnit;
};

// Dense part x period grid, addressed with 1-based part ids and periods.
class Grid {
 public:
  Grid() = default;
  Grid(int parts, int periods, double fill = 0.0)
      : parts_(parts), periods_(periods),
        cells_(static_cast<size_t>(parts) * periods, fill) {}

  double at(int part_id, int period) const { return cells_[index(part_id, period)]; }
  double& at(int part_id, int period) { return cells_[index(part_id, period)]; }

  int parts() const { return parts_; }
  int periods() const { return periods_; }

  bool same_shape(const Grid& other) const {
    return parts_ == other.parts_ && periods_ == other.periods_;
  }
  bool operator==(const Grid& other) const = default;

 private:
  size_t index(int part_id, int period) const {
    if (part_id < 1 || part_id > parts_ || period < 1 || period > periods_) {
      throw ContractError("grid access out of range: part " +
                          std::to_string(part_id) + ", period " +
                          std::to_string(period));
    }
    return static_cast<size_t>(part_id - 1) * periods_ + (period - 1);
  }

  int parts_ = 0;
  int periods_ = 0;
  std::vector<double> cells_;
};

// Signed forecast demand plus the derived per-period order requirement.
// A negative raw value means stock on hand already covers that period.
struct DemandMatrix {
  Grid raw;  // signed, as forecast
  Grid net;  // max(raw + safety stock, 0)
};

// Purchase price per unit (or kg) for every ordering period. Dense; sparse
// source data is expanded by the loader before an instance is built.
struct PriceSchedule {
  Grid price;
};

// One broken invariant. part_id/period are 0 when not applicable.
struct Violation {
  int part_id = 0;
  int period = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// The full problem. Immutable after construction; safe to share across
// concurrent solver runs.
class PlanningInstance {
 public:
  // Builds an instance and derives net demand. Shapes must already agree
  // (parts.size() x horizon); a mismatch is a hard ContractError because no
  // downstream operation could interpret the grids.
  static PlanningInstance make(std::vector<PartSpec> parts, int horizon,
                               Grid raw_demand, Grid prices, Grid safety_stock);

  const std::vector<PartSpec>& parts() const { return parts_; }
  const PartSpec& part(int part_id) const;
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int horizon() const { return horizon_; }
  const DemandMatrix& demand() const { return demand_; }
  const PriceSchedule& prices() const { return prices_; }
  const Grid& safety_stock() const { return safety_stock_; }

  double net(int part_id, int period) const { return demand_.net.at(part_id, period); }
  double raw(int part_id, int period) const { return demand_.raw.at(part_id, period); }
  double price(int part_id, int order_period) const {
    return prices_.price.at(part_id, order_period);
  }

  // Earliest need period a part can serve: lead_time + 1.
  int first_serviceable_period(int part_id) const {
    return part(part_id).lead_time + 1;
  }

 private:
  PlanningInstance() = default;

  std::vector<PartSpec> parts_;
  int horizon_ = 0;
  DemandMatrix demand_;
  PriceSchedule prices_;
  Grid safety_stock_;
};

// Per-period order requirement: raw demand plus safety stock, clamped at
// zero when surplus stock already covers the buffer.
double net_demand(double raw, double safety_stock);

// Checks every value-level invariant: finite non-negative costs, lead times
// shorter than the horizon, populated non-negative prices, non-negative
// safety stock, and a non-empty ordering window for every positive net
// demand. Pure; an instance that passes never causes solver errors.
ValidationReport validate(const PlanningInstance& instance);

// Linking constant for the indicator constraints: the largest whole-horizon
// net requirement over all parts, so no feasible quantity can exceed it.
// Degenerates to 1 when there is no demand at all, keeping the constant
// strictly positive.
double big_m(const PlanningInstance& instance);

// Per-part variant, sum of that part's net requirements (tighter when
// exported per part). Same degenerate floor of 1.
double per_part_big_m(const PlanningInstance& instance, int part_id);

}  // namespace lotsizer

#endif  // LOTSIZER_INSTANCE_HPP_
