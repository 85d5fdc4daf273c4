#ifndef LOTSIZER_SAFETY_STOCK_HPP_
#define LOTSIZER_SAFETY_STOCK_HPP_

#include <vector>

#include "lotsizer/instance.hpp"

namespace lotsizer {

// How a computed buffer quantity is rounded for planning.
enum class Rounding { kNearestInteger, kTwoDecimals, kNone };

// Rounding convention per unit of measure: whole units for discrete parts,
// two decimals for bulk material.
Rounding rounding_for(Uom uom);

// Standard normal quantile (inverse CDF), Wichura's AS 241 rational
// approximation. Monotone, relative accuracy far below the 1e-4 this
// library needs. Domain (0, 1) exclusive.
double normal_quantile(double p);

// Standard normal CDF via erfc.
double normal_cdf(double z);

// Quantile of a cycle service level. Throws DomainError outside (0, 1).
double z_from_service_level(double service_level);

// Service-level policy with its normal quantile. Constructed from either
// side so the pair is always consistent.
struct ServicePolicy {
  double service_level = 0.95;
  double z_value = 0.0;
  Rounding rounding = Rounding::kNone;

  static ServicePolicy from_service_level(double p,
                                          Rounding rounding = Rounding::kNone);
  static ServicePolicy from_z(double z, Rounding rounding = Rounding::kNone);
};

// Buffer quantity z * sigma * sqrt(lead_time), rounded per the given mode.
// Zero lead time or zero sigma yields zero. Negative inputs are domain
// errors.
double safety_stock(double z, double sigma, int lead_time, Rounding rounding);

// Per-part buffer applied uniformly to every period of the horizon, with
// the per-uom rounding convention (policy.rounding is for scalar use).
Grid compute_safety_stock(const std::vector<PartSpec>& parts, int horizon,
                          const ServicePolicy& policy);

}  // namespace lotsizer

#endif  // LOTSIZER_SAFETY_STOCK_HPP_
