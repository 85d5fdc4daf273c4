#include "lotsizer/safety_stock.hpp"

#include <cmath>
#include <string>

namespace lotsizer {

Rounding rounding_for(Uom uom) {
  return uom == Uom::kUnit ? Rounding::kNearestInteger : Rounding::kTwoDecimals;
}

namespace {

// ALGORITHM AS 241, Applied Statistics (1988) Vol. 37, No. 3.
// Rational approximations on three ranges of the tail probability.
double as241(double p) {
  constexpr double kSplit1 = 0.425;
  constexpr double kSplit2 = 5.0;
  constexpr double kConst1 = 0.180625;
  constexpr double kConst2 = 1.6;

  const double q = p - 0.5;
  if (std::abs(q) <= kSplit1) {
    const double r = kConst1 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }

  double r = q < 0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double z;
  if (r <= kSplit2) {
    r -= kConst2;
    z = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
            3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
          4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
          2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= kSplit2;
    z = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
          5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0 ? -z : z;
}

double round_half_away(double x) { return std::round(x); }

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("probability " + std::to_string(p) +
                      " outside the open interval (0, 1)");
  }
  return as241(p);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double z_from_service_level(double service_level) {
  return normal_quantile(service_level);
}

ServicePolicy ServicePolicy::from_service_level(double p, Rounding rounding) {
  return {p, z_from_service_level(p), rounding};
}

ServicePolicy ServicePolicy::from_z(double z, Rounding rounding) {
  if (!std::isfinite(z)) throw DomainError("z must be finite");
  return {normal_cdf(z), z, rounding};
}

double safety_stock(double z, double sigma, int lead_time, Rounding rounding) {
  if (sigma < 0) throw DomainError("sigma must be non-negative");
  if (lead_time < 0) throw DomainError("lead time must be non-negative");
  const double raw = z * sigma * std::sqrt(static_cast<double>(lead_time));
  double value;
  switch (rounding) {
    case Rounding::kNearestInteger:
      value = round_half_away(raw);
      break;
    case Rounding::kTwoDecimals:
      value = round_half_away(raw * 100.0) / 100.0;
      break;
    default:
      value = raw;
  }
  return std::max(value, 0.0);
}

Grid compute_safety_stock(const std::vector<PartSpec>& parts, int horizon,
                          const ServicePolicy& policy) {
  Grid grid(static_cast<int>(parts.size()), horizon);
  for (const PartSpec& part : parts) {
    const double ss = safety_stock(policy.z_value, part.demand_sigma,
                                   part.lead_time, rounding_for(part.uom));
    for (int t = 1; t <= horizon; ++t) grid.at(part.part_id, t) = ss;
  }
  return grid;
}

}  // namespace lotsizer
