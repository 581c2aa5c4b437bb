#include "efsm/potential.hpp"

#include <cmath>

#include "efsm/error.hpp"
#include "efsm/observation.hpp"

namespace efsm {

double potential_of_input(const PotentialAccumulators& acc, std::span<const double> z) {
  validate(z, acc.dim());
  const std::size_t t = acc.next_tick();
  if (t == 1) return 1.0;

  const double tm1 = static_cast<double>(t - 1);
  const double a = dot(z, z);
  const double c = dot(z, acc.col_sums);
  const double denom = tm1 * (a + 1.0) - 2.0 * c + acc.b;
  // Mathematically (t-1) + Σ||z - z_k||² >= t-1 > 0.
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw Error(Errc::internal_inconsistency, "non-positive potential denominator");
  return tm1 / denom;
}

void commit(PotentialAccumulators& acc, std::span<const double> z) {
  validate(z, acc.dim());
  acc.b += dot(z, z);
  for (std::size_t j = 0; j < z.size(); ++j) acc.col_sums[j] += z[j];
  acc.previous.assign(z.begin(), z.end());
  ++acc.count;
}

double updated_center_potential(double previous_potential, std::size_t t, double rho,
                                double squared_distance_to_previous) {
  const double tm1 = static_cast<double>(t - 1);
  const double tm2 = static_cast<double>(t - 2);
  return tm1 * previous_potential /
         (tm2 + previous_potential * (1.0 + rho * squared_distance_to_previous));
}

}  // namespace efsm
