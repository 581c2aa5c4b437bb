#include "efsm/cluster.hpp"

#include <algorithm>

namespace efsm {

Cluster Cluster::seeded(ClusterId id, std::span<const double> z, double potential) {
  Cluster c;
  c.id = id;
  c.center.assign(z.begin(), z.end());
  c.potential = potential;
  c.member_count = 1;
  c.member_mean = c.center;
  c.member_m2.assign(z.size(), 0.0);
  return c;
}

void Cluster::add_member(std::span<const double> z) {
  ++member_count;
  const double n = static_cast<double>(member_count);
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double delta = z[j] - member_mean[j];
    member_mean[j] += delta / n;
    member_m2[j] += delta * (z[j] - member_mean[j]);
  }
}

Vector Cluster::spread(double floor) const {
  Vector s(member_m2.size());
  const double n = static_cast<double>(member_count);
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = std::max(floor, member_m2[j] / n);
  return s;
}

double Cluster::scalar_variance(double floor) const {
  const Vector s = spread(floor);
  if (s.empty()) return floor;
  return sum(s) / static_cast<double>(s.size());
}

}  // namespace efsm
