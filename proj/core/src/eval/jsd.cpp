#include "efsm/eval/jsd.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "efsm/error.hpp"
#include "efsm/state_estimate.hpp"

namespace efsm::eval {

namespace {

void check_distribution(std::span<const double> p, const char* which) {
  if (!is_simplex(Vector(p.begin(), p.end())))
    throw Error(Errc::non_simplex, std::string(which) + " is not a probability distribution");
}

// Σ a_i log2(a_i / m_i), skipping a_i = 0. m_i >= a_i / 2 > 0 whenever a_i > 0.
double kl_to_mixture(std::span<const double> a, const std::vector<double>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0.0) s += a[i] * std::log2(a[i] / m[i]);
  return s;
}

}  // namespace

double jsd(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw Error(Errc::dimension_mismatch, "distributions have lengths " + std::to_string(p.size()) +
                                              " and " + std::to_string(q.size()));
  check_distribution(p, "p");
  check_distribution(q, "q");

  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = 0.5 * (p[i] + q[i]);
  const double d = 0.5 * (kl_to_mixture(p, m) + kl_to_mixture(q, m));
  // Rounding can push the sum a few ulps outside the bound.
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace efsm::eval
