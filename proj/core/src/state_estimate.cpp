#include "efsm/state_estimate.hpp"

#include <cmath>

namespace efsm {

std::size_t StateEstimate::argmax() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < probs.size(); ++i)
    if (probs[i] > probs[best]) best = i;
  return best;
}

StateEstimate StateEstimate::padded(std::size_t n) const {
  StateEstimate out = *this;
  if (out.probs.size() < n) out.probs.resize(n, 0.0);
  return out;
}

StateEstimate StateEstimate::uniform(std::size_t n) {
  return {Vector(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n))};
}

bool is_simplex(const Vector& p, double tol) {
  if (p.empty()) return false;
  double s = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0 + tol) return false;
    s += x;
  }
  return std::abs(s - 1.0) <= tol;
}

}  // namespace efsm
