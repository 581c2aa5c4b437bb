#pragma once

#include <span>

namespace efsm::eval {

/// Jensen-Shannon divergence in bits: ½KL(p‖m) + ½KL(q‖m), m = ½(p+q).
/// Bounded by [0, 1]; 0·log0 terms are 0. Throws Errc::dimension_mismatch
/// for unequal lengths and Errc::non_simplex for inputs that are not
/// distributions (tolerance 1e-9).
double jsd(std::span<const double> p, std::span<const double> q);

}  // namespace efsm::eval
