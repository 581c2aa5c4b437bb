#include "efsm/observation.hpp"

#include <cmath>
#include <string>

#include "efsm/error.hpp"

namespace efsm {

void validate(std::span<const double> values, std::size_t expected_dim) {
  if (values.size() != expected_dim)
    throw Error(Errc::invalid_observation, "expected " + std::to_string(expected_dim) +
                                               " values, got " + std::to_string(values.size()));
  for (std::size_t j = 0; j < values.size(); ++j)
    if (!std::isfinite(values[j]))
      throw Error(Errc::invalid_observation, "component " + std::to_string(j) + " is not finite");
}

Vector Normalization::apply(std::span<const double> z) const {
  Vector out(z.begin(), z.end());
  if (!offset.empty())
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= offset[j];
  if (!scale.empty())
    for (std::size_t j = 0; j < out.size(); ++j) out[j] /= scale[j];
  return out;
}

void Normalization::validate(std::size_t dim) const {
  if (!offset.empty() && offset.size() != dim)
    throw Error(Errc::config_error, "normalization offset has wrong length");
  if (!scale.empty() && scale.size() != dim)
    throw Error(Errc::config_error, "normalization scale has wrong length");
  for (double s : scale)
    if (!(s > 0.0) || !std::isfinite(s))
      throw Error(Errc::config_error, "normalization scale must be positive and finite");
  for (double o : offset)
    if (!std::isfinite(o)) throw Error(Errc::config_error, "normalization offset must be finite");
}

}  // namespace efsm
