#pragma once

#include "hyplobe/constants.hpp"
#include "hyplobe/disk_model.hpp"
#include "hyplobe/random.hpp"

namespace hyplobe {

/// Point at a uniformly drawn hyperbolic distance in [0, max_distance] from the
/// origin, in a uniformly drawn direction.
inline DiskPoint random_disk_point(Rng& rng, double max_distance) {
  const double d = rng.uniform(0.0, max_distance);
  return point_from_polar(d, rng.uniform(0.0, 2.0 * kPi));
}

inline DiskIsometry random_isometry(Rng& rng, double max_distance) {
  const DiskPoint target = random_disk_point(rng, max_distance);
  return {target, rng.uniform(-kPi, kPi)};
}

}  // namespace hyplobe
