#pragma once

#include <numbers>

namespace hyplobe {

inline constexpr double kPi = std::numbers::pi;

// Largest hyperbolic distance from the origin a point may have. tanh(D/2)
// is then 1 - 4e-9, far enough from the boundary for double precision.
inline constexpr double kMaxDistance = 20.0;

// Angles at a triangle apex are confined to [kAlphaEps, pi - kAlphaEps].
inline constexpr double kAlphaEps = 1e-6;

}  // namespace hyplobe
