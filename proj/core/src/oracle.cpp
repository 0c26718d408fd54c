#include "hyplobe/oracle.hpp"

#include <cmath>

#include "hyplobe/constants.hpp"
#include "hyplobe/errors.hpp"
#include "hyplobe/triangle.hpp"

namespace hyplobe::oracle {

GridSearchResult grid_search_max_area(double b, double c, int samples) {
  if (samples < 1000) {
    throw DomainError("grid search needs at least 1000 samples");
  }
  const double lo = kAlphaEps;
  const double hi = kPi - kAlphaEps;
  GridSearchResult out;
  out.samples = samples;
  out.grid_step = (hi - lo) / samples;
  out.area_hat = -1.0;

  double prev2 = -1.0;
  double prev1 = -1.0;
  for (int k = 0; k < samples; ++k) {
    const double alpha = lo + (k + 0.5) * out.grid_step;
    const double area = solve_sas(b, c, alpha).area;
    if (area > out.area_hat) {
      out.area_hat = area;
      out.alpha_hat = alpha;
    }
    if (k >= 2 && prev1 > prev2 && prev1 > area) {
      ++out.local_maxima;
    }
    prev2 = prev1;
    prev1 = area;
  }
  if (prev1 > prev2) {
    ++out.local_maxima;  // maximum at the right end of the grid
  }
  return out;
}

double geodesic_length_by_sampling(const DiskPoint& p, const DiskPoint& q, int segments) {
  if (segments < 10000) {
    throw DomainError("metric integration needs at least 1e4 segments");
  }
  if ((p.vec() - q.vec()).norm() <= 1e-12) {
    return 0.0;
  }
  const Geodesic g = geodesic_through(p, q);

  // Curve parametrization on [0, 1].
  auto point_at = [&](double s) -> Vec2 {
    if (std::holds_alternative<Diameter>(g)) {
      return p.vec() + (q.vec() - p.vec()) * s;
    }
    const EuclideanCircle& circle = std::get<Arc>(g).circle;
    const Vec2 u = p.vec() - circle.center;
    const Vec2 v = q.vec() - circle.center;
    const double start = std::atan2(u.y, u.x);
    const double sweep = std::atan2(u.cross(v), u.dot(v));  // minor arc, |sweep| < pi
    const double t = start + s * sweep;
    return circle.center + Vec2{std::cos(t), std::sin(t)} * circle.radius;
  };
  auto metric = [](const Vec2& z) { return 2.0 / (1.0 - z.norm2()); };

  double length = 0.0;
  Vec2 prev = point_at(0.0);
  for (int k = 1; k <= segments; ++k) {
    const double s = static_cast<double>(k) / segments;
    const Vec2 next = point_at(s);
    const Vec2 mid = point_at(s - 0.5 / segments);
    length += metric(mid) * (next - prev).norm();
    prev = next;
  }
  return length;
}

EuclideanTriangle euclidean_limit_triangle(double b, double c, double alpha) {
  if (!(b > 0.0 && b <= 0.01) || !(c > 0.0 && c <= 0.01)) {
    throw DomainError("Euclidean limit reference needs sides in (0, 0.01]");
  }
  EuclideanTriangle t;
  t.alpha = alpha;
  t.a = std::sqrt(b * b + c * c - 2.0 * b * c * std::cos(alpha));
  t.beta = std::atan2(b * std::sin(alpha), c - b * std::cos(alpha));
  t.gamma = std::atan2(c * std::sin(alpha), b - c * std::cos(alpha));
  t.area = 0.5 * b * c * std::sin(alpha);
  return t;
}

}  // namespace hyplobe::oracle
