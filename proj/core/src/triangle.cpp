#include "hyplobe/triangle.hpp"

#include <cmath>
#include <vector>

#include "hyplobe/constants.hpp"
#include "hyplobe/errors.hpp"

namespace hyplobe {

namespace {

constexpr int kScanPoints = 256;
constexpr double kBisectionHalfWidth = 1e-14;
constexpr int kMaxBisections = 200;

void check_sas_domain(double b, double c, double alpha) {
  if (!(b > 0.0 && b <= kMaxDistance) || !(c > 0.0 && c <= kMaxDistance)) {
    throw DomainError("triangle sides must lie in (0, 20]");
  }
  if (!(alpha >= kAlphaEps && alpha <= kPi - kAlphaEps)) {
    throw DomainError("apex angle must lie in [1e-6, pi - 1e-6]");
  }
}

// alpha - beta - gamma; negative for small apex angles, positive near pi.
double angle_gap(double b, double c, double alpha) {
  const TriangleSolution s = solve_sas(b, c, alpha);
  return s.alpha - s.beta - s.gamma;
}

}  // namespace

double OptimalityCertificate::right_angle_residual() const { return std::abs(acb_angle - 0.5 * kPi); }

bool OptimalityCertificate::certifies(double tol) const {
  return right_angle_residual() < tol && tangency_gap < tol && residual < tol;
}

TriangleSolution solve_sas(double b, double c, double alpha) {
  check_sas_domain(b, c, alpha);

  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  const double half_sin = std::sin(0.5 * alpha);

  // cosh a = cosh b cosh c - sinh b sinh c cos alpha, rewritten as
  // sinh^2(a/2) = sinh^2((b-c)/2) + sinh b sinh c sin^2(alpha/2).
  const double sd = std::sinh(0.5 * (b - c));
  const double sinh_half_a = std::sqrt(sd * sd + std::sinh(b) * std::sinh(c) * half_sin * half_sin);

  TriangleSolution s;
  s.a = 2.0 * std::asinh(sinh_half_a);
  s.b = b;
  s.c = c;
  s.alpha = alpha;
  // Four-part formula: cot beta = (sinh c cosh b - cosh c sinh b cos alpha) / (sin alpha sinh b).
  // The numerator is rewritten as sinh(c - b) + 2 cosh c sinh b sin^2(alpha/2) to avoid cancellation.
  const double h2 = 2.0 * half_sin * half_sin;
  s.beta = std::atan2(sin_a * std::sinh(b), std::sinh(c - b) + std::cosh(c) * std::sinh(b) * h2);
  s.gamma = std::atan2(sin_a * std::sinh(c), std::sinh(b - c) + std::cosh(b) * std::sinh(c) * h2);
  // tan(S/2) = t_b t_c sin alpha / (1 - t_b t_c cos alpha), t = tanh(side/2); equals the defect.
  const double tt = std::tanh(0.5 * b) * std::tanh(0.5 * c);
  s.area = 2.0 * std::atan2(tt * sin_a, 1.0 - tt * cos_a);
  if (!(s.area > 0.0)) {
    throw DomainError("triangle is too small to resolve its area");
  }
  return s;
}

double area_defect(double alpha, double beta, double gamma) {
  for (double angle : {alpha, beta, gamma}) {
    if (!(angle > 0.0 && angle < kPi)) {
      throw DomainError("triangle angles must lie in (0, pi)");
    }
  }
  const double defect = kPi - (alpha + beta + gamma);
  if (!(defect > 0.0)) {
    throw DomainError("angle sum is not below pi; not a hyperbolic triangle");
  }
  return defect;
}

EmbeddedTriangle embed_triangle(double b, double c, double alpha) {
  check_sas_domain(b, c, alpha);
  return {DiskPoint::origin(), point_from_polar(c, 0.0), point_from_polar(b, alpha)};
}

EuclideanCircle omega_circle(const DiskPoint& B, const DiskPoint& C) {
  const Geodesic g = geodesic_through(B, C);
  if (const auto* arc = std::get_if<Arc>(&g)) {
    return arc->circle;
  }
  throw DegenerateError("B, C and the apex are collinear; the triangle has zero area");
}

Vec2 b_prime_point(const DiskPoint& B, const EuclideanCircle& omega) {
  const double rb = B.norm();
  if (rb <= 1e-12) {
    throw DegenerateError("B at the center does not determine a line through A");
  }
  if (!omega.contains(B.vec(), 1e-9 * std::max(1.0, omega.radius))) {
    throw DomainError("B does not lie on omega");
  }
  // Points t*u on the line, u = B/|B|: t^2 - 2 (u.c) t + (|c|^2 - r^2) = 0.
  const Vec2 u = B.vec() / rb;
  const double h = u.dot(omega.center);
  const double power = omega.center.norm2() - omega.radius * omega.radius;
  const double disc = std::max(0.0, h * h - power);
  const double q = h + std::copysign(std::sqrt(disc), h);
  const double t1 = q;
  const double t2 = power / q;
  const double t = std::abs(t1 - rb) > std::abs(t2 - rb) ? t1 : t2;
  return u * t;
}

double tau_angle(const Figure1& fig) {
  const double tau = euclidean_angle(fig.b_prime, fig.A.vec(), fig.C.vec());
  if (!(tau > 0.0)) {
    throw DegenerateError("figure is degenerate: angle AB'C vanishes");
  }
  return tau;
}

Figure1 build_figure1(double b, double c, double alpha) {
  const EmbeddedTriangle tri = embed_triangle(b, c, alpha);
  Figure1 fig;
  fig.A = tri.A;
  fig.B = tri.B;
  fig.C = tri.C;
  fig.omega = omega_circle(tri.B, tri.C);
  fig.psi = EuclideanCircle({0.0, 0.0}, std::tanh(0.5 * b));
  fig.b_prime = b_prime_point(tri.B, fig.omega);
  fig.tau = tau_angle(fig);
  return fig;
}

OptimalAngle optimal_alpha(double b, double c) {
  check_sas_domain(b, c, 0.5 * kPi);

  const double lo = kAlphaEps;
  const double hi = kPi - kAlphaEps;
  std::vector<std::pair<double, double>> brackets;
  double prev_x = lo;
  double prev_g = angle_gap(b, c, lo);
  for (int k = 1; k < kScanPoints; ++k) {
    const double x = k == kScanPoints - 1 ? hi : lo + (hi - lo) * k / (kScanPoints - 1);
    const double g = angle_gap(b, c, x);
    if (prev_g == 0.0) {
      brackets.emplace_back(prev_x, prev_x);
    } else if ((prev_g < 0.0) != (g < 0.0)) {
      brackets.emplace_back(prev_x, x);
    }
    prev_x = x;
    prev_g = g;
  }
  if (brackets.empty()) {
    throw SolverError("no sign change of alpha - beta - gamma found on the apex-angle scan");
  }

  OptimalAngle best;
  best.solution.area = -1.0;
  for (auto [left, right] : brackets) {
    double g_left = angle_gap(b, c, left);
    for (int it = 0; it < kMaxBisections && 0.5 * (right - left) > kBisectionHalfWidth; ++it) {
      const double mid = 0.5 * (left + right);
      const double g_mid = angle_gap(b, c, mid);
      if (g_mid == 0.0) {
        left = right = mid;
        break;
      }
      if ((g_mid < 0.0) == (g_left < 0.0)) {
        left = mid;
        g_left = g_mid;
      } else {
        right = mid;
      }
    }
    const double root = 0.5 * (left + right);
    const TriangleSolution s = solve_sas(b, c, root);
    if (s.area > best.solution.area) {
      best = {root, s};
    }
  }
  return best;
}

OptimalityCertificate optimality_certificate(const Figure1& fig) {
  const Vec2 a = fig.A.vec();
  const Vec2 c = fig.C.vec();
  const Vec2 bp = fig.b_prime;

  OptimalityCertificate cert;
  cert.acb_angle = euclidean_angle(c, a, bp);
  const Vec2 dir = c - bp;
  const double line_distance = std::abs(dir.cross(a - bp)) / dir.norm();
  cert.tangency_gap = std::abs(line_distance - fig.psi.radius);
  const double alpha = euclidean_angle(a, fig.B.vec(), c);
  cert.residual = std::abs(alpha + fig.tau - 0.5 * kPi);
  return cert;
}

}  // namespace hyplobe
