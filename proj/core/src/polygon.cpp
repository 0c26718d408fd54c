#include "hyplobe/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "hyplobe/constants.hpp"
#include "hyplobe/errors.hpp"

namespace hyplobe {

namespace {

using Complex = std::complex<double>;

constexpr double kClosureTol = 1e-8;

Vec2 to_klein(const DiskPoint& p) { return p.vec() * (2.0 / (1.0 + p.norm2())); }

void check_convex_ccw(const std::vector<DiskPoint>& v) {
  const std::size_t n = v.size();
  // Geodesics are straight in the Klein model, so hyperbolic convexity is
  // Euclidean convexity of the Klein images.
  std::vector<Vec2> k(n);
  std::transform(v.begin(), v.end(), k.begin(), to_klein);
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = k[(i + 1) % n] - k[i];
    const Vec2 e2 = k[(i + 2) % n] - k[(i + 1) % n];
    const double cross = e1.cross(e2);
    if (!(cross > 1e-14 * e1.norm() * e2.norm())) {
      throw DomainError("polygon is not strictly convex and counterclockwise");
    }
    turning += std::atan2(cross, e1.dot(e2));
  }
  if (std::abs(turning - 2.0 * kPi) > 1e-6) {
    throw DomainError("polygon boundary winds more than once");
  }
}

// Maps V_0 to the origin and V_{n/2} onto the positive real axis.
DiskIsometry axis_frame(const HyperbolicPolygon& poly) {
  const DiskPoint& a = poly.vertex(0);
  const DiskPoint& b = poly.vertex(poly.size() / 2);
  const Complex w = isometry_to_origin(a).map(b.z());
  return {a, -std::arg(w)};
}

void require_steiner_shape(const HyperbolicPolygon& poly) {
  if (poly.size() < 4 || poly.size() % 2 != 0) {
    throw DomainError("Steiner polygons need an even number of vertices, at least 4");
  }
  if (!is_steiner_symmetric(poly)) {
    throw DomainError("polygon is not mirror-symmetric about the axis V_0 V_{n/2}");
  }
}

// Upper-chain index of vertex i (1 .. n/2 - 1).
std::size_t chain_index(const HyperbolicPolygon& poly, std::size_t i) {
  const std::size_t n = poly.size();
  const std::size_t half = n / 2;
  i %= n;
  if (i == 0 || i == half) {
    throw DomainError("axis vertices have no hinge");
  }
  return i < half ? i : n - i;
}

// Hyperbolic distance from z to the real diameter.
double distance_to_real_axis(Complex z) {
  return std::asinh(2.0 * std::abs(z.imag()) / (1.0 - std::norm(z)));
}

// Steps a distance `length` along the geodesic leaving `pos` in direction `heading`.
void advance(Complex& pos, Complex& heading, double length) {
  const Complex w = std::tanh(0.5 * length) * heading;
  const Complex k = 1.0 + std::conj(pos) * w;
  pos = (w + pos) / k;
  const Complex turn = std::conj(k) / std::abs(k);
  heading *= turn * turn;
}

double spread_about(const Complex& c, const std::vector<DiskPoint>& pts, double* mean_radius = nullptr) {
  const DiskPoint center(c);
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const DiskPoint& p : pts) {
    const double d = hyp_distance(center, p);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (mean_radius != nullptr) {
    *mean_radius = 0.5 * (lo + hi);
  }
  return hi - lo;
}

// Hyperbolic center of the least-squares Euclidean circle through the points.
// Hyperbolic circles are Euclidean circles in the disk; the hyperbolic center
// is the hyperbolic midpoint of the circle's diameter through the origin.
bool algebraic_center(const std::vector<DiskPoint>& pts, Complex& out) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const DiskPoint& p = pts[static_cast<std::size_t>(i)];
    design.row(i) << p.x(), p.y(), 1.0;
    rhs(i) = -p.norm2();
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
  const Vec2 e{-0.5 * coef(0), -0.5 * coef(1)};
  const double r2 = e.norm2() - coef(2);
  if (!(r2 > 0.0)) {
    return false;
  }
  const double r = std::sqrt(r2);
  const double en = e.norm();
  if (en < 1e-15) {
    out = {0.0, 0.0};
    return true;
  }
  const double near = en - r;
  const double far = en + r;
  if (!(far < 1.0) || !(near > -1.0)) {
    return false;
  }
  const double mid = std::tanh(0.5 * (std::atanh(near) + std::atanh(far)));
  out = Complex(e.x, e.y) * (mid / en);
  return true;
}

}  // namespace

HyperbolicPolygon::HyperbolicPolygon(std::vector<DiskPoint> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw DomainError("polygon needs at least 3 vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((vertices_[i].vec() - vertices_[j].vec()).norm() <= 1e-12) {
        throw DomainError("polygon vertices must be distinct");
      }
    }
  }
  check_convex_ccw(vertices_);

  sides_.resize(n);
  angles_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DiskPoint& prev = vertices_[(i + n - 1) % n];
    const DiskPoint& next = vertices_[(i + 1) % n];
    sides_[i] = hyp_distance(vertices_[i], next);
    angles_[i] = angle_at_vertex(vertices_[i], prev, next);
  }
  const double angle_sum = std::accumulate(angles_.begin(), angles_.end(), 0.0);
  if (!(angle_sum < static_cast<double>(n - 2) * kPi)) {
    throw DomainError("polygon angle sum leaves no positive defect");
  }
}

HyperbolicPolygon HyperbolicPolygon::transformed(const DiskIsometry& m) const {
  std::vector<DiskPoint> out;
  out.reserve(size());
  for (const DiskPoint& p : vertices_) {
    out.push_back(m(p));
  }
  return HyperbolicPolygon(std::move(out));
}

double polygon_perimeter(const HyperbolicPolygon& poly) {
  return std::accumulate(poly.side_lengths().begin(), poly.side_lengths().end(), 0.0);
}

double polygon_area(const HyperbolicPolygon& poly) {
  const auto& angles = poly.interior_angles();
  const double sum = std::accumulate(angles.begin(), angles.end(), 0.0);
  return static_cast<double>(poly.size() - 2) * kPi - sum;
}

TriangleSolution local_triangle(const HyperbolicPolygon& poly, std::size_t i) {
  const std::size_t n = poly.size();
  i %= n;
  return solve_sas(poly.side(i), poly.side((i + n - 1) % n), poly.angle(i));
}

RegularPolygon regular_polygon(const RegularPolygonSpec& spec) {
  if (spec.n < 3) {
    throw DomainError("regular polygon needs n >= 3");
  }
  if (!(spec.circumradius > 0.0 && spec.circumradius <= 0.5 * kMaxDistance)) {
    throw DomainError("circumradius must lie in (0, 10]");
  }
  // Central isosceles triangle: legs R, apex angle 2 pi / n at the center.
  const TriangleSolution central = solve_sas(spec.circumradius, spec.circumradius, 2.0 * kPi / spec.n);
  RegularPolygon out;
  out.side = central.a;
  out.interior_angle = 2.0 * central.beta;
  out.perimeter = spec.n * central.a;
  out.area = spec.n * central.area;
  return out;
}

HyperbolicPolygon regular_polygon_vertices(const RegularPolygonSpec& spec, double phase) {
  regular_polygon(spec);
  std::vector<DiskPoint> v;
  v.reserve(spec.n);
  for (int k = 0; k < spec.n; ++k) {
    v.push_back(point_from_polar(spec.circumradius, phase + 2.0 * kPi * k / spec.n));
  }
  return HyperbolicPolygon(std::move(v));
}

double circumradius_for_perimeter(int n, double perimeter) {
  if (n < 3) {
    throw DomainError("regular polygon needs n >= 3");
  }
  if (!(perimeter > 0.0) || !std::isfinite(perimeter)) {
    throw DomainError("perimeter must be positive and finite");
  }
  // sinh(side / 2) = sinh R sin(pi / n)
  const double r = std::asinh(std::sinh(0.5 * perimeter / n) / std::sin(kPi / n));
  if (!(r <= 0.5 * kMaxDistance)) {
    throw DomainError("perimeter " + std::to_string(perimeter) + " needs a circumradius beyond 10");
  }
  return r;
}

CircleGeometry circle_geometry(double radius) {
  if (!(radius > 0.0 && radius <= 0.5 * kMaxDistance)) {
    throw DomainError("circle radius must lie in (0, 10]");
  }
  const double sh = std::sinh(0.5 * radius);
  return {2.0 * kPi * std::sinh(radius), 4.0 * kPi * sh * sh};
}

double isoperimetric_deficit(double length, double area) {
  if (!(length > 0.0) || !(area > 0.0)) {
    throw DomainError("deficit needs positive length and area");
  }
  return length * length - area * (4.0 * kPi + area);
}

bool is_steiner_symmetric(const HyperbolicPolygon& poly, double tol) {
  const std::size_t n = poly.size();
  if (n < 4 || n % 2 != 0) {
    return false;
  }
  const DiskIsometry frame = axis_frame(poly);
  for (std::size_t k = 1; k < n / 2; ++k) {
    const DiskPoint upper = frame(poly.vertex(k));
    const DiskPoint lower = frame(poly.vertex(n - k));
    const DiskPoint mirrored(lower.x(), -lower.y());
    if (hyp_distance(upper, mirrored) > tol) {
      return false;
    }
  }
  return true;
}

TriangleSolution hinge_triangle(const HyperbolicPolygon& poly, std::size_t i) {
  const std::size_t k = chain_index(poly, i);
  const DiskPoint& apex = poly.vertex(k);
  const DiskPoint& a = poly.vertex(0);
  const DiskPoint& b = poly.vertex(poly.size() / 2);
  return solve_sas(hyp_distance(apex, b), hyp_distance(apex, a), angle_at_vertex(apex, a, b));
}

double hinge_residual(const HyperbolicPolygon& poly, std::size_t i) {
  const TriangleSolution t = hinge_triangle(poly, i);
  return std::abs(t.alpha - (t.beta + t.gamma));
}

double max_hinge_residual(const HyperbolicPolygon& poly) {
  double worst = 0.0;
  for (std::size_t k = 1; k < poly.size() / 2; ++k) {
    worst = std::max(worst, hinge_residual(poly, k));
  }
  return worst;
}

SteinerMove steiner_move(const HyperbolicPolygon& poly, std::size_t i) {
  require_steiner_shape(poly);
  const std::size_t n = poly.size();
  const std::size_t half = n / 2;
  const std::size_t k = chain_index(poly, i);

  SteinerMove result{poly, 0.0, false, 0.0};

  const TriangleSolution old_hinge = hinge_triangle(poly, k);
  const OptimalAngle best = optimal_alpha(old_hinge.b, old_hinge.c);

  // Chord-to-chain angles at the axis vertices are rigid; only the hinge
  // triangle's base angles change there.
  const DiskPoint& a = poly.vertex(0);
  const DiskPoint& b = poly.vertex(half);
  const double half_angle_a = angle_at_vertex(a, b, poly.vertex(1)) + best.solution.beta - old_hinge.beta;
  const double half_angle_b = angle_at_vertex(b, a, poly.vertex(half - 1)) + best.solution.gamma - old_hinge.gamma;
  std::vector<double> chain_angles(half);
  for (std::size_t j = 1; j < half; ++j) {
    chain_angles[j] = poly.angle(j);
  }
  chain_angles[k] += best.alpha_star - old_hinge.alpha;

  const bool convex = chain_angles[k] > 0.0 && chain_angles[k] < kPi && half_angle_a > 0.0 &&
                      2.0 * half_angle_a < kPi && half_angle_b > 0.0 && 2.0 * half_angle_b < kPi;
  if (!convex) {
    return result;
  }

  // Walk the upper chain in the axis frame: V_0 at the origin, axis along +x,
  // chain below the axis.
  Complex pos{0.0, 0.0};
  Complex heading = std::polar(1.0, -half_angle_a);
  std::vector<Complex> chain{pos};
  for (std::size_t j = 0; j < half; ++j) {
    advance(pos, heading, poly.side(j));
    chain.push_back(pos);
    if (j + 1 < half) {
      heading *= std::polar(1.0, kPi - chain_angles[j + 1]);
    }
  }
  const Complex walked_b = chain.back();
  const double axis_miss = distance_to_real_axis(walked_b);
  result.closure_error = axis_miss;
  if (axis_miss > kClosureTol || !(walked_b.real() > 0.0)) {
    throw ClosureError("Steiner walk missed the axis by " + std::to_string(axis_miss));
  }
  const DiskPoint b_on_axis(walked_b.real(), 0.0);
  const double arrival = angle_at_vertex(b_on_axis, DiskPoint::origin(), DiskPoint(chain[half - 1]));
  if (std::abs(arrival - half_angle_b) > kClosureTol) {
    throw ClosureError("Steiner walk arrives at the axis with the wrong angle");
  }

  const DiskIsometry back = axis_frame(poly).inverse();
  std::vector<DiskPoint> vertices(n);
  vertices[0] = a;
  for (std::size_t j = 1; j < half; ++j) {
    vertices[j] = DiskPoint(back.map(chain[j]));
    vertices[n - j] = DiskPoint(back.map(std::conj(chain[j])));
  }
  vertices[half] = back(b_on_axis);

  try {
    HyperbolicPolygon moved(std::move(vertices));
    result.delta_area = polygon_area(moved) - polygon_area(poly);
    result.polygon = std::move(moved);
    result.accepted = true;
  } catch (const DomainError&) {
    // non-convex outcome; move rejected
  }
  return result;
}

SteinerResult steiner_optimize(const HyperbolicPolygon& poly, double tol, int max_sweeps) {
  if (!(tol > 0.0)) {
    throw DomainError("Steiner tolerance must be positive");
  }
  require_steiner_shape(poly);
  const std::size_t half = poly.size() / 2;

  SteinerResult out{poly, {}, false, 0, 0, 0, max_hinge_residual(poly)};
  int iteration = 0;
  while (out.residual >= tol && out.sweeps < max_sweeps) {
    int accepted_this_sweep = 0;
    for (std::size_t k = 1; k < half; ++k) {
      if (hinge_residual(out.polygon, k) < tol) {
        continue;
      }
      const double before = polygon_area(out.polygon);
      SteinerMove move = steiner_move(out.polygon, k);
      if (!move.accepted) {
        ++out.rejected_moves;
        continue;
      }
      out.polygon = std::move(move.polygon);
      ++accepted_this_sweep;
      ++out.accepted_moves;
      out.trace.records.push_back({++iteration, k, before, polygon_area(out.polygon),
                                   max_hinge_residual(out.polygon), polygon_perimeter(out.polygon)});
    }
    ++out.sweeps;
    out.residual = max_hinge_residual(out.polygon);
    if (accepted_this_sweep == 0) {
      break;
    }
  }
  out.converged = out.residual < tol;
  return out;
}

CircumcircleFit fit_circumcircle(const HyperbolicPolygon& poly) {
  // Work in a frame centered on the Euclidean vertex centroid.
  Vec2 centroid;
  for (const DiskPoint& p : poly.vertices()) {
    centroid = centroid + p.vec();
  }
  centroid = centroid / static_cast<double>(poly.size());
  const DiskIsometry frame = isometry_to_origin(DiskPoint(centroid.x, centroid.y));
  std::vector<DiskPoint> pts;
  double reach = INFINITY;
  for (const DiskPoint& p : poly.vertices()) {
    pts.push_back(frame(p));
    reach = std::min(reach, pts.back().norm());
  }

  Complex best{0.0, 0.0};
  double best_spread = spread_about(best, pts);
  const double half_width = 0.5 * reach;
  constexpr int kGrid = 10;
  for (int ix = -kGrid; ix <= kGrid; ++ix) {
    for (int iy = -kGrid; iy <= kGrid; ++iy) {
      const Complex c{half_width * ix / kGrid, half_width * iy / kGrid};
      const double s = spread_about(c, pts);
      if (s < best_spread) {
        best = c;
        best_spread = s;
      }
    }
  }
  Complex algebraic;
  if (algebraic_center(pts, algebraic)) {
    const double s = spread_about(algebraic, pts);
    if (s < best_spread) {
      best = algebraic;
      best_spread = s;
    }
  }

  // Compass search.
  double step = half_width / kGrid;
  const Complex directions[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  for (int it = 0; it < 20000 && step > 1e-15; ++it) {
    bool improved = false;
    for (const Complex& d : directions) {
      const Complex c = best + step * d;
      if (std::norm(c) >= 1.0) {
        continue;
      }
      const double s = spread_about(c, pts);
      if (s < best_spread) {
        best = c;
        best_spread = s;
        improved = true;
        break;
      }
    }
    if (!improved) {
      step *= 0.5;
    }
  }

  CircumcircleFit fit;
  fit.spread = spread_about(best, pts, &fit.radius);
  fit.center = DiskPoint(frame.inverse().map(best));
  return fit;
}

HyperbolicPolygon random_convex_polygon(int n, Rng& rng) {
  if (n < 3) {
    throw DomainError("polygon needs at least 3 vertices");
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double radius = rng.uniform(0.5, 1.5);
    const double phase = rng.uniform(0.0, 2.0 * kPi);
    std::vector<DiskPoint> v;
    v.reserve(n);
    for (int k = 0; k < n; ++k) {
      const double theta = phase + 2.0 * kPi * (k + rng.uniform(0.15, 0.85)) / n;
      v.push_back(point_from_polar(radius * (1.0 + rng.uniform(-0.08, 0.08)), theta));
    }
    try {
      return HyperbolicPolygon(std::move(v));
    } catch (const DomainError&) {
    }
  }
  throw SolverError("could not sample a convex polygon");
}

HyperbolicPolygon random_steiner_polygon(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("Steiner polygons need an even number of vertices, at least 4");
  }
  const int half = n / 2;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double radius = rng.uniform(0.5, 1.5);
    auto jitter = [&] { return radius * (1.0 + rng.uniform(-0.08, 0.08)); };
    std::vector<DiskPoint> v(n);
    v[0] = point_from_polar(jitter(), kPi);
    for (int k = 1; k < half; ++k) {
      const double theta = kPi + kPi * (k + rng.uniform(-0.3, 0.3)) / half;
      v[k] = point_from_polar(jitter(), theta);
      v[n - k] = DiskPoint(v[k].x(), -v[k].y());
    }
    v[half] = point_from_polar(jitter(), 0.0);
    try {
      return HyperbolicPolygon(std::move(v));
    } catch (const DomainError&) {
    }
  }
  throw SolverError("could not sample a convex symmetric polygon");
}

}  // namespace hyplobe
