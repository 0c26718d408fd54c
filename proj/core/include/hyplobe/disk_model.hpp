#pragma once

#include <cmath>
#include <complex>
#include <variant>

namespace hyplobe {

/// A Euclidean point or vector of the plane that contains the model. Used for
/// objects that may live outside the unit disk (circle centers, B').
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  constexpr double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
};

/// Unsigned Euclidean angle at `vertex` between the rays towards p and q, in [0, pi].
double euclidean_angle(const Vec2& vertex, const Vec2& p, const Vec2& q);

/// A point of the Poincare disk. The constructor enforces |p| < 1 and finite
/// coordinates, so every DiskPoint in circulation is valid.
class DiskPoint {
 public:
  constexpr DiskPoint() = default;
  DiskPoint(double x, double y);
  explicit DiskPoint(std::complex<double> z) : DiskPoint(z.real(), z.imag()) {}

  static constexpr DiskPoint origin() { return DiskPoint(); }

  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr Vec2 vec() const { return {x_, y_}; }
  std::complex<double> z() const { return {x_, y_}; }
  constexpr double norm2() const { return x_ * x_ + y_ * y_; }
  double norm() const { return std::hypot(x_, y_); }

  constexpr bool operator==(const DiskPoint&) const = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Euclidean circle; center may lie outside the disk.
struct EuclideanCircle {
  Vec2 center;
  double radius = 1.0;

  EuclideanCircle() = default;
  EuclideanCircle(Vec2 c, double r);

  bool contains(const Vec2& p, double tol) const {
    return std::abs((p - center).norm() - radius) <= tol;
  }
};

/// | |center|^2 - 1 - radius^2 |, zero iff the circle meets the unit circle at right angles.
double orthogonality_residual(const EuclideanCircle& circle);

struct Diameter {
  Vec2 direction;  // unit length
};

struct Arc {
  EuclideanCircle circle;  // orthogonal to the unit circle
};

/// A hyperbolic line.
using Geodesic = std::variant<Diameter, Arc>;

/// Orientation-preserving disk automorphism z -> e^{i rotation} (z - target) / (1 - conj(target) z).
/// It sends `target` to the origin and then rotates.
class DiskIsometry {
 public:
  DiskIsometry() = default;
  DiskIsometry(DiskPoint target, double rotation);

  static DiskIsometry identity() { return {}; }
  static DiskIsometry rotation(double angle) { return {DiskPoint::origin(), angle}; }

  const DiskPoint& target() const { return target_; }
  double rotation() const { return rotation_; }

  /// Applies the underlying Mobius map to any complex number, including
  /// points outside the disk.
  std::complex<double> map(std::complex<double> z) const;
  DiskPoint operator()(const DiskPoint& p) const;

  DiskIsometry inverse() const;
  /// The isometry `next` applied after `*this`.
  DiskIsometry then(const DiskIsometry& next) const;

 private:
  DiskPoint target_;
  double rotation_ = 0.0;
};

DiskPoint point_from_polar(double distance, double theta);

double hyp_distance(const DiskPoint& p, const DiskPoint& q);

Geodesic geodesic_through(const DiskPoint& p, const DiskPoint& q);

DiskIsometry isometry_to_origin(const DiskPoint& p);

DiskPoint apply_isometry(const DiskIsometry& m, const DiskPoint& p);

/// Unit tangent at v of the geodesic running from v towards p.
Vec2 tangent_direction(const DiskPoint& v, const DiskPoint& p);

/// Hyperbolic angle at v between the geodesics vp and vq, in [0, pi].
double angle_at_vertex(const DiskPoint& v, const DiskPoint& p, const DiskPoint& q);

}  // namespace hyplobe
