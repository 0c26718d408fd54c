#include "hyplobe/disk_model.hpp"

#include <algorithm>
#include <string>

#include "hyplobe/constants.hpp"
#include "hyplobe/errors.hpp"

namespace hyplobe {

namespace {

constexpr double kMinSeparation = 1e-12;

}  // namespace

double euclidean_angle(const Vec2& vertex, const Vec2& p, const Vec2& q) {
  const Vec2 u = p - vertex;
  const Vec2 v = q - vertex;
  return std::atan2(std::abs(u.cross(v)), u.dot(v));
}

DiskPoint::DiskPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("disk point has non-finite coordinates");
  }
  if (x * x + y * y >= 1.0) {
    throw DomainError("disk point lies on or outside the unit circle");
  }
}

EuclideanCircle::EuclideanCircle(Vec2 c, double r) : center(c), radius(r) {
  if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(c.x) || !std::isfinite(c.y)) {
    throw DomainError("circle needs a finite center and a positive finite radius");
  }
}

double orthogonality_residual(const EuclideanCircle& circle) {
  return std::abs(circle.center.norm2() - 1.0 - circle.radius * circle.radius);
}

DiskIsometry::DiskIsometry(DiskPoint target, double rotation) : target_(target), rotation_(rotation) {
  if (!std::isfinite(rotation)) {
    throw DomainError("isometry rotation must be finite");
  }
}

std::complex<double> DiskIsometry::map(std::complex<double> z) const {
  const std::complex<double> a = target_.z();
  return std::polar(1.0, rotation_) * (z - a) / (1.0 - std::conj(a) * z);
}

DiskPoint DiskIsometry::operator()(const DiskPoint& p) const { return DiskPoint(map(p.z())); }

DiskIsometry DiskIsometry::inverse() const {
  // w = e^{it}(z - a)/(1 - conj(a) z)  =>  z = e^{-it}(w + e^{it} a)/(1 + conj(e^{it} a) w)
  const std::complex<double> a = std::polar(1.0, rotation_) * target_.z();
  return {DiskPoint(-a), -rotation_};
}

DiskIsometry DiskIsometry::then(const DiskIsometry& next) const {
  // SU(1,1) form [[u, v], [conj v, conj u]] with u = e^{it/2}, v = -e^{it/2} a.
  using C = std::complex<double>;
  auto matrix = [](const DiskIsometry& m) {
    const C u = std::polar(1.0, 0.5 * m.rotation_);
    return std::pair<C, C>{u, -u * m.target_.z()};
  };
  const auto [u1, v1] = matrix(*this);
  const auto [u2, v2] = matrix(next);
  const C u = u2 * u1 + v2 * std::conj(v1);
  const C v = u2 * v1 + v2 * std::conj(u1);
  return {DiskPoint(-v / u), 2.0 * std::arg(u)};
}

DiskPoint point_from_polar(double distance, double theta) {
  if (!(distance >= 0.0) || distance > kMaxDistance) {
    throw DomainError("hyperbolic distance must lie in [0, " + std::to_string(kMaxDistance) + "]");
  }
  if (!std::isfinite(theta)) {
    throw DomainError("polar angle must be finite");
  }
  const double r = std::tanh(0.5 * distance);
  return {r * std::cos(theta), r * std::sin(theta)};
}

double hyp_distance(const DiskPoint& p, const DiskPoint& q) {
  // t = |p - q| / |1 - conj(p) q|, and 1 - t^2 = (1-|p|^2)(1-|q|^2) / |1 - conj(p) q|^2.
  const double chord = std::hypot(p.x() - q.x(), p.y() - q.y());
  if (chord == 0.0) {
    return 0.0;
  }
  const double re = 1.0 - (p.x() * q.x() + p.y() * q.y());
  const double im = p.x() * q.y() - p.y() * q.x();
  const double denom = std::hypot(re, im);
  const double t = chord / denom;
  const double one_minus_t2 = (1.0 - p.norm2()) * (1.0 - q.norm2()) / (denom * denom);
  const double one_minus_t = one_minus_t2 / (1.0 + t);
  // 2 artanh t = log((1 + t) / (1 - t)) = log1p(2t / (1 - t))
  return std::log1p(2.0 * t / one_minus_t);
}

Geodesic geodesic_through(const DiskPoint& p, const DiskPoint& q) {
  const Vec2 pv = p.vec();
  const Vec2 qv = q.vec();
  if ((pv - qv).norm() <= kMinSeparation) {
    throw DegenerateError("geodesic through coincident points");
  }
  const double cross = pv.cross(qv);
  const double scale = std::max(pv.norm(), qv.norm());
  if (std::abs(cross) <= 1e-12 * scale) {
    const Vec2 far = pv.norm() >= qv.norm() ? pv : qv;
    return Diameter{far / far.norm()};
  }
  // The circle passes through p, q and the inversion p/|p|^2. The perpendicular
  // bisector of p and its inverse is 2 c.p = 1 + |p|^2; same for q.
  const double rp = 0.5 * (1.0 + pv.norm2());
  const double rq = 0.5 * (1.0 + qv.norm2());
  const Vec2 center{(rp * qv.y - pv.y * rq) / cross, (pv.x * rq - rp * qv.x) / cross};
  const double cn = center.norm();
  return Arc{EuclideanCircle(center, std::sqrt((cn - 1.0) * (cn + 1.0)))};
}

DiskIsometry isometry_to_origin(const DiskPoint& p) { return {p, 0.0}; }

DiskPoint apply_isometry(const DiskIsometry& m, const DiskPoint& p) { return m(p); }

Vec2 tangent_direction(const DiskPoint& v, const DiskPoint& p) {
  if ((p.vec() - v.vec()).norm() <= kMinSeparation) {
    throw DegenerateError("tangent direction between coincident points");
  }
  // The map z -> (z - v)/(1 - conj(v) z) has a positive real derivative at v,
  // so the image of p points along the tangent at v.
  const std::complex<double> w = (p.z() - v.z()) / (1.0 - std::conj(v.z()) * p.z());
  const double len = std::abs(w);
  return {w.real() / len, w.imag() / len};
}

double angle_at_vertex(const DiskPoint& v, const DiskPoint& p, const DiskPoint& q) {
  const Vec2 tp = tangent_direction(v, p);
  const Vec2 tq = tangent_direction(v, q);
  return std::atan2(std::abs(tp.cross(tq)), tp.dot(tq));
}

}  // namespace hyplobe
