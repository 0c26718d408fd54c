#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyplobe/disk_model.hpp"
#include "hyplobe/random.hpp"
#include "hyplobe/triangle.hpp"

namespace hyplobe {

/// Strictly convex geodesic polygon with counterclockwise vertices. Side i
/// joins vertex i to vertex i+1; side lengths and interior angles are measured
/// once at construction.
class HyperbolicPolygon {
 public:
  /// Throws DomainError unless n >= 3 and the vertices are distinct and in
  /// strictly convex counterclockwise position.
  explicit HyperbolicPolygon(std::vector<DiskPoint> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<DiskPoint>& vertices() const { return vertices_; }
  const std::vector<double>& side_lengths() const { return sides_; }
  const std::vector<double>& interior_angles() const { return angles_; }

  const DiskPoint& vertex(std::size_t i) const { return vertices_[i % size()]; }
  double side(std::size_t i) const { return sides_[i % size()]; }
  double angle(std::size_t i) const { return angles_[i % size()]; }

  HyperbolicPolygon transformed(const DiskIsometry& m) const;

 private:
  std::vector<DiskPoint> vertices_;
  std::vector<double> sides_;
  std::vector<double> angles_;
};

struct RegularPolygonSpec {
  int n = 3;
  double circumradius = 1.0;
};

struct RegularPolygon {
  double side = 0.0;
  double interior_angle = 0.0;
  double perimeter = 0.0;
  double area = 0.0;
};

struct CircleGeometry {
  double circumference = 0.0;
  double area = 0.0;
};

double polygon_perimeter(const HyperbolicPolygon& poly);

/// (n - 2) pi minus the angle sum.
double polygon_area(const HyperbolicPolygon& poly);

/// Hinge triangle V_{i-1} V_i V_{i+1}, solved from the two sides at V_i and
/// the interior angle there. beta sits at V_{i-1}, gamma at V_{i+1}.
TriangleSolution local_triangle(const HyperbolicPolygon& poly, std::size_t i);

RegularPolygon regular_polygon(const RegularPolygonSpec& spec);

/// Vertices at hyperbolic distance R from the origin, the first at angle `phase`.
HyperbolicPolygon regular_polygon_vertices(const RegularPolygonSpec& spec, double phase = 0.0);

/// Circumradius of the regular n-gon of perimeter L.
double circumradius_for_perimeter(int n, double perimeter);

CircleGeometry circle_geometry(double radius);

/// L^2 - 4 pi A - A^2. Nonnegative for admissible figures, zero for circles.
double isoperimetric_deficit(double length, double area);

// Steiner moves ----------------------------------------------------------
//
// Steiner polygons have an even number of vertices and are mirror-symmetric
// about the geodesic through V_0 and V_{n/2} (the axis). Vertex i of the upper
// chain hinges two rigid pieces, the chains V_0..V_i and V_i..V_{n/2}, and the
// hinge triangle is (V_0, V_i, V_{n/2}). Its third side lies on the axis and
// is free, so the mirror half follows every move.

/// Mirror-symmetry test about the axis; vertices must match within `tol`
/// in hyperbolic distance.
bool is_steiner_symmetric(const HyperbolicPolygon& poly, double tol = 1e-9);

/// Hinge triangle (V_0, V_i, V_{n/2}) with the apex at V_i; beta sits at V_0.
TriangleSolution hinge_triangle(const HyperbolicPolygon& poly, std::size_t i);

/// |alpha - (beta + gamma)| of the hinge triangle at vertex i.
double hinge_residual(const HyperbolicPolygon& poly, std::size_t i);

/// Largest hinge residual over the vertices strictly between V_0 and V_{n/2}.
double max_hinge_residual(const HyperbolicPolygon& poly);

struct SteinerMove {
  HyperbolicPolygon polygon;
  double delta_area = 0.0;
  bool accepted = false;
  double closure_error = 0.0;  // distance of the walked V_{n/2} from the axis
};

/// Sets the hinge angle at vertex i (or its mirror partner) to the optimum of
/// the hinge triangle, keeping every side length. Non-convex results are
/// rejected and the input is returned with delta_area = 0. Throws DomainError
/// for axis vertices or non-symmetric input and ClosureError when the rebuilt
/// chain misses the axis by more than 1e-8.
SteinerMove steiner_move(const HyperbolicPolygon& poly, std::size_t i);

struct SteinerRecord {
  int iteration = 0;
  std::size_t vertex = 0;
  double area_before = 0.0;
  double area_after = 0.0;
  double residual = 0.0;
  double perimeter = 0.0;
};

struct SteinerTrace {
  std::vector<SteinerRecord> records;
};

struct SteinerResult {
  HyperbolicPolygon polygon;
  SteinerTrace trace;
  bool converged = false;
  int sweeps = 0;
  int accepted_moves = 0;
  int rejected_moves = 0;
  double residual = 0.0;
};

/// Round-robin Steiner moves until every hinge residual is below tol or
/// max_sweeps sweeps have run.
SteinerResult steiner_optimize(const HyperbolicPolygon& poly, double tol, int max_sweeps);

struct CircumcircleFit {
  DiskPoint center;
  double radius = 0.0;
  double spread = 0.0;  // max - min vertex distance from center
};

/// Center minimizing the spread of vertex distances.
CircumcircleFit fit_circumcircle(const HyperbolicPolygon& poly);

/// Random strictly convex polygon: sorted random directions on a hyperbolic
/// circle of random radius, each vertex perturbed radially.
HyperbolicPolygon random_convex_polygon(int n, Rng& rng);

/// Random strictly convex polygon that is mirror-symmetric about the axis
/// through V_0 and V_{n/2}. n must be even.
HyperbolicPolygon random_steiner_polygon(int n, Rng& rng);

}  // namespace hyplobe
