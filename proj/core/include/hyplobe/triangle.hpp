#pragma once

#include "hyplobe/disk_model.hpp"

namespace hyplobe {

/// Sides and angles of a hyperbolic triangle ABC. Side a is opposite alpha, so
/// c = |AB| and b = |AC| are the two sides that meet at A.
struct TriangleSolution {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double area = 0.0;
};

/// Triangle with the apex A placed at the center of the disk.
struct EmbeddedTriangle {
  DiskPoint A;
  DiskPoint B;
  DiskPoint C;
};

/// The construction behind the area identity: the Euclidean circle omega that
/// carries geodesic BC, its second intersection B' with the line AB, the circle
/// psi traced by C as the angle at A varies, and tau = angle AB'C.
struct Figure1 {
  DiskPoint A;
  DiskPoint B;
  DiskPoint C;
  EuclideanCircle omega;
  EuclideanCircle psi;
  Vec2 b_prime;
  double tau = 0.0;
};

struct OptimalAngle {
  double alpha_star = 0.0;
  TriangleSolution solution;
};

/// Euclidean witnesses that the angle at A maximizes the area.
struct OptimalityCertificate {
  double acb_angle = 0.0;      // Euclidean angle ACB'
  double tangency_gap = 0.0;   // | dist(A, line B'C) - radius(psi) |
  double residual = 0.0;       // | alpha + tau - pi/2 |

  double right_angle_residual() const;
  bool certifies(double tol) const;
};

/// Solves the triangle from two sides and the included angle at A.
TriangleSolution solve_sas(double b, double c, double alpha);

/// pi - (alpha + beta + gamma); throws DomainError unless the angles form a hyperbolic triangle.
double area_defect(double alpha, double beta, double gamma);

EmbeddedTriangle embed_triangle(double b, double c, double alpha);

/// Euclidean circle containing geodesic BC. Throws DegenerateError when B, C
/// and the origin are collinear.
EuclideanCircle omega_circle(const DiskPoint& B, const DiskPoint& C);

/// Second intersection of the Euclidean line through the origin and B with omega.
Vec2 b_prime_point(const DiskPoint& B, const EuclideanCircle& omega);

double tau_angle(const Figure1& fig);

Figure1 build_figure1(double b, double c, double alpha);

/// The apex angle maximizing area for fixed sides b and c: the root of
/// alpha - beta(alpha) - gamma(alpha).
OptimalAngle optimal_alpha(double b, double c);

OptimalityCertificate optimality_certificate(const Figure1& fig);

}  // namespace hyplobe
