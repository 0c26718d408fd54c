#include <cmath>
#include <complex>
#include <variant>

#include <gtest/gtest.h>

#include "hyplobe/constants.hpp"
#include "hyplobe/disk_model.hpp"
#include "hyplobe/errors.hpp"
#include "hyplobe/oracle.hpp"
#include "hyplobe/sampling.hpp"

namespace hyplobe {
namespace {

TEST(DiskPoint, RejectsPointsOnOrOutsideTheBoundary) {
  EXPECT_THROW(DiskPoint(1.0, 0.0), DomainError);
  EXPECT_THROW(DiskPoint(0.8, 0.8), DomainError);
  EXPECT_THROW(DiskPoint(NAN, 0.0), DomainError);
  EXPECT_NO_THROW(DiskPoint(0.999, 0.0));
}

TEST(PointFromPolar, Examples) {
  const DiskPoint o = point_from_polar(0.0, 1.234);
  EXPECT_EQ(o.x(), 0.0);
  EXPECT_EQ(o.y(), 0.0);

  const DiskPoint half = point_from_polar(std::log(3.0), 0.0);
  EXPECT_NEAR(half.x(), 0.5, 1e-15);
  EXPECT_NEAR(half.y(), 0.0, 1e-15);

  // tanh(1) = (e^2 - 1) / (e^2 + 1)
  const double e2 = std::exp(2.0);
  const DiskPoint up = point_from_polar(2.0, 0.5 * kPi);
  EXPECT_NEAR(up.x(), 0.0, 1e-15);
  EXPECT_NEAR(up.y(), (e2 - 1.0) / (e2 + 1.0), 1e-15);
  EXPECT_NEAR(up.y(), 0.7615941559557649, 1e-15);
}

TEST(PointFromPolar, RejectsOutOfRangeDistances) {
  EXPECT_THROW(point_from_polar(-0.1, 0.0), DomainError);
  EXPECT_THROW(point_from_polar(kMaxDistance + 1.0, 0.0), DomainError);
}

TEST(PointFromPolar, RoundTripsThroughDistance) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double d = rng.uniform(0.0, kMaxDistance);
    const DiskPoint p = point_from_polar(d, rng.uniform(0.0, 2.0 * kPi));
    // Storing tanh(d/2) in double limits the round trip to about eps * e^d.
    const double bound = std::max(1e-12, 4.0 * 2.3e-16 * std::exp(d));
    EXPECT_NEAR(hyp_distance(DiskPoint::origin(), p), d, bound) << "d = " << d;
  }
}

TEST(HypDistance, Examples) {
  const DiskPoint p(0.3, 0.1);
  EXPECT_EQ(hyp_distance(p, p), 0.0);
  EXPECT_NEAR(hyp_distance(DiskPoint::origin(), DiskPoint(0.5, 0.0)), std::log(3.0), 1e-15);

  const DiskPoint q(-0.2, 0.4);
  EXPECT_NEAR(hyp_distance(p, q), oracle::geodesic_length_by_sampling(p, q, 10000), 1e-6);
}

TEST(HypDistance, MatchesTheCrossRatioFormula) {
  // cosh d = 1 + 2 |p - q|^2 / ((1 - |p|^2)(1 - |q|^2))
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const DiskPoint p = random_disk_point(rng, 3.0);
    const DiskPoint q = random_disk_point(rng, 3.0);
    const double num = 2.0 * (p.vec() - q.vec()).norm2();
    const double expected = std::acosh(1.0 + num / ((1.0 - p.norm2()) * (1.0 - q.norm2())));
    EXPECT_NEAR(hyp_distance(p, q), expected, 1e-9 * std::max(1.0, expected));
  }
}

TEST(HypDistance, MetricAxioms) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_disk_point(rng, 5.0);
    const DiskPoint q = random_disk_point(rng, 5.0);
    const DiskPoint r = random_disk_point(rng, 5.0);
    EXPECT_EQ(hyp_distance(p, q), hyp_distance(q, p));
    EXPECT_GT(hyp_distance(p, q), 0.0);
    EXPECT_LE(hyp_distance(p, r), hyp_distance(p, q) + hyp_distance(q, r) + 1e-12);
  }
}

TEST(GeodesicThrough, DiametersThroughTheCenter) {
  const Geodesic g1 = geodesic_through(DiskPoint::origin(), DiskPoint(0.5, 0.0));
  ASSERT_TRUE(std::holds_alternative<Diameter>(g1));
  EXPECT_NEAR(std::abs(std::get<Diameter>(g1).direction.x), 1.0, 1e-15);

  const Geodesic g2 = geodesic_through(DiskPoint(0.3, 0.0), DiskPoint(0.7, 0.0));
  ASSERT_TRUE(std::holds_alternative<Diameter>(g2));
  EXPECT_NEAR(std::get<Diameter>(g2).direction.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::get<Diameter>(g2).direction.y, 0.0, 1e-15);
}

TEST(GeodesicThrough, ArcExample) {
  // (c - p)^2 = r^2 and |c|^2 = 1 + r^2 with p = (0.5, 0), q = (0, 0.5):
  // subtracting gives c.p = (1 + |p|^2) / 2, so cx = cy = 1.25 and r^2 = 2 * 1.25^2 - 1.
  const Geodesic g = geodesic_through(DiskPoint(0.5, 0.0), DiskPoint(0.0, 0.5));
  ASSERT_TRUE(std::holds_alternative<Arc>(g));
  const EuclideanCircle& c = std::get<Arc>(g).circle;
  EXPECT_NEAR(c.center.x, 1.25, 1e-12);
  EXPECT_NEAR(c.center.y, 1.25, 1e-12);
  EXPECT_NEAR(c.radius, std::sqrt(2.125), 1e-12);
  EXPECT_NEAR(c.radius, 1.457738, 1e-6);
}

TEST(GeodesicThrough, RandomArcsAreOrthogonalAndPassThroughBothPoints) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint p = random_disk_point(rng, 3.0);
    const DiskPoint q = random_disk_point(rng, 3.0);
    const Geodesic g = geodesic_through(p, q);
    if (const auto* arc = std::get_if<Arc>(&g)) {
      // |c|^2 and 1 + r^2 are both large for nearly straight arcs, so compare relative to their size.
      EXPECT_LT(orthogonality_residual(arc->circle) / (1.0 + arc->circle.radius * arc->circle.radius), 1e-10);
      EXPECT_TRUE(arc->circle.contains(p.vec(), 1e-10 * std::max(1.0, arc->circle.radius)));
      EXPECT_TRUE(arc->circle.contains(q.vec(), 1e-10 * std::max(1.0, arc->circle.radius)));
    }
  }
}

TEST(GeodesicThrough, CoincidentPointsAreDegenerate) {
  EXPECT_THROW(geodesic_through(DiskPoint(0.2, 0.2), DiskPoint(0.2, 0.2)), DegenerateError);
}

TEST(DiskIsometry, ToOriginExamples) {
  const DiskIsometry id = isometry_to_origin(DiskPoint::origin());
  const DiskPoint p(0.3, -0.4);
  EXPECT_NEAR(id(p).x(), p.x(), 1e-16);
  EXPECT_NEAR(id(p).y(), p.y(), 1e-16);

  const DiskPoint a(0.4, 0.0);
  EXPECT_NEAR(isometry_to_origin(a)(a).norm(), 0.0, 1e-16);
  EXPECT_EQ(apply_isometry(DiskIsometry::identity(), p), p);
  EXPECT_NEAR(apply_isometry(isometry_to_origin(p), p).norm(), 0.0, 1e-16);
}

TEST(DiskIsometry, PreservesDistance) {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const DiskIsometry m = random_isometry(rng, 3.0);
    const DiskPoint u = random_disk_point(rng, 3.0);
    const DiskPoint v = random_disk_point(rng, 3.0);
    EXPECT_NEAR(hyp_distance(u, v), hyp_distance(m(u), m(v)), 1e-12);
  }
}

TEST(DiskIsometry, InverseAndComposition) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const DiskIsometry m = random_isometry(rng, 2.0);
    const DiskIsometry n = random_isometry(rng, 2.0);
    const DiskPoint p = random_disk_point(rng, 2.0);
    const DiskPoint back = m.inverse()(m(p));
    EXPECT_NEAR(back.x(), p.x(), 1e-12);
    EXPECT_NEAR(back.y(), p.y(), 1e-12);
    const DiskPoint two_step = n(m(p));
    const DiskPoint composed = m.then(n)(p);
    EXPECT_NEAR(two_step.x(), composed.x(), 1e-12);
    EXPECT_NEAR(two_step.y(), composed.y(), 1e-12);
  }
}

TEST(AngleAtVertex, AtTheOriginIsTheEuclideanAngle) {
  const DiskPoint p(0.5, 0.0);
  const DiskPoint q(0.3, 0.3);
  EXPECT_NEAR(angle_at_vertex(DiskPoint::origin(), p, q), 0.25 * kPi, 1e-15);
}

TEST(AngleAtVertex, StraightAngleOnADiameter) {
  EXPECT_NEAR(angle_at_vertex(DiskPoint(0.1, 0.0), DiskPoint(-0.5, 0.0), DiskPoint(0.6, 0.0)), kPi, 1e-15);
}

TEST(AngleAtVertex, ConformalUnderIsometries) {
  Rng rng(19);
  for (int i = 0; i < 500; ++i) {
    const DiskPoint v = random_disk_point(rng, 2.0);
    const DiskPoint p = random_disk_point(rng, 2.0);
    const DiskPoint q = random_disk_point(rng, 2.0);
    const DiskIsometry m = random_isometry(rng, 2.0);
    EXPECT_NEAR(angle_at_vertex(v, p, q), angle_at_vertex(m(v), m(p), m(q)), 1e-9);
  }
}

TEST(AngleAtVertex, CoincidentPointsAreDegenerate) {
  EXPECT_THROW(angle_at_vertex(DiskPoint(0.1, 0.1), DiskPoint(0.1, 0.1), DiskPoint(0.2, 0.0)), DegenerateError);
}

}  // namespace
}  // namespace hyplobe
