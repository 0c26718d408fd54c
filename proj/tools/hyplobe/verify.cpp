#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <fmt/format.h>

#include "hyplobe/constants.hpp"
#include "hyplobe/errors.hpp"
#include "hyplobe/oracle.hpp"
#include "hyplobe/polygon.hpp"
#include "hyplobe/sampling.hpp"
#include "hyplobe/triangle.hpp"

namespace hyplobe::cli {

namespace {

struct Check {
  std::string name;
  std::function<PropertyOutcome(Rng&, int)> run;
};

PropertyOutcome outcome(std::string_view name, bool pass, int cases, std::string detail) {
  return {std::string(name), pass, cases, std::move(detail)};
}

struct RandomTriangle {
  double b;
  double c;
  double alpha;
};

RandomTriangle random_triangle(Rng& rng) {
  const double b = rng.uniform(0.1, 3.0);
  const double c = rng.uniform(0.1, 3.0);
  return {b, c, rng.uniform(0.05, kPi - 0.05)};
}

std::vector<Check> checks(const VerifyOptions& options) {
  std::vector<Check> all;

  all.push_back({"metric-axioms", [](Rng& rng, int n) {
    double worst_triangle = -INFINITY;
    bool symmetric = true;
    bool positive = true;
    for (int i = 0; i < n; ++i) {
      const DiskPoint p = random_disk_point(rng, 4.0);
      const DiskPoint q = random_disk_point(rng, 4.0);
      const DiskPoint r = random_disk_point(rng, 4.0);
      symmetric = symmetric && hyp_distance(p, q) == hyp_distance(q, p);
      positive = positive && hyp_distance(p, p) == 0.0 && hyp_distance(p, q) > 0.0;
      worst_triangle = std::max(worst_triangle, hyp_distance(p, r) - hyp_distance(p, q) - hyp_distance(q, r));
    }
    const bool pass = symmetric && positive && worst_triangle <= 1e-12;
    return outcome("metric-axioms", pass, n, fmt::format("max triangle excess {:.3e}", worst_triangle));
  }});

  all.push_back({"polar-round-trip", [](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = rng.uniform(0.0, 8.0);
      worst = std::max(worst, std::abs(hyp_distance(DiskPoint::origin(), point_from_polar(d, rng.uniform(0.0, 6.3))) - d));
    }
    return outcome("polar-round-trip", worst < 1e-12, n, fmt::format("max error {:.3e} (d <= 8)", worst));
  }});

  all.push_back({"isometry-invariance", [](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const DiskIsometry m = random_isometry(rng, 2.5);
      const DiskPoint p = random_disk_point(rng, 2.5);
      const DiskPoint q = random_disk_point(rng, 2.5);
      worst = std::max(worst, std::abs(hyp_distance(p, q) - hyp_distance(m(p), m(q))));
    }
    return outcome("isometry-invariance", worst < 1e-12, n, fmt::format("max distance change {:.3e}", worst));
  }});

  all.push_back({"geodesic-orthogonality", [](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const Geodesic g = geodesic_through(random_disk_point(rng, 3.0), random_disk_point(rng, 3.0));
      if (const auto* arc = std::get_if<Arc>(&g)) {
        worst = std::max(worst, orthogonality_residual(arc->circle));
      }
    }
    return outcome("geodesic-orthogonality", worst < 1e-10, n, fmt::format("max residual {:.3e}", worst));
  }});

  all.push_back({"conformality", [](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const DiskPoint v = random_disk_point(rng, 2.0);
      const DiskPoint p = random_disk_point(rng, 2.0);
      const DiskPoint q = random_disk_point(rng, 2.0);
      const DiskIsometry m = random_isometry(rng, 2.0);
      worst = std::max(worst, std::abs(angle_at_vertex(v, p, q) - angle_at_vertex(m(v), m(p), m(q))));
    }
    return outcome("conformality", worst < 1e-9, n, fmt::format("max angle change {:.3e}", worst));
  }});

  const bool flip = options.flip_tau_sign;
  all.push_back({"area-equivalence", [flip](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto [b, c, alpha] = random_triangle(rng);
      const TriangleSolution s = solve_sas(b, c, alpha);
      const double tau = flip ? -tau_angle(build_figure1(b, c, alpha)) : tau_angle(build_figure1(b, c, alpha));
      worst = std::max(worst, std::abs(area_defect(s.alpha, s.beta, s.gamma) - 2.0 * tau));
    }
    return outcome("area-equivalence", worst < 1e-9, n, fmt::format("max |defect - 2 tau| {:.3e}", worst));
  }});

  all.push_back({"inversion-identity", [](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto [b, c, alpha] = random_triangle(rng);
      const Figure1 fig = build_figure1(b, c, alpha);
      worst = std::max(worst, std::abs(fig.B.norm() * fig.b_prime.norm() - 1.0));
    }
    return outcome("inversion-identity", worst < 1e-10, n, fmt::format("max | |B||B'| - 1 | {:.3e}", worst));
  }});

  all.push_back({"max-area-grid-search", [](Rng& rng, int n) {
    const int pairs = std::max(1, n / 4);
    double worst_steps = 0.0;
    double worst_gap = 0.0;
    double worst_area = 0.0;
    int multimodal = 0;
    for (int i = 0; i < pairs; ++i) {
      const double b = rng.uniform(0.1, 3.0);
      const double c = rng.uniform(0.1, 3.0);
      const OptimalAngle opt = optimal_alpha(b, c);
      const oracle::GridSearchResult grid = oracle::grid_search_max_area(b, c, 100000);
      worst_steps = std::max(worst_steps, std::abs(grid.alpha_hat - opt.alpha_star) / grid.grid_step);
      const TriangleSolution& s = opt.solution;
      worst_gap = std::max(worst_gap, std::abs(s.alpha - s.beta - s.gamma));
      worst_area = std::max(worst_area, std::abs(s.area - (kPi - 2.0 * opt.alpha_star)));
      multimodal += grid.local_maxima != 1 ? 1 : 0;
    }
    const bool pass = worst_steps <= 2.0 && worst_gap < 1e-12 && worst_area < 1e-12 && multimodal == 0;
    return outcome("max-area-grid-search", pass, pairs,
                   fmt::format("max |root - argmax| {:.3f} steps, max |alpha-beta-gamma| {:.3e}, "
                               "max |area - (pi - 2 alpha)| {:.3e}, multimodal {}",
                               worst_steps, worst_gap, worst_area, multimodal));
  }});

  all.push_back({"optimality-certificates", [](Rng& rng, int n) {
    double worst = 0.0;
    double weakest_control = INFINITY;
    for (int i = 0; i < n; ++i) {
      const double b = rng.uniform(0.1, 3.0);
      const double c = rng.uniform(0.1, 3.0);
      const OptimalAngle opt = optimal_alpha(b, c);
      const OptimalityCertificate cert = optimality_certificate(build_figure1(b, c, opt.alpha_star));
      worst = std::max({worst, cert.right_angle_residual(), cert.tangency_gap, cert.residual});
      const OptimalityCertificate off = optimality_certificate(build_figure1(b, c, 0.5 * opt.alpha_star));
      weakest_control = std::min(weakest_control, off.right_angle_residual());
    }
    return outcome("optimality-certificates", worst < 1e-9 && weakest_control > 1e-3, n,
                   fmt::format("max certificate residual {:.3e}, min control residual {:.3e}", worst, weakest_control));
  }});

  all.push_back({"optimum-symmetry", [](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double b = rng.uniform(0.1, 3.0);
      const double c = rng.uniform(0.1, 3.0);
      worst = std::max(worst, std::abs(optimal_alpha(b, c).alpha_star - optimal_alpha(c, b).alpha_star));
    }
    return outcome("optimum-symmetry", worst < 1e-12, n, fmt::format("max |alpha*(b,c) - alpha*(c,b)| {:.3e}", worst));
  }});

  all.push_back({"euclidean-limit", [](Rng& rng, int n) {
    const double star = optimal_alpha(1e-3, 1e-3).alpha_star;
    double worst_side = 0.0;
    double worst_area = 0.0;
    double worst_defect = 0.0;
    for (int i = 0; i < n; ++i) {
      const double alpha = rng.uniform(0.05, kPi - 0.05);
      const TriangleSolution h = solve_sas(1e-3, 1e-3, alpha);
      const oracle::EuclideanTriangle e = oracle::euclidean_limit_triangle(1e-3, 1e-3, alpha);
      worst_side = std::max(worst_side, std::abs(h.a / e.a - 1.0));
      worst_area = std::max(worst_area, std::abs(h.area / e.area - 1.0));
      worst_defect = std::max(worst_defect, kPi - (h.alpha + h.beta + h.gamma));
    }
    const bool pass = std::abs(star - 0.5 * kPi) < 1e-3 && worst_side < 1e-6 && worst_area < 1e-4 && worst_defect < 1e-4;
    return outcome("euclidean-limit", pass, n,
                   fmt::format("alpha*(1e-3,1e-3) - pi/2 = {:.3e}, max side ratio - 1 {:.3e}, max area ratio - 1 {:.3e}",
                               star - 0.5 * kPi, worst_side, worst_area));
  }});

  all.push_back({"metric-oracle", [](Rng& rng, int n) {
    const int pairs = std::max(1, n / 10);
    double worst = 0.0;
    bool below = true;
    for (int i = 0; i < pairs; ++i) {
      const DiskPoint p = point_from_polar(2.0 * std::atanh(rng.uniform(0.0, 0.9)), rng.uniform(0.0, 2.0 * kPi));
      const DiskPoint q = point_from_polar(2.0 * std::atanh(rng.uniform(0.0, 0.9)), rng.uniform(0.0, 2.0 * kPi));
      const double exact = hyp_distance(p, q);
      const double sampled = oracle::geodesic_length_by_sampling(p, q, 10000);
      worst = std::max(worst, std::abs(exact - sampled));
      below = below && sampled <= exact + 1e-12;
    }
    return outcome("metric-oracle", worst < 1e-6 && below, pairs, fmt::format("max |distance - integral| {:.3e}", worst));
  }});

  all.push_back({"triangle-isometry-invariance", [](Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto [b, c, alpha] = random_triangle(rng);
      const EmbeddedTriangle t = embed_triangle(b, c, alpha);
      const DiskIsometry m = random_isometry(rng, 2.0);
      const DiskPoint A = m(t.A);
      const DiskPoint B = m(t.B);
      const DiskPoint C = m(t.C);
      const TriangleSolution s = solve_sas(b, c, alpha);
      const double angles[] = {angle_at_vertex(A, B, C), angle_at_vertex(B, C, A), angle_at_vertex(C, A, B)};
      const double diffs[] = {std::abs(hyp_distance(A, B) - c), std::abs(hyp_distance(A, C) - b),
                              std::abs(hyp_distance(B, C) - s.a), std::abs(angles[0] - s.alpha),
                              std::abs(angles[1] - s.beta), std::abs(angles[2] - s.gamma),
                              std::abs(area_defect(angles[0], angles[1], angles[2]) - s.area)};
      worst = std::max(worst, *std::max_element(std::begin(diffs), std::end(diffs)));
    }
    return outcome("triangle-isometry-invariance", worst < 1e-10, n, fmt::format("max change {:.3e}", worst));
  }});

  all.push_back({"steiner-run", [](Rng& rng, int) {
    const HyperbolicPolygon start = random_steiner_polygon(8, rng);
    const SteinerResult run = steiner_optimize(start, 1e-8, 10000);
    const double p0 = polygon_perimeter(start);
    double drift = 0.0;
    double prev_area = polygon_area(start);
    bool monotone = true;
    for (const SteinerRecord& r : run.trace.records) {
      drift = std::max(drift, std::abs(r.perimeter - p0));
      monotone = monotone && r.area_after >= prev_area - 1e-12;
      prev_area = r.area_after;
    }
    const double spread = fit_circumcircle(run.polygon).spread;
    const double d0 = isoperimetric_deficit(p0, polygon_area(start));
    const double d1 = isoperimetric_deficit(polygon_perimeter(run.polygon), polygon_area(run.polygon));
    const bool pass = run.converged && drift < 1e-9 && monotone && spread < 1e-6 && d1 < d0 && d1 >= -1e-9;
    return outcome("steiner-run", pass, 1,
                   fmt::format("moves {}, drift {:.3e}, spread {:.3e}, deficit {:.6f} -> {:.6f}", run.accepted_moves, drift,
                               spread, d0, d1));
  }});

  all.push_back({"regular-sweep", [](Rng&, int) {
    const double perimeter = 2.0 * kPi;
    double prev = INFINITY;
    bool decreasing = true;
    double area96 = 0.0;
    for (int n = 3; n <= 96; ++n) {
      const RegularPolygon reg = regular_polygon({n, circumradius_for_perimeter(n, perimeter)});
      const double deficit = isoperimetric_deficit(perimeter, reg.area);
      decreasing = decreasing && deficit < prev;
      prev = deficit;
      area96 = reg.area;
    }
    const double circle_area = circle_geometry(std::asinh(perimeter / (2.0 * kPi))).area;
    const double circle_deficit = isoperimetric_deficit(perimeter, circle_area);
    const double rel = std::abs(area96 / circle_area - 1.0);
    const bool pass = decreasing && std::abs(circle_deficit) < 1e-9 && rel < 2e-3;
    return outcome("regular-sweep", pass, 94,
                   fmt::format("circle deficit {:.3e}, area(96)/circle - 1 = {:.3e}", circle_deficit, rel));
  }});

  all.push_back({"deficit-nonnegative", [](Rng& rng, int n) {
    double lowest = INFINITY;
    for (int i = 0; i < n; ++i) {
      const HyperbolicPolygon poly = random_convex_polygon(3 + static_cast<int>(rng.uniform(0.0, 10.0)), rng);
      lowest = std::min(lowest, isoperimetric_deficit(polygon_perimeter(poly), polygon_area(poly)));
    }
    return outcome("deficit-nonnegative", lowest > 0.0, n, fmt::format("min deficit {:.6e}", lowest));
  }});

  return all;
}

}  // namespace

std::vector<PropertyOutcome> run_verification(const VerifyOptions& options) {
  const std::vector<Check> all = checks(options);
  std::vector<std::future<PropertyOutcome>> pending;
  pending.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    // Each property draws from its own stream so results do not depend on scheduling.
    const std::uint64_t stream = options.seed ^ (0x9E3779B97F4A7C15ULL * (k + 1));
    pending.push_back(std::async(std::launch::async, [&check = all[k], stream, n = options.samples] {
      Rng rng(stream);
      try {
        return check.run(rng, n);
      } catch (const std::exception& e) {
        return PropertyOutcome{check.name, false, 0, std::string("threw: ") + e.what()};
      }
    }));
  }
  std::vector<PropertyOutcome> out;
  out.reserve(pending.size());
  for (auto& f : pending) {
    out.push_back(f.get());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace hyplobe::cli
