// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hyplobe/constants.hpp"
#include "hyplobe/oracle.hpp"
#include "hyplobe/polygon.hpp"
#include "hyplobe/sampling.hpp"
#include "hyplobe/triangle.hpp"

namespace {

using namespace hyplobe;
using Clock = std::chrono::steady_clock;

// Tolerances and sizes, one block per criterion.
constexpr std::uint64_t kSeed = 20240601;

constexpr int kAreaTriangles = 1000;
constexpr double kAreaTol = 1e-9;
constexpr double kAreaSeconds = 1.0;

constexpr int kMaxAreaPairs = 200;
constexpr int kGridSamples = 100000;
constexpr double kGridSteps = 2.0;
constexpr double kMaxAreaTol = 1e-12;
constexpr double kMaxAreaSeconds = 30.0;

constexpr double kCertificateTol = 1e-9;
constexpr double kControlMin = 1e-3;

constexpr double kLimitSide = 1e-3;
constexpr double kLimitAlphaTol = 1e-3;
constexpr double kLimitSideRelTol = 1e-8;
constexpr int kLimitAngles = 200;

constexpr int kInversionFigures = 1000;
constexpr double kInversionTol = 1e-10;

constexpr int kSteinerN = 8;
constexpr std::uint64_t kSteinerSeed = 42;
constexpr double kSteinerTol = 1e-8;
constexpr int kSteinerMaxSweeps = 10000;
constexpr double kDriftTol = 1e-9;
constexpr double kSpreadTol = 1e-6;
constexpr double kDeficitFloor = -1e-9;
constexpr double kSteinerSeconds = 10.0;
// polygon_area sums n measured angles, each good to a few ulps of pi.
constexpr double kAreaEvalSlack = 4.0 * kSteinerN * kPi * std::numeric_limits<double>::epsilon();

constexpr int kSweepMin = 3;
constexpr int kSweepMax = 96;
constexpr double kCircleDeficitTol = 1e-9;
constexpr double kCircleAreaRelTol = 2e-3;

constexpr int kIsometryPairs = 500;
constexpr double kIsometryTol = 1e-10;

constexpr int kMetricPairs = 200;
constexpr int kMetricSegments = 10000;
constexpr double kMetricMaxNorm = 0.9;
constexpr double kMetricTol = 1e-6;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SasSample {
  double b;
  double c;
  double alpha;
};

SasSample random_sas(Rng& rng) {
  const double b = rng.uniform(0.1, 3.0);
  const double c = rng.uniform(0.1, 3.0);
  return {b, c, rng.uniform(0.05, kPi - 0.05)};
}

std::vector<std::pair<double, double>> max_area_pairs() {
  Rng rng(kSeed + 2);
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < kMaxAreaPairs; ++i) {
    const double b = rng.uniform(0.1, 3.0);
    pairs.emplace_back(b, rng.uniform(0.1, 3.0));
  }
  return pairs;
}

Verdict criterion_area_equivalence() {
  Rng rng(kSeed + 1);
  const auto start = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < kAreaTriangles; ++i) {
    const auto [b, c, alpha] = random_sas(rng);
    const TriangleSolution s = solve_sas(b, c, alpha);
    const Figure1 fig = build_figure1(b, c, alpha);
    worst = std::max(worst, std::abs(area_defect(s.alpha, s.beta, s.gamma) - 2.0 * fig.tau));
  }
  const double elapsed = seconds_since(start);
  return {worst < kAreaTol && elapsed < kAreaSeconds,
          fmt::format("{} triangles, max |defect - 2 tau| = {:.3e} (tol {:.0e}), {:.3f} s (limit {} s)",
                      kAreaTriangles, worst, kAreaTol, elapsed, kAreaSeconds)};
}

Verdict criterion_max_area() {
  const auto start = Clock::now();
  double worst_steps = 0.0;
  double worst_gap = 0.0;
  double worst_area = 0.0;
  int multimodal = 0;
  for (const auto& [b, c] : max_area_pairs()) {
    const OptimalAngle opt = optimal_alpha(b, c);
    const oracle::GridSearchResult grid = oracle::grid_search_max_area(b, c, kGridSamples);
    worst_steps = std::max(worst_steps, std::abs(grid.alpha_hat - opt.alpha_star) / grid.grid_step);
    const TriangleSolution& s = opt.solution;
    worst_gap = std::max(worst_gap, std::abs(opt.alpha_star - s.beta - s.gamma));
    worst_area = std::max(worst_area, std::abs(s.area - (kPi - 2.0 * opt.alpha_star)));
    multimodal += grid.local_maxima == 1 ? 0 : 1;
  }
  const double elapsed = seconds_since(start);
  const bool pass =
      worst_steps <= kGridSteps && worst_gap < kMaxAreaTol && worst_area < kMaxAreaTol && elapsed < kMaxAreaSeconds;
  return {pass, fmt::format("{} pairs, max |root - argmax| = {:.3f} grid steps (limit {}), max |alpha - beta - gamma| "
                            "= {:.3e}, max |area - (pi - 2 alpha)| = {:.3e} (tol {:.0e}), grids with >1 local max: {}, "
                            "{:.2f} s (limit {} s)",
                            kMaxAreaPairs, worst_steps, kGridSteps, worst_gap, worst_area, kMaxAreaTol, multimodal,
                            elapsed, kMaxAreaSeconds)};
}

Verdict criterion_certificates() {
  double worst_acb = 0.0;
  double worst_tangency = 0.0;
  double worst_residual = 0.0;
  double weakest_control = INFINITY;
  for (const auto& [b, c] : max_area_pairs()) {
    const OptimalAngle opt = optimal_alpha(b, c);
    const OptimalityCertificate at = optimality_certificate(build_figure1(b, c, opt.alpha_star));
    worst_acb = std::max(worst_acb, at.right_angle_residual());
    worst_tangency = std::max(worst_tangency, at.tangency_gap);
    worst_residual = std::max(worst_residual, at.residual);
    const OptimalityCertificate off = optimality_certificate(build_figure1(b, c, 0.5 * opt.alpha_star));
    weakest_control = std::min(weakest_control, off.right_angle_residual());
  }
  const bool pass = worst_acb < kCertificateTol && worst_tangency < kCertificateTol &&
                    worst_residual < kCertificateTol && weakest_control > kControlMin;
  return {pass, fmt::format("{} pairs at alpha*: max |ACB' - pi/2| = {:.3e}, max tangency gap = {:.3e}, max "
                            "|alpha + tau - pi/2| = {:.3e} (tol {:.0e}); at alpha*/2 min |ACB' - pi/2| = {:.3e} "
                            "(must exceed {:.0e})",
                            kMaxAreaPairs, worst_acb, worst_tangency, worst_residual, kCertificateTol,
                            weakest_control, kControlMin)};
}

Verdict criterion_euclidean_limit() {
  const double alpha_star = optimal_alpha(kLimitSide, kLimitSide).alpha_star;
  const double alpha_err = std::abs(alpha_star - 0.5 * kPi);
  double worst_rel = 0.0;
  for (int k = 0; k < kLimitAngles; ++k) {
    const double alpha = 0.05 + (kPi - 0.1) * k / (kLimitAngles - 1);
    const double hyperbolic = solve_sas(kLimitSide, kLimitSide, alpha).a;
    const double flat = oracle::euclidean_limit_triangle(kLimitSide, kLimitSide, alpha).a;
    worst_rel = std::max(worst_rel, std::abs(hyperbolic / flat - 1.0));
  }
  const double at_one = std::abs(solve_sas(kLimitSide, kLimitSide, 1.0).a /
                                     oracle::euclidean_limit_triangle(kLimitSide, kLimitSide, 1.0).a -
                                 1.0);
  const bool pass = alpha_err < kLimitAlphaTol && worst_rel < kLimitSideRelTol;
  return {pass, fmt::format("|alpha*(1e-3, 1e-3) - pi/2| = {:.3e} (tol {:.0e}); max relative side gap to the flat "
                            "law of cosines over {} angles = {:.3e}, at alpha = 1: {:.3e} (tol {:.0e})",
                            alpha_err, kLimitAlphaTol, kLimitAngles, worst_rel, at_one, kLimitSideRelTol)};
}

Verdict criterion_inversion() {
  Rng rng(kSeed + 5);
  double worst = 0.0;
  for (int i = 0; i < kInversionFigures; ++i) {
    const auto [b, c, alpha] = random_sas(rng);
    const Figure1 fig = build_figure1(b, c, alpha);
    worst = std::max(worst, std::abs(fig.B.norm() * fig.b_prime.norm() - 1.0));
  }
  return {worst < kInversionTol, fmt::format("{} figures, max | |B| |B'| - 1 | = {:.3e} (tol {:.0e})",
                                             kInversionFigures, worst, kInversionTol)};
}

Verdict criterion_steiner() {
  const auto start = Clock::now();
  Rng rng(kSteinerSeed);
  const HyperbolicPolygon initial = random_steiner_polygon(kSteinerN, rng);
  const SteinerResult run = steiner_optimize(initial, kSteinerTol, kSteinerMaxSweeps);
  const CircumcircleFit fit = fit_circumcircle(run.polygon);
  const double elapsed = seconds_since(start);

  const double p0 = polygon_perimeter(initial);
  double drift = 0.0;
  double prev = polygon_area(initial);
  int decreases = 0;
  int strict_decreases = 0;
  double largest_drop = 0.0;
  for (const SteinerRecord& r : run.trace.records) {
    drift = std::max(drift, std::abs(r.perimeter - p0));
    decreases += r.area_after < prev - kAreaEvalSlack ? 1 : 0;
    strict_decreases += r.area_after < prev ? 1 : 0;
    largest_drop = std::max(largest_drop, prev - r.area_after);
    prev = r.area_after;
  }
  drift = std::max(drift, std::abs(polygon_perimeter(run.polygon) - p0));
  const double d0 = isoperimetric_deficit(p0, polygon_area(initial));
  const double d1 = isoperimetric_deficit(polygon_perimeter(run.polygon), polygon_area(run.polygon));
  const bool pass = run.converged && drift < kDriftTol && decreases == 0 && fit.spread < kSpreadTol && d1 < d0 &&
                    d1 >= kDeficitFloor && elapsed < kSteinerSeconds;
  return {pass, fmt::format("octagon seed {}: converged = {}, {} moves, perimeter drift = {:.3e} (tol {:.0e}), area "
                            "decreases beyond {:.1e} = {} (strict: {}, largest {:.1e}), circumradius spread = {:.3e} (tol {:.0e}), "
                            "deficit {:.6f} -> {:.6f}, {:.3f} s (limit {} s)",
                            kSteinerSeed, run.converged, run.accepted_moves, drift, kDriftTol, kAreaEvalSlack,
                            decreases, strict_decreases, largest_drop, fit.spread,
                            kSpreadTol, d0, d1, elapsed, kSteinerSeconds)};
}

Verdict criterion_regular_sweep() {
  const double perimeter = 2.0 * kPi;
  double prev = INFINITY;
  int non_decreasing = 0;
  double area_last = 0.0;
  for (int n = kSweepMin; n <= kSweepMax; ++n) {
    const double area = regular_polygon({n, circumradius_for_perimeter(n, perimeter)}).area;
    const double deficit = isoperimetric_deficit(perimeter, area);
    non_decreasing += deficit < prev ? 0 : 1;
    prev = deficit;
    area_last = area;
  }
  const CircleGeometry circle = circle_geometry(std::asinh(perimeter / (2.0 * kPi)));
  const double circle_deficit = std::abs(isoperimetric_deficit(circle.circumference, circle.area));
  const double rel = std::abs(area_last / circle.area - 1.0);
  const bool pass = non_decreasing == 0 && circle_deficit < kCircleDeficitTol && rel < kCircleAreaRelTol;
  return {pass, fmt::format("n = {}..{} at L = 2 pi: non-decreasing steps = {}, circle |deficit| = {:.3e} (tol "
                            "{:.0e}), |area(96) / circle area - 1| = {:.3e} (tol {:.0e})",
                            kSweepMin, kSweepMax, non_decreasing, circle_deficit, kCircleDeficitTol, rel,
                            kCircleAreaRelTol)};
}

Verdict criterion_isometry() {
  Rng rng(kSeed + 8);
  double worst = 0.0;
  for (int i = 0; i < kIsometryPairs; ++i) {
    const auto [b, c, alpha] = random_sas(rng);
    const EmbeddedTriangle t = embed_triangle(b, c, alpha);
    const DiskIsometry m = random_isometry(rng, 3.0);
    const DiskPoint P[] = {t.A, t.B, t.C};
    const DiskPoint Q[] = {m(t.A), m(t.B), m(t.C)};
    double before_angles[3];
    double after_angles[3];
    for (int k = 0; k < 3; ++k) {
      const int k1 = (k + 1) % 3;
      const int k2 = (k + 2) % 3;
      worst = std::max(worst, std::abs(hyp_distance(P[k], P[k1]) - hyp_distance(Q[k], Q[k1])));
      before_angles[k] = angle_at_vertex(P[k], P[k1], P[k2]);
      after_angles[k] = angle_at_vertex(Q[k], Q[k1], Q[k2]);
      worst = std::max(worst, std::abs(before_angles[k] - after_angles[k]));
    }
    const double before = area_defect(before_angles[0], before_angles[1], before_angles[2]);
    const double after = area_defect(after_angles[0], after_angles[1], after_angles[2]);
    worst = std::max(worst, std::abs(before - after));
  }
  return {worst < kIsometryTol, fmt::format("{} (triangle, isometry) pairs, max change in sides/angles/area = {:.3e} "
                                            "(tol {:.0e})",
                                            kIsometryPairs, worst, kIsometryTol)};
}

Verdict criterion_metric_oracle() {
  Rng rng(kSeed + 9);
  double worst = 0.0;
  int above = 0;
  for (int i = 0; i < kMetricPairs; ++i) {
    // Uniform in the Euclidean disk of radius 0.9, with the boundary case forced for the first pair.
    auto draw = [&] {
      const double r = i == 0 ? kMetricMaxNorm : kMetricMaxNorm * std::sqrt(rng.uniform());
      const double theta = rng.uniform(0.0, 2.0 * kPi);
      return DiskPoint(r * std::cos(theta), r * std::sin(theta));
    };
    const DiskPoint p = draw();
    const DiskPoint q = draw();
    const double exact = hyp_distance(p, q);
    const double sampled = oracle::geodesic_length_by_sampling(p, q, kMetricSegments);
    worst = std::max(worst, std::abs(exact - sampled));
    above += sampled > exact + 1e-12 ? 1 : 0;
  }
  return {worst < kMetricTol, fmt::format("{} pairs with |p|, |q| <= {}, {} segments: max |d - integral| = {:.3e} "
                                          "(tol {:.0e}), integrals above d: {}",
                                          kMetricPairs, kMetricMaxNorm, kMetricSegments, worst, kMetricTol, above)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Verdict criterion_determinism(const std::string& hyplobe) {
  if (hyplobe.empty()) {
    return {false, "no hyplobe executable given (--hyplobe PATH)"};
  }
  const auto dir = std::filesystem::temp_directory_path();
  const auto pid = std::to_string(static_cast<long long>(Clock::now().time_since_epoch().count()));
  const std::filesystem::path first = dir / ("hyplobe_accept_" + pid + "_1.csv");
  const std::filesystem::path second = dir / ("hyplobe_accept_" + pid + "_2.csv");
  int codes[2];
  int k = 0;
  for (const auto& path : {first, second}) {
    const std::string cmd =
        fmt::format("\"{}\" steiner --seed 42 --format csv --output \"{}\"", hyplobe, path.string());
    codes[k++] = std::system(cmd.c_str());
  }
  const std::string a = read_file(first);
  const std::string b = read_file(second);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  const bool pass = codes[0] == 0 && codes[1] == 0 && !a.empty() && a == b;
  return {pass, fmt::format("two `steiner --seed 42` runs: exit {} and {}, {} and {} bytes, identical = {}", codes[0],
                            codes[1], a.size(), b.size(), a == b)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::string hyplobe;
  app.add_option("--only", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--hyplobe", hyplobe, "Path to the hyplobe executable (criterion 10)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"area equivalence", criterion_area_equivalence},
      {"maximum-area condition vs grid search", criterion_max_area},
      {"optimality certificates", criterion_certificates},
      {"Euclidean limit", criterion_euclidean_limit},
      {"inversion identity", criterion_inversion},
      {"Steiner run", criterion_steiner},
      {"regular-polygon sweep", criterion_regular_sweep},
      {"isometry invariance", criterion_isometry},
      {"metric oracle", criterion_metric_oracle},
      {"determinism", [&] { return criterion_determinism(hyplobe); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only != 0 && only != number) {
      continue;
    }
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::cout << fmt::format("[{}] criterion {:2}: {}: {}", v.pass ? "PASS" : "FAIL", number, criteria[i].first,
                             v.detail)
              << std::endl;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
