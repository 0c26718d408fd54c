#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hyplobe/constants.hpp"
#include "hyplobe/errors.hpp"
#include "hyplobe/oracle.hpp"
#include "hyplobe/polygon.hpp"
#include "hyplobe/random.hpp"
#include "hyplobe/triangle.hpp"
#include "svg.hpp"
#include "verify.hpp"

namespace hyplobe::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
  std::string path;
  std::string format;
};

// Thrown for an unwritable output path.
struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

Json point_json(const Vec2& p) { return Json::array({p.x, p.y}); }
Json point_json(const DiskPoint& p) { return point_json(p.vec()); }

Json circle_json(const EuclideanCircle& c) { return {{"center", point_json(c.center)}, {"radius", c.radius}}; }

Json vertices_json(const HyperbolicPolygon& poly) {
  Json out = Json::array();
  for (const DiskPoint& p : poly.vertices()) {
    out.push_back(point_json(p));
  }
  return out;
}

bool all_finite(const Json& j) {
  if (j.is_number_float()) {
    return std::isfinite(j.get<double>());
  }
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (!all_finite(item)) {
        return false;
      }
    }
  }
  return true;
}

std::string dump(const Json& j) {
  if (!all_finite(j)) {
    throw std::logic_error("report contains a non-finite number");
  }
  return j.dump(2) + "\n";
}

void emit(const Output& where, const std::string& text, std::ostream& out) {
  if (where.path.empty() || where.path == "-") {
    out << text;
    return;
  }
  std::ofstream file(where.path, std::ios::binary);
  if (!file) {
    throw OutputError("cannot open output file " + where.path);
  }
  file << text;
}

// triangle ---------------------------------------------------------------

struct TriangleArgs {
  double b = 1.0;
  double c = 1.0;
  double alpha = 0.5 * kPi;
};

int cmd_triangle(const TriangleArgs& args, const Output& where, std::ostream& out) {
  const TriangleSolution s = solve_sas(args.b, args.c, args.alpha);
  const Figure1 fig = build_figure1(args.b, args.c, args.alpha);
  const double defect = area_defect(s.alpha, s.beta, s.gamma);
  const double two_tau = 2.0 * fig.tau;

  std::string text;
  if (where.format == "svg") {
    text = render_figure1(fig, fmt::format("b = {:.6g}, c = {:.6g}, alpha = {:.6g}", args.b, args.c, args.alpha));
  } else if (where.format == "csv") {
    text = "a,b,c,alpha,beta,gamma,area,defect,two_tau,area_difference\n";
    text += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", num(s.a), num(s.b), num(s.c), num(s.alpha), num(s.beta),
                        num(s.gamma), num(s.area), num(defect), num(two_tau), num(std::abs(defect - two_tau)));
  } else {
    Json j;
    j["command"] = "triangle";
    j["inputs"] = {{"b", args.b}, {"c", args.c}, {"alpha", args.alpha}};
    j["solution"] = {{"a", s.a},       {"b", s.b},         {"c", s.c},       {"alpha", s.alpha},
                     {"beta", s.beta}, {"gamma", s.gamma}, {"area", s.area}};
    j["area_check"] = {{"defect", defect}, {"two_tau", two_tau}, {"difference", std::abs(defect - two_tau)}};
    j["figure"] = {{"A", point_json(fig.A)},         {"B", point_json(fig.B)},
                   {"C", point_json(fig.C)},         {"omega", circle_json(fig.omega)},
                   {"psi", circle_json(fig.psi)},    {"b_prime", point_json(fig.b_prime)},
                   {"tau", fig.tau}};
    text = dump(j);
  }
  emit(where, text, out);
  return kExitOk;
}

// optimize ---------------------------------------------------------------

struct OptimizeArgs {
  double b = 1.0;
  double c = 1.0;
  int grid_samples = 100000;
};

int cmd_optimize(const OptimizeArgs& args, const Output& where, std::ostream& out) {
  const OptimalAngle opt = optimal_alpha(args.b, args.c);
  const TriangleSolution& s = opt.solution;
  const Figure1 fig = build_figure1(args.b, args.c, opt.alpha_star);
  const OptimalityCertificate cert = optimality_certificate(fig);
  const oracle::GridSearchResult grid = oracle::grid_search_max_area(args.b, args.c, args.grid_samples);
  const double gap = std::abs(grid.alpha_hat - opt.alpha_star);

  std::string text;
  if (where.format == "svg") {
    text = render_figure1(fig, fmt::format("optimum: b = {:.6g}, c = {:.6g}, alpha* = {:.9g}", args.b, args.c,
                                           opt.alpha_star));
  } else if (where.format == "csv") {
    text =
        "b,c,alpha_star,beta,gamma,area,angle_gap,acb_residual,tangency_gap,certificate_residual,"
        "grid_alpha_hat,grid_gap,grid_step\n";
    text += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", num(args.b), num(args.c), num(opt.alpha_star),
                        num(s.beta), num(s.gamma), num(s.area), num(std::abs(s.alpha - s.beta - s.gamma)),
                        num(cert.right_angle_residual()), num(cert.tangency_gap), num(cert.residual),
                        num(grid.alpha_hat), num(gap), num(grid.grid_step));
  } else {
    Json j;
    j["command"] = "optimize";
    j["inputs"] = {{"b", args.b}, {"c", args.c}, {"grid_samples", args.grid_samples}};
    j["alpha_star"] = opt.alpha_star;
    j["beta"] = s.beta;
    j["gamma"] = s.gamma;
    j["a"] = s.a;
    j["area"] = s.area;
    j["angle_gap"] = std::abs(s.alpha - s.beta - s.gamma);
    j["area_vs_pi_minus_two_alpha"] = std::abs(s.area - (kPi - 2.0 * opt.alpha_star));
    j["certificates"] = {{"acb_angle", cert.acb_angle},
                         {"right_angle_residual", cert.right_angle_residual()},
                         {"tangency_gap", cert.tangency_gap},
                         {"residual", cert.residual}};
    j["grid_search"] = {{"alpha_hat", grid.alpha_hat},       {"area_hat", grid.area_hat},
                        {"grid_step", grid.grid_step},       {"gap", gap},
                        {"gap_in_steps", gap / grid.grid_step}, {"local_maxima", grid.local_maxima}};
    text = dump(j);
  }
  emit(where, text, out);
  return kExitOk;
}

// steiner ----------------------------------------------------------------

struct SteinerArgs {
  int n = 8;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  int max_sweeps = 10000;
  std::string trace_path;
};

std::string trace_csv(const HyperbolicPolygon& initial, const SteinerResult& run) {
  std::string text = "iter,vertex,area,perimeter,residual\n";
  text += fmt::format("0,,{},{},{}\n", num(polygon_area(initial)), num(polygon_perimeter(initial)),
                      num(max_hinge_residual(initial)));
  for (const SteinerRecord& r : run.trace.records) {
    text += fmt::format("{},{},{},{},{}\n", r.iteration, r.vertex, num(r.area_after), num(r.perimeter),
                        num(r.residual));
  }
  return text;
}

Json polygon_summary(const HyperbolicPolygon& poly) {
  const double perimeter = polygon_perimeter(poly);
  const double area = polygon_area(poly);
  return {{"area", area},
          {"perimeter", perimeter},
          {"deficit", isoperimetric_deficit(perimeter, area)},
          {"max_hinge_residual", max_hinge_residual(poly)},
          {"vertices", vertices_json(poly)}};
}

int cmd_steiner(const SteinerArgs& args, const Output& where, std::ostream& out) {
  if (args.n < 4 || args.n % 2 != 0) {
    throw DomainError("--n must be even and at least 4 (Steiner polygons are mirror-symmetric)");
  }
  if (!(args.tol > 0.0) || args.max_sweeps < 0) {
    throw DomainError("--tol must be positive and --max-sweeps nonnegative");
  }
  Rng rng(args.seed);
  const HyperbolicPolygon initial = random_steiner_polygon(args.n, rng);
  const SteinerResult run = steiner_optimize(initial, args.tol, args.max_sweeps);
  const CircumcircleFit fit = fit_circumcircle(run.polygon);
  const std::string csv = trace_csv(initial, run);

  double drift = 0.0;
  const double p0 = polygon_perimeter(initial);
  for (const SteinerRecord& r : run.trace.records) {
    drift = std::max(drift, std::abs(r.perimeter - p0));
  }

  std::string text;
  if (where.format == "csv") {
    text = csv;
  } else if (where.format == "svg") {
    text = render_steiner(initial, run.polygon, fit);
  } else {
    Json j;
    j["command"] = "steiner";
    j["seed"] = args.seed;
    j["inputs"] = {{"n", args.n}, {"tol", args.tol}, {"max_sweeps", args.max_sweeps}};
    j["converged"] = run.converged;
    j["sweeps"] = run.sweeps;
    j["accepted_moves"] = run.accepted_moves;
    j["rejected_moves"] = run.rejected_moves;
    j["residual"] = run.residual;
    j["perimeter_drift"] = drift;
    j["initial"] = polygon_summary(initial);
    j["final"] = polygon_summary(run.polygon);
    j["circumcircle"] = {{"center", point_json(fit.center)}, {"radius", fit.radius}, {"spread", fit.spread}};
    text = dump(j);
  }
  emit(where, text, out);
  if (!args.trace_path.empty()) {
    emit({args.trace_path, "csv"}, csv, out);
  }
  return run.converged ? kExitOk : kExitNotConverged;
}

// isoperimetric ----------------------------------------------------------

struct IsoperimetricArgs {
  int n_min = 3;
  int n_max = 96;
  double perimeter = 2.0 * kPi;
};

int cmd_isoperimetric(const IsoperimetricArgs& args, const Output& where, std::ostream& out) {
  if (args.n_min < 3 || args.n_max < args.n_min) {
    throw DomainError("need 3 <= --n-min <= --n-max");
  }
  const double L = args.perimeter;
  struct Row {
    int n;
    double circumradius;
    double area;
    double deficit;
  };
  std::vector<Row> rows;
  for (int n = args.n_min; n <= args.n_max; ++n) {
    const double r = circumradius_for_perimeter(n, L);
    const RegularPolygon reg = regular_polygon({n, r});
    rows.push_back({n, r, reg.area, isoperimetric_deficit(L, reg.area)});
  }
  // Circle of circumference L: 2 pi sinh r = L.
  const double circle_r = std::asinh(L / (2.0 * kPi));
  const CircleGeometry circle = circle_geometry(circle_r);
  const double circle_deficit = isoperimetric_deficit(L, circle.area);

  std::string text;
  if (where.format == "json") {
    Json j;
    j["command"] = "isoperimetric";
    j["perimeter"] = L;
    j["rows"] = Json::array();
    for (const Row& row : rows) {
      j["rows"].push_back(
          {{"n", row.n}, {"circumradius", row.circumradius}, {"area", row.area}, {"deficit", row.deficit}});
    }
    j["circle"] = {{"radius", circle_r}, {"area", circle.area}, {"deficit", circle_deficit}};
    text = dump(j);
  } else {
    text = "n,area,deficit\n";
    for (const Row& row : rows) {
      text += fmt::format("{},{},{}\n", row.n, num(row.area), num(row.deficit));
    }
    text += fmt::format("circle,{},{}\n", num(circle.area), num(circle_deficit));
  }
  emit(where, text, out);
  return kExitOk;
}

// verify -----------------------------------------------------------------

struct VerifyArgs {
  int samples = 200;
  std::uint64_t seed = 42;
  std::string inject_fault;
};

int cmd_verify(const VerifyArgs& args, const Output& where, std::ostream& out, std::ostream& err) {
  if (args.samples < 1) {
    throw DomainError("--samples must be positive");
  }
  VerifyOptions options;
  options.samples = args.samples;
  options.seed = args.seed;
  options.flip_tau_sign = args.inject_fault == "tau-sign";
  const std::vector<PropertyOutcome> outcomes = run_verification(options);

  std::vector<std::string> failed;
  for (const PropertyOutcome& o : outcomes) {
    if (!o.pass) {
      failed.push_back(o.name);
    }
  }

  std::string text;
  if (where.format == "json") {
    Json j;
    j["command"] = "verify";
    j["seed"] = args.seed;
    j["samples"] = args.samples;
    if (!args.inject_fault.empty()) {
      j["injected_fault"] = args.inject_fault;
    }
    j["properties"] = Json::array();
    for (const PropertyOutcome& o : outcomes) {
      j["properties"].push_back({{"name", o.name}, {"pass", o.pass}, {"cases", o.cases}, {"detail", o.detail}});
    }
    j["passed"] = failed.empty();
    text = dump(j);
  } else {
    text = fmt::format("seed {} samples {}{}\n", args.seed, args.samples,
                       args.inject_fault.empty() ? "" : " injected-fault " + args.inject_fault);
    for (const PropertyOutcome& o : outcomes) {
      text += fmt::format("{} {} ({} cases): {}\n", o.pass ? "PASS" : "FAIL", o.name, o.cases, o.detail);
    }
    text += fmt::format("{}/{} properties passed\n", outcomes.size() - failed.size(), outcomes.size());
  }
  emit(where, text, out);
  for (const std::string& name : failed) {
    err << "verification failed: " << name << "\n";
  }
  return failed.empty() ? kExitOk : kExitVerifyFailed;
}

void add_output_flags(CLI::App* sub, Output& where, std::vector<std::string> formats) {
  sub->add_option("--output,-o", where.path, "Output file (default: standard output)");
  sub->add_option("--format", where.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic triangle and isoperimetry toolkit on the Poincare disk", "hyplobe"};
  app.require_subcommand(1);

  TriangleArgs tri;
  Output tri_out{"", "json"};
  auto* triangle = app.add_subcommand("triangle", "Solve a triangle from two sides and the included angle");
  triangle->add_option("--b", tri.b, "Side AC")->required();
  triangle->add_option("--c", tri.c, "Side AB")->required();
  triangle->add_option("--alpha", tri.alpha, "Angle at A in radians")->required();
  add_output_flags(triangle, tri_out, {"json", "csv", "svg"});

  OptimizeArgs opt;
  Output opt_out{"", "json"};
  auto* optimize = app.add_subcommand("optimize", "Maximize triangle area over the included angle");
  optimize->add_option("--b", opt.b, "Side AC")->required();
  optimize->add_option("--c", opt.c, "Side AB")->required();
  optimize->add_option("--grid-samples", opt.grid_samples, "Grid-search cross-check resolution")
      ->capture_default_str();
  add_output_flags(optimize, opt_out, {"json", "csv", "svg"});

  SteinerArgs st;
  Output st_out{"", "json"};
  auto* steiner = app.add_subcommand("steiner", "Run Steiner vertex moves on a seeded random polygon");
  steiner->add_option("--n", st.n, "Vertex count (even, >= 4)")->capture_default_str();
  steiner->add_option("--seed", st.seed, "64-bit seed")->capture_default_str();
  steiner->add_option("--tol", st.tol, "Hinge residual tolerance")->capture_default_str();
  steiner->add_option("--max-sweeps", st.max_sweeps, "Sweep limit")->capture_default_str();
  steiner->add_option("--trace", st.trace_path, "Also write the trace CSV to this file");
  add_output_flags(steiner, st_out, {"json", "csv", "svg"});

  IsoperimetricArgs iso;
  Output iso_out{"", "csv"};
  auto* isoperimetric = app.add_subcommand("isoperimetric", "Regular polygons of fixed perimeter against the circle");
  isoperimetric->add_option("--n-min", iso.n_min, "Smallest vertex count")->capture_default_str();
  isoperimetric->add_option("--n-max", iso.n_max, "Largest vertex count")->capture_default_str();
  isoperimetric->add_option("--perimeter", iso.perimeter, "Common perimeter")->capture_default_str();
  add_output_flags(isoperimetric, iso_out, {"csv", "json"});

  VerifyArgs ver;
  Output ver_out{"", "text"};
  auto* verify = app.add_subcommand("verify", "Run the property and oracle suite");
  verify->add_option("--samples", ver.samples, "Cases per property")->capture_default_str();
  verify->add_option("--seed", ver.seed, "64-bit seed")->capture_default_str();
  verify->add_option("--inject-fault", ver.inject_fault, "Negative control")->check(CLI::IsMember({"tau-sign"}));
  add_output_flags(verify, ver_out, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hyplobe: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (triangle->parsed()) {
      return cmd_triangle(tri, tri_out, out);
    }
    if (optimize->parsed()) {
      return cmd_optimize(opt, opt_out, out);
    }
    if (steiner->parsed()) {
      return cmd_steiner(st, st_out, out);
    }
    if (isoperimetric->parsed()) {
      return cmd_isoperimetric(iso, iso_out, out);
    }
    return cmd_verify(ver, ver_out, out, err);
  } catch (const DomainError& e) {
    err << "hyplobe: invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DegenerateError& e) {
    err << "hyplobe: degenerate input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const OutputError& e) {
    err << "hyplobe: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const SolverError& e) {
    err << "hyplobe: solver did not converge: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const ClosureError& e) {
    err << "hyplobe: solver did not converge: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const std::exception& e) {
    err << "hyplobe: internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace hyplobe::cli
