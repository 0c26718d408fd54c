#include "svg.hpp"

#include <cmath>
#include <fmt/format.h>

#include "hyplobe/constants.hpp"

namespace hyplobe::cli {

namespace {

constexpr double kScale = 500.0;
constexpr double kMargin = 60.0;

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Euclidean circle that represents the hyperbolic circle (center, radius).
EuclideanCircle euclidean_image(const DiskPoint& center, double radius) {
  const double rc = center.norm();
  if (rc < 1e-15) {
    return {{0.0, 0.0}, std::tanh(0.5 * radius)};
  }
  const double s = 2.0 * std::atanh(rc);
  const double near = std::tanh(0.5 * (s - radius));
  const double far = std::tanh(0.5 * (s + radius));
  const Vec2 u = center.vec() / rc;
  return {u * (0.5 * (near + far)), 0.5 * (far - near)};
}

}  // namespace

SvgCanvas::SvgCanvas() = default;

Vec2 SvgCanvas::to_px(const Vec2& p) const { return {kScale + kScale * p.x, kScale - kScale * p.y}; }

void SvgCanvas::include(const Vec2& p) {
  const Vec2 q = to_px(p);
  min_x_ = std::min(min_x_, q.x - kMargin);
  min_y_ = std::min(min_y_, q.y - kMargin);
  max_x_ = std::max(max_x_, q.x + kMargin);
  max_y_ = std::max(max_y_, q.y + kMargin);
}

void SvgCanvas::circle(const Vec2& center, double radius, std::string_view style) {
  const Vec2 c = to_px(center);
  items_.push_back(fmt::format(R"(<circle cx="{:.3f}" cy="{:.3f}" r="{:.3f}" {}/>)", c.x, c.y, kScale * radius, style));
}

void SvgCanvas::segment(const Vec2& a, const Vec2& b, std::string_view style) {
  const Vec2 p = to_px(a);
  const Vec2 q = to_px(b);
  items_.push_back(fmt::format(R"(<line x1="{:.3f}" y1="{:.3f}" x2="{:.3f}" y2="{:.3f}" {}/>)", p.x, p.y, q.x, q.y, style));
}

void SvgCanvas::geodesic(const DiskPoint& p, const DiskPoint& q, std::string_view style) {
  const Geodesic g = geodesic_through(p, q);
  if (std::holds_alternative<Diameter>(g)) {
    segment(p.vec(), q.vec(), style);
    return;
  }
  const EuclideanCircle& c = std::get<Arc>(g).circle;
  // Counterclockwise in model coordinates is clockwise on screen (sweep flag 1).
  const int sweep = (p.vec() - c.center).cross(q.vec() - c.center) > 0.0 ? 1 : 0;
  const Vec2 a = to_px(p.vec());
  const Vec2 b = to_px(q.vec());
  const double r = kScale * c.radius;
  items_.push_back(fmt::format(R"(<path d="M {:.3f} {:.3f} A {:.3f} {:.3f} 0 0 {} {:.3f} {:.3f}" fill="none" {}/>)",
                               a.x, a.y, r, r, sweep, b.x, b.y, style));
}

void SvgCanvas::dot(const Vec2& p, std::string_view fill) {
  const Vec2 c = to_px(p);
  items_.push_back(fmt::format(R"(<circle cx="{:.3f}" cy="{:.3f}" r="5" fill="{}"/>)", c.x, c.y, fill));
}

void SvgCanvas::label(const Vec2& p, std::string_view text, double dx, double dy) {
  const Vec2 c = to_px(p);
  items_.push_back(fmt::format(R"(<text x="{:.3f}" y="{:.3f}" font-family="serif" font-size="28">{}</text>)",
                               c.x + dx, c.y + dy, escape(text)));
}

void SvgCanvas::title(std::string_view text) { title_ = escape(text); }

std::string SvgCanvas::str() const {
  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3f} {:.3f} {:.3f} {:.3f}\">\n",
      min_x_, min_y_, max_x_ - min_x_, max_y_ - min_y_);
  if (!title_.empty()) {
    out += fmt::format("<title>{}</title>\n", title_);
  }
  out += fmt::format(R"(<rect x="{:.3f}" y="{:.3f}" width="{:.3f}" height="{:.3f}" fill="white"/>)", min_x_, min_y_,
                     max_x_ - min_x_, max_y_ - min_y_);
  out += '\n';
  for (const std::string& item : items_) {
    out += item;
    out += '\n';
  }
  out += "</svg>\n";
  return out;
}

std::string render_figure1(const Figure1& fig, std::string_view caption) {
  SvgCanvas svg;
  svg.title(caption);
  svg.include(fig.b_prime);

  svg.circle({0.0, 0.0}, 1.0, R"(fill="none" stroke="black" stroke-width="2")");
  svg.circle(fig.omega.center, fig.omega.radius, R"(fill="none" stroke="#1f77b4" stroke-width="1.5" stroke-dasharray="8 6")");
  svg.circle(fig.psi.center, fig.psi.radius, R"(fill="none" stroke="#2ca02c" stroke-width="1.5" stroke-dasharray="4 4")");

  // Euclidean triangle A B' C.
  svg.segment(fig.A.vec(), fig.b_prime, R"(stroke="#888888" stroke-width="1.5")");
  svg.segment(fig.b_prime, fig.C.vec(), R"(stroke="#888888" stroke-width="1.5")");

  const char* edge = R"(stroke="#d62728" stroke-width="3")";
  svg.geodesic(fig.A, fig.B, edge);
  svg.geodesic(fig.B, fig.C, edge);
  svg.geodesic(fig.C, fig.A, edge);

  svg.dot(fig.A.vec(), "black");
  svg.dot(fig.B.vec(), "black");
  svg.dot(fig.C.vec(), "black");
  svg.dot(fig.b_prime, "#1f77b4");
  svg.label(fig.A.vec(), "A", -30.0, 30.0);
  svg.label(fig.B.vec(), "B", 8.0, 30.0);
  svg.label(fig.C.vec(), "C");
  svg.label(fig.b_prime, "B'", 8.0, 30.0);
  svg.label(fig.b_prime, fmt::format("τ = {:.6f}", fig.tau), -200.0, -20.0);
  svg.label(fig.omega.center + Vec2{0.0, fig.omega.radius}, "ω", 8.0, 24.0);
  svg.label(Vec2{0.0, -fig.psi.radius}, "ψ", 8.0, 24.0);
  return svg.str();
}

std::string render_steiner(const HyperbolicPolygon& initial, const HyperbolicPolygon& final_polygon,
                           const CircumcircleFit& fit) {
  SvgCanvas svg;
  svg.title("Steiner vertex moves: initial (gray) and final (red) polygon");
  svg.circle({0.0, 0.0}, 1.0, R"(fill="none" stroke="black" stroke-width="2")");

  const std::size_t n = final_polygon.size();
  svg.geodesic(final_polygon.vertex(0), final_polygon.vertex(n / 2), R"(stroke="#999999" stroke-dasharray="6 6")");
  for (std::size_t i = 0; i < initial.size(); ++i) {
    svg.geodesic(initial.vertex(i), initial.vertex(i + 1), R"(stroke="#888888" stroke-width="2")");
  }
  const EuclideanCircle image = euclidean_image(fit.center, fit.radius);
  svg.circle(image.center, image.radius, R"(fill="none" stroke="#1f77b4" stroke-width="1.5" stroke-dasharray="8 6")");
  for (std::size_t i = 0; i < n; ++i) {
    svg.geodesic(final_polygon.vertex(i), final_polygon.vertex(i + 1), R"(stroke="#d62728" stroke-width="3")");
    svg.dot(final_polygon.vertex(i).vec(), "black");
  }
  svg.dot(fit.center.vec(), "#1f77b4");
  return svg.str();
}

}  // namespace hyplobe::cli
