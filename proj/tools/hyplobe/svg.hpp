#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyplobe/disk_model.hpp"
#include "hyplobe/polygon.hpp"
#include "hyplobe/triangle.hpp"

namespace hyplobe::cli {

// Minimal self-contained SVG writer. Model coordinates are scaled so the unit
// disk fills a 1000 x 1000 box with the y axis pointing up; the viewBox grows
// when content such as B' lies outside the disk.
class SvgCanvas {
 public:
  SvgCanvas();

  void include(const Vec2& p);
  void circle(const Vec2& center, double radius, std::string_view style);
  void segment(const Vec2& a, const Vec2& b, std::string_view style);
  void geodesic(const DiskPoint& p, const DiskPoint& q, std::string_view style);
  void dot(const Vec2& p, std::string_view fill);
  void label(const Vec2& p, std::string_view text, double dx = 10.0, double dy = -10.0);
  void title(std::string_view text);

  std::string str() const;

 private:
  Vec2 to_px(const Vec2& p) const;

  double min_x_ = 0.0;
  double min_y_ = 0.0;
  double max_x_ = 1000.0;
  double max_y_ = 1000.0;
  std::string title_;
  std::vector<std::string> items_;
};

std::string render_figure1(const Figure1& fig, std::string_view caption);

std::string render_steiner(const HyperbolicPolygon& initial, const HyperbolicPolygon& final_polygon,
                           const CircumcircleFit& fit);

}  // namespace hyplobe::cli
