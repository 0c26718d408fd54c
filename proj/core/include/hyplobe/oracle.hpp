#pragma once

#include "hyplobe/disk_model.hpp"

// Brute-force references used by the tests and by `hyplobe verify`. Nothing
// here is called from the library's own operations.
namespace hyplobe::oracle {

struct GridSearchResult {
  double alpha_hat = 0.0;
  double area_hat = 0.0;
  double grid_step = 0.0;
  int samples = 0;
  int local_maxima = 0;  // strict local maxima seen on the grid
};

/// Maximizes solve_sas(b, c, alpha).area over `samples` cell midpoints of an
/// even grid on [1e-6, pi - 1e-6]. Ties go to the smaller angle.
GridSearchResult grid_search_max_area(double b, double c, int samples);

/// Length of the geodesic segment pq obtained by integrating the metric
/// 2|dz| / (1 - |z|^2) over a polyline of `segments` chords of the segment.
double geodesic_length_by_sampling(const DiskPoint& p, const DiskPoint& q, int segments);

struct EuclideanTriangle {
  double a = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double area = 0.0;
};

/// Flat-plane triangle with sides b, c and included angle alpha.
EuclideanTriangle euclidean_limit_triangle(double b, double c, double alpha);

}  // namespace hyplobe::oracle
