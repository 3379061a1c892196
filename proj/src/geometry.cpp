#include "osw/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace osw {

double central_angle(Vertex u, Vertex v) {
  if (is_zero(u) || is_zero(v)) {
    throw std::invalid_argument("central angle is undefined for the zero vector");
  }
  const double cosine =
      static_cast<double>(dot(u, v)) / (norm(u) * norm(v));
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double sphere_distance(Vertex u, Vertex v, double r) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("sphere radius must be positive, got " +
                                std::to_string(r));
  }
  return r * central_angle(u, v);
}

double radius_bound(int n, double lambda) {
  if (n < 1) {
    throw std::invalid_argument("size parameter must be >= 1, got " +
                                std::to_string(n));
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("lambda must be positive, got " +
                                std::to_string(lambda));
  }
  return lambda / (2.0 * std::atan(std::sqrt(6.0) / (2.0 * n)));
}

double max_edge_angle_bound(int n) {
  if (n < 1) {
    throw std::invalid_argument("size parameter must be >= 1, got " +
                                std::to_string(n));
  }
  return 2.0 * std::atan(std::sqrt(6.0) / (2.0 * n));
}

SphericalEdgeReport max_edge_sphere_report(const OctahedralGraph& g, double r,
                                           double lambda) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("sphere radius must be positive, got " +
                                std::to_string(r));
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("lambda must be positive, got " +
                                std::to_string(lambda));
  }
  SphericalEdgeReport report;
  report.r = r;
  report.lambda = lambda;
  report.radius_bound = radius_bound(g.n(), lambda);
  for (std::int32_t i = 0; i < g.vertex_count(); ++i) {
    for (const std::int32_t j : g.neighbors(i)) {
      if (j <= i) continue;
      const double angle = central_angle(g.vertex(i), g.vertex(j));
      report.max_angle = std::max(report.max_angle, angle);
    }
  }
  report.max_distance = r * report.max_angle;
  assert(report.max_angle <= max_edge_angle_bound(g.n()) + 1e-12);
  return report;
}

}  // namespace osw
