#pragma once

#include "osw/octagraph.hpp"
#include "osw/vertex.hpp"

namespace osw {

// Edge scan of a graph projected onto the sphere of radius r.
struct SphericalEdgeReport {
  double r = 0.0;             // sphere radius
  double max_angle = 0.0;     // max central angle over edges, radians
  double max_distance = 0.0;  // r * max_angle
  double lambda = 0.0;        // distance cap the radius bound targets
  double radius_bound = 0.0;  // largest radius keeping edge distances <= lambda
};

// Central angle between u and v about the origin, in [0, pi]. The cosine
// argument is clamped to [-1, 1] before acos. Throws on zero vectors.
double central_angle(Vertex u, Vertex v);

// Great-circle distance between the sphere projections of u and v:
// r * central_angle(u, v). Throws unless r > 0.
double sphere_distance(Vertex u, Vertex v, double r);

// Largest sphere radius for which every edge of G'_n projects to a
// great-circle distance of at most lambda: lambda / (2*atan(sqrt(6)/(2n))).
double radius_bound(int n, double lambda);

// Upper bound on the central angle of any edge of G'_n:
// 2*atan(sqrt(6)/(2n)).
double max_edge_angle_bound(int n);

// Scans every edge of G and reports the extreme angle and sphere distance
// at radius r.
SphericalEdgeReport max_edge_sphere_report(const OctahedralGraph& g, double r,
                                           double lambda);

}  // namespace osw
