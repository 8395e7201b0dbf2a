#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spherespan/body.hpp"

namespace spherespan {

// Sampled self-map of a body boundary. dim 2: cyclically ordered loop
// (domain[k] -> image[k]); dim 3: triangulated sphere with an image vertex
// per vertex.
struct SphereMapSamples {
  int dim = 2;
  std::vector<Vec> domain;
  std::vector<std::array<int, 3>> faces;  // 3D only
  std::vector<Vec> image;
};

// Largest angular step between consecutive (radially normalized) images.
double max_image_step(const SphereMapSamples& f);

// Signed angle accumulation of the radially normalized image loop over 2*pi.
// Requires every step below pi/2 and an integrality residual at most 0.01.
int winding_number(const SphereMapSamples& f);

// Degree of a triangulated sphere map by signed ray crossings through
// regular_value. Retries up to 16 perturbed rays before NonRegularValue.
int pl_degree(const SphereMapSamples& f, const Vec& regular_value);

struct DegreeReport {
  int degree = 0;
  bool pass = false;
  std::string detail;
};

// Verifies that a vertex-fixing boundary self-map of a 2D polytope has
// winding 1, computed after radial transport to the Euclidean disk.
DegreeReport vertex_fixing_degree(const Polytope& poly, const SphereMapSamples& f);

// Re-bases every domain and image sample onto the boundary of `to` by radial
// projection; the degree is preserved.
SphereMapSamples radial_transport(const Body& from, const Body& to, const SphereMapSamples& f);

// Identity map on a subdivided icosahedron projected to the unit sphere.
SphereMapSamples icosphere_identity(int subdivisions);

// Loop map sampled on a body boundary from a per-sample image rule.
SphereMapSamples loop_map(const Body& body2d, int samples,
                          const std::function<Vec(const Vec&)>& rule);

// Identity loop on a 2D body boundary.
SphereMapSamples boundary_identity(const Body& body2d, int samples = 512);

// Seeded boundary self-map of a polygon fixing every vertex: each edge is
// reparametrized monotonically onto itself. With `excursion` one edge's image
// additionally wanders around the whole boundary and retraces back, which
// leaves the winding unchanged.
SphereMapSamples make_vertex_fixing_map(const Polytope& poly, uint64_t seed,
                                        int samples_per_edge = 48, bool excursion = false);

// Point at arc length s along a 2D polytope boundary (counter-clockwise,
// wrapped modulo the perimeter).
Vec polygon_arc_point(const Polytope& poly, double s);
double polygon_perimeter(const Polytope& poly);

}  // namespace spherespan
