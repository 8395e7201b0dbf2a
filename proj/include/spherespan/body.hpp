#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spherespan/error.hpp"
#include "spherespan/vec.hpp"

namespace spherespan {

// Facet of a convex polytope: { x : <normal, x> <= offset }, offset > 0 when
// the origin is interior.
struct Facet {
  Vec normal;
  double offset = 0.0;
  std::vector<int> vertex_ids;
};

// Convex polytope given by its vertices; facet data is derived on
// construction (monotone-chain hull in 2D, incremental hull in 3D). The
// vertex order of the input is preserved so that index-based tie-breaks stay
// deterministic; `ring` holds the counter-clockwise boundary cycle in 2D.
struct Polytope {
  int dim = 2;
  std::vector<Vec> vertices;
  std::vector<int> ring;  // 2D only
  std::vector<Facet> facets;

  // With drop_interior = false every input point must be a vertex of the hull
  // (each vertex is extreme), else MalformedInput; with drop_interior = true
  // non-extreme points are silently discarded.
  static Polytope from_vertices(const std::vector<Vec>& points, bool drop_interior = false);
};

struct SupportPoint {
  double value = 0.0;
  Vec point;
};

struct ExposedPoint {
  Vec point;          // unique minimizer of <phi, .> over the body
  double min_value = 0.0;
  double gap = 0.0;   // margin by which every off-neighborhood sample exceeds min_value
};

// Gauge radii of a shell { v : r <= gauge(v) <= R }.
struct ShellSpec {
  double inner = 0.0;
  double outer = 1.0;

  static ShellSpec of(double inner, double outer) {
    if (!(inner > 0.0) || !(inner <= outer)) {
      fail(Err::MalformedInput, "shell radii must satisfy 0 < inner <= outer");
    }
    return {inner, outer};
  }
};

enum class BodyKind { Lp, Ellipsoid, Polytope, Custom };

// A 0-symmetric compact convex body with interior origin, exposed through
// gauge / support / boundary-along-ray queries. lp balls, ellipsoids and
// polytopes use closed forms; custom bodies supply a gauge callable or a
// membership predicate (gauge then falls back to bracketed bisection).
class Body {
 public:
  // Defaults to the Euclidean unit disk.
  Body() : strictly_convex_(true), radii_{1.0, 1.0} {}

  int dim() const { return dim_; }
  BodyKind kind() const { return kind_; }
  bool strictly_convex() const { return strictly_convex_; }
  double tolerance() const { return tol_; }

  // Euclidean radius bounds of the body, sampled at construction.
  double outradius() const { return outradius_; }
  double inradius() const { return inradius_; }

  // Minkowski functional: the t with v/t on the boundary (0 for v = 0).
  double gauge(const Vec& v) const;

  // u / gauge(u); throws ZeroVector.
  Vec boundary_point(const Vec& u) const;

  // max over the body of <u, .> together with a maximizer. Polytope ties are
  // broken toward the lowest vertex index.
  SupportPoint support(const Vec& u) const;

  // Unique minimizer of <phi, .>, certified by a sampled gap; throws
  // NonExposedDirection when the minimum is attained on a nondegenerate face.
  ExposedPoint exposed_point(const Vec& phi, int certificate_samples = 4096) const;

  const Polytope& polytope_data() const;
  double lp_exponent() const { return p_; }
  const std::vector<double>& lp_radii() const { return radii_; }
  const std::vector<double>& ellipsoid_axes() const { return axes_; }

  static Body lp_ball(int dim, double p, std::vector<double> radii = {});
  static Body ellipsoid(std::vector<double> axes);
  static Body polytope(const std::vector<Vec>& vertices);
  static Body from_polytope(Polytope poly);
  static Body custom_gauge(int dim, std::function<double(const Vec&)> gauge_fn,
                           bool strictly_convex, double tol = 1e-10);
  static Body custom_membership(int dim, std::function<bool(const Vec&)> member_fn,
                                bool strictly_convex, double tol = 1e-10);

 private:
  void finish_construction();
  double gauge_unchecked(const Vec& v) const;

  int dim_ = 2;
  BodyKind kind_ = BodyKind::Lp;
  bool strictly_convex_ = false;
  double tol_ = 1e-10;
  double p_ = 2.0;
  std::vector<double> radii_;
  std::vector<double> axes_;
  Polytope poly_;
  std::function<double(const Vec&)> gauge_fn_;
  std::function<bool(const Vec&)> member_fn_;
  double outradius_ = 1.0;
  double inradius_ = 1.0;
};

// Boundary point in the direction (cos t, sin t); 2D bodies only.
Vec boundary_at_angle(const Body& body, double t);

// Inscribed polytope through boundary points of equal-angle directions (2D)
// or Fibonacci-sphere directions (3D). The result is contained in the body.
Polytope approximate_polytope(const Body& body, int vertex_count);

// Exact in 2D via two-sided vertex-to-polygon distances.
double hausdorff_distance(const Polytope& a, const Polytope& b);

// Support-difference scan over `resolution` directions with local refinement.
double hausdorff_distance(const Polytope& a, const Body& b, int resolution = 8192);
double hausdorff_distance(const Body& a, const Body& b, int resolution = 8192);

// Euclidean distance from a point to a convex polygon (0 inside), 2D.
double point_polytope_distance(const Vec& x, const Polytope& poly);

// Fibonacci sphere directions (Euclidean-unit, 3D).
std::vector<Vec> fibonacci_directions(int count);

}  // namespace spherespan
