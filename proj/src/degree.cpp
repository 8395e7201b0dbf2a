#include "spherespan/degree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "spherespan/rng.hpp"

namespace spherespan {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 6.28318530717958647692;

double step_angle(const Vec& a, const Vec& b) {
  return std::atan2(cross2(a, b), dot(a, b));
}

void check_loop(const SphereMapSamples& f) {
  if (f.dim != 2) fail(Err::DimensionMismatch, "winding_number: 2D maps only");
  if (f.image.size() < 3) fail(Err::SamplingTooCoarse, "need at least 3 loop samples");
  for (const Vec& u : f.image) {
    if (norm(u) < 1e-14) fail(Err::ZeroImage, "image sample at the origin");
  }
}

void check_triangulation(const SphereMapSamples& f) {
  if (f.dim != 3) fail(Err::DimensionMismatch, "pl_degree: 3D maps only");
  const int nv = static_cast<int>(f.domain.size());
  if (f.image.size() != f.domain.size()) fail(Err::BadTriangulation, "image/vertex count mismatch");
  std::map<std::pair<int, int>, int> edge_use;   // undirected multiplicity
  std::map<std::pair<int, int>, int> directed;   // orientation consistency
  for (const auto& face : f.faces) {
    for (int e = 0; e < 3; ++e) {
      const int a = face[static_cast<size_t>(e)], b = face[static_cast<size_t>((e + 1) % 3)];
      if (a < 0 || b < 0 || a >= nv || b >= nv || a == b) {
        fail(Err::BadTriangulation, "face references an invalid vertex");
      }
      edge_use[{std::min(a, b), std::max(a, b)}] += 1;
      directed[{a, b}] += 1;
    }
  }
  for (const auto& [e, count] : edge_use) {
    (void)e;
    if (count != 2) fail(Err::BadTriangulation, "surface is not closed (edge multiplicity != 2)");
  }
  for (const auto& [e, count] : directed) {
    if (count != 1 || directed.count({e.second, e.first}) == 0) {
      fail(Err::BadTriangulation, "inconsistent face orientations");
    }
  }
  const long euler = static_cast<long>(nv) - static_cast<long>(edge_use.size()) +
                     static_cast<long>(f.faces.size());
  if (euler != 2) fail(Err::BadTriangulation, "Euler characteristic is not 2");
}

}  // namespace

double max_image_step(const SphereMapSamples& f) {
  check_loop(f);
  double worst = 0.0;
  const size_t n = f.image.size();
  for (size_t k = 0; k < n; ++k) {
    worst = std::fmax(worst, std::fabs(step_angle(f.image[k], f.image[(k + 1) % n])));
  }
  return worst;
}

int winding_number(const SphereMapSamples& f) {
  check_loop(f);
  const size_t n = f.image.size();
  double total = 0.0;
  for (size_t k = 0; k < n; ++k) {
    const double step = step_angle(f.image[k], f.image[(k + 1) % n]);
    if (std::fabs(step) >= kPi / 2.0) {
      fail(Err::SamplingTooCoarse, "image step reaches pi/2");
    }
    total += step;
  }
  const double turns = total / kTau;
  const double rounded = std::nearbyint(turns);
  if (std::fabs(turns - rounded) > 0.01) {
    fail(Err::SamplingTooCoarse, "winding residual exceeds 0.01");
  }
  return static_cast<int>(rounded);
}

int pl_degree(const SphereMapSamples& f, const Vec& regular_value) {
  check_triangulation(f);
  if (norm(regular_value) < 1e-14) fail(Err::ZeroVector, "regular value at the origin");
  for (const Vec& u : f.image) {
    if (norm(u) < 1e-14) fail(Err::ZeroImage, "image vertex at the origin");
  }

  Vec d = regular_value / norm(regular_value);
  for (int attempt = 0; attempt < 16; ++attempt) {
    bool regular = true;
    int degree = 0;
    for (const auto& face : f.faces) {
      const Vec a = f.image[static_cast<size_t>(face[0])];
      const Vec b = f.image[static_cast<size_t>(face[1])];
      const Vec c = f.image[static_cast<size_t>(face[2])];
      // Solve w1*a + w2*b + w3*c = d; the ray through d crosses the triangle
      // iff all w_i >= 0 with positive sum; the sign is det[a b c].
      const double det = dot(a, cross3(b, c));
      const double scale = norm(a) * norm(b) * norm(c);
      if (std::fabs(det) <= 1e-14 * scale) continue;  // degenerate image triangle, ray cannot cross transversally
      const double w1 = dot(d, cross3(b, c)) / det;
      const double w2 = dot(a, cross3(d, c)) / det;
      const double w3 = dot(a, cross3(b, d)) / det;
      const double wsum = std::fabs(w1) + std::fabs(w2) + std::fabs(w3);
      const double margin = std::fmin(w1, std::fmin(w2, w3)) / wsum;
      if (w1 + w2 + w3 <= 0.0) continue;  // opposite ray
      if (std::fabs(margin) <= 1e-9) {
        regular = false;
        break;
      }
      if (margin > 0.0) degree += det > 0.0 ? 1 : -1;
    }
    if (regular) return degree;
    // Deterministic perturbation of the ray.
    Rng rng(0xd1CEu * static_cast<uint64_t>(attempt + 1));
    Vec nudge = rng.unit_vec(3);
    d = d + 1e-6 * static_cast<double>(attempt + 1) * nudge;
    d = d / norm(d);
  }
  fail(Err::NonRegularValue, "no regular ray found after 16 perturbations");
}

DegreeReport vertex_fixing_degree(const Polytope& poly, const SphereMapSamples& f) {
  if (poly.dim != 2 || f.dim != 2) fail(Err::DimensionMismatch, "2D polytopes only");
  for (const Vec& v : poly.vertices) {
    bool fixed = false;
    for (size_t k = 0; k < f.domain.size(); ++k) {
      if (f.domain[k] == v && f.image[k] == v) {
        fixed = true;
        break;
      }
    }
    if (!fixed) fail(Err::VerticesNotFixed, "a polytope vertex is missing or not fixed");
  }
  const Body from = Body::from_polytope(poly);
  const Body disk = Body::lp_ball(2, 2.0);
  const SphereMapSamples on_disk = radial_transport(from, disk, f);
  DegreeReport report;
  report.degree = winding_number(on_disk);
  report.pass = report.degree == 1;
  report.detail = report.pass ? "winding 1 as forced by vertex fixing"
                              : "winding differs from 1";
  return report;
}

SphereMapSamples radial_transport(const Body& from, const Body& to, const SphereMapSamples& f) {
  if (from.dim() != to.dim() || f.dim != to.dim()) {
    fail(Err::DimensionMismatch, "radial_transport: mixed dimensions");
  }
  SphereMapSamples out = f;
  for (auto& x : out.domain) x = to.boundary_point(x);
  for (auto& x : out.image) x = to.boundary_point(x);
  return out;
}

SphereMapSamples icosphere_identity(int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec> verts = {
      Vec::of(-1, t, 0), Vec::of(1, t, 0),  Vec::of(-1, -t, 0), Vec::of(1, -t, 0),
      Vec::of(0, -1, t), Vec::of(0, 1, t),  Vec::of(0, -1, -t), Vec::of(0, 1, -t),
      Vec::of(t, 0, -1), Vec::of(t, 0, 1),  Vec::of(-t, 0, -1), Vec::of(-t, 0, 1)};
  for (auto& v : verts) v = v / norm(v);
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec m = 0.5 * (verts[static_cast<size_t>(a)] + verts[static_cast<size_t>(b)]);
      m = m / norm(m);
      verts.push_back(m);
      const int id = static_cast<int>(verts.size()) - 1;
      midpoint[key] = id;
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& face : faces) {
      const int ab = mid(face[0], face[1]);
      const int bc = mid(face[1], face[2]);
      const int ca = mid(face[2], face[0]);
      next.push_back({face[0], ab, ca});
      next.push_back({face[1], bc, ab});
      next.push_back({face[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  SphereMapSamples f;
  f.dim = 3;
  f.domain = verts;
  f.faces = faces;
  f.image = verts;
  return f;
}

SphereMapSamples loop_map(const Body& body2d, int samples,
                          const std::function<Vec(const Vec&)>& rule) {
  SphereMapSamples f;
  f.dim = 2;
  f.domain.reserve(static_cast<size_t>(samples));
  f.image.reserve(static_cast<size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const Vec x = boundary_at_angle(body2d, kTau * k / samples);
    f.domain.push_back(x);
    f.image.push_back(rule(x));
  }
  return f;
}

SphereMapSamples boundary_identity(const Body& body2d, int samples) {
  return loop_map(body2d, samples, [](const Vec& x) { return x; });
}

double polygon_perimeter(const Polytope& poly) {
  const int n = static_cast<int>(poly.ring.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    total += distance(poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>(i)])],
                      poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>((i + 1) % n)])]);
  }
  return total;
}

Vec polygon_arc_point(const Polytope& poly, double s) {
  const int n = static_cast<int>(poly.ring.size());
  const double perimeter = polygon_perimeter(poly);
  s = std::fmod(s, perimeter);
  if (s < 0.0) s += perimeter;
  for (int i = 0; i < n; ++i) {
    const Vec a = poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>(i)])];
    const Vec b = poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>((i + 1) % n)])];
    const double len = distance(a, b);
    if (s <= len) return a + (s / len) * (b - a);
    s -= len;
  }
  return poly.vertices.front();
}

SphereMapSamples make_vertex_fixing_map(const Polytope& poly, uint64_t seed, int samples_per_edge,
                                        bool excursion) {
  if (poly.dim != 2) fail(Err::DimensionMismatch, "2D polytopes only");
  Rng rng(seed);
  const int n = static_cast<int>(poly.ring.size());
  const double perimeter = polygon_perimeter(poly);
  const int excursion_edge = excursion ? rng.uniform_int(0, n - 1) : -1;
  const int wraps = excursion ? rng.uniform_int(1, 2) : 0;

  // Image steps must stay below the pi/2 winding adequacy bound as seen from
  // the origin, so edges passing close to it get proportionally more samples.
  double min_edge_distance = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    min_edge_distance = std::fmin(
        min_edge_distance,
        segment_distance(Vec::zero(2),
                         poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>(i)])],
                         poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>((i + 1) % n)])]));
  }

  SphereMapSamples f;
  f.dim = 2;
  double base_arc = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec a = poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>(i)])];
    const Vec b = poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>(i + 1 == n ? 0 : i + 1)])];
    const double len = distance(a, b);

    // Random monotone reparametrization from cumulated positive weights.
    const double edge_distance = std::fmax(segment_distance(Vec::zero(2), a, b), 1e-6);
    const double image_travel =
        (i == excursion_edge) ? len + wraps * perimeter * kPi : len;
    const int adaptive = static_cast<int>(
        std::ceil(image_travel / ((i == excursion_edge ? min_edge_distance : edge_distance) * 0.04)));
    const int m = std::min(40000, std::max(samples_per_edge, adaptive));
    std::vector<double> phi(static_cast<size_t>(m) + 1, 0.0);
    for (int j = 1; j <= m; ++j) {
      phi[static_cast<size_t>(j)] = phi[static_cast<size_t>(j - 1)] + rng.uniform(0.1, 1.0);
    }
    for (auto& value : phi) value /= phi.back();

    for (int j = 0; j < m; ++j) {
      const double s = static_cast<double>(j) / m;
      f.domain.push_back(j == 0 ? a : a + s * (b - a));
      const double progress = phi[static_cast<size_t>(j)];
      if (i == excursion_edge) {
        // Wander all the way around and retrace: arc offset rises to
        // wraps*perimeter and falls back to 0, so the net winding is kept.
        const double bump = std::sin(kPi * progress);
        const double arc = base_arc + progress * len + wraps * perimeter * bump * bump;
        f.image.push_back(j == 0 ? a : polygon_arc_point(poly, arc));
      } else {
        f.image.push_back(j == 0 ? a : a + progress * (b - a));
      }
    }
    base_arc += len;
  }
  return f;
}

}  // namespace spherespan
