#include "spherespan/section.hpp"

#include <algorithm>
#include <cmath>

namespace spherespan {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 6.28318530717958647692;

// Orders endpoints so that (0, p1, p2) is counter-clockwise. Ambient chords in
// 3D keep their given order (orientation lives in the section basis there).
Chord oriented(Vec a, Vec b) {
  if (a.dim == 2 && cross2(a, b) < 0.0) std::swap(a, b);
  return make_chord(a, b);
}

}  // namespace

Chord make_chord(const Vec& p1, const Vec& p2) {
  Chord c;
  c.p1 = p1;
  c.p2 = p2;
  c.midpoint = 0.5 * (p1 + p2);
  return c;
}

double chord_distance(const Chord& a, const Chord& b) {
  const double straight = std::fmax(distance(a.p1, b.p1), distance(a.p2, b.p2));
  const double swapped = std::fmax(distance(a.p1, b.p2), distance(a.p2, b.p1));
  return std::fmin(straight, swapped);
}

PlanarSection make_section(const Body& body, const Vec& v, const Vec& q) {
  if (v.dim != body.dim() || q.dim != body.dim()) {
    fail(Err::DimensionMismatch, "make_section: wrong dimension");
  }
  const double nv = norm(v), nq = norm(q);
  if (nv == 0.0 || nq == 0.0) fail(Err::DegenerateSection, "zero spanning vector");
  const double gram = nv * nv * nq * nq - dot(v, q) * dot(v, q);
  if (gram <= 1e-12 * nv * nv * nq * nq) {
    fail(Err::DegenerateSection, "v lies on the line spanned by q");
  }

  PlanarSection s;
  s.b1 = q / nq;
  Vec w = v - dot(v, s.b1) * s.b1;
  s.b2 = w / norm(w);
  const Vec b1 = s.b1, b2 = s.b2;
  const Body ambient = body;
  s.body2d = Body::custom_gauge(
      2, [ambient, b1, b2](const Vec& st) { return ambient.gauge(st[0] * b1 + st[1] * b2); },
      body.strictly_convex(), body.tolerance());
  return s;
}

std::vector<Chord> bisected_chords(const Body& body2d, const Vec& v, int resolution,
                                   bool allow_continuum) {
  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "bisected_chords: 2D bodies only");
  const double g = body2d.gauge(v);
  if (g >= 1.0) fail(Err::MidpointOutside, "midpoint must be interior");
  if (g <= 1e-14) fail(Err::MidpointZero, "every direction yields a diameter at 0");

  auto F = [&](double t) { return body2d.gauge(2.0 * v - boundary_at_angle(body2d, t)) - 1.0; };

  std::vector<double> roots;
  std::vector<double> values(static_cast<size_t>(resolution));
  for (int k = 0; k < resolution; ++k) values[static_cast<size_t>(k)] = F(kTau * k / resolution);
  for (int k = 0; k < resolution; ++k) {
    const double fa = values[static_cast<size_t>(k)];
    const double fb = values[static_cast<size_t>((k + 1) % resolution)];
    const double ta = kTau * k / resolution, tb = kTau * (k + 1) / resolution;
    if (std::fabs(fa) <= 1e-13) {
      roots.push_back(ta);
      continue;
    }
    if (fa * fb < 0.0) {
      double lo = ta, hi = tb, flo = fa;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F(mid);
        if (std::fabs(fm) <= 1e-15 || hi - lo < 1e-14) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
  }

  std::vector<Chord> chords;
  for (double t : roots) {
    const Vec x = boundary_at_angle(body2d, t);
    const Chord cand = oriented(x, 2.0 * v - x);
    bool dup = false;
    for (const Chord& c : chords) {
      if (chord_distance(cand, c) < 1e-6) {
        dup = true;
        break;
      }
    }
    if (!dup) chords.push_back(cand);
  }
  if (!allow_continuum && static_cast<int>(chords.size()) > resolution / 10) {
    fail(Err::ContinuumSuspected, "chord family appears to be a continuum (flat faces)");
  }
  return chords;
}

namespace {

// Distance along the ray p + t*d (t > 0) to the boundary, by bisection.
double ray_exit(const Body& body2d, const Vec& p, const Vec& d) {
  double hi = 2.0 * body2d.outradius() + norm(p);
  double lo = 0.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (body2d.gauge(p + mid * d) > 1.0 ? hi : lo) = mid;
    if (hi - lo < 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

// Chord through a near-boundary midpoint, solving for the direction that
// balances the two exit lengths. The angular sweep cannot resolve these.
Chord chord_by_direction(const Body& body2d, const Vec& p) {
  auto imbalance = [&](double t) {
    const Vec d = Vec::of(std::cos(t), std::sin(t));
    return ray_exit(body2d, p, d) - ray_exit(body2d, p, -d);
  };
  // The balanced direction is within a quarter turn of the boundary tangent.
  const Vec b = body2d.boundary_point(p);
  double t0 = std::atan2(b[1], b[0]) + kPi / 2.0;
  double lo = t0 - kPi / 2.0, hi = t0 + kPi / 2.0;
  double flo = imbalance(lo);
  if (flo * imbalance(hi) > 0.0) {
    // Fall back to a coarse bracket over a half turn.
    const int scan = 64;
    bool found = false;
    for (int k = 0; k < scan && !found; ++k) {
      const double a = t0 - kPi / 2.0 + kPi * k / scan;
      const double bb = a + kPi / scan;
      if (imbalance(a) * imbalance(bb) <= 0.0) {
        lo = a;
        hi = bb;
        flo = imbalance(a);
        found = true;
      }
    }
    if (!found) fail(Err::OracleInconsistent, "no balanced chord direction found");
  }
  for (int it = 0; it < 70; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = imbalance(mid);
    if (flo * fm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  const double t = 0.5 * (lo + hi);
  const Vec d = Vec::of(std::cos(t), std::sin(t));
  return oriented(p + ray_exit(body2d, p, d) * d, p - ray_exit(body2d, p, -d) * d);
}

}  // namespace

Chord chord_map(const Body& body2d, const Vec& p) {
  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "chord_map: 2D bodies only");
  if (!body2d.strictly_convex()) {
    fail(Err::NotStrictlyConvex, "chord bisected by p is not unique");
  }
  const double g = body2d.gauge(p);
  if (g <= 1e-14) fail(Err::ZeroMidpoint, "no continuous chord choice exists at 0");
  if (g > 1.0 + 1e-9) fail(Err::MidpointOutside, "midpoint must lie in the body");
  if (g >= 1.0 - 1e-12) {
    const Vec b = body2d.boundary_point(p);
    return make_chord(b, b);
  }
  if (g < 0.995) {
    const auto chords = bisected_chords(body2d, p, 512);
    if (chords.size() == 1) return chords.front();
  }
  return chord_by_direction(body2d, p);
}

Chord disk_chord(const Vec& z) {
  if (z.dim != 2) fail(Err::DimensionMismatch, "disk_chord: 2D only");
  const double r = norm(z);
  if (r <= 1e-14) fail(Err::ZeroMidpoint, "no continuous chord choice exists at 0");
  if (r > 1.0 + 1e-9) fail(Err::MidpointOutside, "midpoint must lie in the disk");
  const double s = std::sqrt(std::fmax(0.0, 1.0 - r * r));
  const Vec w = rot90(z) / r;
  return make_chord(z - s * w, z + s * w);  // (0, p1, p2) counter-clockwise
}

Chord strip_chord(const Body& body, const Vec& v, const Vec& q, const Vec& phi, double eps,
                  int resolution) {
  const PlanarSection section = make_section(body, v, q);
  const Vec v2d = section.to_plane(v);
  const double min_value = dot(phi, q);

  const auto chords2d = bisected_chords(section.body2d, v2d, resolution);
  std::vector<Chord> surviving;
  for (const Chord& c : chords2d) {
    const Vec x1 = section.to_ambient(c.p1), x2 = section.to_ambient(c.p2);
    if (dot(phi, x1) <= min_value + eps && dot(phi, x2) <= min_value + eps) {
      surviving.push_back(c);
    }
  }
  if (surviving.empty()) fail(Err::NoStripChord, "no bisected chord inside the strip");
  if (surviving.size() > 1) {
    fail(Err::MultipleStripChords, "strip width admits several chords; retry with smaller eps");
  }

  // v2d lies strictly on the positive b2 side; p1 takes the opposite side.
  Chord c = surviving.front();
  if (c.p1[1] > c.p2[1]) std::swap(c.p1, c.p2);
  return make_chord(section.to_ambient(c.p1), section.to_ambient(c.p2));
}

std::function<Chord(const Vec&)> off_line_section(const Body& body, const Vec& q) {
  if (!body.strictly_convex()) {
    fail(Err::NotStrictlyConvex, "off-line sections require a strictly convex body");
  }
  if (std::fabs(body.gauge(q) - 1.0) > 1e-8) fail(Err::NotOnSphere, "q must have gauge 1");
  const Body k = body;
  const Vec q0 = q;
  return [k, q0](const Vec& v) -> Chord {
    const PlanarSection section = make_section(k, v, q0);
    const Chord c = chord_map(section.body2d, section.to_plane(v));
    return make_chord(section.to_ambient(c.p1), section.to_ambient(c.p2));
  };
}

}  // namespace spherespan
