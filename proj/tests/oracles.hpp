// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "spherespan/body.hpp"
#include "spherespan/decompose.hpp"
#include "spherespan/rng.hpp"
#include "spherespan/section.hpp"

namespace oracles {

using spherespan::Body;
using spherespan::Chord;
using spherespan::Rng;
using spherespan::Vec;

constexpr double kTau = 6.28318530717958647692;

// Dense scan for chords bisected by v: walks the boundary at `resolution`
// angular steps, looks for sign changes of gauge(2v - x(t)) - 1 and polishes
// each bracket by plain midpoint bisection. Merges endpoint swaps.
inline std::vector<Chord> chord_scan(const Body& body, const Vec& v, int resolution) {
  auto F = [&](double t) {
    return body.gauge(2.0 * v - spherespan::boundary_at_angle(body, t)) - 1.0;
  };
  std::vector<Chord> found;
  double prev_t = 0.0, prev_f = F(0.0);
  for (int k = 1; k <= resolution; ++k) {
    const double t = kTau * k / resolution;
    const double f = F(t);
    if (prev_f == 0.0 || prev_f * f < 0.0) {
      double lo = prev_t, hi = t, flo = prev_f;
      for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      const Vec x = spherespan::boundary_at_angle(body, 0.5 * (lo + hi));
      const Chord cand = spherespan::make_chord(x, 2.0 * v - x);
      bool dup = false;
      for (const Chord& c : found) {
        if (spherespan::chord_distance(cand, c) < 1e-6) {
          dup = true;
          break;
        }
      }
      if (!dup) found.push_back(cand);
    }
    prev_t = t;
    prev_f = f;
  }
  return found;
}

// Hausdorff distance by brute force over dense boundary samples of both
// bodies, using Euclidean point-to-boundary scans.
inline double hausdorff_scan(const Body& a, const Body& b, int resolution) {
  auto boundary = [&](const Body& body) {
    std::vector<Vec> pts;
    for (int k = 0; k < resolution; ++k) {
      pts.push_back(spherespan::boundary_at_angle(body, kTau * k / resolution));
    }
    return pts;
  };
  const auto pa = boundary(a), pb = boundary(b);
  auto one_sided = [&](const std::vector<Vec>& from, const Body& to,
                       const std::vector<Vec>& to_pts) {
    double worst = 0.0;
    for (const Vec& x : from) {
      if (to.gauge(x) <= 1.0) continue;  // inside: distance 0
      double best = 1e300;
      for (const Vec& y : to_pts) best = std::fmin(best, spherespan::distance(x, y));
      worst = std::fmax(worst, best);
    }
    return worst;
  };
  return std::fmax(one_sided(pa, b, pb), one_sided(pb, a, pa));
}

// Independent boundary minimizer of a linear functional: dense angular scan
// followed by golden-section refinement around the best sample.
inline Vec boundary_minimizer(const Body& body, const Vec& phi, int samples) {
  double best_t = 0.0, best_v = 1e300;
  for (int k = 0; k < samples; ++k) {
    const double t = kTau * k / samples;
    const double v = spherespan::dot(phi, spherespan::boundary_at_angle(body, t));
    if (v < best_v) best_v = v, best_t = t;
  }
  const double gr = 0.6180339887498949;
  double a = best_t - kTau / samples, b = best_t + kTau / samples;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  auto f = [&](double t) { return spherespan::dot(phi, spherespan::boundary_at_angle(body, t)); };
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 90; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return spherespan::boundary_at_angle(body, 0.5 * (a + b));
}

// Seeded strictly convex random test bodies: lp balls with anisotropic radii
// and ellipses.
inline Body random_smooth_body(uint64_t seed) {
  Rng rng(seed);
  if (rng.uniform() < 0.5) {
    const double p = rng.uniform(1.5, 6.0);
    return Body::lp_ball(2, p, {rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)});
  }
  return Body::ellipsoid({rng.uniform(0.5, 2.5), rng.uniform(0.5, 2.5)});
}

// Seeded piecewise-linear path on [0,1] with values strictly inside the body.
inline spherespan::SampledMap random_pl_path(const Body& body, uint64_t seed, int samples,
                                             int knots = 8, double max_gauge = 0.95) {
  Rng rng(seed);
  std::vector<Vec> knot_values;
  for (int k = 0; k < knots; ++k) {
    const double r = rng.uniform(0.0, max_gauge);
    knot_values.push_back(r * body.boundary_point(rng.unit_vec(body.dim())));
  }
  spherespan::SampledMap f;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    const double pos = t * (knots - 1);
    const int i = std::min(knots - 2, static_cast<int>(pos));
    const double s = pos - i;
    f.params.push_back(t);
    f.values.push_back((1.0 - s) * knot_values[static_cast<size_t>(i)] +
                       s * knot_values[static_cast<size_t>(i + 1)]);
  }
  return f;
}

}  // namespace oracles
