#include "spherespan/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "spherespan/rng.hpp"

namespace spherespan {

namespace {

constexpr double kTau = 6.28318530717958647692;

// Size of the strip-validated neighborhood of q relative to eps. Polyhedral
// corners push chord endpoints linearly in the midpoint offset (slope up to
// ~4 outradius |phi| / sin(corner angle)), so the scale stays well below 1.
constexpr double kNeighborhoodScale = 0.05;

// Euclidean-unit vector orthogonal to q for rotating q off its own line:
// the quarter turn in 2D, the most-orthogonal coordinate axis in 3D.
Vec rotation_partner(const Vec& q) {
  const Vec qh = q / norm(q);
  if (q.dim == 2) return rot90(qh);
  int axis = 0;
  double best = std::fabs(qh[0]);
  for (int i = 1; i < 3; ++i) {
    if (std::fabs(qh[i]) < best) best = std::fabs(qh[i]), axis = i;
  }
  Vec e = Vec::zero(3);
  e[axis] = 1.0;
  Vec w = e - dot(e, qh) * qh;
  return w / norm(w);
}

Vec rotate_toward(const Vec& q, const Vec& unit_partner, double angle) {
  const double nq = norm(q);
  return std::cos(angle) * q + (std::sin(angle) * nq) * unit_partner;
}

std::vector<std::pair<int, int>> consecutive_edges(size_t n) {
  std::vector<std::pair<int, int>> edges;
  for (size_t k = 0; k + 1 < n; ++k) edges.push_back({static_cast<int>(k), static_cast<int>(k) + 1});
  return edges;
}

double modulus_over_edges(const std::vector<SampledMap>& components,
                          const std::vector<std::pair<int, int>>& edges) {
  double worst = 0.0;
  for (const auto& comp : components) {
    for (const auto& [a, b] : edges) {
      worst = std::fmax(worst, distance(comp.values[static_cast<size_t>(a)],
                                        comp.values[static_cast<size_t>(b)]));
    }
  }
  return worst;
}

void fill_sphere_stats(const Body& body, DecompositionCertificate* cert) {
  double err = 0.0, min_gauge = std::numeric_limits<double>::infinity();
  for (const auto& comp : cert->components) {
    for (const auto& value : comp.values) {
      const double g = body.gauge(value);
      err = std::fmax(err, std::fabs(g - 1.0));
      min_gauge = std::fmin(min_gauge, g);
    }
  }
  cert->sphere_error = err;
  cert->shell_min_gauge = min_gauge;
}

void fill_reconstruction_error(DecompositionCertificate* cert) {
  double sup = 0.0;
  const size_t n = cert->target.size();
  for (size_t k = 0; k < n; ++k) {
    Vec sum = Vec::zero(cert->target.values[k].dim);
    for (size_t i = 0; i < cert->components.size(); ++i) {
      sum = sum + cert->coefficients[i] * cert->components[i].values[k];
    }
    sup = std::fmax(sup, distance(sum, cert->target.values[k]));
  }
  cert->sup_reconstruction_error = sup;
}

}  // namespace

DomainGrid ball_grid(const Body& body, int target_count) {
  if (target_count < 8) fail(Err::MalformedInput, "grid too small");
  DomainGrid grid;
  auto& pts = grid.identity.points;

  if (body.dim() == 2) {
    const int n_r = std::max(2, static_cast<int>(std::lround(std::sqrt(target_count / kTau))));
    const int n_t = std::max(8, (target_count + n_r - 1) / n_r);
    pts.push_back(Vec::zero(2));
    for (int k = 1; k <= n_r; ++k) {
      const double r = static_cast<double>(k) / n_r;
      for (int j = 0; j < n_t; ++j) {
        pts.push_back(r * boundary_at_angle(body, kTau * j / n_t));
        const int id = static_cast<int>(pts.size()) - 1;
        if (j > 0) grid.edges.push_back({id - 1, id});
        if (j == n_t - 1) grid.edges.push_back({id, id - (n_t - 1)});
        if (k > 1) grid.edges.push_back({id - n_t, id});
        if (k == 1) grid.edges.push_back({0, id});
      }
    }
  } else {
    const int n_r = std::max(2, static_cast<int>(std::lround(std::cbrt(target_count / 8.0))));
    const int per_shell = std::max(16, (target_count + n_r - 1) / n_r);
    const int n_lat = std::max(4, static_cast<int>(std::lround(std::sqrt(per_shell / 2.0))));
    const int n_lon = std::max(8, (per_shell + n_lat - 1) / n_lat);
    pts.push_back(Vec::zero(3));
    auto id_of = [&](int k, int i, int j) {
      return 1 + ((k - 1) * n_lat + i) * n_lon + ((j % n_lon + n_lon) % n_lon);
    };
    for (int k = 1; k <= n_r; ++k) {
      const double r = static_cast<double>(k) / n_r;
      for (int i = 0; i < n_lat; ++i) {
        const double theta = 3.14159265358979323846 * (i + 0.5) / n_lat;
        for (int j = 0; j < n_lon; ++j) {
          const double phi = kTau * j / n_lon;
          const Vec dir = Vec::of(std::sin(theta) * std::cos(phi),
                                  std::sin(theta) * std::sin(phi), std::cos(theta));
          pts.push_back(r * body.boundary_point(dir));
          if (j > 0) grid.edges.push_back({id_of(k, i, j - 1), id_of(k, i, j)});
          if (j == n_lon - 1) grid.edges.push_back({id_of(k, i, j), id_of(k, i, 0)});
          if (i > 0) grid.edges.push_back({id_of(k, i - 1, j), id_of(k, i, j)});
          if (k > 1) grid.edges.push_back({id_of(k - 1, i, j), id_of(k, i, j)});
          if (k == 1) grid.edges.push_back({0, id_of(k, i, j)});
        }
      }
    }
  }
  grid.identity.values = pts;
  return grid;
}

DomainGrid interval_grid(int count) {
  if (count < 2) fail(Err::MalformedInput, "interval grid needs at least 2 samples");
  DomainGrid grid;
  for (int k = 0; k < count; ++k) {
    grid.identity.params.push_back(static_cast<double>(k) / (count - 1));
  }
  grid.edges = consecutive_edges(static_cast<size_t>(count));
  return grid;
}

bool replay_certificate(const DecompositionCertificate& cert, std::string* reason) {
  auto reject = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (cert.kind != "span" && cert.kind != "convex") return reject("unknown certificate kind");
  if (cert.coefficients.size() != cert.components.size()) {
    return reject("coefficient/component count mismatch");
  }
  if (cert.components.empty() || cert.target.size() < 2) return reject("too few samples");
  for (const auto& comp : cert.components) {
    if (comp.size() != cert.target.size()) return reject("component sample count mismatch");
  }
  if (cert.kind == "convex") {
    double sum = 0.0;
    for (double a : cert.coefficients) {
      if (a < -1e-15) return reject("negative convex coefficient");
      sum += a;
    }
    if (std::fabs(sum - 1.0) > 1e-12) return reject("convex coefficients do not sum to 1");
  }
  if (static_cast<int>(cert.components.size()) > cert.component_bound && cert.component_bound > 0) {
    return reject("component count exceeds the certified bound");
  }
  for (size_t k = 0; k < cert.target.size(); ++k) {
    Vec sum = Vec::zero(cert.target.values[k].dim);
    for (size_t i = 0; i < cert.components.size(); ++i) {
      sum = sum + cert.coefficients[i] * cert.components[i].values[k];
    }
    if (distance(sum, cert.target.values[k]) > cert.sup_reconstruction_error + 1e-14) {
      std::ostringstream os;
      os << "reconstruction exceeds the stored error at sample " << k;
      return reject(os.str());
    }
  }
  return true;
}

double select_strip_width(const Body& body, const Vec& q, const Vec& phi, double eps0,
                          uint64_t seed) {
  if (!(eps0 > 0.0)) fail(Err::MalformedInput, "eps0 must be positive");
  const Vec partner = rotation_partner(q);
  double eps = eps0;
  for (int halving = 0; halving < 40; ++halving, eps *= 0.5) {
    Rng rng(seed ^ (0x5eedULL + static_cast<uint64_t>(halving)));
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      // Offsets floored away from 0 so chords stay resolvable by the sweep.
      // Rotations are re-projected onto the boundary: near a polytope corner
      // the rotated vector itself leaves the body.
      const double zeta = kNeighborhoodScale * eps * rng.uniform(0.2, 1.0);
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      const double eta = kNeighborhoodScale * eps * sign * rng.uniform(0.2, 1.0);
      const Vec v = (1.0 - zeta) * body.boundary_point(rotate_toward(q, partner, eta));
      try {
        strip_chord(body, v, q, phi, eps);
      } catch (const Error&) {
        ok = false;
      }
    }
    if (ok) return eps;
  }
  fail(Err::EpsSearchFailed, "no strip width admitted unique chords after 40 halvings");
}

ThreeTermParams make_three_term_params(const Body& body, uint64_t seed) {
  for (uint64_t attempt = 0; attempt < 32; ++attempt) {
    Rng rng(seed * 0x9e37ULL + attempt);
    ThreeTermParams params;
    params.seed = seed;

    Vec phi = rng.unit_vec(body.dim());
    ExposedPoint exposed;
    try {
      exposed = body.exposed_point(phi);
    } catch (const Error&) {
      continue;
    }
    params.phi = phi;
    params.q = exposed.point;
    params.min_value = exposed.min_value;

    try {
      params.eps = select_strip_width(body, params.q, params.phi, 0.5, seed + attempt);
    } catch (const Error&) {
      continue;
    }

    const Vec partner = rotation_partner(params.q);
    const double eps2 = 0.5 * kNeighborhoodScale * params.eps;
    double eta = 0.5 * kNeighborhoodScale * params.eps;
    bool placed = false;
    for (int shrink = 0; shrink < 6 && !placed; ++shrink, eta *= 0.5) {
      params.u0 =
          (1.0 - eps2) * body.boundary_point(rotate_toward(params.q, partner, eta));
      placed = body.gauge(params.u0) <= 1.0 - 0.5 * eps2 &&
               segment_distance(params.u0, params.q, -params.q) > 0.0;
    }
    if (!placed) continue;
    const double g = body.gauge(params.u0);

    const double seg_dist = segment_distance(params.u0, params.q, -params.q);
    if (!(seg_dist > 0.0)) continue;
    double rho = std::fmin(seg_dist / (2.0 * body.outradius()), 0.45 * eps2);

    // Strip-chord uniqueness over the actual neighborhood U.
    bool valid = false;
    for (int shrink = 0; shrink < 8; ++shrink) {
      valid = true;
      const int dirs = body.dim() == 2 ? 8 : 12;
      for (int di = 0; di < dirs && valid; ++di) {
        Vec dir;
        if (body.dim() == 2) {
          dir = boundary_at_angle(body, kTau * di / dirs);
        } else {
          dir = body.boundary_point(fibonacci_directions(dirs)[static_cast<size_t>(di)]);
        }
        for (double t : {0.35, 0.7, 0.95}) {
          const Vec w = params.u0 + (t * rho) * dir;
          try {
            strip_chord(body, w, params.q, params.phi, params.eps);
          } catch (const Error&) {
            valid = false;
            break;
          }
        }
      }
      if (valid) break;
      rho *= 0.5;
    }
    if (!valid) continue;
    params.rho = rho;

    params.dilation = std::ceil(1.25 * (1.0 + g) / rho);
    params.lambda = 1.0 / (1.0 + g);
    params.p = -(params.dilation / g) * params.u0;

    // Invariant verification before handing the parameters out.
    if (std::fabs(body.gauge(params.p) - params.dilation) > 1e-9 * params.dilation) continue;
    if (!(params.lambda > 0.0 && params.lambda < 1.0)) continue;
    bool contained = true;
    const int boundary_samples = 1000;
    for (int k = 0; k < boundary_samples && contained; ++k) {
      Vec x;
      if (body.dim() == 2) {
        x = boundary_at_angle(body, kTau * k / boundary_samples);
      } else {
        x = body.boundary_point(fibonacci_directions(boundary_samples)[static_cast<size_t>(k)]);
      }
      const Vec tx = (1.0 / params.lambda) * x + params.dilation * params.u0;
      contained = body.gauge(tx - params.dilation * params.u0) - params.dilation * rho <= 0.0;
    }
    if (!contained) continue;
    bool avoids = true;
    const int u_samples = 64;
    for (int k = 0; k < u_samples && avoids; ++k) {
      Vec dir;
      if (body.dim() == 2) {
        dir = boundary_at_angle(body, kTau * k / u_samples);
      } else {
        dir = body.boundary_point(fibonacci_directions(u_samples)[static_cast<size_t>(k)]);
      }
      avoids = segment_distance(params.u0 + rho * dir, params.q, -params.q) > 0.0;
    }
    if (!avoids) continue;
    return params;
  }
  fail(Err::ParamSearchFailed, "no admissible parameter set after 32 seeds");
}

DecompositionCertificate decompose_three_term(const Body& body, const ThreeTermParams& params,
                                              const DomainGrid& grid) {
  DecompositionCertificate cert;
  cert.kind = "span";
  cert.seed = params.seed;
  cert.component_bound = 3;
  cert.target = grid.identity;

  const double lambda = params.lambda, dilation = params.dilation;
  cert.coefficients = {dilation * (1.0 - lambda), dilation * lambda / 2.0,
                       dilation * lambda / 2.0};
  const Vec f1 = params.p / dilation;

  SampledMap c1 = grid.identity, c2 = grid.identity, c3 = grid.identity;
  const size_t n = grid.identity.size();
  for (size_t k = 0; k < n; ++k) {
    const Vec v = grid.identity.points[k];
    const Vec w = (1.0 / (lambda * dilation)) * v + params.u0;
    const Chord chord = strip_chord(body, w, params.q, params.phi, params.eps);
    c1.values[k] = f1;
    c2.values[k] = chord.p1;
    c3.values[k] = chord.p2;
  }
  cert.components = {std::move(c1), std::move(c2), std::move(c3)};
  fill_reconstruction_error(&cert);
  fill_sphere_stats(body, &cert);
  cert.continuity_modulus = modulus_over_edges(cert.components, grid.edges);
  cert.params = {{"eps", params.eps},       {"rho", params.rho},   {"lambda", params.lambda},
                 {"dilation", params.dilation}, {"u0_gauge", body.gauge(params.u0)}};
  return cert;
}

DecompositionCertificate decompose_two_disk(const SampledMap& f, double annulus_r) {
  if (!(annulus_r > 0.0)) fail(Err::MalformedInput, "annulus radius must be positive");
  if (f.size() < 2) fail(Err::MalformedInput, "need at least 2 samples");
  DecompositionCertificate cert;
  cert.kind = "convex";
  cert.component_bound = 2;
  cert.coefficients = {0.5, 0.5};
  cert.target = f;

  SampledMap c1 = f, c2 = f;
  for (size_t k = 0; k < f.size(); ++k) {
    const Vec z = f.values[k];
    const double r = norm(z);
    if (r < annulus_r - 1e-9) fail(Err::VanishingValue, "value below the annulus radius");
    if (r > 1.0 + 1e-9) fail(Err::MidpointOutside, "value outside the disk");
    if (r >= 1.0 - 1e-12) {
      c1.values[k] = c2.values[k] = z / r;
      continue;
    }
    const Chord chord = disk_chord(z);
    c1.values[k] = chord.p1;
    c2.values[k] = chord.p2;
  }
  cert.components = {std::move(c1), std::move(c2)};
  fill_reconstruction_error(&cert);
  fill_sphere_stats(Body::lp_ball(2, 2.0), &cert);
  cert.continuity_modulus =
      modulus_over_edges(cert.components, consecutive_edges(f.size()));
  cert.params = {{"annulus_r", annulus_r}};
  return cert;
}

DecompositionCertificate decompose_four_extreme(const Body& body2d, const SampledMap& f) {
  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "2D bodies only");
  if (!body2d.strictly_convex()) fail(Err::NotStrictlyConvex, "extreme-point chords need strict convexity");
  if (f.size() < 2) fail(Err::MalformedInput, "need at least 2 samples");

  const Vec u0 = body2d.boundary_point(Vec::of(1.0, 0.0));
  double sup_f = 0.0;
  for (const auto& value : f.values) sup_f = std::fmax(sup_f, body2d.gauge(value));
  const double k_shift = sup_f + 1.0;

  std::vector<Vec> shifted(f.size());
  double s_scale = 0.0;
  for (size_t k = 0; k < f.size(); ++k) {
    shifted[k] = f.values[k] - k_shift * u0;
    s_scale = std::fmax(s_scale, body2d.gauge(shifted[k]));
  }

  DecompositionCertificate cert;
  cert.kind = "span";
  cert.component_bound = 4;
  cert.note = "construction emits 3 of the certified 4 components";
  cert.coefficients = {k_shift, s_scale / 2.0, s_scale / 2.0};
  cert.target = f;

  SampledMap c0 = f, c1 = f, c2 = f;
  for (size_t k = 0; k < f.size(); ++k) {
    c0.values[k] = u0;
    const Chord chord = chord_map(body2d, shifted[k] / s_scale);
    c1.values[k] = chord.p1;
    c2.values[k] = chord.p2;
  }
  cert.components = {std::move(c0), std::move(c1), std::move(c2)};
  fill_reconstruction_error(&cert);
  fill_sphere_stats(body2d, &cert);
  cert.continuity_modulus =
      modulus_over_edges(cert.components, consecutive_edges(f.size()));
  cert.params = {{"shift", k_shift}, {"scale", s_scale}};
  return cert;
}

DecompositionCertificate two_nonvanishing_average(const Body& body, const SampledMap& f,
                                                  uint64_t seed) {
  if (!f.interval_domain()) fail(Err::MalformedInput, "interval domains only");
  if (f.size() < 2) fail(Err::MalformedInput, "need at least 2 samples");
  std::vector<double> gauges(f.size());
  for (size_t k = 0; k < f.size(); ++k) {
    gauges[k] = body.gauge(f.values[k]);
    if (gauges[k] > 1.0 + 1e-12) fail(Err::MalformedInput, "value outside the unit ball");
  }

  Rng rng(seed);
  std::vector<Vec> directions;
  Vec e_last = Vec::zero(body.dim());
  e_last[body.dim() - 1] = 1.0;
  Vec e_first = Vec::zero(body.dim());
  e_first[0] = 1.0;
  directions.push_back(body.boundary_point(e_last));
  directions.push_back(body.boundary_point(e_first));
  for (int k = 0; k < 14; ++k) directions.push_back(body.boundary_point(rng.unit_vec(body.dim())));
  const double deltas[] = {0.5, 0.25, 0.75, 0.125, 0.625, 0.875, 0.0625, 0.9375};

  size_t worst_sample = 0;
  double best_min = -1.0;
  for (double delta0 : deltas) {
    for (const Vec& w : directions) {
      double min_gauge = std::numeric_limits<double>::infinity();
      double max_gauge = 0.0;
      size_t argmin = 0;
      for (size_t k = 0; k < f.size(); ++k) {
        const double step = delta0 * (1.0 - gauges[k]);
        const double g1 = body.gauge(f.values[k] + step * w);
        const double g2 = body.gauge(f.values[k] - step * w);
        const double lo = std::fmin(g1, g2);
        if (lo < min_gauge) min_gauge = lo, argmin = k;
        max_gauge = std::fmax(max_gauge, std::fmax(g1, g2));
      }
      if (min_gauge > best_min) best_min = min_gauge, worst_sample = argmin;
      if (min_gauge > 1e-6 && max_gauge <= 1.0 + 1e-12) {
        DecompositionCertificate cert;
        cert.kind = "convex";
        cert.component_bound = 2;
        cert.seed = seed;
        cert.coefficients = {0.5, 0.5};
        cert.target = f;
        SampledMap c1 = f, c2 = f;
        for (size_t k = 0; k < f.size(); ++k) {
          const double step = delta0 * (1.0 - gauges[k]);
          c1.values[k] = f.values[k] + step * w;
          c2.values[k] = f.values[k] - step * w;
        }
        cert.components = {std::move(c1), std::move(c2)};
        fill_reconstruction_error(&cert);
        fill_sphere_stats(body, &cert);
        cert.continuity_modulus =
            modulus_over_edges(cert.components, consecutive_edges(f.size()));
        cert.params = {{"delta0", delta0}, {"w_x", w[0]}, {"w_y", w[1]}};
        if (body.dim() == 3) cert.params.push_back({"w_z", w[2]});
        cert.params.push_back({"min_gauge", min_gauge});
        return cert;
      }
    }
  }
  std::ostringstream os;
  os << "no nonvanishing perturbation found; obstructing sample index " << worst_sample
     << " (t=" << f.params[worst_sample] << ", best min gauge " << best_min << ")";
  fail(Err::SearchFailed, os.str());
}

DecompositionCertificate shell_convex_decomposition(const Body& body2d, const SampledMap& f,
                                                    double shell_r, uint64_t seed) {
  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "2D bodies only");
  if (!body2d.strictly_convex()) fail(Err::NotStrictlyConvex, "shell pipeline needs strict convexity");
  if (!(shell_r < 1.0)) fail(Err::MalformedInput, "shell inner radius must be below 1");
  const ShellSpec shell = ShellSpec::of(shell_r, 1.0);

  const DecompositionCertificate avg = two_nonvanishing_average(body2d, f, seed);

  DecompositionCertificate cert;
  cert.kind = "convex";
  cert.component_bound = 4;
  cert.seed = seed;
  cert.coefficients = {0.25, 0.25, 0.25, 0.25};
  cert.target = f;
  SampledMap c11 = f, c12 = f, c21 = f, c22 = f;
  for (size_t k = 0; k < f.size(); ++k) {
    const Chord a = chord_map(body2d, avg.components[0].values[k]);
    const Chord b = chord_map(body2d, avg.components[1].values[k]);
    c11.values[k] = a.p1;
    c12.values[k] = a.p2;
    c21.values[k] = b.p1;
    c22.values[k] = b.p2;
  }
  cert.components = {std::move(c11), std::move(c12), std::move(c21), std::move(c22)};
  fill_reconstruction_error(&cert);
  fill_sphere_stats(body2d, &cert);
  cert.continuity_modulus =
      modulus_over_edges(cert.components, consecutive_edges(f.size()));
  cert.params = avg.params;
  cert.params.push_back({"shell_inner", shell.inner});
  cert.params.push_back({"shell_outer", shell.outer});
  return cert;
}

}  // namespace spherespan
