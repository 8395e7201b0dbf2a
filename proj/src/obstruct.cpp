#include "spherespan/obstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "spherespan/rng.hpp"

namespace spherespan {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 6.28318530717958647692;

double line_angle(const Vec& a, const Vec& b) {
  const double c = std::fabs(dot(a, b)) / (norm(a) * norm(b));
  return std::acos(std::fmin(1.0, std::fmax(0.0, c)));
}

}  // namespace

ChordAngleBound chord_angle_bound(const Body& body2d, double u_radius, int midpoint_samples,
                                  int chord_resolution) {
  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "2D bodies only");
  if (!(u_radius > 0.0) || u_radius > body2d.inradius() * 0.2000001) {
    fail(Err::MalformedInput, "u_radius must be a small fraction of the inradius");
  }

  ChordAngleBound bound;
  bound.u_radius = u_radius;
  bound.midpoint_samples = midpoint_samples;
  bound.chord_resolution = chord_resolution;
  bound.theta = kPi / 2.0;

  const int n_r = std::max(2, static_cast<int>(std::lround(std::sqrt(midpoint_samples / 8.0))));
  const int n_t = std::max(8, midpoint_samples / n_r);
  bool have_witness = false;
  for (int i = 1; i <= n_r; ++i) {
    const double r = u_radius * i / n_r;  // gauge radius, stays positive
    for (int j = 0; j < n_t; ++j) {
      const Vec p = r * boundary_at_angle(body2d, kTau * j / n_t);
      const auto chords = bisected_chords(body2d, p, chord_resolution, /*allow_continuum=*/true);
      double local = kPi / 2.0;
      for (const Chord& c : chords) {
        const double angle = line_angle(p, c.p1 - c.p2);
        local = std::fmin(local, angle);
        if (!have_witness || angle < bound.theta) {
          have_witness = true;
          bound.theta = angle;
          bound.witness_midpoint = p;
          bound.witness_chord = c;
          bound.parallel_residual = std::fabs(norm(c.p1 + c.p2) - 2.0 * norm(p));
        }
      }
      bound.scan.push_back({p[0], p[1], local});
    }
  }
  if (!have_witness) fail(Err::NoChordsFound, "chord resolution too low");
  return bound;
}

SectionWitness discontinuity_witness(const Body& body2d,
                                     const std::function<Chord(const Vec&)>& section,
                                     double u_radius, int grid, double jump_threshold,
                                     int max_rounds) {
  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "2D bodies only");
  if (grid < 4) fail(Err::MalformedInput, "grid too small");

  SectionWitness result;
  result.u_radius_final = u_radius;
  int invalid = 0;

  const double midpoint_tol = 1e-8 * body2d.outradius();
  double radius = u_radius;
  for (int round = 0; round < max_rounds; ++round, radius *= 0.5) {
    result.rounds_used = round + 1;
    result.u_radius_final = radius;
    const double radii[] = {0.25 * radius, 0.5 * radius, 0.75 * radius, radius};
    const double spacing = 0.25 * radius * body2d.outradius();
    result.spacing = spacing;

    std::vector<Vec> pts;
    std::vector<Chord> chords;
    std::vector<char> ok;
    for (double r : radii) {
      for (int j = 0; j < grid; ++j) {
        const Vec p = r * boundary_at_angle(body2d, kTau * j / grid);
        ++result.evaluations;
        pts.push_back(p);
        Chord c;
        bool valid = false;
        try {
          c = section(p);
          valid = true;
        } catch (const Error&) {
          ++result.failures;
        }
        if (valid) {
          // No false witnesses: the evaluation must be a genuine chord
          // bisected by the queried point.
          if (std::fabs(body2d.gauge(c.p1) - 1.0) > 1e-8 ||
              std::fabs(body2d.gauge(c.p2) - 1.0) > 1e-8 ||
              distance(c.midpoint, p) > midpoint_tol) {
            ++invalid;
            valid = false;
          }
        }
        chords.push_back(c);
        ok.push_back(valid ? 1 : 0);
      }
    }
    if (result.failures == result.evaluations) {
      fail(Err::SectionUndefinedEverywhere, "section failed at every grid point");
    }
    if (invalid * 2 > result.evaluations) {
      fail(Err::InvalidSection, "section violates the midpoint property on most of the grid");
    }

    for (size_t a = 0; a < pts.size(); ++a) {
      if (!ok[a]) continue;
      for (size_t b = a + 1; b < pts.size(); ++b) {
        if (!ok[b]) continue;
        if (distance(pts[a], pts[b]) > 2.0 * spacing) continue;
        const double jump = chord_distance(chords[a], chords[b]);
        if (jump >= jump_threshold && jump > result.jump) {
          result.found = true;
          result.jump = jump;
          result.p = pts[a];
          result.p_prime = pts[b];
          result.chord_p = chords[a];
          result.chord_p_prime = chords[b];
        }
      }
    }
    if (result.found) return result;
  }
  return result;  // consistent at this resolution
}

namespace {

using SectionFn = std::function<Chord(const Vec&)>;

Chord pick_chord(const Body& body, const Vec& p, int resolution,
                 const std::function<bool(const Chord&, const Chord&)>& better) {
  auto chords = bisected_chords(body, p, resolution, /*allow_continuum=*/true);
  if (chords.empty()) fail(Err::NoChordsFound, "no bisected chord at the query point");
  Chord best = chords.front();
  for (const Chord& c : chords) {
    if (better(c, best)) best = c;
  }
  return best;
}

double sweep_angle(const Vec& x) {
  double t = std::atan2(x[1], x[0]);
  if (t < 0.0) t += kTau;
  return t;
}

Vec reflect_x(const Vec& v) { return Vec::of(v[0], -v[1]); }
Vec reflect_y(const Vec& v) { return Vec::of(-v[0], v[1]); }
Vec reflect_diag(const Vec& v) { return Vec::of(v[1], v[0]); }

Chord map_chord(const Chord& c, const std::function<Vec(const Vec&)>& t) {
  return make_chord(t(c.p1), t(c.p2));
}

}  // namespace

int heuristic_section_count() { return 20; }

std::string heuristic_section_name(int index) {
  static const char* names[] = {
      "canonical",          "swapped",            "first-angle",       "last-angle",
      "widest",             "narrowest",          "max-area",          "min-area",
      "conj-rot180",        "conj-reflect-x",     "conj-reflect-y",    "conj-reflect-diag",
      "endpoint-east",      "endpoint-north",     "endpoint-west",     "anchor-near",
      "anchor-far",         "ref-chord-near",     "ref-chord-far",     "lexicographic",
  };
  if (index < 0 || index >= 20) fail(Err::MalformedInput, "heuristic index out of range");
  return names[index];
}

std::function<Chord(const Vec&)> heuristic_section(const Body& body2d, int index) {
  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "2D bodies only");
  if (index < 0 || index >= 20) fail(Err::MalformedInput, "heuristic index out of range");
  const Body k = body2d;
  const int res = 1024;

  switch (index) {
    case 0:
      return [k](const Vec& p) { return chord_map(k, p); };
    case 1:
      return [k](const Vec& p) {
        const Chord c = chord_map(k, p);
        return make_chord(c.p2, c.p1);
      };
    case 2:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return std::fmin(sweep_angle(a.p1), sweep_angle(a.p2)) <
                 std::fmin(sweep_angle(b.p1), sweep_angle(b.p2));
        });
      };
    case 3:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return std::fmax(sweep_angle(a.p1), sweep_angle(a.p2)) >
                 std::fmax(sweep_angle(b.p1), sweep_angle(b.p2));
        });
      };
    case 4:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return distance(a.p1, a.p2) > distance(b.p1, b.p2);
        });
      };
    case 5:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return distance(a.p1, a.p2) < distance(b.p1, b.p2);
        });
      };
    case 6:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return std::fabs(cross2(a.p1, a.p2)) > std::fabs(cross2(b.p1, b.p2));
        });
      };
    case 7:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return std::fabs(cross2(a.p1, a.p2)) < std::fabs(cross2(b.p1, b.p2));
        });
      };
    // Conjugations by linear symmetries of axis-aligned bodies; valid
    // sections whenever the map preserves the body.
    case 8:
      return [k](const Vec& p) { return map_chord(chord_map(k, -p), [](const Vec& v) { return -v; }); };
    case 9:
      return [k](const Vec& p) { return map_chord(chord_map(k, reflect_x(p)), reflect_x); };
    case 10:
      return [k](const Vec& p) { return map_chord(chord_map(k, reflect_y(p)), reflect_y); };
    case 11:
      return [k](const Vec& p) { return map_chord(chord_map(k, reflect_diag(p)), reflect_diag); };
    case 12:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return std::fmax(a.p1[0], a.p2[0]) > std::fmax(b.p1[0], b.p2[0]);
        });
      };
    case 13:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return std::fmax(a.p1[1], a.p2[1]) > std::fmax(b.p1[1], b.p2[1]);
        });
      };
    case 14:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          return std::fmin(a.p1[0], a.p2[0]) < std::fmin(b.p1[0], b.p2[0]);
        });
      };
    case 15: {
      const Vec anchor = body2d.boundary_point(Vec::of(1.0, 1.0));
      return [k, res, anchor](const Vec& p) {
        return pick_chord(k, p, res, [anchor](const Chord& a, const Chord& b) {
          return std::fmin(distance(a.p1, anchor), distance(a.p2, anchor)) <
                 std::fmin(distance(b.p1, anchor), distance(b.p2, anchor));
        });
      };
    }
    case 16: {
      const Vec anchor = body2d.boundary_point(Vec::of(1.0, 1.0));
      return [k, res, anchor](const Vec& p) {
        return pick_chord(k, p, res, [anchor](const Chord& a, const Chord& b) {
          return std::fmin(distance(a.p1, anchor), distance(a.p2, anchor)) >
                 std::fmin(distance(b.p1, anchor), distance(b.p2, anchor));
        });
      };
    }
    case 17: {
      const Chord ref = chord_map(body2d, 0.5 * body2d.boundary_point(Vec::of(1.0, 0.0)));
      return [k, res, ref](const Vec& p) {
        return pick_chord(k, p, res, [ref](const Chord& a, const Chord& b) {
          return chord_distance(a, ref) < chord_distance(b, ref);
        });
      };
    }
    case 18: {
      const Chord ref = chord_map(body2d, 0.5 * body2d.boundary_point(Vec::of(1.0, 0.0)));
      return [k, res, ref](const Vec& p) {
        return pick_chord(k, p, res, [ref](const Chord& a, const Chord& b) {
          return chord_distance(a, ref) > chord_distance(b, ref);
        });
      };
    }
    default:
      return [k, res](const Vec& p) {
        return pick_chord(k, p, res, [](const Chord& a, const Chord& b) {
          const Vec la = a.p1[0] < a.p2[0] || (a.p1[0] == a.p2[0] && a.p1[1] < a.p2[1]) ? a.p1 : a.p2;
          const Vec lb = b.p1[0] < b.p2[0] || (b.p1[0] == b.p2[0] && b.p1[1] < b.p2[1]) ? b.p1 : b.p2;
          return la[0] < lb[0] || (la[0] == lb[0] && la[1] < lb[1]);
        });
      };
  }
}

ForcingReport lambda_forcing_check(double alpha1, double alpha2, const Vec& s1, const Vec& s2,
                                   const Body& body) {
  if (std::fabs(alpha1 + alpha2 - 1.0) > 1e-12) {
    fail(Err::MalformedInput, "alpha1 + alpha2 must equal 1");
  }
  if (std::fabs(body.gauge(s1) - 1.0) > 1e-8 || std::fabs(body.gauge(s2) - 1.0) > 1e-8) {
    fail(Err::NotOnSphere, "s1 and s2 must have gauge 1");
  }
  ForcingReport report;
  report.vanish_residual = body.gauge(alpha1 * s1 + alpha2 * s2);
  report.alpha_residual = std::fabs(alpha1 - 0.5);
  report.antipode_residual = norm(s1 + s2);
  report.forced = report.vanish_residual <= 1e-8 && report.alpha_residual <= 1e-9 &&
                  report.antipode_residual <= 1e-8;
  return report;
}

namespace {

int loop_winding(const std::vector<Vec>& images) {
  SphereMapSamples f;
  f.dim = 2;
  f.domain = images;  // unused by winding
  f.image = images;
  return winding_number(f);
}

}  // namespace

RefutationOutcome refute_convex_decomposition(const Body& body2d,
                                              const CandidateDecomposition& candidate) {
  RefutationOutcome outcome;
  auto reject = [&](const std::string& check, const std::string& detail) {
    outcome.failed_check = check;
    outcome.detail = detail;
    return outcome;
  };

  if (body2d.dim() != 2) fail(Err::DimensionMismatch, "2D bodies only");
  const size_t n_components = candidate.components.size();
  const int per_circle = candidate.samples_per_circle;
  const size_t n_circles = candidate.circle_radii.size();
  if (n_components == 0 || candidate.lambdas.size() != n_components || per_circle < 16 ||
      n_circles < 2) {
    fail(Err::MalformedInput, "candidate is structurally incomplete");
  }
  double lambda_sum = 0.0;
  for (double l : candidate.lambdas) {
    if (l < -1e-12) fail(Err::MalformedInput, "negative convex coefficient");
    lambda_sum += l;
  }
  if (std::fabs(lambda_sum - 1.0) > 1e-9) fail(Err::MalformedInput, "lambdas are not convex");
  const size_t total = n_circles * static_cast<size_t>(per_circle);
  for (const auto& comp : candidate.components) {
    if (comp.size() != total) fail(Err::MalformedInput, "component sample count mismatch");
  }
  if (candidate.target.size() != total) fail(Err::MalformedInput, "target sample count mismatch");
  if (std::fabs(candidate.circle_radii.front() - 1.0) > 1e-9) {
    fail(Err::MalformedInput, "first circle must be the boundary");
  }

  // (i) reconstruction at every sample.
  for (size_t s = 0; s < total; ++s) {
    Vec sum = Vec::zero(2);
    for (size_t i = 0; i < n_components; ++i) {
      sum = sum + candidate.lambdas[i] * candidate.components[i].values[s];
    }
    if (distance(sum, candidate.target.values[s]) > 1e-6) {
      std::ostringstream os;
      os << "sum of components misses the identity at circle radius "
         << candidate.circle_radii[s / static_cast<size_t>(per_circle)] << " (sample " << s << ")";
      return reject("reconstruction", os.str());
    }
  }

  // (ii) sphere-valued components everywhere (this is also the radial-shrink
  // homotopy staying sphere-valued).
  for (size_t i = 0; i < n_components; ++i) {
    for (size_t s = 0; s < total; ++s) {
      if (std::fabs(body2d.gauge(candidate.components[i].values[s]) - 1.0) > 1e-6) {
        std::ostringstream os;
        os << "component " << i << " leaves the sphere at sample " << s;
        return reject("sphere-valued", os.str());
      }
    }
  }

  // (iii) extreme points fixed on the boundary circle, hence winding 1.
  ContradictionCertificate cert;
  for (size_t i = 0; i < n_components; ++i) {
    if (body2d.strictly_convex()) {
      for (int j = 0; j < per_circle; ++j) {
        const size_t s = static_cast<size_t>(j);
        if (distance(candidate.components[i].values[s], candidate.target.values[s]) > 1e-6) {
          std::ostringstream os;
          os << "component " << i << " moves the extreme point at boundary sample " << j;
          return reject("extreme-points-fixed", os.str());
        }
      }
    } else {
      if (body2d.kind() != BodyKind::Polytope) {
        fail(Err::MalformedInput, "refuter needs a strictly convex or polytope body");
      }
      for (const Vec& vertex : body2d.polytope_data().vertices) {
        bool fixed = false;
        for (int j = 0; j < per_circle; ++j) {
          const size_t s = static_cast<size_t>(j);
          if (distance(candidate.target.values[s], vertex) < 1e-9 &&
              distance(candidate.components[i].values[s], vertex) < 1e-6) {
            fixed = true;
            break;
          }
        }
        if (!fixed) return reject("extreme-points-fixed", "a polytope vertex is not fixed");
      }
    }
    std::vector<Vec> boundary_images(candidate.components[i].values.begin(),
                                     candidate.components[i].values.begin() + per_circle);
    int w;
    try {
      w = loop_winding(boundary_images);
    } catch (const Error& e) {
      return reject("boundary-winding", e.what());
    }
    cert.component_boundary_windings.push_back(w);
    if (w != 1) return reject("boundary-winding", "boundary winding differs from 1");
  }

  // (iv) the innermost circle must be a near-constant loop, forcing winding 0.
  const size_t off0 = total - static_cast<size_t>(per_circle);
  for (size_t i = 0; i < n_components; ++i) {
    double diameter = 0.0;
    for (int a = 0; a < per_circle; ++a) {
      for (int b = a + 1; b < per_circle; ++b) {
        diameter = std::fmax(diameter, distance(candidate.components[i].values[off0 + a],
                                                candidate.components[i].values[off0 + b]));
      }
    }
    if (diameter > 0.1 * body2d.outradius()) {
      std::ostringstream os;
      os << "component " << i << " is not near-constant at the center (diameter " << diameter
         << "); the radial homotopy cannot end at a constant loop";
      return reject("center-near-constant", os.str());
    }
    std::vector<Vec> center_images(candidate.components[i].values.begin() + off0,
                                   candidate.components[i].values.end());
    int w;
    try {
      w = loop_winding(center_images);
    } catch (const Error& e) {
      return reject("center-winding", e.what());
    }
    cert.component_center_windings.push_back(w);
    if (w != 0) return reject("center-winding", "near-constant loop with nonzero winding");
  }

  cert.boundary_winding = 1;
  cert.center_winding = 0;
  cert.discrepancy =
      "every component fixes the extreme points (boundary winding 1) yet shrinks radially to a "
      "near-constant loop (winding 0); a continuous decomposition would preserve the winding";
  outcome.certificate = cert;
  return outcome;
}

CandidateDecomposition make_adversarial_decomposition(const Body& body2d, uint64_t seed,
                                                      int samples_per_circle) {
  if (!body2d.strictly_convex()) fail(Err::NotStrictlyConvex, "generator needs a strictly convex body");
  Rng rng(seed);
  CandidateDecomposition cand;
  cand.lambdas = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  cand.circle_radii = {1.0, 0.75, 0.5, 0.25, 1e-7};
  cand.samples_per_circle = samples_per_circle;

  const Vec c1 = body2d.boundary_point(rng.unit_vec(2));
  const Chord anchor = chord_map(body2d, -0.5 * c1);

  cand.components.assign(3, SampledMap{});
  for (size_t t_idx = 0; t_idx < cand.circle_radii.size(); ++t_idx) {
    const double t = cand.circle_radii[t_idx];
    // Blend schedule: identity-like near the boundary, frozen near the center.
    const double beta = t >= 0.75 ? 0.0 : (t >= 0.5 ? 0.5 : 1.0);
    for (int j = 0; j < samples_per_circle; ++j) {
      const Vec x = boundary_at_angle(body2d, kTau * j / samples_per_circle);
      const Vec v = t * x;
      cand.target.points.push_back(v);
      cand.target.values.push_back(v);

      Vec f1;
      if (t_idx == 0) {
        f1 = x;
      } else if (beta >= 1.0) {
        f1 = c1;
      } else {
        Vec w = (1.0 - beta) * x + beta * c1;
        if (body2d.gauge(w) < 0.05) w = w + 0.1 * rot90(c1);
        f1 = body2d.boundary_point(w);
        // Keep the chord-completion midpoint inside the body.
        double nu = 0.0;
        while (body2d.gauge(1.5 * v - 0.5 * f1) > 0.98 && nu < 1.0) {
          nu += 0.1;
          f1 = body2d.boundary_point((1.0 - nu) * w + nu * x);
        }
      }
      Vec f2, f3;
      if (t_idx == 0) {
        f2 = f3 = x;
      } else {
        const Vec z = 1.5 * v - 0.5 * f1;
        const double gz = body2d.gauge(z);
        if (gz <= 1e-12) {
          f2 = anchor.p1;
          f3 = anchor.p2;
        } else {
          const Chord chord = chord_map(body2d, z);
          f2 = chord.p1;
          f3 = chord.p2;
        }
      }
      cand.components[0].points.push_back(v);
      cand.components[0].values.push_back(f1);
      cand.components[1].points.push_back(v);
      cand.components[1].values.push_back(f2);
      cand.components[2].points.push_back(v);
      cand.components[2].values.push_back(f3);
    }
  }
  return cand;
}

CandidateDecomposition make_partial_identity_decomposition(const Body& body2d, uint64_t seed,
                                                           int samples_per_circle) {
  Rng rng(seed);
  CandidateDecomposition cand;
  const int k = rng.uniform_int(2, 3);
  cand.lambdas.assign(static_cast<size_t>(k), 1.0 / k);
  cand.circle_radii = {1.0, 0.75, 0.5, 0.25, 1e-7};
  cand.samples_per_circle = samples_per_circle;
  cand.components.assign(static_cast<size_t>(k), SampledMap{});
  for (double t : cand.circle_radii) {
    for (int j = 0; j < samples_per_circle; ++j) {
      const Vec x = boundary_at_angle(body2d, kTau * j / samples_per_circle);
      const Vec v = t * x;
      cand.target.points.push_back(v);
      cand.target.values.push_back(v);
      // Radial retraction: a perfectly valid sphere-valued map near the
      // boundary that cannot reconstruct the identity inside.
      for (int i = 0; i < k; ++i) {
        cand.components[static_cast<size_t>(i)].points.push_back(v);
        cand.components[static_cast<size_t>(i)].values.push_back(x);
      }
    }
  }
  return cand;
}

FaceCheckReport support_face_check(const Body& body, const Vec& v,
                                   const std::vector<Vec>& components,
                                   const std::vector<double>& lambdas) {
  if (components.size() != lambdas.size() || components.empty()) {
    fail(Err::MalformedInput, "component/lambda count mismatch");
  }
  if (std::fabs(body.gauge(v) - 1.0) > 1e-6) fail(Err::NotOnBoundary, "v must have gauge 1");
  double lambda_sum = 0.0;
  Vec recon = Vec::zero(v.dim);
  FaceCheckReport report;
  for (size_t i = 0; i < components.size(); ++i) {
    if (lambdas[i] < -1e-12) fail(Err::MalformedInput, "negative convex coefficient");
    if (body.gauge(components[i]) > 1.0 + 1e-9) {
      report.reason = "a component lies outside the body";
      return report;
    }
    lambda_sum += lambdas[i];
    recon = recon + lambdas[i] * components[i];
  }
  if (std::fabs(lambda_sum - 1.0) > 1e-9) fail(Err::MalformedInput, "lambdas are not convex");
  if (distance(recon, v) > 1e-9) {
    report.reason = "components do not reconstruct v";
    return report;
  }

  Vec u = Vec::zero(v.dim);
  if (body.kind() == BodyKind::Polytope) {
    // Facet whose normal best aligns with v among those containing v.
    const auto& poly = body.polytope_data();
    double best = -2.0;
    bool found = false;
    for (const auto& f : poly.facets) {
      if (std::fabs(dot(f.normal, v) - f.offset) > 1e-9 * body.outradius()) continue;
      const double align = dot(f.normal, v) / norm(v);
      if (align > best) {
        best = align;
        u = f.normal / f.offset;
        found = true;
      }
    }
    if (!found) fail(Err::NoSupportFunctional, "no facet contains v");
  } else {
    const double h = 1e-6 * body.outradius();
    for (int i = 0; i < v.dim; ++i) {
      Vec lo = v, hi = v;
      lo[i] -= h;
      hi[i] += h;
      u[i] = (body.gauge(hi) - body.gauge(lo)) / (2.0 * h);
    }
    const double uv = dot(u, v);
    if (std::fabs(uv) < 1e-12) fail(Err::NoSupportFunctional, "vanishing gauge gradient");
    u = u / uv;  // support value at v becomes 1
  }

  report.functional = u;
  report.max_deviation = 0.0;
  for (size_t i = 0; i < components.size(); ++i) {
    if (lambdas[i] <= 1e-12) continue;
    report.max_deviation = std::fmax(report.max_deviation, std::fabs(dot(u, components[i]) - 1.0));
  }
  report.pass = report.max_deviation <= 1e-6;
  if (!report.pass) report.reason = "a weighted component leaves the support face";
  return report;
}

}  // namespace spherespan
