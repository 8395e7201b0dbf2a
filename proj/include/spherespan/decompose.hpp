#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherespan/body.hpp"
#include "spherespan/section.hpp"

namespace spherespan {

// A sampled map: either an interval domain (params filled) or a point domain
// (points filled), with one value per sample.
struct SampledMap {
  std::vector<double> params;
  std::vector<Vec> points;
  std::vector<Vec> values;

  size_t size() const { return values.size(); }
  bool interval_domain() const { return !params.empty(); }
};

// Identity samples over a domain together with the adjacency used for
// continuity moduli.
struct DomainGrid {
  SampledMap identity;
  std::vector<std::pair<int, int>> edges;
};

// Concentric rings (2D) or shells x latitude bands (3D) covering the unit
// ball of the body, target_count points, plus the origin.
DomainGrid ball_grid(const Body& body, int target_count);
DomainGrid interval_grid(int count);

struct DecompositionCertificate {
  std::string kind;  // "span" | "convex"
  std::vector<double> coefficients;
  std::vector<SampledMap> components;
  SampledMap target;
  double sup_reconstruction_error = 0.0;
  double sphere_error = 0.0;       // max |gauge(component value) - 1|
  double shell_min_gauge = 0.0;    // min gauge over component values
  double continuity_modulus = 0.0; // max adjacent-sample jump over components
  int component_bound = 0;         // certified upper bound on the component count
  uint64_t seed = 0;
  std::string note;
  std::vector<std::pair<std::string, double>> params;  // construction scalars
};

// Re-evaluates the stored reconstruction and invariants from the certificate
// data alone. Returns false with a reason on any violation.
bool replay_certificate(const DecompositionCertificate& cert, std::string* reason = nullptr);

struct ThreeTermParams {
  Vec q;                  // exposed point
  Vec phi;                // exposing functional
  double min_value = 0.0; // min of phi over the body
  double eps = 0.0;       // strip width
  Vec u0;                 // center of the admissible neighborhood U
  double rho = 0.0;       // gauge radius of U
  double dilation = 0.0;  // R
  double lambda = 0.0;
  Vec p;                  // gauge(p) = R
  uint64_t seed = 0;
};

// Halves eps from eps0 until 200 sampled midpoints in the eps-scaled
// neighborhood of q all admit exactly one strip chord; 40 halvings at most.
double select_strip_width(const Body& body, const Vec& q, const Vec& phi, double eps0,
                          uint64_t seed = 0);

// Seeded search for a full parameter set; verifies every invariant
// (containment of the dilated ball image in R*U, segment avoidance,
// strip-chord uniqueness on U samples) before returning.
ThreeTermParams make_three_term_params(const Body& body, uint64_t seed);

// v = R(1-lambda) f1 + (R lambda/2) f2 + (R lambda/2) f3 with f1 constant and
// f2, f3 the strip-chord endpoints at Tv/R; span certificate with exactly
// three sphere-valued components.
DecompositionCertificate decompose_three_term(const Body& body, const ThreeTermParams& params,
                                              const DomainGrid& grid);

// Average of the two disk-chord endpoints; input must stay at Euclidean norm
// >= annulus_r > 0.
DecompositionCertificate decompose_two_disk(const SampledMap& f, double annulus_r);

// f = k*u0 + (s/2)(c1 + c2) with u0 a fixed boundary direction and c1, c2 the
// chord endpoints of the shifted map; span certificate, at most four
// components certified (three produced).
DecompositionCertificate decompose_four_extreme(const Body& body2d, const SampledMap& f);

// f = (g1 + g2)/2 with g_i = f +- delta0(1 - gauge(f)) w nowhere zero; seeded
// search over the direction w and delta0.
DecompositionCertificate two_nonvanishing_average(const Body& body, const SampledMap& f,
                                                  uint64_t seed);

// Nonvanishing average followed by chord maps: four sphere-valued components
// with coefficients 1/4, valid for every shell inner radius r < 1.
DecompositionCertificate shell_convex_decomposition(const Body& body2d, const SampledMap& f,
                                                    double shell_r, uint64_t seed);

}  // namespace spherespan
