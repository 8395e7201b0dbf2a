#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spherespan/decompose.hpp"
#include "spherespan/degree.hpp"
#include "spherespan/section.hpp"

namespace spherespan {

// Global lower bound on the angle between the line through a chord midpoint
// and the chord itself, over all sampled midpoints of gauge at most u_radius.
struct ChordAngleBound {
  double u_radius = 0.0;
  double theta = 0.0;  // radians, in [0, pi/2]
  int midpoint_samples = 0;
  int chord_resolution = 0;
  Vec witness_midpoint;
  Chord witness_chord;
  double parallel_residual = 0.0;  // | |p1 + p2| - 2|midpoint| | at the witness
  std::vector<std::array<double, 3>> scan;  // (p_x, p_y, min angle) per midpoint
};

ChordAngleBound chord_angle_bound(const Body& body2d, double u_radius,
                                  int midpoint_samples = 2000, int chord_resolution = 4000);

// Result of hunting for a discontinuity of a candidate chord section near 0.
struct SectionWitness {
  bool found = false;
  Vec p, p_prime;
  Chord chord_p, chord_p_prime;
  double jump = 0.0;          // chord distance between the two evaluations
  double spacing = 0.0;       // grid spacing at the witnessing round
  double u_radius_final = 0.0;
  int rounds_used = 0;
  int evaluations = 0;
  int failures = 0;  // section errors at individual points, tolerated
};

SectionWitness discontinuity_witness(const Body& body2d,
                                     const std::function<Chord(const Vec&)>& section,
                                     double u_radius, int grid, double jump_threshold = 0.5,
                                     int max_rounds = 8);

// Built-in candidate sections used to exercise discontinuity_witness. All of
// them select among genuine bisected chords; on strictly convex bodies many
// coincide extensionally because the chord is unique.
int heuristic_section_count();
std::string heuristic_section_name(int index);
std::function<Chord(const Vec&)> heuristic_section(const Body& body2d, int index);

struct ForcingReport {
  bool forced = false;
  double vanish_residual = 0.0;   // gauge of alpha1 s1 + alpha2 s2
  double alpha_residual = 0.0;    // |alpha1 - 1/2|
  double antipode_residual = 0.0; // Euclidean |s1 + s2|
};

// Checks that a vanishing combination alpha1 s1 + alpha2 s2 = 0 of unit
// vectors forces alpha1 = 1/2 and s2 = -s1.
ForcingReport lambda_forcing_check(double alpha1, double alpha2, const Vec& s1, const Vec& s2,
                                   const Body& body);

// A claimed convex decomposition of the identity sampled on concentric
// circles t * boundary, t descending from 1 to nearly 0.
struct CandidateDecomposition {
  std::vector<double> lambdas;
  std::vector<double> circle_radii;
  int samples_per_circle = 0;
  std::vector<SampledMap> components;  // shared domain: circle-major samples
  SampledMap target;
};

struct ContradictionCertificate {
  int boundary_winding = 1;  // forced by fixing the extreme points
  int center_winding = 0;    // forced by the radial homotopy to a near-constant loop
  std::vector<int> component_boundary_windings;
  std::vector<int> component_center_windings;
  std::string discrepancy;
};

struct RefutationOutcome {
  std::optional<ContradictionCertificate> certificate;
  std::string failed_check;  // first failed precondition when no certificate
  std::string detail;
};

RefutationOutcome refute_convex_decomposition(const Body& body2d,
                                              const CandidateDecomposition& candidate);

// Candidate generators. The adversarial one passes every pointwise check and
// is refuted through the winding discrepancy; the partial one reuses the
// radial retraction and fails reconstruction away from the boundary.
CandidateDecomposition make_adversarial_decomposition(const Body& body2d, uint64_t seed,
                                                      int samples_per_circle = 256);
CandidateDecomposition make_partial_identity_decomposition(const Body& body2d, uint64_t seed,
                                                           int samples_per_circle = 256);

struct FaceCheckReport {
  bool pass = false;
  Vec functional;          // support functional at v, normalized to value 1
  double max_deviation = 0.0;
  std::string reason;      // empty on pass
};

// Verifies that every component of a convex combination reconstructing a
// boundary point lies on the support face at that point.
FaceCheckReport support_face_check(const Body& body, const Vec& v,
                                   const std::vector<Vec>& components,
                                   const std::vector<double>& lambdas);

}  // namespace spherespan
