#pragma once

#include <functional>
#include <vector>

#include "spherespan/body.hpp"

namespace spherespan {

// Unordered pair of boundary points together with its midpoint. The midpoint
// field always stores (p1+p2)/2 as computed.
struct Chord {
  Vec p1, p2;
  Vec midpoint;
};

Chord make_chord(const Vec& p1, const Vec& p2);

// Distance between chords as unordered endpoint pairs:
// min over the two matchings of the larger endpoint displacement.
double chord_distance(const Chord& a, const Chord& b);

// 2-plane span{v, q} through the origin, with the induced planar body whose
// gauge is the ambient gauge pulled back through the orthonormal basis
// (b1 along q, b2 along the part of v orthogonal to q).
struct PlanarSection {
  Vec b1, b2;
  Body body2d;

  Vec to_ambient(const Vec& st) const { return st[0] * b1 + st[1] * b2; }
  Vec to_plane(const Vec& x) const { return Vec::of(dot(x, b1), dot(x, b2)); }
};

PlanarSection make_section(const Body& body, const Vec& v, const Vec& q);

// All chords of a 2D body bisected by v, found as sign changes of
// gauge(2v - boundary(t)) - 1 over an angular sweep, polished by bisection and
// merged as unordered pairs. With allow_continuum = false, more than
// resolution/10 surviving chords raises ContinuumSuspected (flat faces).
std::vector<Chord> bisected_chords(const Body& body2d, const Vec& v, int resolution = 2048,
                                   bool allow_continuum = false);

// The unique chord of a strictly convex planar body bisected by p, endpoints
// ordered so that (0, p1, p2) is counter-clockwise. p on the boundary yields
// the degenerate chord (p, p).
Chord chord_map(const Body& body2d, const Vec& p);

// Closed-form chord of the Euclidean unit disk bisected by z.
Chord disk_chord(const Vec& z);

// Chord of the section span{v, q} bisected by v whose endpoints both satisfy
// <phi, .> <= min + eps; exactly one must survive. Endpoints are labelled
// against v relative to the line through q and -q within the section plane:
// v has positive b2-coordinate by construction and p1 takes the lower one.
Chord strip_chord(const Body& body, const Vec& v, const Vec& q, const Vec& phi, double eps,
                  int resolution = 2048);

// For strictly convex bodies: v away from span{q} to the section chord of
// K_{v,q} bisected by v. The callable captures only immutable data.
std::function<Chord(const Vec&)> off_line_section(const Body& body, const Vec& q);

}  // namespace spherespan
