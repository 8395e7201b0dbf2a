#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spherespan/rng.hpp"
#include "spherespan/section.hpp"

using namespace spherespan;

namespace {

const Body kDisk = Body::lp_ball(2, 2.0);
const Body kL4 = Body::lp_ball(2, 4.0);
const Body kEllipse = Body::ellipsoid({2.0, 1.0});

bool matches_pair(const Chord& c, const Vec& a, const Vec& b, double tol) {
  return chord_distance(c, make_chord(a, b)) < tol;
}

}  // namespace

TEST_SUITE("section") {

TEST_CASE("chord bookkeeping") {
  const Chord c = make_chord(Vec::of(1, 0), Vec::of(0, 1));
  CHECK(distance(c.midpoint, Vec::of(0.5, 0.5)) == 0.0);
  CHECK(chord_distance(c, make_chord(Vec::of(0, 1), Vec::of(1, 0))) == 0.0);
}

TEST_CASE("symmetric pair distance is a metric") {
  Rng rng(29);
  auto random_chord = [&] {
    return make_chord(boundary_at_angle(kDisk, rng.uniform(0.0, oracles::kTau)),
                      boundary_at_angle(kDisk, rng.uniform(0.0, oracles::kTau)));
  };
  for (int k = 0; k < 1000; ++k) {
    const Chord a = random_chord(), b = random_chord(), c = random_chord();
    CHECK(chord_distance(a, b) >= 0.0);
    CHECK(chord_distance(a, b) == doctest::Approx(chord_distance(b, a)));
    CHECK(chord_distance(a, c) <= chord_distance(a, b) + chord_distance(b, c) + 1e-12);
    CHECK(chord_distance(a, a) == 0.0);
  }
}

TEST_CASE("planar sections of the 3D ball") {
  const Body ball = Body::lp_ball(3, 2.0);
  const PlanarSection s = make_section(ball, Vec::of(0, 0.5, 0), Vec::of(1, 0, 0));
  Rng rng(31);
  for (int k = 0; k < 1000; ++k) {
    const Vec st = rng.uniform(0.0, 1.5) * rng.unit_vec(2);
    CHECK(std::fabs(s.body2d.gauge(st) - ball.gauge(s.to_ambient(st))) <= 1e-12);
  }
  CHECK(s.body2d.gauge(Vec::of(0.6, 0.8)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_section(ball, Vec::of(2, 0, 0), Vec::of(1, 0, 0)), Error);
}

TEST_CASE("disk chords through (0.5, 0)") {
  const auto chords = bisected_chords(kDisk, Vec::of(0.5, 0.0), 2048);
  REQUIRE(chords.size() == 1);
  const double y = std::sqrt(0.75);
  CHECK(matches_pair(chords.front(), Vec::of(0.5, y), Vec::of(0.5, -y), 1e-9));
}

TEST_CASE("ellipse chords through (0, 0.5)") {
  const auto chords = bisected_chords(kEllipse, Vec::of(0.0, 0.5), 2048);
  REQUIRE(chords.size() == 1);
  const double x = std::sqrt(3.0);
  CHECK(matches_pair(chords.front(), Vec::of(x, 0.5), Vec::of(-x, 0.5), 1e-9));
}

TEST_CASE("square midpoints carry a chord continuum") {
  const Body square = Body::lp_ball(2, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(bisected_chords(square, Vec::of(0.5, 0.0), 2048), Error);
  CHECK(bisected_chords(square, Vec::of(0.5, 0.0), 2048, /*allow_continuum=*/true).size() >
        2048 / 10);
}

TEST_CASE("bisected_chords rejects bad midpoints") {
  CHECK_THROWS_AS(bisected_chords(kDisk, Vec::of(1.5, 0.0), 512), Error);
  CHECK_THROWS_AS(bisected_chords(kDisk, Vec::zero(2), 512), Error);
}

TEST_CASE("chord_map on the disk") {
  const Chord c = chord_map(kDisk, Vec::of(0.5, 0.0));
  const double y = std::sqrt(0.75);
  CHECK(matches_pair(c, Vec::of(0.5, y), Vec::of(0.5, -y), 1e-10));
  CHECK(cross2(c.p1, c.p2) >= -1e-12);  // (0, p1, p2) counter-clockwise
  CHECK_THROWS_AS(chord_map(kDisk, Vec::zero(2)), Error);
  CHECK_THROWS_AS(chord_map(Body::lp_ball(2, 1.0), Vec::of(0.2, 0.1)), Error);
}

TEST_CASE("chord_map agrees with the sweep solver on random lp midpoints") {
  Rng rng(37);
  for (int k = 0; k < 1000; ++k) {
    const Vec p = rng.uniform(0.05, 0.95) * kL4.boundary_point(rng.unit_vec(2));
    const auto chords = bisected_chords(kL4, p, 2048);
    REQUIRE(chords.size() == 1);
    CHECK(chord_distance(chords.front(), chord_map(kL4, p)) < 1e-8);
  }
}

TEST_CASE("chord_map is continuous along paths off the origin") {
  // Modulus of continuity along a circular path, halved with the step.
  for (const Body& body : {kDisk, kL4, kEllipse}) {
    double prev = 1e300;
    for (int n : {64, 128, 256}) {
      double modulus = 0.0;
      Chord last = chord_map(body, Vec::of(0.45, 0.0));
      for (int k = 1; k <= n; ++k) {
        const Chord cur =
            chord_map(body, 0.45 * Vec::of(std::cos(oracles::kTau * k / n),
                                           std::sin(oracles::kTau * k / n)));
        modulus = std::fmax(modulus, chord_distance(cur, last));
        last = cur;
      }
      CHECK(modulus < prev);
      prev = modulus;
    }
    CHECK(prev < 0.2);
  }
}

TEST_CASE("chord_map near the boundary stays accurate") {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const double g = rng.uniform(0.995, 1.0 - 1e-10);
    const Vec p = g * kL4.boundary_point(rng.unit_vec(2));
    const Chord c = chord_map(kL4, p);
    CHECK(std::fabs(kL4.gauge(c.p1) - 1.0) < 1e-8);
    CHECK(std::fabs(kL4.gauge(c.p2) - 1.0) < 1e-8);
    CHECK(distance(c.midpoint, p) < 1e-8);
  }
  const Chord degenerate = chord_map(kDisk, Vec::of(0.0, 1.0));
  CHECK(distance(degenerate.p1, degenerate.p2) == 0.0);
}

TEST_CASE("closed-form disk chord") {
  const Chord c = disk_chord(Vec::of(0.5, 0.0));
  const double y = std::sqrt(0.75);
  CHECK(matches_pair(c, Vec::of(0.5, y), Vec::of(0.5, -y), 1e-12));
  CHECK(cross2(c.p1, c.p2) >= 0.0);

  const Chord top = disk_chord(Vec::of(0.0, 1.0));
  CHECK(distance(top.p1, top.p2) == 0.0);
  CHECK_THROWS_AS(disk_chord(Vec::zero(2)), Error);

  Rng rng(43);
  for (int k = 0; k < 1000; ++k) {
    const Vec z = rng.uniform(0.05, 0.999) * rng.unit_vec(2);
    CHECK(chord_distance(disk_chord(z), chord_map(kDisk, z)) < 1e-10);
  }
}

TEST_CASE("disk chords are perpendicular to the midpoint radius") {
  Rng rng(47);
  for (int k = 0; k < 1000; ++k) {
    const Vec v = rng.uniform(0.05, 0.95) * rng.unit_vec(2);
    const auto chords = bisected_chords(kDisk, v, 1024);
    REQUIRE(chords.size() == 1);
    const Chord& c = chords.front();
    CHECK(std::fabs(dot(c.p1 - c.p2, v)) <= 1e-8);
  }
}

TEST_CASE("returned chords satisfy the type invariants") {
  Rng rng(53);
  for (const Body& body : {kDisk, kL4, kEllipse}) {
    for (int k = 0; k < 100; ++k) {
      const Vec v = rng.uniform(0.05, 0.95) * body.boundary_point(rng.unit_vec(2));
      for (const Chord& c : bisected_chords(body, v, 1024)) {
        CHECK(std::fabs(body.gauge(c.p1) - 1.0) <= 1e-8);
        CHECK(std::fabs(body.gauge(c.p2) - 1.0) <= 1e-8);
        CHECK(distance(c.midpoint, 0.5 * (c.p1 + c.p2)) == 0.0);
        CHECK(distance(c.midpoint, v) <= 1e-9);
      }
    }
  }
}

TEST_CASE("sweep solver matches the independent dense scan") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Body body = oracles::random_smooth_body(seed);
    Rng rng(seed + 100);
    for (int trial = 0; trial < 10; ++trial) {
      const Vec v = rng.uniform(0.05, 0.95) * body.boundary_point(rng.unit_vec(2));
      const auto fast = bisected_chords(body, v, 10000);
      const auto slow = oracles::chord_scan(body, v, 100000);
      REQUIRE(fast.size() == slow.size());
      for (const Chord& c : fast) {
        double best = 1e300;
        for (const Chord& s : slow) best = std::fmin(best, chord_distance(c, s));
        CHECK(best < 1e-6);
      }
    }
  }
}

TEST_CASE("strip chords in the lower cap of the disk") {
  const Vec q = Vec::of(0.0, -1.0), phi = Vec::of(0.0, 1.0);
  const Vec v = Vec::of(0.05, -0.9);
  const Chord c = strip_chord(kDisk, v, q, phi, 0.5);
  CHECK(distance(c.midpoint, v) < 1e-9);
  CHECK(dot(phi, c.p1) <= -1.0 + 0.5 + 1e-12);
  CHECK(dot(phi, c.p2) <= -1.0 + 0.5 + 1e-12);
  CHECK_THROWS_AS(strip_chord(kDisk, Vec::of(0.0, -0.9), q, phi, 0.5), Error);
}

TEST_CASE("strip chord endpoints converge to q as eps shrinks") {
  const Vec q = Vec::of(0.0, -1.0), phi = Vec::of(0.0, 1.0);
  double prev_spread = 3.0;
  for (double eps : {0.5, 0.25, 0.125, 0.0625, 0.03125}) {
    // Keep the midpoint within the eps-scaled admissible neighborhood.
    const Vec v = (1.0 - 0.2 * eps) * rotate2(q, 0.2 * eps);
    const Chord c = strip_chord(kDisk, v, q, phi, eps);
    const double spread = std::fmax(distance(c.p1, q), distance(c.p2, q));
    CHECK(spread < prev_spread + 1e-12);
    prev_spread = spread;
  }
  CHECK(prev_spread < 0.4);
}

TEST_CASE("strip chord labels sides against the midpoint") {
  Rng rng(59);
  const Vec q = Vec::of(0.0, -1.0), phi = Vec::of(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double side = rng.uniform(0.02, 0.1) * (rng.uniform() < 0.5 ? 1.0 : -1.0);
    const Vec v = (1.0 - rng.uniform(0.01, 0.1)) * rotate2(q, side);
    const Chord c = strip_chord(kDisk, v, q, phi, 0.5);
    const PlanarSection s = make_section(kDisk, v, q);
    // p1 and v must sit on opposite sides of the line through q and -q.
    CHECK(s.to_plane(c.p1)[1] <= s.to_plane(c.p2)[1]);
    CHECK(s.to_plane(v)[1] > 0.0);
  }
}

TEST_CASE("sections off a fixed line in the 3D ball") {
  const Body ball = Body::lp_ball(3, 2.0);
  const auto section = off_line_section(ball, Vec::of(0, 0, 1));
  const Chord c = section(Vec::of(0.5, 0, 0));
  const double z = std::sqrt(0.75);
  CHECK(matches_pair(c, Vec::of(0.5, 0, z), Vec::of(0.5, 0, -z), 1e-9));
  CHECK_THROWS_AS(section(Vec::of(0, 0, 0.5)), Error);

  // Finite modulus of continuity along a loop staying away from the axis.
  double modulus = 0.0;
  Chord prev = section(Vec::of(0.3, 0, 0.2));
  for (int k = 1; k <= 64; ++k) {
    const double t = oracles::kTau * k / 64;
    const Chord cur = section(Vec::of(0.3 * std::cos(t), 0.3 * std::sin(t), 0.2));
    modulus = std::fmax(modulus, chord_distance(cur, prev));
    prev = cur;
  }
  CHECK(modulus < 0.3);

  CHECK_THROWS_AS(off_line_section(Body::lp_ball(3, 1.0), Vec::of(0, 0, 1)), Error);
}

}  // TEST_SUITE
