#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spherespan/degree.hpp"
#include "spherespan/rng.hpp"

using namespace spherespan;

namespace {

constexpr double kTau = oracles::kTau;

const Body kDisk = Body::lp_ball(2, 2.0);

SphereMapSamples angle_map(int k, int samples) {
  SphereMapSamples f;
  f.dim = 2;
  for (int j = 0; j < samples; ++j) {
    const double t = kTau * j / samples;
    f.domain.push_back(Vec::of(std::cos(t), std::sin(t)));
    f.image.push_back(Vec::of(std::cos(k * t), std::sin(k * t)));
  }
  return f;
}

Body hexagon() {
  std::vector<Vec> verts;
  for (int k = 0; k < 6; ++k) {
    verts.push_back(Vec::of(std::cos(kTau * k / 6), std::sin(kTau * k / 6)));
  }
  return Body::polytope(verts);
}

Body square_body() {
  return Body::polytope({Vec::of(1, 1), Vec::of(-1, 1), Vec::of(-1, -1), Vec::of(1, -1)});
}

// Seeded symmetric convex polygon with at most max_vertices vertices.
Polytope random_polygon(uint64_t seed, int max_vertices) {
  Rng rng(seed);
  const int pairs = rng.uniform_int(2, max_vertices / 2);
  std::vector<Vec> pts;
  for (int k = 0; k < pairs; ++k) {
    const Vec v = rng.uniform(0.5, 1.5) * rng.unit_vec(2);
    pts.push_back(v);
    pts.push_back(-v);
  }
  return Polytope::from_vertices(pts, /*drop_interior=*/true);
}

}  // namespace

TEST_SUITE("degree") {

TEST_CASE("winding of basic loops") {
  CHECK(winding_number(angle_map(1, 360)) == 1);
  CHECK(winding_number(angle_map(2, 360)) == 2);
  CHECK(winding_number(angle_map(0, 360)) == 0);  // constant map
  CHECK(winding_number(angle_map(-3, 720)) == -3);
}

TEST_CASE("winding guards") {
  CHECK_THROWS_AS(winding_number(angle_map(1, 3)), Error);  // pi/2 steps
  SphereMapSamples f = angle_map(1, 64);
  f.image[10] = Vec::zero(2);
  CHECK_THROWS_AS(winding_number(f), Error);
}

TEST_CASE("winding multiplicativity for angle maps") {
  for (int k = -2; k <= 2; ++k) {
    for (int l = -2; l <= 2; ++l) {
      // Sampled composition of the two angle multiplications.
      CHECK(winding_number(angle_map(k * l, 720)) ==
            winding_number(angle_map(k, 720)) * winding_number(angle_map(l, 720)));
    }
  }
}

TEST_CASE("winding is invariant along nonvanishing interpolations") {
  const SphereMapSamples f0 = angle_map(1, 512);
  SphereMapSamples f1 = f0;
  for (size_t j = 0; j < f1.image.size(); ++j) {
    f1.image[j] = rotate2(f1.image[j], 1.0471975511965976);  // a third of pi
  }
  for (int step = 0; step <= 20; ++step) {
    const double s = step / 20.0;
    SphereMapSamples h = f0;
    bool nonzero = true;
    for (size_t j = 0; j < h.image.size(); ++j) {
      const Vec mix = (1.0 - s) * f0.image[j] + s * f1.image[j];
      if (norm(mix) < 1e-9) nonzero = false;
      h.image[j] = mix / norm(mix);
    }
    REQUIRE(nonzero);
    CHECK(winding_number(h) == 1);
  }
}

TEST_CASE("radial transport preserves winding across bodies") {
  Rng rng(61);
  const Body square = square_body();
  const Body hex = hexagon();
  for (int trial = 0; trial < 50; ++trial) {
    const double amp = rng.uniform(0.0, 0.3);
    const double phase = rng.uniform(0.0, kTau);
    const int turns = rng.uniform_int(-2, 2);
    SphereMapSamples f;
    f.dim = 2;
    const int n = 1024;
    for (int j = 0; j < n; ++j) {
      const double t = kTau * j / n;
      const double image_angle = turns * t + amp * std::sin(3.0 * t + phase);
      f.domain.push_back(boundary_at_angle(kDisk, t));
      f.image.push_back(Vec::of(std::cos(image_angle), std::sin(image_angle)));
    }
    const int w = winding_number(f);
    CHECK(winding_number(radial_transport(kDisk, square, f)) == w);
    CHECK(winding_number(radial_transport(kDisk, hex, f)) == w);
    CHECK(winding_number(radial_transport(square, hex, radial_transport(kDisk, square, f))) == w);
  }
}

TEST_CASE("transport to the same body is the identity operation") {
  const SphereMapSamples f = boundary_identity(kDisk, 256);
  const SphereMapSamples g = radial_transport(kDisk, kDisk, f);
  for (size_t j = 0; j < f.domain.size(); ++j) {
    CHECK(distance(f.domain[j], g.domain[j]) < 1e-12);
    CHECK(distance(f.image[j], g.image[j]) < 1e-12);
  }
}

TEST_CASE("transporting the identity yields the identity on the target") {
  const Body square = square_body();
  const SphereMapSamples f = boundary_identity(kDisk, 256);
  const SphereMapSamples g = radial_transport(kDisk, square, f);
  for (size_t j = 0; j < g.domain.size(); ++j) {
    CHECK(std::fabs(square.gauge(g.domain[j]) - 1.0) < 1e-12);
    CHECK(distance(g.image[j], g.domain[j]) < 1e-12);
  }
}

TEST_CASE("icosphere degrees") {
  const SphereMapSamples identity = icosphere_identity(2);
  CHECK(identity.domain.size() == 162);
  CHECK(identity.faces.size() == 320);
  CHECK(pl_degree(identity, Vec::of(0.3, 0.5, 0.9)) == 1);

  SphereMapSamples antipodal = identity;
  for (auto& v : antipodal.image) v = -v;
  CHECK(pl_degree(antipodal, Vec::of(0.3, 0.5, 0.9)) == -1);

  SphereMapSamples constant = identity;
  for (auto& v : constant.image) v = Vec::of(0, 0, 1);
  CHECK(pl_degree(constant, Vec::of(0.3, 0.5, 0.9)) == 0);
}

TEST_CASE("pl_degree is independent of the regular value") {
  const SphereMapSamples f = icosphere_identity(2);
  Rng rng(67);
  for (int k = 0; k < 8; ++k) {
    CHECK(pl_degree(f, rng.unit_vec(3)) == 1);
  }
}

TEST_CASE("pl_degree validates the triangulation") {
  SphereMapSamples f = icosphere_identity(1);
  f.faces.pop_back();
  CHECK_THROWS_AS(pl_degree(f, Vec::of(0, 0, 1)), Error);

  SphereMapSamples flipped = icosphere_identity(1);
  std::swap(flipped.faces[0][0], flipped.faces[0][1]);
  CHECK_THROWS_AS(pl_degree(flipped, Vec::of(0, 0, 1)), Error);
}

TEST_CASE("vertex-fixing maps of polygons have winding 1") {
  const Polytope hex = hexagon().polytope_data();
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const SphereMapSamples f = make_vertex_fixing_map(hex, seed);
    const DegreeReport report = vertex_fixing_degree(hex, f);
    CHECK(report.degree == 1);
    CHECK(report.pass);
  }
}

TEST_CASE("an excursion that retraces keeps the winding at 1") {
  const Polytope hex = hexagon().polytope_data();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const DegreeReport report =
        vertex_fixing_degree(hex, make_vertex_fixing_map(hex, seed, 48, /*excursion=*/true));
    CHECK(report.degree == 1);
  }
}

TEST_CASE("identity on the square fixes vertices with winding 1") {
  const Polytope square = square_body().polytope_data();
  SphereMapSamples f;
  f.dim = 2;
  for (int i = 0; i < 4; ++i) {
    const Vec a = square.vertices[static_cast<size_t>(square.ring[static_cast<size_t>(i)])];
    const Vec b = square.vertices[static_cast<size_t>(square.ring[static_cast<size_t>((i + 1) % 4)])];
    for (int j = 0; j < 32; ++j) {
      const Vec x = j == 0 ? a : a + (j / 32.0) * (b - a);
      f.domain.push_back(x);
      f.image.push_back(x);
    }
  }
  CHECK(vertex_fixing_degree(square, f).degree == 1);

  SphereMapSamples broken = f;
  broken.image[0] = boundary_at_angle(kDisk, 0.1);
  CHECK_THROWS_AS(vertex_fixing_degree(square, broken), Error);
}

TEST_CASE("winding of vertex-fixing maps on random polygons") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const Polytope poly = random_polygon(seed, 12);
    const DegreeReport report = vertex_fixing_degree(poly, make_vertex_fixing_map(poly, seed * 31));
    CHECK(report.degree == 1);
  }
}

}  // TEST_SUITE
