#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "spherespan/serialize.hpp"

using namespace spherespan;

TEST_SUITE("serialize") {

TEST_CASE("body specs parse") {
  const Body lp = parse_body(Json::parse(R"({"kind":"lp","p":4.0,"dim":2})"));
  CHECK(lp.kind() == BodyKind::Lp);
  CHECK(lp.lp_exponent() == 4.0);

  const Body box = parse_body(Json::parse(R"({"kind":"lp","p":"inf","dim":2})"));
  CHECK(box.gauge(Vec::of(0.5, 0.25)) == doctest::Approx(0.5));

  const Body ell = parse_body(Json::parse(R"({"kind":"ellipse","axes":[2.0,1.0]})"));
  CHECK(ell.dim() == 2);
  CHECK(ell.support(Vec::of(1, 0)).value == doctest::Approx(2.0));

  const Body poly = parse_body(
      Json::parse(R"({"kind":"polytope","vertices":[[1,1],[-1,1],[-1,-1],[1,-1]]})"));
  CHECK(poly.kind() == BodyKind::Polytope);
  CHECK(poly.gauge(Vec::of(0.5, 0.25)) == doctest::Approx(0.5));

  CHECK_THROWS_AS(parse_body(Json::parse(R"({"kind":"banana"})")), Error);
  CHECK_THROWS_AS(parse_body(Json::parse(R"({"p":2.0})")), Error);
  CHECK_THROWS_AS(parse_body(Json::parse(R"({"kind":"ellipse"})")), Error);
}

TEST_CASE("body round trip") {
  for (const char* spec :
       {R"({"kind":"lp","p":4.0,"dim":2,"radii":[1.0,2.0]})",
        R"({"kind":"ellipse","axes":[2.0,1.0]})",
        R"({"kind":"polytope","vertices":[[1.0,1.0],[-1.0,1.0],[-1.0,-1.0],[1.0,-1.0]]})"}) {
    const Body body = parse_body(Json::parse(spec));
    const Body again = parse_body(body_to_json(body));
    Rng rng(83);
    for (int k = 0; k < 100; ++k) {
      const Vec v = rng.uniform(0.0, 2.0) * rng.unit_vec(2);
      CHECK(body.gauge(v) == again.gauge(v));
    }
  }
}

TEST_CASE("chords and sampled maps round trip") {
  const Chord c = disk_chord(Vec::of(0.3, 0.4));
  const Chord back = chord_from_json(chord_to_json(c));
  CHECK(chord_distance(c, back) == 0.0);
  CHECK(back.midpoint == c.midpoint);

  const SampledMap path = oracles::random_pl_path(Body::lp_ball(2, 2.0), 3, 40);
  const SampledMap path_back = sampled_map_from_json(sampled_map_to_json(path));
  CHECK(path_back.params == path.params);
  for (size_t k = 0; k < path.size(); ++k) CHECK(path_back.values[k] == path.values[k]);

  SampledMap grid = ball_grid(Body::lp_ball(2, 2.0), 100).identity;
  const SampledMap grid_back = sampled_map_from_json(sampled_map_to_json(grid));
  for (size_t k = 0; k < grid.size(); ++k) CHECK(grid_back.points[k] == grid.points[k]);
}

TEST_CASE("certificates survive the JSON round trip and still replay") {
  const Body disk = Body::lp_ball(2, 2.0);
  const SampledMap f = oracles::random_pl_path(disk, 9, 60);
  const DecompositionCertificate cert = shell_convex_decomposition(disk, f, 0.5, 2);
  const Json j = certificate_to_json(cert);
  const DecompositionCertificate back = certificate_from_json(j);
  CHECK(back.kind == cert.kind);
  CHECK(back.coefficients == cert.coefficients);
  CHECK(back.sup_reconstruction_error == cert.sup_reconstruction_error);
  std::string why;
  CHECK(replay_certificate(back, &why));

  // Serialization is deterministic.
  CHECK(certificate_to_json(cert).dump(2) == j.dump(2));
}

TEST_CASE("sphere maps round trip in both layouts") {
  const SphereMapSamples loop = boundary_identity(Body::lp_ball(2, 2.0), 64);
  const SphereMapSamples loop_back = sphere_map_from_json(sphere_map_to_json(loop));
  CHECK(loop_back.dim == 2);
  CHECK(winding_number(loop_back) == 1);

  const SphereMapSamples ico = icosphere_identity(1);
  const SphereMapSamples ico_back = sphere_map_from_json(sphere_map_to_json(ico));
  CHECK(ico_back.dim == 3);
  CHECK(ico_back.faces.size() == ico.faces.size());
  CHECK(pl_degree(ico_back, Vec::of(0.2, 0.4, 0.9)) == 1);
}

TEST_CASE("csv emitters produce one row per record") {
  const std::vector<Chord> chords = {disk_chord(Vec::of(0.3, 0.4)), disk_chord(Vec::of(0.0, 0.5))};
  const std::string csv = chords_to_csv(chords);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows

  const ChordAngleBound bound = chord_angle_bound(Body::lp_ball(2, 2.0), 0.1, 64, 512);
  const std::string scan = angle_scan_to_csv(bound);
  CHECK(std::count(scan.begin(), scan.end(), '\n') == static_cast<long>(bound.scan.size()) + 1);
}

}  // TEST_SUITE
