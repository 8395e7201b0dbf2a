// Command-line surface: body ingestion, one subcommand per operation family,
// JSON/CSV emission, seeded reproducibility. Exit codes: 0 success/pass,
// 2 mathematical refutation emitted, 1 operational error or failed check.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spherespan/obstruct.hpp"
#include "spherespan/rng.hpp"
#include "spherespan/serialize.hpp"

using namespace spherespan;

namespace {

Vec parse_point(const std::string& text) {
  std::vector<double> coords;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      coords.push_back(std::stod(tok));
    } catch (const std::exception&) {
      fail(Err::MalformedInput, "--point expects comma-separated numbers, got \"" + text + "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coords.size() != 2 && coords.size() != 3) {
    fail(Err::MalformedInput, "--point needs 2 or 3 coordinates");
  }
  Vec v = Vec::zero(static_cast<int>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) v[static_cast<int>(i)] = coords[i];
  return v;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

void emit_csv(const std::string& csv, const std::string& csv_path) {
  if (!csv_path.empty()) write_text_file(csv_path, csv);
}

// Seeded piecewise-linear demo path for the decomposition subcommands when no
// input map is given.
SampledMap demo_path(const Body& body, uint64_t seed, int samples) {
  Rng rng(seed);
  const int knots = 8;
  std::vector<Vec> knot_values;
  for (int k = 0; k < knots; ++k) {
    knot_values.push_back(rng.uniform(0.0, 0.95) * body.boundary_point(rng.unit_vec(body.dim())));
  }
  SampledMap f;
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

CandidateDecomposition candidate_from_json(const Json& j) {
  CandidateDecomposition cand;
  cand.lambdas = j.at("lambdas").get<std::vector<double>>();
  cand.circle_radii = j.at("circle_radii").get<std::vector<double>>();
  cand.samples_per_circle = j.at("samples_per_circle").get<int>();
  for (const auto& comp : j.at("components")) cand.components.push_back(sampled_map_from_json(comp));
  cand.target = sampled_map_from_json(j.at("target"));
  return cand;
}

struct Options {
  std::string body_path;
  std::string out_path;
  std::string csv_path;
  std::string input_path;
  std::string point;
  uint64_t seed = 0;
  int grid = 2000;
  int resolution = 10000;
  int samples = 400;
  int vertex_count = 16;
  int heuristic = -1;
  double u_radius = 0.1;
  double shell_r = 0.5;
  double tol = 1e-10;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spherespan: sphere-valued decompositions of ball-valued maps over convex bodies,\n"
      "with winding/degree checks and numeric impossibility certificates."};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_body) {
    auto* body_opt = cmd->add_option("--body", opt.body_path,
                                     "body spec JSON (lp | ellipse | polytope)");
    if (needs_body) body_opt->required();
    cmd->add_option("--out", opt.out_path, "write the JSON result here (default: stdout)");
    cmd->add_option("--seed", opt.seed, "seed for every randomized choice")->capture_default_str();
    return cmd;
  };

  auto* gauge_cmd = add_common(app.add_subcommand("gauge", "evaluate the gauge of a point"), true);
  gauge_cmd->add_option("--point", opt.point, "query point, e.g. 0.5,0.25")->required();

  auto* chord_cmd = add_common(
      app.add_subcommand("chord", "all chords bisected by a midpoint (CSV: p1_x,p1_y,p2_x,p2_y)"),
      true);
  chord_cmd->add_option("--midpoint", opt.point, "midpoint, e.g. 0.5,0")->required();
  chord_cmd->add_option("--resolution", opt.resolution, "angular sweep resolution")
      ->capture_default_str();
  chord_cmd->add_option("--csv", opt.csv_path, "write chords as CSV");

  auto* dec3_cmd = add_common(
      app.add_subcommand("decompose3",
                         "three sphere-valued terms spanning the identity on the ball "
                         "(CSV: sample,component,coefficient,value_*)"),
      true);
  dec3_cmd->add_option("--grid", opt.grid, "ball grid target size")->capture_default_str();
  dec3_cmd->add_option("--csv", opt.csv_path, "flatten the certificate as CSV");

  auto* dec4_cmd = add_common(
      app.add_subcommand("decompose4",
                         "at most four extreme-point terms for a sampled map into a strictly "
                         "convex planar body (CSV: sample,component,coefficient,value_*)"),
      true);
  dec4_cmd->add_option("--input", opt.input_path, "sampled map JSON {samples, values}");
  dec4_cmd->add_option("--samples", opt.samples, "demo path length when no input is given")
      ->capture_default_str();
  dec4_cmd->add_option("--csv", opt.csv_path, "flatten the certificate as CSV");

  auto* path_cmd = add_common(
      app.add_subcommand("decompose-path",
                         "nonvanishing average + chord split of a path into four sphere-valued "
                         "terms (CSV: sample,component,coefficient,value_*)"),
      true);
  path_cmd->add_option("--input", opt.input_path, "sampled map JSON on [0,1]");
  path_cmd->add_option("--r", opt.shell_r, "shell inner radius in (0,1)")->capture_default_str();
  path_cmd->add_option("--samples", opt.samples, "demo path length when no input is given")
      ->capture_default_str();
  path_cmd->add_option("--csv", opt.csv_path, "flatten the certificate as CSV");

  auto* degree_cmd =
      app.add_subcommand("degree", "winding number (2D) or PL degree (3D) of a sampled map");
  degree_cmd->add_option("--input", opt.input_path, "sphere map JSON")->required();
  degree_cmd->add_option("--regular", opt.point, "regular value for 3D maps, e.g. 0.3,0.5,0.9");
  degree_cmd->add_option("--out", opt.out_path, "write the JSON report here");

  auto* theta_cmd = add_common(
      app.add_subcommand("theta",
                         "lower bound on the midpoint-to-chord angle (CSV: p_x,p_y,angle)"),
      true);
  theta_cmd->add_option("--uradius", opt.u_radius, "gauge radius of the midpoint neighborhood")
      ->capture_default_str();
  theta_cmd->add_option("--midpoints", opt.samples, "midpoint sample count")->default_val(2000);
  theta_cmd->add_option("--resolution", opt.resolution, "chord sweep resolution")
      ->default_val(4000);
  theta_cmd->add_option("--csv", opt.csv_path, "write the angle scan as CSV");

  auto* witness_cmd = add_common(
      app.add_subcommand("witness", "hunt for a discontinuity of a chord section near 0"), true);
  witness_cmd->add_option("--uradius", opt.u_radius, "initial neighborhood radius")
      ->capture_default_str();
  witness_cmd->add_option("--grid", opt.grid, "directions per ring")->default_val(64);
  witness_cmd
      ->add_option("--heuristic", opt.heuristic,
                   "built-in section index (0..19); default runs all of them")
      ->check(CLI::Range(0, 19));

  auto* refute_cmd = add_common(
      app.add_subcommand("refute",
                         "refute a claimed convex decomposition of the identity into "
                         "sphere-valued maps (exit 2 when the certificate is emitted)"),
      true);
  refute_cmd->add_option("--input", opt.input_path,
                         "candidate JSON {lambdas, circle_radii, samples_per_circle, components, "
                         "target}; default: built-in adversarial generator");

  auto* approx_cmd =
      add_common(app.add_subcommand("approx", "inscribed polytope and its Hausdorff distance"),
                 true);
  approx_cmd->add_option("--m", opt.vertex_count, "vertex count")->capture_default_str();

  auto* face_cmd = add_common(
      app.add_subcommand("face-check",
                         "support-face containment of a convex combination on the boundary"),
      true);
  face_cmd
      ->add_option("--input", opt.input_path, "JSON {\"v\": [...], \"components\": [[...]], "
                                              "\"lambdas\": [...]}")
      ->required();

  auto* verify_cmd = app.add_subcommand(
      "verify", "re-run the reconstruction and invariant checks of a stored certificate");
  verify_cmd->add_option("--input", opt.input_path, "certificate JSON")->required();
  verify_cmd->add_option("--body", opt.body_path, "re-check sphere errors against this body");
  verify_cmd->add_option("--out", opt.out_path, "write the JSON verdict here");
  verify_cmd
      ->add_option("--tol", opt.tol, "absolute slack added to the stored error bounds")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-14);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gauge_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      std::cout << fmt_double(body.gauge(parse_point(opt.point))) << "\n";
      return 0;
    }

    if (chord_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const auto chords = bisected_chords(body, parse_point(opt.point), opt.resolution);
      emit(chords_to_json(chords), opt.out_path);
      emit_csv(chords_to_csv(chords), opt.csv_path);
      return 0;
    }

    if (dec3_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const ThreeTermParams params = make_three_term_params(body, opt.seed);
      const DecompositionCertificate cert =
          decompose_three_term(body, params, ball_grid(body, opt.grid));
      emit(certificate_to_json(cert), opt.out_path);
      emit_csv(certificate_to_csv(cert), opt.csv_path);
      return 0;
    }

    if (dec4_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const SampledMap f = opt.input_path.empty()
                               ? demo_path(body, opt.seed, opt.samples)
                               : sampled_map_from_json(read_json_file(opt.input_path));
      const DecompositionCertificate cert = decompose_four_extreme(body, f);
      emit(certificate_to_json(cert), opt.out_path);
      emit_csv(certificate_to_csv(cert), opt.csv_path);
      return 0;
    }

    if (path_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const SampledMap f = opt.input_path.empty()
                               ? demo_path(body, opt.seed, opt.samples)
                               : sampled_map_from_json(read_json_file(opt.input_path));
      const DecompositionCertificate cert =
          shell_convex_decomposition(body, f, opt.shell_r, opt.seed);
      emit(certificate_to_json(cert), opt.out_path);
      emit_csv(certificate_to_csv(cert), opt.csv_path);
      return 0;
    }

    if (degree_cmd->parsed()) {
      const SphereMapSamples f = sphere_map_from_json(read_json_file(opt.input_path));
      int degree;
      if (f.dim == 2) {
        degree = winding_number(f);
      } else {
        const Vec regular = opt.point.empty() ? Vec::of(0.3, 0.5, 0.9) : parse_point(opt.point);
        degree = pl_degree(f, regular);
      }
      std::cout << degree << "\n";
      if (!opt.out_path.empty()) {
        emit(Json{{"degree", degree}, {"dim", f.dim}}, opt.out_path);
      }
      return 0;
    }

    if (theta_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const ChordAngleBound bound =
          chord_angle_bound(body, opt.u_radius, opt.samples, opt.resolution);
      emit(angle_bound_to_json(bound), opt.out_path);
      emit_csv(angle_scan_to_csv(bound), opt.csv_path);
      return 0;
    }

    if (witness_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      Json results = Json::array();
      bool all_defeated = true;
      const int from = opt.heuristic >= 0 ? opt.heuristic : 0;
      const int to = opt.heuristic >= 0 ? opt.heuristic + 1 : heuristic_section_count();
      for (int index = from; index < to; ++index) {
        const SectionWitness w =
            discontinuity_witness(body, heuristic_section(body, index), opt.u_radius, opt.grid);
        Json entry = section_witness_to_json(w);
        entry["heuristic"] = heuristic_section_name(index);
        results.push_back(entry);
        all_defeated = all_defeated && w.found;
      }
      emit(Json{{"all_defeated", all_defeated}, {"sections", results}}, opt.out_path);
      return 0;
    }

    if (refute_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const CandidateDecomposition cand =
          opt.input_path.empty() ? make_adversarial_decomposition(body, opt.seed)
                                 : candidate_from_json(read_json_file(opt.input_path));
      const RefutationOutcome outcome = refute_convex_decomposition(body, cand);
      emit(refutation_to_json(outcome), opt.out_path);
      return outcome.certificate ? 2 : 0;
    }

    if (approx_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const Polytope poly = approximate_polytope(body, opt.vertex_count);
      Json j = polytope_to_json(poly);
      j["hausdorff_distance"] = hausdorff_distance(poly, body);
      emit(j, opt.out_path);
      return 0;
    }

    if (face_cmd->parsed()) {
      const Body body = load_body(opt.body_path);
      const Json input = read_json_file(opt.input_path);
      std::vector<Vec> components;
      for (const auto& c : input.at("components")) components.push_back(vec_from_json(c));
      const FaceCheckReport report =
          support_face_check(body, vec_from_json(input.at("v")), components,
                             input.at("lambdas").get<std::vector<double>>());
      emit(face_check_to_json(report), opt.out_path);
      return report.pass ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      const DecompositionCertificate cert =
          certificate_from_json(read_json_file(opt.input_path));
      std::string reason;
      bool ok = replay_certificate(cert, &reason);
      if (ok && !opt.body_path.empty()) {
        const Body body = load_body(opt.body_path);
        double sphere_error = 0.0;
        for (const auto& comp : cert.components) {
          for (const auto& value : comp.values) {
            sphere_error = std::fmax(sphere_error, std::fabs(body.gauge(value) - 1.0));
          }
        }
        if (sphere_error > cert.sphere_error + opt.tol) {
          ok = false;
          reason = "sphere error exceeds the stored bound";
        }
      }
      emit(Json{{"valid", ok}, {"reason", reason}}, opt.out_path);
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
