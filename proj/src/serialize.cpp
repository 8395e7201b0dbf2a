#include "spherespan/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace spherespan {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (int i = 0; i < v.dim; ++i) j.push_back(v[i]);
  return j;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3)) {
    fail(Err::MalformedInput, "vector must be an array of length 2 or 3");
  }
  Vec v = Vec::zero(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
  if (!all_finite(v)) fail(Err::NonFiniteInput, "non-finite vector entry");
  return v;
}

Body parse_body(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) {
    fail(Err::MalformedInput, "body spec needs a \"kind\" field");
  }
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "lp") {
    const int dim = spec.value("dim", 2);
    double p;
    if (spec.contains("p") && spec["p"].is_string()) {
      const std::string s = spec["p"].get<std::string>();
      if (s != "inf" && s != "infinity") fail(Err::MalformedInput, "field \"p\": unknown string");
      p = std::numeric_limits<double>::infinity();
    } else {
      p = spec.value("p", 2.0);
    }
    std::vector<double> radii;
    if (spec.contains("radii")) radii = spec["radii"].get<std::vector<double>>();
    return Body::lp_ball(dim, p, radii);
  }
  if (kind == "ellipse" || kind == "ellipsoid") {
    if (!spec.contains("axes")) fail(Err::MalformedInput, "field \"axes\" is required");
    return Body::ellipsoid(spec["axes"].get<std::vector<double>>());
  }
  if (kind == "polytope") {
    if (!spec.contains("vertices")) fail(Err::MalformedInput, "field \"vertices\" is required");
    std::vector<Vec> vertices;
    for (const auto& vj : spec["vertices"]) vertices.push_back(vec_from_json(vj));
    return Body::polytope(vertices);
  }
  fail(Err::MalformedInput, "field \"kind\": expected lp, ellipse or polytope");
}

Json body_to_json(const Body& body) {
  Json j;
  switch (body.kind()) {
    case BodyKind::Lp:
      j["kind"] = "lp";
      if (std::isinf(body.lp_exponent())) {
        j["p"] = "inf";
      } else {
        j["p"] = body.lp_exponent();
      }
      j["dim"] = body.dim();
      j["radii"] = body.lp_radii();
      break;
    case BodyKind::Ellipsoid:
      j["kind"] = "ellipse";
      j["axes"] = body.ellipsoid_axes();
      break;
    case BodyKind::Polytope: {
      j["kind"] = "polytope";
      Json verts = Json::array();
      for (const auto& v : body.polytope_data().vertices) verts.push_back(vec_to_json(v));
      j["vertices"] = verts;
      break;
    }
    case BodyKind::Custom:
      fail(Err::MalformedInput, "custom bodies have no JSON form");
  }
  return j;
}

Body load_body(const std::string& path) { return parse_body(read_json_file(path)); }

Json chord_to_json(const Chord& c) {
  Json j;
  j["p1"] = vec_to_json(c.p1);
  j["p2"] = vec_to_json(c.p2);
  return j;
}

Chord chord_from_json(const Json& j) {
  return make_chord(vec_from_json(j.at("p1")), vec_from_json(j.at("p2")));
}

Json chords_to_json(const std::vector<Chord>& chords) {
  Json j = Json::array();
  for (const auto& c : chords) j.push_back(chord_to_json(c));
  return j;
}

Json sampled_map_to_json(const SampledMap& f) {
  Json j;
  Json samples = Json::array();
  if (f.interval_domain()) {
    for (double t : f.params) samples.push_back(t);
  } else {
    for (const auto& p : f.points) samples.push_back(vec_to_json(p));
  }
  Json values = Json::array();
  for (const auto& v : f.values) values.push_back(vec_to_json(v));
  j["samples"] = samples;
  j["values"] = values;
  return j;
}

SampledMap sampled_map_from_json(const Json& j) {
  SampledMap f;
  const Json& samples = j.at("samples");
  for (const auto& s : samples) {
    if (s.is_number()) {
      f.params.push_back(s.get<double>());
    } else {
      f.points.push_back(vec_from_json(s));
    }
  }
  for (const auto& v : j.at("values")) f.values.push_back(vec_from_json(v));
  const size_t n = f.interval_domain() ? f.params.size() : f.points.size();
  if (n != f.values.size() || n < 2) fail(Err::MalformedInput, "sample/value count mismatch");
  return f;
}

Json certificate_to_json(const DecompositionCertificate& cert) {
  Json j;
  j["kind"] = cert.kind;
  j["coefficients"] = cert.coefficients;
  Json comps = Json::array();
  for (const auto& c : cert.components) comps.push_back(sampled_map_to_json(c));
  j["components"] = comps;
  j["target"] = sampled_map_to_json(cert.target);
  j["errors"] = Json{{"sup_reconstruction_error", cert.sup_reconstruction_error},
                     {"sphere_error", cert.sphere_error},
                     {"shell_min_gauge", cert.shell_min_gauge},
                     {"continuity_modulus", cert.continuity_modulus}};
  Json params;
  for (const auto& [key, value] : cert.params) params[key] = value;
  j["params"] = params;
  j["seed"] = cert.seed;
  j["component_bound"] = cert.component_bound;
  j["note"] = cert.note;
  return j;
}

DecompositionCertificate certificate_from_json(const Json& j) {
  DecompositionCertificate cert;
  cert.kind = j.at("kind").get<std::string>();
  cert.coefficients = j.at("coefficients").get<std::vector<double>>();
  for (const auto& c : j.at("components")) cert.components.push_back(sampled_map_from_json(c));
  cert.target = sampled_map_from_json(j.at("target"));
  const Json& errors = j.at("errors");
  cert.sup_reconstruction_error = errors.at("sup_reconstruction_error").get<double>();
  cert.sphere_error = errors.at("sphere_error").get<double>();
  cert.shell_min_gauge = errors.at("shell_min_gauge").get<double>();
  cert.continuity_modulus = errors.at("continuity_modulus").get<double>();
  if (j.contains("params")) {
    for (const auto& [key, value] : j["params"].items()) {
      cert.params.push_back({key, value.get<double>()});
    }
  }
  cert.seed = j.value("seed", 0ULL);
  cert.component_bound = j.value("component_bound", 0);
  cert.note = j.value("note", std::string{});
  return cert;
}

Json sphere_map_to_json(const SphereMapSamples& f) {
  Json j;
  Json image = Json::array();
  for (const auto& v : f.image) image.push_back(vec_to_json(v));
  if (f.dim == 2) {
    Json domain = Json::array();
    for (const auto& v : f.domain) domain.push_back(vec_to_json(v));
    j["domain"] = domain;
  } else {
    Json verts = Json::array();
    for (const auto& v : f.domain) verts.push_back(vec_to_json(v));
    Json faces = Json::array();
    for (const auto& face : f.faces) faces.push_back(Json{face[0], face[1], face[2]});
    j["vertices"] = verts;
    j["faces"] = faces;
  }
  j["image"] = image;
  return j;
}

SphereMapSamples sphere_map_from_json(const Json& j) {
  SphereMapSamples f;
  if (j.contains("vertices")) {
    f.dim = 3;
    for (const auto& v : j.at("vertices")) f.domain.push_back(vec_from_json(v));
    for (const auto& face : j.at("faces")) {
      f.faces.push_back({face.at(0).get<int>(), face.at(1).get<int>(), face.at(2).get<int>()});
    }
  } else {
    f.dim = 2;
    for (const auto& v : j.at("domain")) f.domain.push_back(vec_from_json(v));
  }
  for (const auto& v : j.at("image")) f.image.push_back(vec_from_json(v));
  if (f.image.size() != f.domain.size()) fail(Err::MalformedInput, "domain/image count mismatch");
  return f;
}

Json polytope_to_json(const Polytope& poly) {
  Json j;
  j["dim"] = poly.dim;
  Json verts = Json::array();
  for (const auto& v : poly.vertices) verts.push_back(vec_to_json(v));
  j["vertices"] = verts;
  return j;
}

Json angle_bound_to_json(const ChordAngleBound& bound) {
  Json j;
  j["theta"] = bound.theta;
  j["u_radius"] = bound.u_radius;
  j["midpoint_samples"] = bound.midpoint_samples;
  j["chord_resolution"] = bound.chord_resolution;
  j["witness"] = Json{{"midpoint", vec_to_json(bound.witness_midpoint)},
                      {"chord", chord_to_json(bound.witness_chord)},
                      {"parallel_residual", bound.parallel_residual}};
  return j;
}

Json section_witness_to_json(const SectionWitness& witness) {
  Json j;
  j["witness_found"] = witness.found;
  j["rounds_used"] = witness.rounds_used;
  j["u_radius_final"] = witness.u_radius_final;
  j["evaluations"] = witness.evaluations;
  j["failures"] = witness.failures;
  if (witness.found) {
    j["p"] = vec_to_json(witness.p);
    j["p_prime"] = vec_to_json(witness.p_prime);
    j["chord_p"] = chord_to_json(witness.chord_p);
    j["chord_p_prime"] = chord_to_json(witness.chord_p_prime);
    j["jump"] = witness.jump;
    j["spacing"] = witness.spacing;
  }
  return j;
}

Json forcing_report_to_json(const ForcingReport& report) {
  Json j;
  j["result"] = report.forced ? "Forced" : "Violated";
  j["vanish_residual"] = report.vanish_residual;
  j["alpha_residual"] = report.alpha_residual;
  j["antipode_residual"] = report.antipode_residual;
  return j;
}

Json face_check_to_json(const FaceCheckReport& report) {
  Json j;
  j["result"] = report.pass ? "Pass" : "Fail";
  j["functional"] = vec_to_json(report.functional);
  j["max_deviation"] = report.max_deviation;
  if (!report.pass) j["reason"] = report.reason;
  return j;
}

Json refutation_to_json(const RefutationOutcome& outcome) {
  Json j;
  if (outcome.certificate) {
    const auto& cert = *outcome.certificate;
    j["refuted"] = true;
    j["boundary_winding"] = cert.boundary_winding;
    j["center_winding"] = cert.center_winding;
    j["component_boundary_windings"] = cert.component_boundary_windings;
    j["component_center_windings"] = cert.component_center_windings;
    j["discrepancy"] = cert.discrepancy;
  } else {
    j["refuted"] = false;
    j["failed_check"] = outcome.failed_check;
    j["detail"] = outcome.detail;
  }
  return j;
}

Json degree_report_to_json(const DegreeReport& report) {
  Json j;
  j["degree"] = report.degree;
  j["pass"] = report.pass;
  j["detail"] = report.detail;
  return j;
}

std::string chords_to_csv(const std::vector<Chord>& chords) {
  std::ostringstream os;
  if (chords.empty()) return "";
  const int dim = chords.front().p1.dim;
  os << (dim == 2 ? "p1_x,p1_y,p2_x,p2_y\n" : "p1_x,p1_y,p1_z,p2_x,p2_y,p2_z\n");
  for (const auto& c : chords) {
    for (int i = 0; i < dim; ++i) os << fmt(c.p1[i]) << ",";
    for (int i = 0; i < dim; ++i) os << fmt(c.p2[i]) << (i + 1 < dim ? "," : "\n");
  }
  return os.str();
}

std::string certificate_to_csv(const DecompositionCertificate& cert) {
  std::ostringstream os;
  os << "sample,component,coefficient";
  const int dim = cert.target.values.empty() ? 2 : cert.target.values.front().dim;
  for (int i = 0; i < dim; ++i) os << ",value_" << static_cast<char>('x' + i);
  os << "\n";
  for (size_t k = 0; k < cert.target.size(); ++k) {
    for (size_t i = 0; i < cert.components.size(); ++i) {
      os << k << "," << i << "," << fmt(cert.coefficients[i]);
      for (int d = 0; d < dim; ++d) os << "," << fmt(cert.components[i].values[k][d]);
      os << "\n";
    }
  }
  return os.str();
}

std::string angle_scan_to_csv(const ChordAngleBound& bound) {
  std::ostringstream os;
  os << "p_x,p_y,angle\n";
  for (const auto& row : bound.scan) {
    os << fmt(row[0]) << "," << fmt(row[1]) << "," << fmt(row[2]) << "\n";
  }
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Err::IoError, "cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::IoError, "cannot open " + path + " for writing");
  out << text;
}

}  // namespace spherespan
