#pragma once

#include <string>

#include <json.hpp>

#include "spherespan/decompose.hpp"
#include "spherespan/degree.hpp"
#include "spherespan/obstruct.hpp"

namespace spherespan {

using Json = nlohmann::ordered_json;

// Body spec: {"kind":"lp","p":4.0,"dim":2[,"radii":[..]]} |
// {"kind":"ellipse","axes":[2.0,1.0]} | {"kind":"polytope","vertices":[[..],..]}.
// "p" accepts the string "inf".
Body parse_body(const Json& spec);
Json body_to_json(const Body& body);
Body load_body(const std::string& path);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json chord_to_json(const Chord& c);
Chord chord_from_json(const Json& j);
Json chords_to_json(const std::vector<Chord>& chords);

Json sampled_map_to_json(const SampledMap& f);
SampledMap sampled_map_from_json(const Json& j);

Json certificate_to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const Json& j);

Json sphere_map_to_json(const SphereMapSamples& f);
SphereMapSamples sphere_map_from_json(const Json& j);

Json polytope_to_json(const Polytope& poly);

Json angle_bound_to_json(const ChordAngleBound& bound);
Json section_witness_to_json(const SectionWitness& witness);
Json forcing_report_to_json(const ForcingReport& report);
Json face_check_to_json(const FaceCheckReport& report);
Json refutation_to_json(const RefutationOutcome& outcome);
Json degree_report_to_json(const DegreeReport& report);

// CSV emission; all numbers are written with round-trip precision.
std::string chords_to_csv(const std::vector<Chord>& chords);
std::string certificate_to_csv(const DecompositionCertificate& cert);
std::string angle_scan_to_csv(const ChordAngleBound& bound);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace spherespan
