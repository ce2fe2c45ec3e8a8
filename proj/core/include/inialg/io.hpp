#ifndef INIALG_IO_HPP
#define INIALG_IO_HPP

#include <string>
#include <vector>

#include "inialg/analysis.hpp"
#include "inialg/construction.hpp"
#include "inialg/sagbi.hpp"

namespace inialg {

// JSON conventions (stable across runs, keys sorted):
//   rational           [numerator, denominator]
//   exponent vector    [int, ...]
//   polynomial         {"dim": n, "terms": [{"exp": [...], "coef": [num, den]}, ...]}
//   term order         {"dim": n, "rows": [[[num, den], ...], ...]}
//   cone               {"generators": [[...], ...], "face_normals": [[...], ...]}
//   construction spec  {"name", "source_dim", "dim", "source_gens", "embeddings",
//                       "cone", "U", "filtration_vector", "grading_vector"?}

ConstructionSpec parse_spec(const std::string& json_text);
ConstructionSpec load_spec(const std::string& path);
std::string spec_to_json(const ConstructionSpec& spec);

TermOrder parse_order(const std::string& json_text);
TermOrder load_order(const std::string& path);
std::string order_to_json(const TermOrder& order);

LaurentPoly parse_poly(const std::string& json_text);
std::string poly_to_json(const LaurentPoly& poly);

/// Every CLI report embeds the manifest that produced it; identical
/// manifests yield byte-identical reports.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // (role, path)
    std::string parameters_json;                             // JSON object text
    std::string output;                                      // path or "-"
    std::string version;
};

std::string manifest_parameters(const std::vector<std::pair<std::string, std::string>>& kv);

std::string degree_report_json(const DegreeReport& rep, const RunManifest& manifest);
std::string degree_report_text(const DegreeReport& rep);

std::string generators_json(const std::vector<GradeGenerators>& gens, const RunManifest& manifest);
std::string generators_text(const std::vector<GradeGenerators>& gens);

std::string completeness_json(const CompletenessReport& rep, const RunManifest& manifest);
std::string completeness_text(const CompletenessReport& rep);

std::string mu_report_json(const MuReport& rep, const RunManifest& manifest);
std::string mu_report_text(const MuReport& rep);

std::string complement_json(const ComplementReport& rep, const RunManifest& manifest);
std::string complement_text(const ComplementReport& rep);

std::string hypothesis_json(const HypothesisReport& rep, const RunManifest& manifest);
std::string hypothesis_text(const HypothesisReport& rep);

std::string fingerprint_json(const FingerprintReport& rep, const RunManifest& manifest);
std::string fingerprint_text(const FingerprintReport& rep);

std::string validation_json(const Construction& c, const RunManifest& manifest);

const char* tool_version();

} // namespace inialg

#endif
