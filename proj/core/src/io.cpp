#include "inialg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "inialg/errors.hpp"

namespace inialg {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw Error("rational too large for JSON integer pair: " + to_string(q));
    return json::array({q.get_num().get_si(), q.get_den().get_si()});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("rational must be an integer pair [num, den]");
    if (j[1].get<long>() == 0) throw ParseError("rational with zero denominator");
    return rat(j[0].get<long>(), j[1].get<long>());
}

json qvector_to_json(const QVector& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(rational_to_json(q));
    return arr;
}

QVector qvector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("rational vector must be an array");
    QVector v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

json exponent_to_json(const ExponentVector& e) {
    json arr = json::array();
    for (int i = 0; i < e.dim(); ++i) arr.push_back(e[i]);
    return arr;
}

ExponentVector exponent_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("exponent must be a nonempty integer array");
    std::vector<std::int64_t> v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("exponent entries must be integers");
        v.push_back(e.get<std::int64_t>());
    }
    return ExponentVector(std::move(v));
}

json poly_to_json_obj(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"exp", exponent_to_json(e)}, {"coef", rational_to_json(c)}});
    return json{{"dim", p.dim()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
        throw ParseError("polynomial must be {dim, terms}");
    LaurentPoly p(j.at("dim").get<int>());
    for (const auto& t : j.at("terms")) {
        ExponentVector e = exponent_from_json(t.at("exp"));
        Rational c = rational_from_json(t.at("coef"));
        p = p + LaurentPoly::monomial(e, c);
    }
    return p;
}

json order_to_json_obj(const TermOrder& o) {
    json rows = json::array();
    for (const auto& r : o.rows()) rows.push_back(qvector_to_json(r));
    return json{{"dim", o.dim()}, {"rows", rows}};
}

json manifest_to_json(const RunManifest& m) {
    json inputs = json::array();
    for (const auto& [role, path] : m.inputs)
        inputs.push_back(json{{"role", role}, {"path", path}});
    json params = m.parameters_json.empty() ? json::object() : json::parse(m.parameters_json);
    return json{{"command", m.command},
                {"inputs", inputs},
                {"parameters", params},
                {"output", m.output},
                {"version", m.version}};
}

std::string wrap_report(const char* kind, const json& body, const RunManifest& manifest) {
    json root{{"kind", kind}, {"manifest", manifest_to_json(manifest)}, {"report", body}};
    return root.dump(2) + "\n";
}

const char* origin_label(DegreeOrigin o) {
    switch (o) {
        case DegreeOrigin::Origin: return "origin";
        case DegreeOrigin::PhiI: return "phi_I";
        case DegreeOrigin::J: return "J";
    }
    return "?";
}

std::string exp_text(const ExponentVector& e) { return e.to_string(); }

} // namespace

const char* tool_version() { return "inialg 0.1.0"; }

std::string manifest_parameters(const std::vector<std::pair<std::string, std::string>>& kv) {
    json obj = json::object();
    for (const auto& [k, v] : kv) {
        json parsed = json::parse(v, nullptr, false);
        if (!parsed.is_discarded() && (parsed.is_number() || parsed.is_array() || parsed.is_boolean()))
            obj[k] = parsed;
        else
            obj[k] = v;
    }
    return obj.dump();
}

ConstructionSpec parse_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        std::vector<LaurentPoly> source_gens;
        for (const auto& g : j.at("source_gens")) source_gens.push_back(poly_from_json(g));
        std::vector<std::vector<LaurentPoly>> embeddings;
        for (const auto& empl : j.at("embeddings")) {
            std::vector<LaurentPoly> images;
            for (const auto& img : empl) images.push_back(poly_from_json(img));
            embeddings.push_back(std::move(images));
        }
        const json& cj = j.at("cone");
        std::vector<QVector> gens, normals;
        for (const auto& g : cj.at("generators")) gens.push_back(qvector_from_json(g));
        for (const auto& w : cj.at("face_normals")) normals.push_back(qvector_from_json(w));
        std::vector<LaurentPoly> U;
        if (j.contains("U"))
            for (const auto& u : j.at("U")) U.push_back(poly_from_json(u));
        std::optional<QVector> grading;
        if (j.contains("grading_vector") && !j.at("grading_vector").is_null())
            grading = qvector_from_json(j.at("grading_vector"));
        return ConstructionSpec{.name = j.value("name", std::string("unnamed")),
                                .source_dim = j.at("source_dim").get<int>(),
                                .dim = j.at("dim").get<int>(),
                                .source_gens = std::move(source_gens),
                                .embeddings = std::move(embeddings),
                                .cone = ConeWithFaces(std::move(gens), std::move(normals)),
                                .U = std::move(U),
                                .filtration = qvector_from_json(j.at("filtration_vector")),
                                .grading = std::move(grading)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("construction spec: ") + e.what());
    }
}

ConstructionSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string spec_to_json(const ConstructionSpec& spec) {
    json sg = json::array();
    for (const auto& g : spec.source_gens) sg.push_back(poly_to_json_obj(g));
    json emb = json::array();
    for (const auto& e : spec.embeddings) {
        json images = json::array();
        for (const auto& img : e) images.push_back(poly_to_json_obj(img));
        emb.push_back(images);
    }
    json cone{{"generators", json::array()}, {"face_normals", json::array()}};
    for (const auto& g : spec.cone.generators()) cone["generators"].push_back(qvector_to_json(g));
    for (const auto& w : spec.cone.face_normals())
        cone["face_normals"].push_back(qvector_to_json(w));
    json u = json::array();
    for (const auto& p : spec.U) u.push_back(poly_to_json_obj(p));
    json root{{"name", spec.name},
              {"source_dim", spec.source_dim},
              {"dim", spec.dim},
              {"source_gens", sg},
              {"embeddings", emb},
              {"cone", cone},
              {"U", u},
              {"filtration_vector", qvector_to_json(spec.filtration)}};
    if (spec.grading) root["grading_vector"] = qvector_to_json(*spec.grading);
    return root.dump(2) + "\n";
}

TermOrder parse_order(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        std::vector<QVector> rows;
        for (const auto& r : j.at("rows")) rows.push_back(qvector_from_json(r));
        if (j.contains("dim"))
            for (const auto& r : rows)
                if (static_cast<int>(r.size()) != j.at("dim").get<int>())
                    throw ParseError("order row length differs from declared dim");
        return TermOrder::from_weights(std::move(rows));
    } catch (const json::exception& e) {
        throw ParseError(std::string("order descriptor: ") + e.what());
    }
}

TermOrder load_order(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_order(buf.str());
}

std::string order_to_json(const TermOrder& order) { return order_to_json_obj(order).dump(2) + "\n"; }

LaurentPoly parse_poly(const std::string& json_text) {
    try {
        return poly_from_json(json::parse(json_text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("polynomial: ") + e.what());
    }
}

std::string poly_to_json(const LaurentPoly& poly) { return poly_to_json_obj(poly).dump(2) + "\n"; }

std::string degree_report_json(const DegreeReport& rep, const RunManifest& manifest) {
    json degrees = json::array();
    for (const auto& d : rep.degrees) {
        degrees.push_back(json{{"exp", exponent_to_json(d)},
                               {"part", origin_label(rep.partition.at(d))}});
    }
    json mingens = json::array();
    for (const auto& d : rep.monoid_min_gens) mingens.push_back(exponent_to_json(d));
    json gens = json::array();
    for (const auto& gg : rep.algebra_new_gens) {
        json reps = json::array();
        for (const auto& r : gg.representatives) reps.push_back(poly_to_json_obj(r));
        gens.push_back(json{{"grade", rational_to_json(gg.grade)},
                            {"count", gg.count},
                            {"representatives", reps}});
    }
    json rows = json::array();
    for (const auto& r : rep.order_rows) rows.push_back(qvector_to_json(r));
    json body{{"order_rows", rows},
              {"bound", rational_to_json(rep.bound)},
              {"degrees", degrees},
              {"monoid_min_gens", mingens},
              {"algebra_new_gens", gens},
              {"truncated", rep.truncated}};
    return wrap_report("degree_monoid", body, manifest);
}

std::string degree_report_text(const DegreeReport& rep) {
    std::ostringstream out;
    out << "degree monoid up to grade " << to_string(rep.bound)
        << (rep.truncated ? "  (filtered approximation)" : "  (exact graded pieces)") << "\n";
    out << "  degrees (" << rep.degrees.size() << "):\n";
    for (const auto& d : rep.degrees)
        out << "    " << exp_text(d) << "  " << origin_label(rep.partition.at(d)) << "\n";
    out << "  monoid minimal generators (" << rep.monoid_min_gens.size() << "):";
    for (const auto& d : rep.monoid_min_gens) out << " " << exp_text(d);
    out << "\n";
    if (!rep.algebra_new_gens.empty()) {
        out << "  new algebra generators per grade:\n";
        for (const auto& gg : rep.algebra_new_gens) {
            out << "    grade " << to_string(gg.grade) << ": " << gg.count;
            for (const auto& r : gg.representatives) out << "  [" << r.to_string() << "]";
            out << "\n";
        }
    }
    return out.str();
}

std::string generators_json(const std::vector<GradeGenerators>& gens,
                            const RunManifest& manifest) {
    json arr = json::array();
    for (const auto& gg : gens) {
        json reps = json::array();
        for (const auto& r : gg.representatives) reps.push_back(poly_to_json_obj(r));
        arr.push_back(json{{"grade", rational_to_json(gg.grade)},
                           {"count", gg.count},
                           {"representatives", reps}});
    }
    return wrap_report("algebra_min_generators", json{{"grades", arr}}, manifest);
}

std::string generators_text(const std::vector<GradeGenerators>& gens) {
    std::ostringstream out;
    out << "minimal algebra generators by grade\n";
    for (const auto& gg : gens) {
        out << "  grade " << to_string(gg.grade) << ": " << gg.count;
        for (const auto& r : gg.representatives) out << "  [" << r.to_string() << "]";
        out << "\n";
    }
    return out.str();
}

std::string completeness_json(const CompletenessReport& rep, const RunManifest& manifest) {
    json faces = json::array();
    for (const auto& f : rep.faces) {
        json part = json::array(), target = json::array();
        for (const auto& e : f.face_part) part.push_back(exponent_to_json(e));
        for (const auto& e : f.target) target.push_back(exponent_to_json(e));
        faces.push_back(json{{"face", f.face},
                             {"face_part", part},
                             {"target", target},
                             {"part_empty", f.part_empty},
                             {"cones_equal", f.cones_equal},
                             {"proper_stable", f.proper_stable},
                             {"verdict", verdict_name(f.verdict)}});
    }
    json body{{"bound", rational_to_json(rep.bound)},
              {"second_bound", rational_to_json(rep.second_bound)},
              {"faces", faces},
              {"verdict", verdict_name(rep.verdict)},
              {"claim", rep.claim}};
    return wrap_report("completeness", body, manifest);
}

std::string completeness_text(const CompletenessReport& rep) {
    std::ostringstream out;
    out << "completeness at bounds " << to_string(rep.bound) << " and "
        << to_string(rep.second_bound) << ": " << verdict_name(rep.verdict) << "\n";
    for (const auto& f : rep.faces) {
        out << "  face " << f.face << ": " << verdict_name(f.verdict) << "  (|part|="
            << f.face_part.size() << ", |target|=" << f.target.size() << ")\n";
    }
    return out.str();
}

std::string mu_report_json(const MuReport& rep, const RunManifest& manifest) {
    json records = json::array();
    for (const auto& r : rep.records) {
        json m = json::array();
        for (const auto& b : r.M) m.push_back(exponent_to_json(b));
        records.push_back(json{{"a", exponent_to_json(r.a)},
                               {"M", m},
                               {"mu", exponent_to_json(r.mu)},
                               {"in_deg_psi_I", r.in_deg_psi_I},
                               {"truncated", r.truncated}});
    }
    json body{{"psi1", rep.roles.psi1},
              {"psi2", rep.roles.psi2},
              {"bound", rational_to_json(rep.bound)},
              {"records", records},
              {"mu_injective", rep.mu_injective},
              {"claim", rep.claim}};
    return wrap_report("mu_map", body, manifest);
}

std::string mu_report_text(const MuReport& rep) {
    std::ostringstream out;
    out << "mu map (roles " << rep.roles.psi1 << "," << rep.roles.psi2 << ") up to grade "
        << to_string(rep.bound) << ", injective: " << (rep.mu_injective ? "yes" : "no") << "\n";
    for (const auto& r : rep.records) {
        out << "  a=" << exp_text(r.a) << "  mu=" << exp_text(r.mu)
            << "  in deg psi(I): " << (r.in_deg_psi_I ? "yes" : "no")
            << (r.truncated ? "  [touches bound]" : "") << "\n";
    }
    return out.str();
}

std::string complement_json(const ComplementReport& rep, const RunManifest& manifest) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"grade", rational_to_json(r.grade)}, {"count", r.count}});
    json body{{"psi1", rep.roles.psi1},
              {"bound", rational_to_json(rep.bound)},
              {"rows", rows},
              {"strictly_increasing", rep.strictly_increasing},
              {"stabilized", rep.stabilized},
              {"claim", rep.claim}};
    return wrap_report("complement_scan", body, manifest);
}

std::string complement_text(const ComplementReport& rep) {
    std::ostringstream out;
    out << "complement growth up to grade " << to_string(rep.bound) << " ("
        << (rep.strictly_increasing ? "strictly increasing"
                                    : (rep.stabilized ? "stabilized" : "mixed"))
        << ")\n";
    for (const auto& r : rep.rows)
        out << "  grade " << to_string(r.grade) << ": " << r.count << "\n";
    return out.str();
}

std::string hypothesis_json(const HypothesisReport& rep, const RunManifest& manifest) {
    json arr = json::array();
    for (const auto& e : rep.embeddings) {
        json obj{{"embedding", e.embedding},
                 {"fast_path", e.monomial_fast_path}};
        switch (e.verdict) {
            case HypothesisVerdict::Holds: obj["verdict"] = "holds"; break;
            case HypothesisVerdict::Fails: obj["verdict"] = "fails"; break;
            case HypothesisVerdict::Inconclusive: obj["verdict"] = "inconclusive"; break;
        }
        if (e.witness_gen) obj["witness_gen"] = *e.witness_gen;
        arr.push_back(obj);
    }
    json body{{"embeddings", arr}, {"any_holds", rep.any_holds}, {"claim", rep.claim}};
    return wrap_report("hypothesis", body, manifest);
}

std::string hypothesis_text(const HypothesisReport& rep) {
    std::ostringstream out;
    out << "degrees-above-origin hypothesis:\n";
    for (const auto& e : rep.embeddings) {
        out << "  embedding " << e.embedding << ": ";
        switch (e.verdict) {
            case HypothesisVerdict::Holds:
                out << "holds" << (e.monomial_fast_path ? " (monomial-order fast path)" : "");
                break;
            case HypothesisVerdict::Fails:
                out << "fails (generator " << *e.witness_gen << " has degree below 0)";
                break;
            case HypothesisVerdict::Inconclusive: out << "inconclusive"; break;
        }
        out << "\n";
    }
    return out.str();
}

std::string fingerprint_json(const FingerprintReport& rep, const RunManifest& manifest) {
    json classes = json::array();
    for (const auto& cls : rep.classes) {
        json degs = json::array();
        for (const auto& d : cls.degrees) degs.push_back(exponent_to_json(d));
        classes.push_back(json{{"members", cls.members}, {"degrees", degs}});
    }
    json body{{"bound", rational_to_json(rep.bound)},
              {"class_count", rep.classes.size()},
              {"classes", classes},
              {"claim", rep.claim}};
    return wrap_report("fingerprints", body, manifest);
}

std::string fingerprint_text(const FingerprintReport& rep) {
    std::ostringstream out;
    out << rep.classes.size() << " distinct truncated initial algebras at grade "
        << to_string(rep.bound) << "\n";
    for (std::size_t k = 0; k < rep.classes.size(); ++k) {
        out << "  class " << k << " (orders";
        for (int m : rep.classes[k].members) out << " " << m;
        out << "):";
        for (const auto& d : rep.classes[k].degrees) out << " " << exp_text(d);
        out << "\n";
    }
    return out.str();
}

std::string validation_json(const Construction& c, const RunManifest& manifest) {
    json warnings = json::array();
    for (const auto& w : c.warnings()) warnings.push_back(w);
    json b = json::array(), jg = json::array(), ag = json::array();
    for (const auto& p : c.b_generators()) b.push_back(poly_to_json_obj(p));
    for (const auto& p : c.j_generators()) jg.push_back(poly_to_json_obj(p));
    for (const auto& p : c.a_poly_generators()) ag.push_back(poly_to_json_obj(p));
    json body{{"name", c.spec().name},
              {"valid", true},
              {"embeddings", c.embedding_count()},
              {"source_gens", c.source_gen_count()},
              {"b_generators", b},
              {"j_generators", jg},
              {"a_poly_generators", ag},
              {"graded", c.is_graded()},
              {"warnings", warnings}};
    return wrap_report("validation", body, manifest);
}

} // namespace inialg
