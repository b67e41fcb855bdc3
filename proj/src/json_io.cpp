#include "rt3/json_io.hpp"

namespace rt3 {

namespace {

nlohmann::json parse_text(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

ordered_json checks_json(const std::vector<std::pair<std::string, Check>>& checks) {
    ordered_json j = ordered_json::object();
    for (const auto& [name, c] : checks) j[name] = check_name(c);
    return j;
}

}  // namespace

ordered_json scalar_json(const FieldElement& a) { return a.str(); }

ordered_json opt_scalar_json(const std::optional<FieldElement>& a) {
    if (!a) return nullptr;
    return a->str();
}

ordered_json vec_json(const Vec3& v) {
    return ordered_json::array({v[0].str(), v[1].str(), v[2].str()});
}

ordered_json mat_json(const Mat3& m) {
    return ordered_json::array({vec_json(m.row(0)), vec_json(m.row(1)), vec_json(m.row(2))});
}

FieldElement scalar_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (j.is_string()) return FieldElement::parse(j.get<std::string>(), spec);
    if (j.is_number_integer() || j.is_number_unsigned())
        return FieldElement::parse(j.dump(), spec);
    throw ParseError("expected a scalar string, got: " + j.dump());
}

Vec3 vec_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("expected an array of 3 scalars, got: " + j.dump());
    return Vec3(scalar_from_json(j[0], spec), scalar_from_json(j[1], spec),
                scalar_from_json(j[2], spec));
}

Mat3 mat_from_json(const nlohmann::json& j, const FieldSpec& spec) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("expected an array of 3 rows, got: " + j.dump());
    return Mat3(vec_from_json(j[0], spec), vec_from_json(j[1], spec),
                vec_from_json(j[2], spec));
}

Vec3 vec_from_text(std::string_view text, const FieldSpec& spec) {
    return vec_from_json(parse_text(text), spec);
}

std::array<Vec3, 3> points_from_text(std::string_view text, const FieldSpec& spec) {
    nlohmann::json j = parse_text(text);
    if (!j.is_array() || j.size() != 3)
        throw ParseError("expected an array of 3 points, got: " + j.dump());
    return {vec_from_json(j[0], spec), vec_from_json(j[1], spec), vec_from_json(j[2], spec)};
}

BilinearForm form_from_text(std::string_view text, const FieldSpec& spec) {
    if (text == "euclidean") return BilinearForm::euclidean(spec);
    if (text == "minkowski") return BilinearForm::minkowski(spec);
    if (!text.empty() && text.front() == '[')
        return BilinearForm(mat_from_json(parse_text(text), spec));
    throw ParseError("unknown form: \"" + std::string(text) +
                     "\" (expected \"euclidean\", \"minkowski\", or a 3x3 JSON matrix)");
}

ordered_json triangle_report_json(const BilinearForm& B, const VectorTriangle& t,
                                  const TriangleReport& r) {
    ordered_json j;
    j["field"] = B.spec().str();
    j["form"] = mat_json(B.matrix());
    j["vectors"] = ordered_json::array({vec_json(t.side(0)), vec_json(t.side(1)),
                                        vec_json(t.side(2))});
    j["quadrances"] = ordered_json::array({scalar_json(r.quadrances[0]),
                                           scalar_json(r.quadrances[1]),
                                           scalar_json(r.quadrances[2])});
    j["spreads"] = ordered_json::array({opt_scalar_json(r.spreads[0]),
                                        opt_scalar_json(r.spreads[1]),
                                        opt_scalar_json(r.spreads[2])});
    j["quadrea"] = scalar_json(r.quadrea);
    j["spread_quadrance_ratio"] = opt_scalar_json(r.spread_quadrance_ratio);
    j["checks"] = checks_json(r.checks);
    return j;
}

ordered_json tripod_report_json(const BilinearForm& B, const Tripod& t, const TripodReport& r) {
    ordered_json j;
    j["field"] = B.spec().str();
    j["form"] = mat_json(B.matrix());
    j["points"] = ordered_json::array({vec_json(r.points[0]), vec_json(r.points[1]),
                                       vec_json(r.points[2])});
    j["dual"] = ordered_json::array({vec_json(r.dual[0]), vec_json(r.dual[1]),
                                     vec_json(r.dual[2])});
    j["quadrances"] = ordered_json::array({opt_scalar_json(r.quadrances[0]),
                                           opt_scalar_json(r.quadrances[1]),
                                           opt_scalar_json(r.quadrances[2])});
    j["spreads"] = ordered_json::array({opt_scalar_json(r.spreads[0]),
                                        opt_scalar_json(r.spreads[1]),
                                        opt_scalar_json(r.spreads[2])});
    j["quadrea"] = opt_scalar_json(r.quadrea);
    j["quadreal"] = opt_scalar_json(r.quadreal);
    j["spread_quadrance_ratio"] = opt_scalar_json(r.spread_quadrance_ratio);
    j["checks"] = checks_json(r.checks);
    return j;
}

ordered_json verify_summary_json(const BilinearForm& B, const VerifySummary& s) {
    ordered_json j;
    j["mode"] = s.exhaustive ? "exhaustive" : "random";
    j["field"] = B.spec().str();
    j["form"] = mat_json(B.matrix());
    if (!s.exhaustive) {
        j["seed"] = s.seed;
        j["cases"] = s.cases;
    }
    ordered_json ids = ordered_json::array();
    for (const IdentityTally& t : s.identities) {
        ordered_json e;
        e["name"] = t.name;
        e["tested"] = t.tested;
        e["passed"] = t.passed;
        e["skipped"] = t.skipped;
        e["failed"] = t.failed;
        ids.push_back(std::move(e));
    }
    j["identities"] = std::move(ids);
    j["failures"] = s.failures();
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace rt3
