#include "rt3/examples.hpp"

namespace rt3 {

namespace {

struct DeviationLog {
    std::vector<std::string> items;

    void expect(const std::string& what, const std::string& got, const std::string& want) {
        if (got != want) items.push_back(what + ": got " + got + ", pinned " + want);
    }
    void expect(const std::string& what, const FieldElement& got, const std::string& want) {
        expect(what, got.str(), want);
    }
    void expect(const std::string& what, const std::optional<FieldElement>& got,
                const std::string& want) {
        if (!got) items.push_back(what + ": undefined, pinned " + want);
        else expect(what, got->str(), want);
    }
    void expect_checks(const std::string& what,
                       const std::vector<std::pair<std::string, Check>>& checks) {
        for (const auto& [name, c] : checks)
            if (c == Check::fail) items.push_back(what + ": check " + name + " failed");
    }
};

FieldElement rat(const std::string& text) {
    return FieldElement::parse(text, FieldSpec::rational());
}

}  // namespace

ExampleResult example_methane(const FieldElement& Q) {
    if (!Q.spec().is_rational()) throw InvalidConfig("methane quadrance must be rational");
    if (Q.is_zero()) throw InvalidConfig("methane quadrance must be nonzero");
    const FieldSpec spec = FieldSpec::rational();
    const BilinearForm I = BilinearForm::euclidean(spec);
    auto fe = [&](long long n) { return FieldElement(spec, n); };

    const Vec3 h1(fe(0), fe(1), fe(1));
    const Vec3 h2(fe(1), fe(0), fe(1));
    const Vec3 h3(fe(1), fe(1), fe(0));

    const Tripod bonds{ProjectivePoint(h1), ProjectivePoint(h2), ProjectivePoint(h3)};
    const TripodReport tr = analyze_tripod(I, bonds);

    const VectorTriangle face(h2 - h1, h3 - h2, h1 - h3);
    const TriangleReport fr = analyze_triangle(I, face);

    // Equilateral laws at the requested Q: the cross law pins the spread, and
    // the quadrea is Archimedes at (Q, Q, Q).
    const FieldElement one = fe(1);
    const FieldElement s = one - square(Q + Q - Q) / (fe(4) * Q * Q);
    const FieldElement quadrea_at_q = archimedes(Q, Q, Q);
    const FieldElement quadrea_at_1 = archimedes(one, one, one);

    DeviationLog log;
    log.expect("s", s, "3/4");
    for (int i = 0; i < 3; ++i) {
        log.expect("q_" + std::to_string(i + 1), tr.quadrances[static_cast<std::size_t>(i)],
                   "3/4");
        log.expect("S_" + std::to_string(i + 1), tr.spreads[static_cast<std::size_t>(i)],
                   "8/9");
        log.expect("face quadrance " + std::to_string(i + 1),
                   fr.quadrances[static_cast<std::size_t>(i)], "2");
        log.expect("face spread " + std::to_string(i + 1),
                   fr.spreads[static_cast<std::size_t>(i)], "3/4");
    }
    log.expect("a", tr.quadrea, "1/2");
    log.expect("l", tr.quadreal, "16/27");
    log.expect("face quadrea", fr.quadrea, "12");
    log.expect("quadrea at Q", quadrea_at_q, (fe(3) * Q * Q).str());
    log.expect("quadrea at 1", quadrea_at_1, "3");
    log.expect_checks("bond tripod", tr.checks);
    log.expect_checks("face triangle", fr.checks);

    ordered_json j;
    j["example"] = "methane";
    j["field"] = spec.str();
    j["Q"] = Q.str();
    j["s"] = s.str();
    j["q"] = opt_scalar_json(tr.quadrances[0]);
    j["a"] = opt_scalar_json(tr.quadrea);
    j["S"] = opt_scalar_json(tr.spreads[0]);
    j["l"] = opt_scalar_json(tr.quadreal);
    j["quadrea"] = quadrea_at_q.str();
    j["quadrea_at_Q1"] = quadrea_at_1.str();
    ordered_json face_j;
    face_j["quadrances"] = ordered_json::array({scalar_json(fr.quadrances[0]),
                                                scalar_json(fr.quadrances[1]),
                                                scalar_json(fr.quadrances[2])});
    face_j["spreads"] = ordered_json::array({opt_scalar_json(fr.spreads[0]),
                                             opt_scalar_json(fr.spreads[1]),
                                             opt_scalar_json(fr.spreads[2])});
    face_j["quadrea"] = scalar_json(fr.quadrea);
    j["face"] = std::move(face_j);
    return {std::move(j), std::move(log.items)};
}

ExampleResult example_minkowski_affine() {
    const FieldSpec spec = FieldSpec::rational();
    const BilinearForm B = BilinearForm::minkowski(spec);
    const Vec3 v1 = vec_from_text("[\"-1\",\"3\",\"-2\"]", spec);
    const Vec3 v2 = vec_from_text("[\"2\",\"-5\",\"4\"]", spec);
    const VectorTriangle t(v1, v2, -(v1 + v2));
    const TriangleReport r = analyze_triangle(B, t);

    DeviationLog log;
    const char* pinned_q[3] = {"6", "13", "1"};
    const char* pinned_s[3] = {"-3/13", "-1/2", "-1/26"};
    for (int i = 0; i < 3; ++i) {
        log.expect("Q_" + std::to_string(i + 1), r.quadrances[static_cast<std::size_t>(i)],
                   pinned_q[i]);
        log.expect("s_" + std::to_string(i + 1), r.spreads[static_cast<std::size_t>(i)],
                   pinned_s[i]);
    }
    log.expect("quadrea", r.quadrea, "-12");
    log.expect("spread_quadrance_ratio", r.spread_quadrance_ratio, "-1/26");
    if (r.spreads[0] && r.spreads[1] && r.spreads[2]) {
        // Both sides in the rearranged form (sum)^2 - 2(sum of squares) = 4 s1 s2 s3.
        const FieldElement sum = *r.spreads[0] + *r.spreads[1] + *r.spreads[2];
        const FieldElement lhs =
            square(sum) -
            rat("2") * (square(*r.spreads[0]) + square(*r.spreads[1]) + square(*r.spreads[2]));
        const FieldElement rhs = rat("4") * *r.spreads[0] * *r.spreads[1] * *r.spreads[2];
        log.expect("triple spread lhs", lhs, "-3/169");
        log.expect("triple spread rhs", rhs, "-3/169");
    } else {
        log.items.push_back("triple spread sides: some spread undefined");
    }
    log.expect_checks("triangle", r.checks);

    ordered_json j = triangle_report_json(B, t, r);
    ordered_json out;
    out["example"] = "minkowski-affine";
    for (auto& [key, value] : j.items()) out[key] = std::move(value);
    return {std::move(out), std::move(log.items)};
}

ExampleResult example_minkowski_projective() {
    const FieldSpec spec = FieldSpec::rational();
    const BilinearForm B = BilinearForm::minkowski(spec);
    const auto reps = points_from_text(
        "[[\"2\",\"-1\",\"3\"],[\"-2\",\"5\",\"0\"],[\"3\",\"0\",\"4\"]]", spec);
    const Tripod t{ProjectivePoint(reps[0]), ProjectivePoint(reps[1]),
                   ProjectivePoint(reps[2])};
    const TripodReport r = analyze_tripod(B, t);

    DeviationLog log;
    const char* pinned_q[3] = {"239/203", "-2/7", "197/116"};
    const char* pinned_s[3] = {"169/394", "-4901/47083", "1183/1912"};
    const char* pinned_dual[3][3] = {{"1", "2/5", "3/4"},
                                     {"1", "-1/4", "3/4"},
                                     {"1", "2/5", "8/15"}};
    for (int i = 0; i < 3; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        log.expect("q_" + std::to_string(i + 1), r.quadrances[idx], pinned_q[i]);
        log.expect("S_" + std::to_string(i + 1), r.spreads[idx], pinned_s[i]);
        for (int c = 0; c < 3; ++c)
            log.expect("dual " + std::to_string(i + 1) + " component " + std::to_string(c + 1),
                       r.dual[idx][c], pinned_dual[i][c]);
    }
    log.expect("spread_quadrance_ratio", r.spread_quadrance_ratio, "34307/94166");
    log.expect("a", r.quadrea, "-169/812");
    log.expect("l", r.quadreal, "-28561/376664");
    if (r.quadrea && r.quadrances[0] && r.quadrances[1] && r.quadrances[2]) {
        const FieldElement one = rat("1"), two = rat("2"), four = rat("4");
        const FieldElement lhs = square(*r.quadrea - *r.quadrances[0] - *r.quadrances[1] -
                                        *r.quadrances[2] + two);
        const FieldElement rhs = four * (one - *r.quadrances[0]) * (one - *r.quadrances[1]) *
                                 (one - *r.quadrances[2]);
        log.expect("projective cross law lhs", lhs, "26244/41209");
        log.expect("projective cross law rhs", rhs, "26244/41209");
    } else {
        log.items.push_back("projective cross law sides: some value undefined");
    }
    log.expect_checks("tripod", r.checks);

    // The dual tripod must exchange quadrances with spreads and the quadrea
    // with the quadreal.
    const Tripod dual = dual_tripod(B, t);
    const TripodReport rd = analyze_tripod(B, dual);
    for (int i = 0; i < 3; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        log.expect("dual q_" + std::to_string(i + 1), rd.quadrances[idx], pinned_s[i]);
        log.expect("dual S_" + std::to_string(i + 1), rd.spreads[idx], pinned_q[i]);
    }
    log.expect("dual a", rd.quadrea, "-28561/376664");
    log.expect("dual l", rd.quadreal, "-169/812");

    ordered_json j = tripod_report_json(B, t, r);
    ordered_json out;
    out["example"] = "minkowski-projective";
    for (auto& [key, value] : j.items()) out[key] = std::move(value);
    return {std::move(out), std::move(log.items)};
}

ExampleResult run_example(const std::string& name, const FieldElement& Q) {
    if (name == "methane") return example_methane(Q);
    if (name == "minkowski-affine") return example_minkowski_affine();
    if (name == "minkowski-projective") return example_minkowski_projective();
    throw UnknownExample("unknown example: " + name);
}

}  // namespace rt3
