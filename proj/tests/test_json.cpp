#include <doctest.h>

#include "rt3/examples.hpp"

using namespace rt3;

namespace {

const FieldSpec kQ = FieldSpec::rational();

FieldElement rat(const std::string& text) { return FieldElement::parse(text, kQ); }

}  // namespace

TEST_CASE("scalar and vector JSON round-trips") {
    const Vec3 v(rat("1/2"), rat("-3"), rat("0"));
    CHECK(vec_json(v).dump() == R"(["1/2","-3","0"])");
    CHECK(vec_from_json(vec_json(v), kQ) == v);
    // Integers are accepted on input as a convenience.
    CHECK(vec_from_json(nlohmann::json::parse("[1,-3,0]"), kQ) ==
          Vec3(rat("1"), rat("-3"), rat("0")));
    CHECK(scalar_from_json(nlohmann::json("25"), FieldSpec::prime(7)) ==
          FieldElement(FieldSpec::prime(7), 4));

    CHECK_THROWS_AS(vec_from_json(nlohmann::json::parse("[1,2]"), kQ), ParseError);
    CHECK_THROWS_AS(scalar_from_json(nlohmann::json(1.5), kQ), ParseError);
    CHECK_THROWS_AS(vec_from_text("[\"1\",\"2\",", kQ), ParseError);
}

TEST_CASE("form shorthands") {
    CHECK(form_from_text("euclidean", kQ).matrix() == Mat3::identity(kQ));
    CHECK(form_from_text("minkowski", kQ).det().str() == "-1");
    const BilinearForm g = form_from_text(R"([["1","1","0"],["1","2","1"],["0","1","-1"]])", kQ);
    CHECK(g.det().str() == "-2");
    CHECK_THROWS_AS(form_from_text("lorentz", kQ), ParseError);
    CHECK_THROWS_AS(form_from_text(R"([["1","2","0"],["0","1","0"],["0","0","1"]])", kQ),
                    AsymmetricForm);
}

TEST_CASE("triangle reports re-parse under the input schema") {
    const BilinearForm M = BilinearForm::minkowski(kQ);
    const Vec3 v1 = vec_from_text(R"(["-1","3","-2"])", kQ);
    const Vec3 v2 = vec_from_text(R"(["2","-5","4"])", kQ);
    const VectorTriangle t(v1, v2, -(v1 + v2));
    const ordered_json j = triangle_report_json(M, t, analyze_triangle(M, t));

    CHECK(j.at("field") == "rational");
    CHECK(j.at("quadrances") == nlohmann::ordered_json::array({"6", "13", "1"}));
    CHECK(j.at("quadrea") == "-12");
    CHECK(j.at("checks").at("cross_law") == "pass");

    // Feed the emitted pieces back through the input parsers.
    const FieldSpec spec = FieldSpec::parse(j.at("field").get<std::string>());
    const BilinearForm B2 = BilinearForm(mat_from_json(j.at("form"), spec));
    CHECK(B2 == M);
    const Vec3 r1 = vec_from_json(j.at("vectors")[0], spec);
    const Vec3 r2 = vec_from_json(j.at("vectors")[1], spec);
    const Vec3 r3 = vec_from_json(j.at("vectors")[2], spec);
    CHECK(VectorTriangle(r1, r2, r3).side(0) == v1);
}

TEST_CASE("tripod reports embed canonical representatives") {
    const BilinearForm M = BilinearForm::minkowski(kQ);
    const Tripod t(ProjectivePoint(vec_from_text(R"(["2","-1","3"])", kQ)),
                   ProjectivePoint(vec_from_text(R"(["-2","5","0"])", kQ)),
                   ProjectivePoint(vec_from_text(R"(["3","0","4"])", kQ)));
    const ordered_json j = tripod_report_json(M, t, analyze_tripod(M, t));
    CHECK(j.at("points")[0] == nlohmann::ordered_json::array({"1", "-1/2", "3/2"}));
    CHECK(j.at("dual")[0] == nlohmann::ordered_json::array({"1", "2/5", "3/4"}));
    CHECK(j.at("quadrances")[1] == "-2/7");
    CHECK(j.at("quadreal") == "-28561/376664");

    // The dual points re-parse into the dual tripod.
    const Tripod dual(ProjectivePoint(vec_from_json(j.at("dual")[0], kQ)),
                      ProjectivePoint(vec_from_json(j.at("dual")[1], kQ)),
                      ProjectivePoint(vec_from_json(j.at("dual")[2], kQ)));
    CHECK(dual == dual_tripod(M, t));
}

TEST_CASE("null spreads serialize as JSON null") {
    const BilinearForm M = BilinearForm::minkowski(kQ);
    const Vec3 v1 = vec_from_text(R"(["3","4","5"])", kQ);  // null vector
    const Vec3 v2 = vec_from_text(R"(["1","0","0"])", kQ);
    const VectorTriangle t(v1, v2, -(v1 + v2));
    const ordered_json j = triangle_report_json(M, t, analyze_triangle(M, t));
    CHECK(j.at("spreads")[1].is_null());
    CHECK(j.at("spread_quadrance_ratio").is_null());
}

TEST_CASE("verification summaries serialize counts") {
    const BilinearForm E = BilinearForm::euclidean(FieldSpec::prime(11));
    const ordered_json j = verify_summary_json(E, verify_random(E, 3, 10));
    CHECK(j.at("mode") == "random");
    CHECK(j.at("field") == "prime:11");
    CHECK(j.at("seed") == 3);
    CHECK(j.at("cases") == 10);
    CHECK(j.at("failures") == 0);
    CHECK(j.at("identities").size() == identity_registry().size());
    CHECK(j.at("identities")[0].at("tested") == 10);
}

TEST_CASE("example reports carry their pinned keys") {
    const ExampleResult methane = run_example("methane", rat("2"));
    CHECK(methane.deviations.empty());
    CHECK(methane.report.at("s") == "3/4");
    CHECK(methane.report.at("S") == "8/9");
    CHECK(methane.report.at("quadrea") == "12");
    CHECK(methane.report.at("quadrea_at_Q1") == "3");

    const ExampleResult affine = run_example("minkowski-affine", rat("1"));
    CHECK(affine.deviations.empty());
    CHECK(affine.report.at("quadrea") == "-12");

    const ExampleResult projective = run_example("minkowski-projective", rat("1"));
    CHECK(projective.deviations.empty());
    CHECK(projective.report.at("quadreal") == "-28561/376664");

    CHECK_THROWS_AS(run_example("helium", rat("1")), UnknownExample);
    CHECK_THROWS_AS(run_example("methane", rat("0")), InvalidConfig);
}
