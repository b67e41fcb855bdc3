#include <doctest.h>

#include "rt3/json_io.hpp"

using namespace rt3;

TEST_CASE("the generator matches its specification") {
    // state' = state * 6364136223846793005 + 1442695040888963407 mod 2^64.
    Lcg64 rng(1);
    CHECK(rng.next() == 7806831264735756412ULL);
    CHECK(rng.next() == 9396908728118811419ULL);
    CHECK(rng.next() == 11960119808228829710ULL);
    Lcg64 rng42(42);
    CHECK(rng42.next() == 10481999410520546993ULL);
}

TEST_CASE("registry covers both affine and projective laws") {
    const auto& reg = identity_registry();
    CHECK(reg.size() >= 34);
    auto has = [&](const char* name) {
        for (const auto& id : reg)
            if (std::string(name) == id.name) return true;
        return false;
    };
    CHECK(has("jacobi_identity"));
    CHECK(has("binet_cauchy"));
    CHECK(has("cross_law"));
    CHECK(has("projective_cross_law"));
    CHECK(has("reciprocal_recovery"));
    CHECK(has("induced_form_transport"));
}

TEST_CASE("random sweeps pass over the rationals") {
    const BilinearForm M = BilinearForm::minkowski(FieldSpec::rational());
    const VerifySummary s = verify_random(M, 7, 25);
    CHECK_FALSE(s.exhaustive);
    CHECK(s.seed == 7);
    CHECK(s.cases == 25);
    CHECK(s.failures() == 0);
    CHECK(s.identities.size() == identity_registry().size());
    for (const IdentityTally& t : s.identities) {
        CHECK(t.tested == 25);
        CHECK(t.passed + t.skipped + t.failed == t.tested);
        CHECK(t.failed == 0);
    }
}

TEST_CASE("random sweeps pass over F_101 with a generic form") {
    const FieldSpec F = FieldSpec::prime(101);
    auto fe = [&](long long n) { return FieldElement(F, n); };
    const Mat3 g(Vec3(fe(1), fe(1), fe(0)), Vec3(fe(1), fe(2), fe(1)),
                 Vec3(fe(0), fe(1), fe(-1)));
    const VerifySummary s = verify_random(BilinearForm(g), 1, 50);
    CHECK(s.failures() == 0);
}

TEST_CASE("identical seeds reproduce identical summaries") {
    const BilinearForm E = BilinearForm::euclidean(FieldSpec::prime(11));
    const std::string a = dump_json(verify_summary_json(E, verify_random(E, 5, 40)));
    const std::string b = dump_json(verify_summary_json(E, verify_random(E, 5, 40)));
    const std::string c = dump_json(verify_summary_json(E, verify_random(E, 6, 40)));
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("zero cases are rejected") {
    const BilinearForm E = BilinearForm::euclidean(FieldSpec::rational());
    CHECK_THROWS_AS(verify_random(E, 1, 0), InvalidConfig);
}

TEST_CASE("exhaustive mode requires a finite field") {
    const BilinearForm E = BilinearForm::euclidean(FieldSpec::rational());
    CHECK_THROWS_AS(verify_exhaustive(E), InvalidConfig);
}
