#include <doctest.h>

#include "rt3/json_io.hpp"

using namespace rt3;

namespace {

const FieldSpec kQ = FieldSpec::rational();

Vec3 qvec(long long x, long long y, long long z) {
    return Vec3(FieldElement(kQ, x), FieldElement(kQ, y), FieldElement(kQ, z));
}

Mat3 qmat(std::array<long long, 9> e) {
    return Mat3(qvec(e[0], e[1], e[2]), qvec(e[3], e[4], e[5]), qvec(e[6], e[7], e[8]));
}

// Permutation-sum determinant as an oracle independent of the cofactor code.
FieldElement det_oracle(const Mat3& m) {
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    FieldElement sum(m.spec(), 0);
    for (int k = 0; k < 6; ++k) {
        FieldElement term = m.at(0, perms[k][0]) * m.at(1, perms[k][1]) * m.at(2, perms[k][2]);
        sum = k < 3 ? sum + term : sum - term;
    }
    return sum;
}

}  // namespace

TEST_CASE("vector arithmetic") {
    const Vec3 a = qvec(1, 2, 3), b = qvec(4, 5, 6);
    CHECK(a + b == qvec(5, 7, 9));
    CHECK(a - b == qvec(-3, -3, -3));
    CHECK(-a == qvec(-1, -2, -3));
    CHECK(FieldElement(kQ, 2) * a == qvec(2, 4, 6));
    CHECK(qvec(2, 4, 6) / FieldElement(kQ, 2) == a);
    CHECK(Vec3::zero(kQ).is_zero());
    CHECK_FALSE(a.is_zero());
    CHECK(Vec3::unit(kQ, 0) == qvec(1, 0, 0));
    CHECK(Vec3::unit(kQ, 2) == qvec(0, 0, 1));
    CHECK(dot(a, b) == FieldElement(kQ, 32));
}

TEST_CASE("euclidean cross product") {
    CHECK(euclid_cross(qvec(1, 0, 0), qvec(0, 1, 0)) == qvec(0, 0, 1));
    CHECK(euclid_cross(qvec(0, 1, 0), qvec(1, 0, 0)) == qvec(0, 0, -1));
    CHECK(euclid_cross(qvec(-1, 3, -2), qvec(2, -5, 4)) == qvec(2, 0, -1));
    const Vec3 a = qvec(3, -1, 7), b = qvec(2, 9, -4);
    CHECK(euclid_cross(a, a).is_zero());
    CHECK(dot(a, euclid_cross(a, b)).is_zero());
    CHECK(dot(b, euclid_cross(a, b)).is_zero());
}

TEST_CASE("matrix products and transpose") {
    const Mat3 m = qmat({2, -1, 3, -2, 5, 0, 3, 0, 4});
    const Mat3 id = Mat3::identity(kQ);
    CHECK(m * id == m);
    CHECK(id * m == m);
    CHECK(transpose(transpose(m)) == m);
    CHECK(qvec(1, 0, 0) * m == m.row(0));
    CHECK(qvec(0, 1, 1) * m == m.row(1) + m.row(2));
    CHECK(is_symmetric(Mat3::diagonal(FieldElement(kQ, 1), FieldElement(kQ, 1),
                                      FieldElement(kQ, -1))));
    CHECK_FALSE(is_symmetric(m));
}

TEST_CASE("determinant matches the permutation-sum oracle") {
    const Mat3 samples[] = {
        qmat({2, -1, 3, -2, 5, 0, 3, 0, 4}),
        qmat({1, 2, 3, 4, 5, 6, 7, 8, 9}),
        qmat({0, 0, 1, 0, 1, 0, 1, 0, 0}),
        qmat({-3, 7, 2, 8, 0, -5, 1, 1, 1}),
        Mat3::identity(kQ),
    };
    for (const Mat3& m : samples) CHECK(mat_det(m) == det_oracle(m));

    // (2,-1,3), (-2,5,0), (3,0,4) has determinant -13.
    CHECK(mat_det(qmat({2, -1, 3, -2, 5, 0, 3, 0, 4})).str() == "-13");
    CHECK(mat_det(qmat({1, 2, 3, 4, 5, 6, 7, 8, 9})).is_zero());
}

TEST_CASE("adjugate properties") {
    const Mat3 m = qmat({2, -1, 3, -2, 5, 0, 3, 0, 4});
    const Mat3 a = mat_adjugate(m);
    const Mat3 d = mat_det(m) * Mat3::identity(kQ);
    CHECK(m * a == d);
    CHECK(a * m == d);
    CHECK(mat_adjugate(Mat3::identity(kQ)) == Mat3::identity(kQ));

    // Total on singular input, where M adj(M) = 0.
    const Mat3 s = qmat({1, 2, 3, 4, 5, 6, 7, 8, 9});
    const Mat3 z = FieldElement(kQ, 0) * Mat3::identity(kQ);
    CHECK(s * mat_adjugate(s) == z);
}

TEST_CASE("vectors over F_13") {
    const FieldSpec F = FieldSpec::prime(13);
    auto fv = [&](long long x, long long y, long long z) {
        return Vec3(FieldElement(F, x), FieldElement(F, y), FieldElement(F, z));
    };
    CHECK(fv(6, 7, 0) + fv(7, 9, 1) == fv(0, 3, 1));
    CHECK(euclid_cross(fv(1, 0, 0), fv(0, 1, 0)) == fv(0, 0, 1));
    CHECK(mat_det(Mat3(fv(2, 0, 0), fv(0, 3, 0), fv(0, 0, 5))) == FieldElement(F, 30 % 13));
}

TEST_CASE("mixed-field vectors are rejected") {
    CHECK_THROWS_AS(Vec3(FieldElement(kQ, 1), FieldElement(kQ, 2),
                         FieldElement(FieldSpec::prime(7), 3)),
                    FieldMismatch);
}
