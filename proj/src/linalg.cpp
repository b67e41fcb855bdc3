#include "rt3/linalg.hpp"

namespace rt3 {

namespace {

void check_same(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b))
        throw FieldMismatch("vector/matrix operands belong to different fields: " + a.str() +
                            " vs " + b.str());
}

}  // namespace

Vec3::Vec3(FieldElement x, FieldElement y, FieldElement z)
    : c_{std::move(x), std::move(y), std::move(z)} {
    check_same(c_[0].spec(), c_[1].spec());
    check_same(c_[0].spec(), c_[2].spec());
}

bool Vec3::is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

Vec3 Vec3::zero(const FieldSpec& spec) {
    return Vec3(FieldElement(spec, 0), FieldElement(spec, 0), FieldElement(spec, 0));
}

Vec3 Vec3::unit(const FieldSpec& spec, int axis) {
    FieldElement zero(spec, 0), one(spec, 1);
    switch (axis) {
        case 0: return Vec3(one, zero, zero);
        case 1: return Vec3(zero, one, zero);
        default: return Vec3(zero, zero, one);
    }
}

bool operator==(const Vec3& a, const Vec3& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
}

Vec3 operator+(const Vec3& a, const Vec3& b) {
    return Vec3(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
    return Vec3(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

Vec3 operator-(const Vec3& a) { return Vec3(-a[0], -a[1], -a[2]); }

Vec3 operator*(const FieldElement& t, const Vec3& a) {
    return Vec3(t * a[0], t * a[1], t * a[2]);
}

Vec3 operator/(const Vec3& a, const FieldElement& t) { return inv(t) * a; }

FieldElement dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 euclid_cross(const Vec3& a, const Vec3& b) {
    return Vec3(a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]);
}

Mat3::Mat3(Vec3 r0, Vec3 r1, Vec3 r2) : r_{std::move(r0), std::move(r1), std::move(r2)} {
    check_same(r_[0].spec(), r_[1].spec());
    check_same(r_[0].spec(), r_[2].spec());
}

Mat3 Mat3::identity(const FieldSpec& spec) {
    return Mat3(Vec3::unit(spec, 0), Vec3::unit(spec, 1), Vec3::unit(spec, 2));
}

Mat3 Mat3::diagonal(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    const FieldSpec& spec = a.spec();
    FieldElement zero(spec, 0);
    return Mat3(Vec3(a, zero, zero), Vec3(zero, b, zero), Vec3(zero, zero, c));
}

bool operator==(const Mat3& a, const Mat3& b) {
    return a.r_[0] == b.r_[0] && a.r_[1] == b.r_[1] && a.r_[2] == b.r_[2];
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    return Mat3(a.row(0) + b.row(0), a.row(1) + b.row(1), a.row(2) + b.row(2));
}

Vec3 operator*(const Vec3& v, const Mat3& m) {
    return Vec3(v[0] * m.at(0, 0) + v[1] * m.at(1, 0) + v[2] * m.at(2, 0),
                v[0] * m.at(0, 1) + v[1] * m.at(1, 1) + v[2] * m.at(2, 1),
                v[0] * m.at(0, 2) + v[1] * m.at(1, 2) + v[2] * m.at(2, 2));
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    return Mat3(a.row(0) * b, a.row(1) * b, a.row(2) * b);
}

Mat3 operator*(const FieldElement& t, const Mat3& a) {
    return Mat3(t * a.row(0), t * a.row(1), t * a.row(2));
}

Mat3 transpose(const Mat3& m) {
    return Mat3(Vec3(m.at(0, 0), m.at(1, 0), m.at(2, 0)),
                Vec3(m.at(0, 1), m.at(1, 1), m.at(2, 1)),
                Vec3(m.at(0, 2), m.at(1, 2), m.at(2, 2)));
}

bool is_symmetric(const Mat3& m) {
    return m.at(0, 1) == m.at(1, 0) && m.at(0, 2) == m.at(2, 0) && m.at(1, 2) == m.at(2, 1);
}

FieldElement mat_det(const Mat3& m) {
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

Mat3 mat_adjugate(const Mat3& m) {
    return transpose(Mat3(euclid_cross(m.row(1), m.row(2)),
                          euclid_cross(m.row(2), m.row(0)),
                          euclid_cross(m.row(0), m.row(1))));
}

}  // namespace rt3
