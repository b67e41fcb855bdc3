#pragma once

#include <array>

#include "rt3/field.hpp"

namespace rt3 {

// Row vector with three coordinates from one field.
class Vec3 {
  public:
    Vec3(FieldElement x, FieldElement y, FieldElement z);

    const FieldElement& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const FieldSpec& spec() const noexcept { return c_[0].spec(); }
    bool is_zero() const;

    static Vec3 zero(const FieldSpec& spec);
    static Vec3 unit(const FieldSpec& spec, int axis);

    friend bool operator==(const Vec3& a, const Vec3& b);
    friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }

  private:
    std::array<FieldElement, 3> c_;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const FieldElement& t, const Vec3& a);
Vec3 operator/(const Vec3& a, const FieldElement& t);

// The plain (Euclidean, B-free) dot and cross products.
FieldElement dot(const Vec3& a, const Vec3& b);
Vec3 euclid_cross(const Vec3& a, const Vec3& b);

// 3x3 matrix stored as three row vectors; vectors multiply from the left.
class Mat3 {
  public:
    Mat3(Vec3 r0, Vec3 r1, Vec3 r2);

    static Mat3 identity(const FieldSpec& spec);
    static Mat3 diagonal(const FieldElement& a, const FieldElement& b, const FieldElement& c);

    const Vec3& row(int i) const { return r_[static_cast<std::size_t>(i)]; }
    const FieldElement& at(int i, int j) const { return row(i)[j]; }
    const FieldSpec& spec() const noexcept { return r_[0].spec(); }

    friend bool operator==(const Mat3& a, const Mat3& b);
    friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

  private:
    std::array<Vec3, 3> r_;
};

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(const FieldElement& t, const Mat3& a);
Vec3 operator*(const Vec3& v, const Mat3& m);
Mat3 transpose(const Mat3& m);
bool is_symmetric(const Mat3& m);

FieldElement mat_det(const Mat3& m);

// Adjugate as the transpose of the matrix of row cross products
// (r1 x r2, r2 x r0, r0 x r1); total, including singular input, and satisfies
// M adj(M) = adj(M) M = det(M) I.
Mat3 mat_adjugate(const Mat3& m);

}  // namespace rt3
