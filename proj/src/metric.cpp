#include "rt3/metric.hpp"

namespace rt3 {

BilinearForm::BilinearForm(const Mat3& matrix)
    : b_(matrix), det_(mat_det(matrix)), adj_(mat_adjugate(matrix)) {
    if (!is_symmetric(b_)) throw AsymmetricForm("bilinear form matrix is not symmetric");
    if (det_.is_zero()) throw SingularForm("bilinear form matrix has determinant zero");
}

BilinearForm BilinearForm::euclidean(const FieldSpec& spec) {
    return BilinearForm(Mat3::identity(spec));
}

BilinearForm BilinearForm::minkowski(const FieldSpec& spec) {
    FieldElement one(spec, 1);
    return BilinearForm(Mat3::diagonal(one, one, FieldElement(spec, -1)));
}

FieldElement b_dot(const BilinearForm& B, const Vec3& v, const Vec3& w) {
    return dot(v * B.matrix(), w);
}

FieldElement b_quadrance(const BilinearForm& B, const Vec3& v) { return b_dot(B, v, v); }

bool is_b_null(const BilinearForm& B, const Vec3& v) { return b_quadrance(B, v).is_zero(); }

bool is_b_perp(const BilinearForm& B, const Vec3& v, const Vec3& w) {
    return b_dot(B, v, w).is_zero();
}

Vec3 b_cross(const BilinearForm& B, const Vec3& v, const Vec3& w) {
    return euclid_cross(v, w) * B.adjugate();
}

FieldElement scalar_triple(const BilinearForm& B, const Vec3& v1, const Vec3& v2,
                           const Vec3& v3) {
    return b_dot(B, v1, b_cross(B, v2, v3));
}

Vec3 vector_triple(const BilinearForm& B, const Vec3& v1, const Vec3& v2, const Vec3& v3) {
    return b_cross(B, v1, b_cross(B, v2, v3));
}

FieldElement scalar_quadruple(const BilinearForm& B, const Vec3& v1, const Vec3& v2,
                              const Vec3& v3, const Vec3& v4) {
    return b_dot(B, b_cross(B, v1, v2), b_cross(B, v3, v4));
}

Vec3 vector_quadruple(const BilinearForm& B, const Vec3& v1, const Vec3& v2, const Vec3& v3,
                      const Vec3& v4) {
    return b_cross(B, b_cross(B, v1, v2), b_cross(B, v3, v4));
}

std::array<Vec3, 3> reciprocal_basis(const BilinearForm& B, const Vec3& v1, const Vec3& v2,
                                     const Vec3& v3) {
    FieldElement t = scalar_triple(B, v1, v2, v3);
    if (t.is_zero())
        throw DegenerateBasis("reciprocal basis needs linearly independent vectors");
    FieldElement s = inv(t);
    return {s * b_cross(B, v2, v3), s * b_cross(B, v3, v1), s * b_cross(B, v1, v2)};
}

BilinearForm induced_form(const Mat3& L) {
    if (mat_det(L).is_zero())
        throw SingularTransform("induced form needs an invertible transformation");
    return BilinearForm(L * transpose(L));
}

}  // namespace rt3
