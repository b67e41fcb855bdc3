#pragma once

#include <array>

#include "rt3/linalg.hpp"

namespace rt3 {

// Symmetric invertible bilinear form.  The determinant and adjugate are
// computed once at construction; a zero determinant or an asymmetric matrix
// is rejected there, so no downstream operation ever divides by det B = 0.
class BilinearForm {
  public:
    explicit BilinearForm(const Mat3& matrix);

    static BilinearForm euclidean(const FieldSpec& spec);
    // diag(1, 1, -1), the relativistic form.
    static BilinearForm minkowski(const FieldSpec& spec);

    const Mat3& matrix() const noexcept { return b_; }
    const FieldElement& det() const noexcept { return det_; }
    const Mat3& adjugate() const noexcept { return adj_; }
    const FieldSpec& spec() const noexcept { return b_.spec(); }

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
        return a.b_ == b.b_;
    }

  private:
    Mat3 b_;
    FieldElement det_;
    Mat3 adj_;
};

// v B w^T
FieldElement b_dot(const BilinearForm& B, const Vec3& v, const Vec3& w);
// Q_B(v) = v B v^T
FieldElement b_quadrance(const BilinearForm& B, const Vec3& v);
bool is_b_null(const BilinearForm& B, const Vec3& v);
bool is_b_perp(const BilinearForm& B, const Vec3& v, const Vec3& w);

// v x_B w = (v x w) adj(B)
Vec3 b_cross(const BilinearForm& B, const Vec3& v, const Vec3& w);

// [v1, v2, v3]_B = v1 . _B (v2 x_B v3) = det(B) det(rows v1, v2, v3)
FieldElement scalar_triple(const BilinearForm& B, const Vec3& v1, const Vec3& v2, const Vec3& v3);

// <v1, v2, v3>_B = v1 x_B (v2 x_B v3)
Vec3 vector_triple(const BilinearForm& B, const Vec3& v1, const Vec3& v2, const Vec3& v3);

// [v1, v2; v3, v4]_B = (v1 x_B v2) . _B (v3 x_B v4)
FieldElement scalar_quadruple(const BilinearForm& B, const Vec3& v1, const Vec3& v2,
                              const Vec3& v3, const Vec3& v4);

// <v1, v2; v3, v4>_B = (v1 x_B v2) x_B (v3 x_B v4)
Vec3 vector_quadruple(const BilinearForm& B, const Vec3& v1, const Vec3& v2, const Vec3& v3,
                      const Vec3& v4);

// w1 = (v2 x_B v3)/[v1,v2,v3]_B and cyclically; v_i . _B w_j = delta_ij.
// Throws DegenerateBasis when the inputs are linearly dependent.
std::array<Vec3, 3> reciprocal_basis(const BilinearForm& B, const Vec3& v1, const Vec3& v2,
                                     const Vec3& v3);

// The form with matrix L L^T, so that (vL) . (wL) = v . _B w for the plain
// dot product on the left.  Throws SingularTransform when det L = 0.
BilinearForm induced_form(const Mat3& L);

}  // namespace rt3
