#include "rt3/verify.hpp"

namespace rt3 {

namespace {

using V = std::vector<Vec3>;
using S = std::vector<FieldElement>;

FieldElement fe(const BilinearForm& B, long long n) { return FieldElement(B.spec(), n); }

// --- adjugate and product identities -------------------------------------

Outcome adjugate_product(const BilinearForm& B, const V& v, const S&) {
    Mat3 m(v[0], v[1], v[2]);
    // Exhaustive mode enumerates one matrix; the partner is derived from it
    // (row rotation plus the identity) instead of squaring the state space.
    Mat3 n = v.size() >= 6 ? Mat3(v[3], v[4], v[5])
                           : Mat3(v[1], v[2], v[0]) + Mat3::identity(B.spec());
    return mat_adjugate(m * n) == mat_adjugate(n) * mat_adjugate(m) ? Outcome::pass
                                                                    : Outcome::fail;
}

Outcome adjugate_of_adjugate(const BilinearForm& B, const V& v, const S&) {
    Mat3 m(v[0], v[1], v[2]);
    return mat_adjugate(mat_adjugate(m)) == mat_det(m) * m ? Outcome::pass : Outcome::fail;
}

Outcome adjugate_determinant(const BilinearForm& B, const V& v, const S&) {
    Mat3 m(v[0], v[1], v[2]);
    Mat3 a = mat_adjugate(m);
    Mat3 d = mat_det(m) * Mat3::identity(B.spec());
    return m * a == d && a * m == d ? Outcome::pass : Outcome::fail;
}

Outcome adjugate_vector_product(const BilinearForm& B, const V& v, const S&) {
    Mat3 m(v[0], v[1], v[2]);
    Mat3 rhs = transpose(
        Mat3(b_cross(B, v[1], v[2]), b_cross(B, v[2], v[0]), b_cross(B, v[0], v[1])));
    return mat_adjugate(m * B.matrix()) == rhs ? Outcome::pass : Outcome::fail;
}

Outcome scalar_triple_determinant(const BilinearForm& B, const V& v, const S&) {
    return scalar_triple(B, v[0], v[1], v[2]) == B.det() * mat_det(Mat3(v[0], v[1], v[2]))
               ? Outcome::pass
               : Outcome::fail;
}

Outcome scalar_triple_permutation(const BilinearForm& B, const V& v, const S&) {
    FieldElement t = scalar_triple(B, v[0], v[1], v[2]);
    bool ok = scalar_triple(B, v[1], v[2], v[0]) == t &&
              scalar_triple(B, v[2], v[0], v[1]) == t &&
              scalar_triple(B, v[0], v[2], v[1]) == -t &&
              scalar_triple(B, v[1], v[0], v[2]) == -t &&
              scalar_triple(B, v[2], v[1], v[0]) == -t;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome lagrange_formula(const BilinearForm& B, const V& v, const S&) {
    Vec3 rhs = B.det() * (b_dot(B, v[0], v[2]) * v[1] - b_dot(B, v[0], v[1]) * v[2]);
    return vector_triple(B, v[0], v[1], v[2]) == rhs ? Outcome::pass : Outcome::fail;
}

Outcome jacobi_identity(const BilinearForm& B, const V& v, const S&) {
    Vec3 sum = vector_triple(B, v[0], v[1], v[2]) + vector_triple(B, v[1], v[2], v[0]) +
               vector_triple(B, v[2], v[0], v[1]);
    return sum.is_zero() ? Outcome::pass : Outcome::fail;
}

Outcome binet_cauchy(const BilinearForm& B, const V& v, const S&) {
    FieldElement rhs = B.det() * (b_dot(B, v[0], v[2]) * b_dot(B, v[1], v[3]) -
                                  b_dot(B, v[0], v[3]) * b_dot(B, v[1], v[2]));
    return scalar_quadruple(B, v[0], v[1], v[2], v[3]) == rhs ? Outcome::pass : Outcome::fail;
}

Outcome lagrange_identity(const BilinearForm& B, const V& v, const S&) {
    FieldElement rhs = B.det() * (b_quadrance(B, v[0]) * b_quadrance(B, v[1]) -
                                  square(b_dot(B, v[0], v[1])));
    return b_quadrance(B, b_cross(B, v[0], v[1])) == rhs ? Outcome::pass : Outcome::fail;
}

Outcome scalar_quadruple_cyclic(const BilinearForm& B, const V& v, const S&) {
    FieldElement sum = scalar_quadruple(B, v[0], v[1], v[2], v[3]) +
                       scalar_quadruple(B, v[1], v[2], v[0], v[3]) +
                       scalar_quadruple(B, v[2], v[0], v[1], v[3]);
    return sum.is_zero() ? Outcome::pass : Outcome::fail;
}

Outcome vector_quadruple_closed_forms(const BilinearForm& B, const V& v, const S&) {
    Vec3 w = vector_quadruple(B, v[0], v[1], v[2], v[3]);
    Vec3 first = B.det() * (scalar_triple(B, v[0], v[1], v[3]) * v[2] -
                            scalar_triple(B, v[0], v[1], v[2]) * v[3]);
    Vec3 second = B.det() * (scalar_triple(B, v[0], v[2], v[3]) * v[1] -
                             scalar_triple(B, v[1], v[2], v[3]) * v[0]);
    return w == first && w == second ? Outcome::pass : Outcome::fail;
}

Outcome four_vector_relation(const BilinearForm& B, const V& v, const S&) {
    Vec3 sum = scalar_triple(B, v[1], v[2], v[3]) * v[0] -
               scalar_triple(B, v[0], v[2], v[3]) * v[1] +
               scalar_triple(B, v[0], v[1], v[3]) * v[2] -
               scalar_triple(B, v[0], v[1], v[2]) * v[3];
    return sum.is_zero() ? Outcome::pass : Outcome::fail;
}

Outcome common_vector_corollary(const BilinearForm& B, const V& v, const S&) {
    Vec3 rhs = B.det() * scalar_triple(B, v[0], v[1], v[2]) * v[0];
    return vector_quadruple(B, v[0], v[1], v[0], v[2]) == rhs ? Outcome::pass : Outcome::fail;
}

Outcome plane_meet(const BilinearForm& B, const V& v, const S&) {
    if (euclid_cross(v[0], v[1]).is_zero() || euclid_cross(v[2], v[3]).is_zero())
        return Outcome::skip;  // a span is not two-dimensional
    bool v2_in = mat_det(Mat3(v[0], v[1], v[2])).is_zero();
    bool v3_in = mat_det(Mat3(v[0], v[1], v[3])).is_zero();
    if (v2_in && v3_in) return Outcome::skip;  // the subspaces coincide
    Vec3 w = vector_quadruple(B, v[0], v[1], v[2], v[3]);
    bool ok = !w.is_zero() && mat_det(Mat3(v[0], v[1], w)).is_zero() &&
              mat_det(Mat3(v[2], v[3], w)).is_zero();
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome scalar_triple_of_crosses(const BilinearForm& B, const V& v, const S&) {
    FieldElement lhs = scalar_triple(B, b_cross(B, v[1], v[2]), b_cross(B, v[2], v[0]),
                                     b_cross(B, v[0], v[1]));
    return lhs == B.det() * square(scalar_triple(B, v[0], v[1], v[2])) ? Outcome::pass
                                                                       : Outcome::fail;
}

Outcome cross_perpendicularity(const BilinearForm& B, const V& v, const S&) {
    Vec3 c = b_cross(B, v[0], v[1]);
    return is_b_perp(B, v[0], c) && is_b_perp(B, v[1], c) ? Outcome::pass : Outcome::fail;
}

Outcome cross_dependent_zero(const BilinearForm& B, const V& v, const S& s) {
    return b_cross(B, v[0], s[0] * v[0]).is_zero() ? Outcome::pass : Outcome::fail;
}

// --- reciprocal basis ------------------------------------------------------

Outcome reciprocal_cross_sum(const BilinearForm& B, const V& v, const S&) {
    if (scalar_triple(B, v[0], v[1], v[2]).is_zero()) return Outcome::skip;
    auto w = reciprocal_basis(B, v[0], v[1], v[2]);
    Vec3 sum = b_cross(B, v[0], w[0]) + b_cross(B, v[1], w[1]) + b_cross(B, v[2], w[2]);
    return sum.is_zero() ? Outcome::pass : Outcome::fail;
}

Outcome reciprocal_dot_sum(const BilinearForm& B, const V& v, const S&) {
    if (scalar_triple(B, v[0], v[1], v[2]).is_zero()) return Outcome::skip;
    auto w = reciprocal_basis(B, v[0], v[1], v[2]);
    FieldElement sum = b_dot(B, v[0], w[0]) + b_dot(B, v[1], w[1]) + b_dot(B, v[2], w[2]);
    return sum == fe(B, 3) ? Outcome::pass : Outcome::fail;
}

Outcome reciprocal_triple_product(const BilinearForm& B, const V& v, const S&) {
    FieldElement t = scalar_triple(B, v[0], v[1], v[2]);
    if (t.is_zero()) return Outcome::skip;
    auto w = reciprocal_basis(B, v[0], v[1], v[2]);
    return t * scalar_triple(B, w[0], w[1], w[2]) == B.det() ? Outcome::pass : Outcome::fail;
}

Outcome reciprocal_recovery(const BilinearForm& B, const V& v, const S&) {
    if (scalar_triple(B, v[0], v[1], v[2]).is_zero()) return Outcome::skip;
    auto w = reciprocal_basis(B, v[0], v[1], v[2]);
    FieldElement tw = scalar_triple(B, w[0], w[1], w[2]);
    bool ok = v[0] == b_cross(B, w[1], w[2]) / tw && v[1] == b_cross(B, w[2], w[0]) / tw &&
              v[2] == b_cross(B, w[0], w[1]) / tw;
    return ok ? Outcome::pass : Outcome::fail;
}

// --- quadratic form basics -------------------------------------------------

Outcome polarisation(const BilinearForm& B, const V& v, const S&) {
    FieldElement d = b_dot(B, v[0], v[1]);
    FieldElement qs = b_quadrance(B, v[0] + v[1]);
    bool ok = fe(B, 2) * d == qs - b_quadrance(B, v[0]) - b_quadrance(B, v[1]) &&
              fe(B, 4) * d == qs - b_quadrance(B, v[0] - v[1]);
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome quadrance_scaling(const BilinearForm& B, const V& v, const S& s) {
    return b_quadrance(B, s[0] * v[0]) == square(s[0]) * b_quadrance(B, v[0]) ? Outcome::pass
                                                                              : Outcome::fail;
}

// --- affine triangle laws (v3 = -v0 - v1 closes the triangle) --------------

Outcome quadrea_theorem(const BilinearForm& B, const V& v, const S&) {
    Vec3 v2 = -(v[0] + v[1]);
    FieldElement ac = archimedes(b_quadrance(B, v[0]), b_quadrance(B, v[1]),
                                 b_quadrance(B, v2));
    FieldElement four = fe(B, 4);
    bool ok = four * b_quadrance(B, b_cross(B, v[0], v[1])) == B.det() * ac &&
              four * b_quadrance(B, b_cross(B, v[1], v2)) == B.det() * ac &&
              four * b_quadrance(B, b_cross(B, v2, v[0])) == B.det() * ac;
    return ok ? Outcome::pass : Outcome::fail;
}

struct TriangleData {
    std::array<Vec3, 3> side;
    std::array<FieldElement, 3> Q;
    std::array<std::optional<FieldElement>, 3> s;

    TriangleData(const BilinearForm& B, const Vec3& v0, const Vec3& v1)
        : side{v0, v1, -(v0 + v1)},
          Q{b_quadrance(B, side[0]), b_quadrance(B, side[1]), b_quadrance(B, side[2])} {
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            if (!Q[j].is_zero() && !Q[k].is_zero()) s[i] = spread(B, side[j], side[k]);
        }
    }
};

Outcome cross_law(const BilinearForm& B, const V& v, const S&) {
    TriangleData t(B, v[0], v[1]);
    FieldElement one = fe(B, 1), four = fe(B, 4);
    bool any = false, ok = true;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!t.s[i]) continue;
        any = true;
        ok = ok && square(t.Q[j] + t.Q[k] - t.Q[i]) ==
                       four * t.Q[j] * t.Q[k] * (one - *t.s[i]);
    }
    if (!any) return Outcome::skip;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome quadrea_spread_theorem(const BilinearForm& B, const V& v, const S&) {
    TriangleData t(B, v[0], v[1]);
    FieldElement ac = archimedes(t.Q[0], t.Q[1], t.Q[2]);
    FieldElement four = fe(B, 4);
    bool any = false, ok = true;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!t.s[i]) continue;
        any = true;
        ok = ok && ac == four * t.Q[j] * t.Q[k] * *t.s[i];
    }
    if (!any) return Outcome::skip;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome spread_law(const BilinearForm& B, const V& v, const S&) {
    TriangleData t(B, v[0], v[1]);
    bool any = false, ok = true;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        if (!t.s[i] || !t.s[j]) continue;
        any = true;
        ok = ok && *t.s[i] * t.Q[j] == *t.s[j] * t.Q[i];
    }
    if (!any) return Outcome::skip;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome triple_spread_formula(const BilinearForm& B, const V& v, const S&) {
    TriangleData t(B, v[0], v[1]);
    if (!t.s[0] || !t.s[1] || !t.s[2]) return Outcome::skip;
    FieldElement two = fe(B, 2), four = fe(B, 4);
    bool ok = square(*t.s[0] + *t.s[1] + *t.s[2]) ==
              two * (square(*t.s[0]) + square(*t.s[1]) + square(*t.s[2])) +
                  four * *t.s[0] * *t.s[1] * *t.s[2];
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome pythagoras(const BilinearForm& B, const V& v, const S&) {
    TriangleData t(B, v[0], v[1]);
    FieldElement one = fe(B, 1);
    bool any = false, ok = true;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!t.s[i]) continue;
        any = true;
        ok = ok && ((*t.s[i] == one) == (t.Q[j] + t.Q[k] == t.Q[i]));
    }
    if (!any) return Outcome::skip;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome triple_quad_formula(const BilinearForm& B, const V& v, const S& s) {
    // Degenerate triangle by construction: (v, tv, -(1+t)v).
    Vec3 v1 = s[0] * v[0];
    Vec3 v2 = -(v[0] + v1);
    FieldElement q0 = b_quadrance(B, v[0]), q1 = b_quadrance(B, v1), q2 = b_quadrance(B, v2);
    bool ok = square(q0 + q1 + q2) == fe(B, 2) * (square(q0) + square(q1) + square(q2));
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome archimedes_identity(const BilinearForm& B, const V&, const S& s) {
    FieldElement a = archimedes(s[0], s[1], s[2]);
    bool ok = a == fe(B, 4) * s[0] * s[1] - square(s[0] + s[1] - s[2]) &&
              a == archimedes(s[1], s[0], s[2]) && a == archimedes(s[2], s[1], s[0]);
    return ok ? Outcome::pass : Outcome::fail;
}

// --- projective ------------------------------------------------------------

Outcome class_invariance(const BilinearForm& B, const V& v, const S& s) {
    if (v[0].is_zero() || v[1].is_zero() || s[0].is_zero() || s[1].is_zero())
        return Outcome::skip;
    if (ProjectivePoint(s[0] * v[0]) != ProjectivePoint(v[0])) return Outcome::fail;
    if (!is_b_null(B, v[0]) && !is_b_null(B, v[1])) {
        if (spread(B, s[0] * v[0], s[1] * v[1]) != spread(B, v[0], v[1])) return Outcome::fail;
    }
    return Outcome::pass;
}

// Distinct nonzero classes with independent representatives, or nothing.
std::optional<Tripod> try_tripod(const V& v) {
    if (v[0].is_zero() || v[1].is_zero() || v[2].is_zero()) return std::nullopt;
    if (mat_det(Mat3(v[0], v[1], v[2])).is_zero()) return std::nullopt;
    return Tripod(ProjectivePoint(v[0]), ProjectivePoint(v[1]), ProjectivePoint(v[2]));
}

Outcome duality_involution(const BilinearForm& B, const V& v, const S&) {
    auto t = try_tripod(v);
    if (!t) return Outcome::skip;
    Tripod dual = dual_tripod(B, *t);
    return dual_tripod(B, dual) == *t ? Outcome::pass : Outcome::fail;
}

struct TripodData {
    std::array<std::optional<FieldElement>, 3> q, S;

    TripodData(const BilinearForm& B, const Tripod& t, const Tripod& dual) {
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            if (!is_b_null(B, t.point(j).rep()) && !is_b_null(B, t.point(k).rep()))
                q[i] = spread(B, t.point(j).rep(), t.point(k).rep());
            if (!is_b_null(B, dual.point(j).rep()) && !is_b_null(B, dual.point(k).rep()))
                S[i] = spread(B, dual.point(j).rep(), dual.point(k).rep());
        }
    }
};

Outcome projective_spread_law(const BilinearForm& B, const V& v, const S&) {
    auto t = try_tripod(v);
    if (!t) return Outcome::skip;
    TripodData d(B, *t, dual_tripod(B, *t));
    bool any = false, ok = true;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        if (!d.S[i] || !d.S[j] || !d.q[i] || !d.q[j]) continue;
        any = true;
        ok = ok && *d.S[i] * *d.q[j] == *d.S[j] * *d.q[i];
    }
    if (!any) return Outcome::skip;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome projective_spread_closed_form(const BilinearForm& B, const V& v, const S&) {
    auto t = try_tripod(v);
    if (!t) return Outcome::skip;
    // S_1 Q(v0 x v1) Q(v0 x v2) = det(B) [v0,v1,v2]^2 Q(v0), division-free.
    Vec3 n01 = b_cross(B, v[0], v[1]), n02 = b_cross(B, v[0], v[2]);
    FieldElement qn01 = b_quadrance(B, n01), qn02 = b_quadrance(B, n02);
    if (qn01.is_zero() || qn02.is_zero()) return Outcome::skip;
    FieldElement s1 = spread(B, n02, n01);
    FieldElement rhs =
        B.det() * square(scalar_triple(B, v[0], v[1], v[2])) * b_quadrance(B, v[0]);
    return s1 * qn01 * qn02 == rhs ? Outcome::pass : Outcome::fail;
}

Outcome projective_cross_law(const BilinearForm& B, const V& v, const S&) {
    auto t = try_tripod(v);
    if (!t) return Outcome::skip;
    TripodData d(B, *t, dual_tripod(B, *t));
    if (!d.q[0] || !d.q[1] || !d.q[2] || !d.S[0]) return Outcome::skip;
    FieldElement one = fe(B, 1), two = fe(B, 2), four = fe(B, 4);
    FieldElement a = *d.S[0] * *d.q[1] * *d.q[2];
    bool ok = square(a - *d.q[0] - *d.q[1] - *d.q[2] + two) ==
              four * (one - *d.q[0]) * (one - *d.q[1]) * (one - *d.q[2]);
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome asymmetric_cross_law(const BilinearForm& B, const V& v, const S&) {
    auto t = try_tripod(v);
    if (!t) return Outcome::skip;
    TripodData d(B, *t, dual_tripod(B, *t));
    if (!d.q[0] || !d.q[1] || !d.q[2]) return Outcome::skip;
    FieldElement one = fe(B, 1), four = fe(B, 4);
    bool any = false, ok = true;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!d.S[i]) continue;
        any = true;
        ok = ok && square(*d.S[i] * *d.q[j] * *d.q[k] + *d.q[i] - *d.q[j] - *d.q[k]) ==
                       four * *d.q[j] * *d.q[k] * (one - *d.q[i]) * (one - *d.S[i]);
    }
    if (!any) return Outcome::skip;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome quadrea_quadreal_product(const BilinearForm& B, const V& v, const S&) {
    auto t = try_tripod(v);
    if (!t) return Outcome::skip;
    TripodData d(B, *t, dual_tripod(B, *t));
    if (!d.q[0] || !d.q[1] || !d.q[2] || !d.S[0] || !d.S[1] || !d.S[2]) return Outcome::skip;
    FieldElement a = *d.S[0] * *d.q[1] * *d.q[2];
    FieldElement l = *d.q[0] * *d.S[1] * *d.S[2];
    bool ok = a == *d.S[1] * *d.q[0] * *d.q[2] && a == *d.S[2] * *d.q[0] * *d.q[1] &&
              l == *d.q[1] * *d.S[0] * *d.S[2] && l == *d.q[2] * *d.S[0] * *d.S[1] &&
              a * l == *d.q[0] * *d.q[1] * *d.q[2] * *d.S[0] * *d.S[1] * *d.S[2];
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome projective_pythagoras(const BilinearForm& B, const V& v, const S&) {
    // Build a right tripod: n2 normal to span(v0, v1), n1 = v0 x_B n2, and
    // v2 = n1 x_B t spans, with v0, the plane B-perpendicular to span(v0,v1).
    Vec3 n2 = b_cross(B, v[0], v[1]);
    if (n2.is_zero()) return Outcome::skip;
    Vec3 n1 = b_cross(B, v[0], n2);
    if (n1.is_zero()) return Outcome::skip;
    Vec3 v2 = b_cross(B, n1, v[2]);
    if (v2.is_zero()) return Outcome::skip;
    if (mat_det(Mat3(v[0], v[1], v2)).is_zero()) return Outcome::skip;
    Vec3 r2 = b_cross(B, v[0], v2);
    if (is_b_null(B, v[0]) || is_b_null(B, v[1]) || is_b_null(B, v2)) return Outcome::skip;
    if (is_b_null(B, n2) || is_b_null(B, r2)) return Outcome::skip;
    FieldElement S1 = spread(B, r2, n2);
    if (S1 != fe(B, 1)) return Outcome::fail;  // the construction must be right
    FieldElement q1 = spread(B, v[1], v2);
    FieldElement q2 = spread(B, v[0], v2);
    FieldElement q3 = spread(B, v[0], v[1]);
    return q1 == q2 + q3 - q2 * q3 ? Outcome::pass : Outcome::fail;
}

Outcome projective_triple_quad(const BilinearForm& B, const V& v, const S& s) {
    // Degenerate tripod by construction: v2 = s0 v0 + s1 v1.
    if (v[0].is_zero() || v[1].is_zero()) return Outcome::skip;
    if (euclid_cross(v[0], v[1]).is_zero()) return Outcome::skip;
    Vec3 v2 = s[0] * v[0] + s[1] * v[1];
    if (v2.is_zero()) return Outcome::skip;
    if (euclid_cross(v2, v[0]).is_zero() || euclid_cross(v2, v[1]).is_zero())
        return Outcome::skip;
    if (is_b_null(B, v[0]) || is_b_null(B, v[1]) || is_b_null(B, v2)) return Outcome::skip;
    FieldElement q1 = spread(B, v[1], v2);
    FieldElement q2 = spread(B, v[0], v2);
    FieldElement q3 = spread(B, v[0], v[1]);
    bool ok = square(q1 + q2 + q3) ==
              fe(B, 2) * (square(q1) + square(q2) + square(q3)) + fe(B, 4) * q1 * q2 * q3;
    return ok ? Outcome::pass : Outcome::fail;
}

Outcome induced_form_transport(const BilinearForm&, const V& v, const S&) {
    Mat3 L(v[0], v[1], v[2]);
    if (mat_det(L).is_zero()) return Outcome::skip;
    BilinearForm induced = induced_form(L);
    return dot(v[3] * L, v[4] * L) == b_dot(induced, v[3], v[4]) ? Outcome::pass
                                                                 : Outcome::fail;
}

}  // namespace

const std::vector<Identity>& identity_registry() {
    static const std::vector<Identity> registry = {
        {"adjugate_product", 6, 0, 3, 0, adjugate_product},
        {"adjugate_of_adjugate", 3, 0, 3, 0, adjugate_of_adjugate},
        {"adjugate_determinant", 3, 0, 3, 0, adjugate_determinant},
        {"adjugate_vector_product", 3, 0, 3, 0, adjugate_vector_product},
        {"scalar_triple_determinant", 3, 0, 3, 0, scalar_triple_determinant},
        {"scalar_triple_permutation", 3, 0, 3, 0, scalar_triple_permutation},
        {"lagrange_formula", 3, 0, 3, 0, lagrange_formula},
        {"jacobi_identity", 3, 0, 3, 0, jacobi_identity},
        {"binet_cauchy", 4, 0, 4, 0, binet_cauchy},
        {"lagrange_identity", 2, 0, 2, 0, lagrange_identity},
        {"scalar_quadruple_cyclic", 4, 0, 4, 0, scalar_quadruple_cyclic},
        {"vector_quadruple_closed_forms", 4, 0, 4, 0, vector_quadruple_closed_forms},
        {"four_vector_relation", 4, 0, 4, 0, four_vector_relation},
        {"common_vector_corollary", 3, 0, 3, 0, common_vector_corollary},
        {"plane_meet", 4, 0, 4, 0, plane_meet},
        {"scalar_triple_of_crosses", 3, 0, 3, 0, scalar_triple_of_crosses},
        {"cross_perpendicularity", 2, 0, 2, 0, cross_perpendicularity},
        {"cross_dependent_zero", 1, 1, 1, 1, cross_dependent_zero},
        {"reciprocal_cross_sum", 3, 0, 3, 0, reciprocal_cross_sum},
        {"reciprocal_dot_sum", 3, 0, 3, 0, reciprocal_dot_sum},
        {"reciprocal_triple_product", 3, 0, 3, 0, reciprocal_triple_product},
        {"reciprocal_recovery", 3, 0, 3, 0, reciprocal_recovery},
        {"polarisation", 2, 0, 2, 0, polarisation},
        {"quadrance_scaling", 1, 1, 1, 1, quadrance_scaling},
        {"quadrea_theorem", 2, 0, 2, 0, quadrea_theorem},
        {"cross_law", 2, 0, 2, 0, cross_law},
        {"quadrea_spread_theorem", 2, 0, 2, 0, quadrea_spread_theorem},
        {"spread_law", 2, 0, 2, 0, spread_law},
        {"triple_spread_formula", 2, 0, 2, 0, triple_spread_formula},
        {"pythagoras", 2, 0, 2, 0, pythagoras},
        {"triple_quad_formula", 1, 1, 1, 1, triple_quad_formula},
        {"archimedes_identity", 0, 3, 0, 3, archimedes_identity},
        {"class_invariance", 2, 2, 2, 2, class_invariance},
        {"duality_involution", 3, 0, 3, 0, duality_involution},
        {"projective_spread_law", 3, 0, 3, 0, projective_spread_law},
        {"projective_spread_closed_form", 3, 0, 3, 0, projective_spread_closed_form},
        {"projective_cross_law", 3, 0, 3, 0, projective_cross_law},
        {"asymmetric_cross_law", 3, 0, 3, 0, asymmetric_cross_law},
        {"quadrea_quadreal_product", 3, 0, 3, 0, quadrea_quadreal_product},
        {"projective_pythagoras", 3, 0, 3, 0, projective_pythagoras},
        {"projective_triple_quad", 2, 2, 2, 2, projective_triple_quad},
        {"induced_form_transport", 5, 0, -1, 0, induced_form_transport},
    };
    return registry;
}

std::uint64_t VerifySummary::failures() const {
    std::uint64_t n = 0;
    for (const auto& t : identities) n += t.failed;
    return n;
}

namespace {

FieldElement draw_scalar(Lcg64& rng, const FieldSpec& spec) {
    if (spec.is_rational()) {
        // Components are integers uniform in [-20, 20].
        return FieldElement(spec, -20 + static_cast<long long>(rng.next() % 41));
    }
    return FieldElement(spec, static_cast<long long>(rng.next() % spec.modulus()));
}

Vec3 draw_vec(Lcg64& rng, const FieldSpec& spec) {
    FieldElement x = draw_scalar(rng, spec);
    FieldElement y = draw_scalar(rng, spec);
    FieldElement z = draw_scalar(rng, spec);
    return Vec3(std::move(x), std::move(y), std::move(z));
}

void tally(IdentityTally& t, Outcome o) {
    ++t.tested;
    switch (o) {
        case Outcome::pass: ++t.passed; break;
        case Outcome::fail: ++t.failed; break;
        case Outcome::skip: ++t.skipped; break;
    }
}

// Exhaustive state spaces beyond this many tuples are not enumerated; at
// p = 3 this admits the quadruple-arity identities (3^12 tuples), at p = 5
// the triple-arity ones (5^9).
constexpr std::uint64_t kExhaustiveBudget = 2'000'000;

}  // namespace

VerifySummary verify_random(const BilinearForm& B, std::uint64_t seed, std::uint64_t cases) {
    if (cases == 0) throw InvalidConfig("need at least one case per identity");
    const FieldSpec& spec = B.spec();
    VerifySummary summary;
    summary.exhaustive = false;
    summary.seed = seed;
    summary.cases = cases;

    Lcg64 rng(seed);
    for (const Identity& id : identity_registry()) {
        IdentityTally t{id.name};
        std::vector<Vec3> v;
        std::vector<FieldElement> s;
        for (std::uint64_t c = 0; c < cases; ++c) {
            v.clear();
            s.clear();
            for (int i = 0; i < id.vecs_random; ++i) v.push_back(draw_vec(rng, spec));
            for (int i = 0; i < id.scalars_random; ++i) s.push_back(draw_scalar(rng, spec));
            tally(t, id.eval(B, v, s));
        }
        summary.identities.push_back(t);
    }
    return summary;
}

VerifySummary verify_exhaustive(const BilinearForm& B) {
    const FieldSpec& spec = B.spec();
    if (spec.is_rational())
        throw InvalidConfig("exhaustive enumeration needs a finite field");
    const std::uint64_t p = spec.modulus();

    std::vector<FieldElement> residues;
    residues.reserve(p);
    for (std::uint64_t r = 0; r < p; ++r)
        residues.push_back(FieldElement(spec, static_cast<long long>(r)));

    VerifySummary summary;
    summary.exhaustive = true;

    for (const Identity& id : identity_registry()) {
        IdentityTally t{id.name};
        if (id.vecs_exhaustive >= 0) {
            const int digits = 3 * id.vecs_exhaustive + id.scalars_exhaustive;
            // Overflow-safe p^digits against the budget.
            std::uint64_t space = 1;
            bool fits = true;
            for (int i = 0; i < digits && fits; ++i) {
                if (space > kExhaustiveBudget / p) fits = false;
                else space *= p;
            }
            if (fits && digits > 0) {
                std::vector<std::uint64_t> digit(static_cast<std::size_t>(digits), 0);
                std::vector<Vec3> v;
                std::vector<FieldElement> s;
                for (std::uint64_t c = 0; c < space; ++c) {
                    v.clear();
                    s.clear();
                    for (int i = 0; i < id.vecs_exhaustive; ++i)
                        v.push_back(Vec3(residues[digit[3 * i]], residues[digit[3 * i + 1]],
                                         residues[digit[3 * i + 2]]));
                    for (int i = 0; i < id.scalars_exhaustive; ++i)
                        s.push_back(residues[digit[3 * id.vecs_exhaustive + i]]);
                    tally(t, id.eval(B, v, s));
                    // Lexicographic odometer, least significant digit last.
                    for (int i = digits - 1; i >= 0; --i) {
                        if (++digit[static_cast<std::size_t>(i)] < p) break;
                        digit[static_cast<std::size_t>(i)] = 0;
                    }
                }
            }
        }
        summary.identities.push_back(t);
    }
    return summary;
}

}  // namespace rt3
