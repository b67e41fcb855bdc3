#include "rt3/affine.hpp"

namespace rt3 {

const char* check_name(Check c) {
    switch (c) {
        case Check::pass: return "pass";
        case Check::fail: return "fail";
        default: return "skipped";
    }
}

VectorTriangle::VectorTriangle(Vec3 v1, Vec3 v2, Vec3 v3)
    : v_{std::move(v1), std::move(v2), std::move(v3)} {
    if (!(v_[0] + v_[1] + v_[2]).is_zero())
        throw InvalidTriangle("triangle sides must sum to zero");
}

FieldElement archimedes(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    FieldElement two(a.spec(), 2);
    return square(a + b + c) - two * (square(a) + square(b) + square(c));
}

FieldElement spread(const BilinearForm& B, const Vec3& v, const Vec3& w) {
    FieldElement qv = b_quadrance(B, v);
    FieldElement qw = b_quadrance(B, w);
    if (qv.is_zero() || qw.is_zero())
        throw NullVector(qv.is_zero() ? "spread undefined: first argument is null"
                                      : "spread undefined: second argument is null");
    return FieldElement(v.spec(), 1) - square(b_dot(B, v, w)) / (qv * qw);
}

FieldElement quadrea(const BilinearForm& B, const VectorTriangle& t) {
    return archimedes(b_quadrance(B, t.side(0)), b_quadrance(B, t.side(1)),
                      b_quadrance(B, t.side(2)));
}

namespace {

// Folds per-rotation outcomes: fail dominates, then pass, else skipped.
struct LawTally {
    bool evaluated = false;
    bool ok = true;

    void record(bool pass) {
        evaluated = true;
        ok = ok && pass;
    }
    Check result() const { return evaluated ? (ok ? Check::pass : Check::fail) : Check::skipped; }
};

}  // namespace

TriangleReport analyze_triangle(const BilinearForm& B, const VectorTriangle& t) {
    const FieldSpec& spec = t.spec();
    const FieldElement one(spec, 1), two(spec, 2), four(spec, 4);

    std::array<FieldElement, 3> Q{b_quadrance(B, t.side(0)), b_quadrance(B, t.side(1)),
                                  b_quadrance(B, t.side(2))};
    std::array<std::optional<FieldElement>, 3> s;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (!Q[j].is_zero() && !Q[k].is_zero()) s[i] = spread(B, t.side(j), t.side(k));
    }

    FieldElement ac = archimedes(Q[0], Q[1], Q[2]);

    TriangleReport report{Q, s, ac, std::nullopt, {}};
    if (!Q[0].is_zero() && !Q[1].is_zero() && !Q[2].is_zero())
        report.spread_quadrance_ratio = *s[0] / Q[0];

    LawTally cross, spread_law, quadrea_spread, quadrea_thm, triple_spread, triple_quad,
        pythagoras;

    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (s[i]) {
            cross.record(square(Q[j] + Q[k] - Q[i]) == four * Q[j] * Q[k] * (one - *s[i]));
            quadrea_spread.record(ac == four * Q[j] * Q[k] * *s[i]);
            if (*s[i] == one) pythagoras.record(Q[j] + Q[k] == Q[i]);
        }
        if (s[i] && s[j]) spread_law.record(*s[i] * Q[j] == *s[j] * Q[i]);
        quadrea_thm.record(four * b_quadrance(B, b_cross(B, t.side(j), t.side(k))) ==
                           B.det() * ac);
    }

    if (s[0] && s[1] && s[2]) {
        triple_spread.record(square(*s[0] + *s[1] + *s[2]) ==
                             two * (square(*s[0]) + square(*s[1]) + square(*s[2])) +
                                 four * *s[0] * *s[1] * *s[2]);
    }

    if (euclid_cross(t.side(0), t.side(1)).is_zero()) {
        triple_quad.record(square(Q[0] + Q[1] + Q[2]) ==
                           two * (square(Q[0]) + square(Q[1]) + square(Q[2])));
    }

    report.checks = {{"cross_law", cross.result()},
                     {"spread_law", spread_law.result()},
                     {"quadrea_spread", quadrea_spread.result()},
                     {"quadrea_theorem", quadrea_thm.result()},
                     {"triple_spread", triple_spread.result()},
                     {"triple_quad", triple_quad.result()},
                     {"pythagoras", pythagoras.result()}};
    return report;
}

}  // namespace rt3
