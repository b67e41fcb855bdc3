#pragma once

#include "rt3/affine.hpp"

namespace rt3 {

// A point of the projective plane: the class [v] of a nonzero vector under
// scaling.  Stored canonically with the first nonzero coordinate scaled to 1,
// so classes compare structurally.
class ProjectivePoint {
  public:
    explicit ProjectivePoint(const Vec3& v);  // throws ZeroVector

    const Vec3& rep() const noexcept { return rep_; }
    const FieldSpec& spec() const noexcept { return rep_.spec(); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }

  private:
    Vec3 rep_;
};

// Three pairwise distinct projective points.
class Tripod {
  public:
    Tripod(ProjectivePoint p1, ProjectivePoint p2, ProjectivePoint p3);  // throws RepeatedPoint

    const ProjectivePoint& point(int i) const { return p_[static_cast<std::size_t>(i)]; }
    const FieldSpec& spec() const noexcept { return p_[0].spec(); }

    friend bool operator==(const Tripod& a, const Tripod& b) {
        return a.p_[0] == b.p_[0] && a.p_[1] == b.p_[1] && a.p_[2] == b.p_[2];
    }

  private:
    std::array<ProjectivePoint, 3> p_;
};

// Representatives linearly dependent (the points lie on a common projective
// line).
bool is_degenerate(const Tripod& t);

// [v1 x_B v2]; throws IdenticalPoints when p1 = p2.
ProjectivePoint b_normal(const BilinearForm& B, const ProjectivePoint& p1,
                         const ProjectivePoint& p2);

// (r1, r2, r3) = ([v2 x_B v3], [v1 x_B v3], [v1 x_B v2]); an involution on
// non-degenerate tripods.  Throws DegenerateTripod.
Tripod dual_tripod(const BilinearForm& B, const Tripod& t);

// q_B(p1, p2) = s_B(v1, v2); throws NullPoint when a representative is null.
FieldElement proj_quadrance(const BilinearForm& B, const ProjectivePoint& p1,
                            const ProjectivePoint& p2);

struct TripodReport {
    std::array<Vec3, 3> points;  // canonical representatives
    std::array<Vec3, 3> dual;    // canonical representatives of the dual points
    // q_i between the two points other than p_i; absent when a representative
    // involved is null.  Spreads are the dual quadrances, S_i = q(r_j, r_k).
    std::array<std::optional<FieldElement>, 3> quadrances;
    std::array<std::optional<FieldElement>, 3> spreads;
    std::optional<FieldElement> quadrea;   // a = S_1 q_2 q_3 (symmetric)
    std::optional<FieldElement> quadreal;  // l = q_1 S_2 S_3 (symmetric)
    // Common value S_i / q_i from the projective spread law.
    std::optional<FieldElement> spread_quadrance_ratio;
    std::vector<std::pair<std::string, Check>> checks;  // fixed order
};

// Requires a non-degenerate tripod (throws DegenerateTripod); null points or
// null dual points leave the affected values absent and the affected law
// checks "skipped".
TripodReport analyze_tripod(const BilinearForm& B, const Tripod& t);

// Both spreads S_1 satisfying the asymmetric projective cross law at a right
// tripod: given q2, q3 (with q2 q3 != 0) and q1 = q2 + q3 - q2 q3, returns
// {1} or {1, 4(q2+q3-1)/(q2 q3) - 3}.  Throws PreconditionViolated when
// q2 q3 = 0 or q1 is not the Pythagoras value.
std::vector<FieldElement> pythagoras_spread_solutions(const FieldElement& q2,
                                                      const FieldElement& q3,
                                                      const FieldElement& q1);

}  // namespace rt3
