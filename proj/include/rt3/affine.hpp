#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rt3/metric.hpp"

namespace rt3 {

enum class Check { pass, fail, skipped };

const char* check_name(Check c);

// Three vectors summing to zero; the sides of a triangle traversed in order.
class VectorTriangle {
  public:
    VectorTriangle(Vec3 v1, Vec3 v2, Vec3 v3);

    // side(0) = v1, side(1) = v2, side(2) = v3
    const Vec3& side(int i) const { return v_[static_cast<std::size_t>(i)]; }
    const FieldSpec& spec() const noexcept { return v_[0].spec(); }

  private:
    std::array<Vec3, 3> v_;
};

// Archimedes' function A(a,b,c) = (a+b+c)^2 - 2(a^2+b^2+c^2).
FieldElement archimedes(const FieldElement& a, const FieldElement& b, const FieldElement& c);

// s_B(v,w) = 1 - (v._Bw)^2 / (Q_B(v) Q_B(w)); throws NullVector when either
// argument is B-null.
FieldElement spread(const BilinearForm& B, const Vec3& v, const Vec3& w);

// Quadrea of the triangle: A(Q1, Q2, Q3).
FieldElement quadrea(const BilinearForm& B, const VectorTriangle& t);

struct TriangleReport {
    std::array<FieldElement, 3> quadrances;             // Q_i = Q_B(v_i)
    std::array<std::optional<FieldElement>, 3> spreads; // s_i, at the vertex opposite v_i
    FieldElement quadrea;
    // Common value s_i / Q_i from the spread law; absent when some Q_i = 0.
    std::optional<FieldElement> spread_quadrance_ratio;
    std::vector<std::pair<std::string, Check>> checks;  // fixed order
};

// Evaluates quadrances, spreads (where defined), the quadrea, and the
// trigonometric laws.  A law whose preconditions fail on every applicable
// rotation is reported "skipped", never silently dropped.
TriangleReport analyze_triangle(const BilinearForm& B, const VectorTriangle& t);

}  // namespace rt3
