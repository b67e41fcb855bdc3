#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rt3/examples.hpp"

using namespace rt3;

namespace {

struct Criterion {
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void require_eq(const FieldElement& got, const char* want, const std::string& what) {
        if (got.str() != want)
            problems.push_back(what + ": got " + got.str() + ", pinned " + want);
    }
    void require_eq(const std::optional<FieldElement>& got, const char* want,
                    const std::string& what) {
        if (!got) problems.push_back(what + ": undefined, pinned " + want);
        else require_eq(*got, want, what);
    }
};

FieldElement rat(const std::string& text) {
    return FieldElement::parse(text, FieldSpec::rational());
}

FieldElement draw_rational(Lcg64& rng) {
    return FieldElement(FieldSpec::rational(), -20 + static_cast<long long>(rng.next() % 41));
}

Vec3 draw_rational_vec(Lcg64& rng) {
    FieldElement x = draw_rational(rng), y = draw_rational(rng), z = draw_rational(rng);
    return Vec3(std::move(x), std::move(y), std::move(z));
}

constexpr const char* kGenericForm = R"([["1","1","0"],["1","2","1"],["0","1","-1"]])";

// Identity names a random sweep must cover with zero failures and a full
// tally (one entry per required identity of the sweep criterion).
const std::vector<std::string>& required_identities() {
    static const std::vector<std::string> names = {
        "adjugate_product", "adjugate_of_adjugate", "adjugate_determinant",
        "adjugate_vector_product", "scalar_triple_determinant", "scalar_triple_permutation",
        "lagrange_formula", "jacobi_identity", "binet_cauchy", "lagrange_identity",
        "scalar_quadruple_cyclic", "vector_quadruple_closed_forms", "four_vector_relation",
        "common_vector_corollary", "plane_meet", "scalar_triple_of_crosses",
        "reciprocal_cross_sum", "reciprocal_dot_sum", "reciprocal_triple_product",
        "reciprocal_recovery", "polarisation", "quadrea_theorem", "cross_law",
        "quadrea_spread_theorem", "spread_law", "triple_spread_formula", "pythagoras",
        "class_invariance", "duality_involution", "projective_spread_law",
        "projective_cross_law", "asymmetric_cross_law", "quadrea_quadreal_product",
        "projective_pythagoras",
    };
    return names;
}

const IdentityTally* find_tally(const VerifySummary& s, const std::string& name) {
    for (const IdentityTally& t : s.identities)
        if (name == t.name) return &t;
    return nullptr;
}

void criterion_methane(Criterion& c) {
    for (const char* q_text : {"1", "2", "7/3"}) {
        const FieldElement Q = rat(q_text);
        const ExampleResult res = example_methane(Q);
        for (const std::string& d : res.deviations)
            c.problems.push_back(std::string("Q=") + q_text + ": " + d);
        const std::string tag = std::string("Q=") + q_text;
        c.require(res.report.at("s") == "3/4", tag + ": s");
        c.require(res.report.at("q") == "3/4", tag + ": q");
        c.require(res.report.at("a") == "1/2", tag + ": a");
        c.require(res.report.at("S") == "8/9", tag + ": S");
        c.require(res.report.at("quadrea") == (rat("3") * Q * Q).str(), tag + ": quadrea");
    }
}

void criterion_affine(Criterion& c) {
    const FieldSpec spec = FieldSpec::rational();
    const BilinearForm B = BilinearForm::minkowski(spec);
    const Vec3 v1 = vec_from_text(R"(["-1","3","-2"])", spec);
    const Vec3 v2 = vec_from_text(R"(["2","-5","4"])", spec);
    const VectorTriangle t(v1, v2, -(v1 + v2));
    const TriangleReport r = analyze_triangle(B, t);

    const char* pinned_q[3] = {"6", "13", "1"};
    const char* pinned_s[3] = {"-3/13", "-1/2", "-1/26"};
    for (std::size_t i = 0; i < 3; ++i) {
        c.require_eq(r.quadrances[i], pinned_q[i], "Q_" + std::to_string(i + 1));
        c.require_eq(r.spreads[i], pinned_s[i], "s_" + std::to_string(i + 1));
    }
    c.require_eq(r.quadrea, "-12", "quadrea");
    c.require_eq(r.spread_quadrance_ratio, "-1/26", "spread-law common ratio");
    if (r.spreads[0] && r.spreads[1] && r.spreads[2]) {
        const FieldElement lhs =
            square(*r.spreads[0] + *r.spreads[1] + *r.spreads[2]) -
            rat("2") * (square(*r.spreads[0]) + square(*r.spreads[1]) + square(*r.spreads[2]));
        const FieldElement rhs = rat("4") * *r.spreads[0] * *r.spreads[1] * *r.spreads[2];
        c.require_eq(lhs, "-3/169", "triple spread lhs");
        c.require_eq(rhs, "-3/169", "triple spread rhs");
    } else {
        c.problems.push_back("triple spread: some spread undefined");
    }
    c.require(example_minkowski_affine().deviations.empty(), "canned example deviates");
}

void criterion_projective(Criterion& c) {
    const FieldSpec spec = FieldSpec::rational();
    const BilinearForm B = BilinearForm::minkowski(spec);
    const auto reps =
        points_from_text(R"([["2","-1","3"],["-2","5","0"],["3","0","4"]])", spec);
    const Tripod t{ProjectivePoint(reps[0]), ProjectivePoint(reps[1]),
                   ProjectivePoint(reps[2])};
    const TripodReport r = analyze_tripod(B, t);

    const char* pinned_q[3] = {"239/203", "-2/7", "197/116"};
    const char* pinned_s[3] = {"169/394", "-4901/47083", "1183/1912"};
    const char* pinned_dual[3][3] = {{"1", "2/5", "3/4"},
                                     {"1", "-1/4", "3/4"},
                                     {"1", "2/5", "8/15"}};
    for (std::size_t i = 0; i < 3; ++i) {
        c.require_eq(r.quadrances[i], pinned_q[i], "q_" + std::to_string(i + 1));
        c.require_eq(r.spreads[i], pinned_s[i], "S_" + std::to_string(i + 1));
        for (int k = 0; k < 3; ++k)
            c.require_eq(r.dual[i][k], pinned_dual[i][k],
                         "dual " + std::to_string(i + 1) + "[" + std::to_string(k) + "]");
    }
    c.require_eq(r.spread_quadrance_ratio, "34307/94166", "common ratio");
    c.require_eq(r.quadrea, "-169/812", "a");
    c.require_eq(r.quadreal, "-28561/376664", "l");
    if (r.quadrea && r.quadrances[0] && r.quadrances[1] && r.quadrances[2]) {
        const FieldElement lhs = square(*r.quadrea - *r.quadrances[0] - *r.quadrances[1] -
                                        *r.quadrances[2] + rat("2"));
        const FieldElement rhs = rat("4") * (rat("1") - *r.quadrances[0]) *
                                 (rat("1") - *r.quadrances[1]) * (rat("1") - *r.quadrances[2]);
        c.require_eq(lhs, "26244/41209", "projective cross law lhs");
        c.require_eq(rhs, "26244/41209", "projective cross law rhs");
    } else {
        c.problems.push_back("projective cross law: some value undefined");
    }

    // Duality exchange: the dual tripod swaps quadrances with spreads and the
    // quadrea with the quadreal.
    const TripodReport rd = analyze_tripod(B, dual_tripod(B, t));
    for (std::size_t i = 0; i < 3; ++i) {
        c.require_eq(rd.quadrances[i], pinned_s[i], "dual tripod q_" + std::to_string(i + 1));
        c.require_eq(rd.spreads[i], pinned_q[i], "dual tripod S_" + std::to_string(i + 1));
    }
    c.require_eq(rd.quadrea, "-28561/376664", "dual tripod a");
    c.require_eq(rd.quadreal, "-169/812", "dual tripod l");
    c.require(example_minkowski_projective().deviations.empty(), "canned example deviates");
}

void criterion_random_sweep(Criterion& c) {
    const std::pair<const char*, const char*> configs[] = {
        {"rational", "euclidean"},  {"rational", "minkowski"},  {"rational", kGenericForm},
        {"prime:101", "euclidean"}, {"prime:101", "minkowski"}, {"prime:101", kGenericForm},
    };
    for (const auto& [field_text, form_text] : configs) {
        const FieldSpec spec = FieldSpec::parse(field_text);
        const BilinearForm B = form_from_text(form_text, spec);
        const VerifySummary s = verify_random(B, 1, 1000);
        const std::string tag = std::string(field_text) + "/" +
                                (form_text == kGenericForm ? "generic" : form_text);
        c.require(s.failures() == 0,
                  tag + ": " + std::to_string(s.failures()) + " failures");
        for (const std::string& name : required_identities()) {
            const IdentityTally* t = find_tally(s, name);
            if (!t) {
                c.problems.push_back(tag + ": identity missing from registry: " + name);
                continue;
            }
            c.require(t->tested == 1000, tag + ": " + name + " tested != 1000");
            c.require(t->failed == 0, tag + ": " + name + " failed");
            c.require(t->passed >= 1, tag + ": " + name + " never passed (vacuous)");
        }
    }
}

void criterion_exhaustive_sweep(Criterion& c) {
    const char* fields[] = {"prime:3", "prime:5"};
    const char* forms[] = {"euclidean", "minkowski"};
    for (const char* field_text : fields) {
        for (const char* form_text : forms) {
            const FieldSpec spec = FieldSpec::parse(field_text);
            const BilinearForm B = form_from_text(form_text, spec);
            const VerifySummary s = verify_exhaustive(B);
            const std::string tag = std::string(field_text) + "/" + form_text;
            c.require(s.failures() == 0,
                      tag + ": " + std::to_string(s.failures()) + " failures");
            const bool is_p3 = spec.modulus() == 3;
            const std::uint64_t triples = is_p3 ? 19683 : 1953125;      // p^9
            const std::uint64_t quadruples = is_p3 ? 531441 : 0;        // p^12 over F_3 only
            const IdentityTally* jacobi = find_tally(s, "jacobi_identity");
            const IdentityTally* binet = find_tally(s, "binet_cauchy");
            c.require(jacobi && jacobi->tested == triples,
                      tag + ": jacobi_identity must enumerate all " +
                          std::to_string(triples) + " triples");
            c.require(binet && binet->tested == quadruples,
                      tag + ": binet_cauchy enumeration mismatch");
        }
    }
}

void criterion_induced_form(Criterion& c) {
    Lcg64 rng(2);
    int produced = 0;
    while (produced < 100) {
        const Vec3 r0 = draw_rational_vec(rng);
        const Vec3 r1 = draw_rational_vec(rng);
        const Vec3 r2 = draw_rational_vec(rng);
        const Mat3 L(r0, r1, r2);
        if (mat_det(L).is_zero()) continue;
        ++produced;
        const BilinearForm B = induced_form(L);
        for (int k = 0; k < 20; ++k) {
            const Vec3 v = draw_rational_vec(rng);
            const Vec3 w = draw_rational_vec(rng);
            if (dot(v * L, w * L) != b_dot(B, v, w)) {
                c.problems.push_back("transport failed at L #" + std::to_string(produced) +
                                     ", pair #" + std::to_string(k + 1));
                return;
            }
        }
    }
}

void criterion_pythagoras_solutions(Criterion& c) {
    Lcg64 rng(3);
    const FieldElement one = rat("1"), four = rat("4");
    int produced = 0;
    while (produced < 50) {
        FieldElement q2 = draw_rational(rng) / rat(std::to_string(1 + rng.next() % 20));
        FieldElement q3 = draw_rational(rng) / rat(std::to_string(1 + rng.next() % 20));
        if (q2.is_zero() || q3.is_zero()) continue;
        ++produced;
        const FieldElement q1 = q2 + q3 - q2 * q3;
        const auto solutions = pythagoras_spread_solutions(q2, q3, q1);
        c.require(!solutions.empty() && solutions.front() == one,
                  "case " + std::to_string(produced) + ": first solution must be 1");
        for (const FieldElement& S1 : solutions) {
            const FieldElement lhs = square(S1 * q2 * q3 + q1 - q2 - q3);
            const FieldElement rhs = four * q2 * q3 * (one - q1) * (one - S1);
            c.require(lhs == rhs, "case " + std::to_string(produced) + ": S1 = " + S1.str() +
                                      " does not satisfy the asymmetric cross law");
        }
    }
}

struct Entry {
    const char* name;
    double bound_seconds;
    std::function<void(Criterion&)> run;
};

}  // namespace

int main() {
    const std::vector<Entry> entries = {
        {"methane replay", 1.0, criterion_methane},
        {"affine minkowski replay", 1.0, criterion_affine},
        {"projective minkowski replay", 1.0, criterion_projective},
        {"identity sweep, random", 60.0, criterion_random_sweep},
        {"identity sweep, exhaustive", 300.0, criterion_exhaustive_sweep},
        {"induced-form transport", 5.0, criterion_induced_form},
        {"pythagoras second solution", 1.0, criterion_pythagoras_solutions},
    };

    int passed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.problems.push_back(std::string("unexpected exception: ") + ex.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= e.bound_seconds)
            c.problems.push_back("runtime bound exceeded");
        const bool ok = c.problems.empty();
        if (ok) ++passed;
        std::printf("criterion %zu (%s): %s (%.3f s, bound %g s)\n", i + 1, e.name,
                    ok ? "PASS" : "FAIL", elapsed, e.bound_seconds);
        for (const std::string& p : c.problems) std::fprintf(stderr, "  - %s\n", p.c_str());
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, entries.size());
    return passed == static_cast<int>(entries.size()) ? 0 : 1;
}
