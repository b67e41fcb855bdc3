#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rt3/examples.hpp"

namespace {

// Exit contract: 0 success, 1 law-check failure or pinned-value deviation,
// 2 usage/config error, 3 degenerate-input error.
int classify(const rt3::Error& e) {
    if (dynamic_cast<const rt3::InvalidTriangle*>(&e) ||
        dynamic_cast<const rt3::ZeroVector*>(&e) ||
        dynamic_cast<const rt3::RepeatedPoint*>(&e) ||
        dynamic_cast<const rt3::DegenerateTripod*>(&e) ||
        dynamic_cast<const rt3::DegenerateBasis*>(&e) ||
        dynamic_cast<const rt3::IdenticalPoints*>(&e) ||
        dynamic_cast<const rt3::NullVector*>(&e) ||
        dynamic_cast<const rt3::NullPoint*>(&e) ||
        dynamic_cast<const rt3::SingularTransform*>(&e) ||
        dynamic_cast<const rt3::PreconditionViolated*>(&e))
        return 3;
    return 2;
}

bool any_check_failed(const std::vector<std::pair<std::string, rt3::Check>>& checks) {
    for (const auto& [name, c] : checks)
        if (c == rt3::Check::fail) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vector products and rational trigonometry in three dimensions"};
    app.require_subcommand(1);

    std::string field_text = "rational";
    std::string form_text = "euclidean";
    const char* field_help = "coefficient field: \"rational\" or \"prime:<p>\"";
    const char* form_help = "bilinear form: \"euclidean\", \"minkowski\", or a 3x3 JSON matrix";

    auto* tri = app.add_subcommand("triangle", "analyze a triangle of vectors");
    tri->add_option("--field", field_text, field_help)->capture_default_str();
    tri->add_option("--form", form_text, form_help)->capture_default_str();
    std::string v1_text, v2_text, v3_text;
    tri->add_option("--v1", v1_text, "first side, a JSON array of 3 scalars")->required();
    tri->add_option("--v2", v2_text, "second side")->required();
    auto* v3_opt = tri->add_option("--v3", v3_text, "third side (default: -v1-v2)");

    auto* pod = app.add_subcommand("tripod", "analyze a tripod of projective points");
    pod->add_option("--field", field_text, field_help)->capture_default_str();
    pod->add_option("--form", form_text, form_help)->capture_default_str();
    std::string points_text;
    pod->add_option("--points", points_text, "JSON array of 3 points (3 scalars each)")
        ->required();

    auto* ver = app.add_subcommand("verify", "sweep every identity in the registry");
    ver->add_option("--field", field_text, field_help)->capture_default_str();
    ver->add_option("--form", form_text, form_help)->capture_default_str();
    std::uint64_t seed = 1, cases = 1000, exhaustive_p = 0;
    ver->add_option("--seed", seed, "generator seed")->capture_default_str();
    ver->add_option("--cases", cases, "random tuples per identity")->capture_default_str();
    auto* exh_opt = ver->add_option("--exhaustive", exhaustive_p,
                                    "enumerate every tuple over F_p for this prime p "
                                    "instead of sampling");

    auto* ex = app.add_subcommand("example", "replay a pinned worked configuration");
    std::string example_name;
    std::string q_text = "1";
    ex->add_option("name", example_name, "methane | minkowski-affine | minkowski-projective")
        ->required();
    ex->add_option("--Q", q_text, "common face quadrance (methane only)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*tri) {
            const rt3::FieldSpec spec = rt3::FieldSpec::parse(field_text);
            const rt3::BilinearForm B = rt3::form_from_text(form_text, spec);
            const rt3::Vec3 v1 = rt3::vec_from_text(v1_text, spec);
            const rt3::Vec3 v2 = rt3::vec_from_text(v2_text, spec);
            const rt3::Vec3 v3 =
                v3_opt->count() > 0 ? rt3::vec_from_text(v3_text, spec) : -(v1 + v2);
            const rt3::VectorTriangle t(v1, v2, v3);
            const rt3::TriangleReport r = rt3::analyze_triangle(B, t);
            std::cout << rt3::dump_json(rt3::triangle_report_json(B, t, r));
            return any_check_failed(r.checks) ? 1 : 0;
        }
        if (*pod) {
            const rt3::FieldSpec spec = rt3::FieldSpec::parse(field_text);
            const rt3::BilinearForm B = rt3::form_from_text(form_text, spec);
            const auto reps = rt3::points_from_text(points_text, spec);
            const rt3::Tripod t{rt3::ProjectivePoint(reps[0]), rt3::ProjectivePoint(reps[1]),
                                rt3::ProjectivePoint(reps[2])};
            const rt3::TripodReport r = rt3::analyze_tripod(B, t);
            std::cout << rt3::dump_json(rt3::tripod_report_json(B, t, r));
            return any_check_failed(r.checks) ? 1 : 0;
        }
        if (*ver) {
            if (cases == 0) throw rt3::InvalidConfig("cases must be at least 1");
            if (exh_opt->count() > 0) {
                const rt3::FieldSpec spec = rt3::FieldSpec::prime(exhaustive_p);
                const rt3::BilinearForm B = rt3::form_from_text(form_text, spec);
                const rt3::VerifySummary s = rt3::verify_exhaustive(B);
                std::cout << rt3::dump_json(rt3::verify_summary_json(B, s));
                return s.failures() == 0 ? 0 : 1;
            }
            const rt3::FieldSpec spec = rt3::FieldSpec::parse(field_text);
            const rt3::BilinearForm B = rt3::form_from_text(form_text, spec);
            const rt3::VerifySummary s = rt3::verify_random(B, seed, cases);
            std::cout << rt3::dump_json(rt3::verify_summary_json(B, s));
            return s.failures() == 0 ? 0 : 1;
        }
        const rt3::FieldElement Q =
            rt3::FieldElement::parse(q_text, rt3::FieldSpec::rational());
        const rt3::ExampleResult res = rt3::run_example(example_name, Q);
        std::cout << rt3::dump_json(res.report);
        if (!res.deviations.empty()) {
            for (const std::string& d : res.deviations)
                std::cerr << "deviation: " << d << "\n";
            return 1;
        }
        return 0;
    } catch (const rt3::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
}
