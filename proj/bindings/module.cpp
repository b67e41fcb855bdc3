#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rt3/examples.hpp"

namespace py = pybind11;
using namespace rt3;

namespace {

// Reports cross the boundary as JSON text; the caller turns them into dicts
// with json.loads, keeping one schema for the CLI and the module.
std::string triangle_json(const BilinearForm& B, const VectorTriangle& t) {
    return dump_json(triangle_report_json(B, t, analyze_triangle(B, t)));
}

std::string tripod_json(const BilinearForm& B, const Tripod& t) {
    return dump_json(tripod_report_json(B, t, analyze_tripod(B, t)));
}

std::string verify_random_json(const BilinearForm& B, std::uint64_t seed,
                               std::uint64_t cases) {
    return dump_json(verify_summary_json(B, verify_random(B, seed, cases)));
}

std::string verify_exhaustive_json(const BilinearForm& B) {
    return dump_json(verify_summary_json(B, verify_exhaustive(B)));
}

std::string example_json(const std::string& name, const FieldElement& Q) {
    const ExampleResult res = run_example(name, Q);
    if (!res.deviations.empty()) {
        std::string what = "example deviates from its pinned values:";
        for (const std::string& d : res.deviations) what += "\n  " + d;
        throw Error(what);
    }
    return dump_json(res.report);
}

}  // namespace

PYBIND11_MODULE(rt3, m) {
    m.doc() = "exact vector products and rational trigonometry in three dimensions";

    py::register_exception<Error>(m, "Error");

    py::class_<FieldSpec>(m, "FieldSpec")
        .def_static("rational", &FieldSpec::rational)
        .def_static("prime", &FieldSpec::prime, py::arg("p"))
        .def_static("parse", &FieldSpec::parse, py::arg("text"))
        .def("is_rational", &FieldSpec::is_rational)
        .def("modulus", &FieldSpec::modulus)
        .def("__str__", &FieldSpec::str)
        .def("__repr__", [](const FieldSpec& s) { return "FieldSpec(" + s.str() + ")"; })
        .def(py::self == py::self)
        .def(py::self != py::self);

    py::class_<FieldElement>(m, "FieldElement")
        .def(py::init<const FieldSpec&, long long>(), py::arg("spec"), py::arg("value"))
        .def_static("parse", &FieldElement::parse, py::arg("text"), py::arg("spec"))
        .def("spec", &FieldElement::spec)
        .def("is_zero", &FieldElement::is_zero)
        .def("is_one", &FieldElement::is_one)
        .def("__str__", &FieldElement::str)
        .def("__repr__", [](const FieldElement& a) { return "FieldElement(" + a.str() + ")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self);
    m.def("inv", static_cast<FieldElement (*)(const FieldElement&)>(&inv), py::arg("a"));
    m.def("square", &square, py::arg("a"));

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<FieldElement, FieldElement, FieldElement>(), py::arg("x"), py::arg("y"),
             py::arg("z"))
        .def_static("zero", &Vec3::zero, py::arg("spec"))
        .def_static("unit", &Vec3::unit, py::arg("spec"), py::arg("axis"))
        .def("spec", &Vec3::spec)
        .def("is_zero", &Vec3::is_zero)
        .def("__getitem__",
             [](const Vec3& v, int i) {
                 if (i < 0 || i > 2) throw py::index_error();
                 return v[i];
             })
        .def("__str__", [](const Vec3& v) { return vec_json(v).dump(); })
        .def("__repr__", [](const Vec3& v) { return "Vec3(" + vec_json(v).dump() + ")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__rmul__", [](const Vec3& v, const FieldElement& t) { return t * v; })
        .def("__mul__", [](const Vec3& v, const Mat3& m_) { return v * m_; })
        .def(py::self == py::self)
        .def(py::self != py::self);

    py::class_<Mat3>(m, "Mat3")
        .def(py::init<Vec3, Vec3, Vec3>(), py::arg("r0"), py::arg("r1"), py::arg("r2"))
        .def_static("identity", &Mat3::identity, py::arg("spec"))
        .def_static("diagonal", &Mat3::diagonal, py::arg("a"), py::arg("b"), py::arg("c"))
        .def("row", &Mat3::row, py::arg("i"))
        .def("__str__", [](const Mat3& m_) { return mat_json(m_).dump(); })
        .def("__repr__", [](const Mat3& m_) { return "Mat3(" + mat_json(m_).dump() + ")"; })
        .def("__mul__", [](const Mat3& a, const Mat3& b) { return a * b; })
        .def("__rmul__", [](const Mat3& a, const FieldElement& t) { return t * a; })
        .def(py::self == py::self);
    m.def("transpose", &transpose, py::arg("m"));
    m.def("mat_det", &mat_det, py::arg("m"));
    m.def("mat_adjugate", &mat_adjugate, py::arg("m"));

    py::class_<BilinearForm>(m, "BilinearForm")
        .def(py::init<const Mat3&>(), py::arg("matrix"))
        .def_static("euclidean", &BilinearForm::euclidean, py::arg("spec"))
        .def_static("minkowski", &BilinearForm::minkowski, py::arg("spec"))
        .def("matrix", &BilinearForm::matrix)
        .def("det", &BilinearForm::det)
        .def("spec", &BilinearForm::spec)
        .def("__repr__",
             [](const BilinearForm& B) { return "BilinearForm(" + mat_json(B.matrix()).dump() + ")"; })
        .def(py::self == py::self);

    m.def("dot", &dot, py::arg("a"), py::arg("b"));
    m.def("euclid_cross", &euclid_cross, py::arg("a"), py::arg("b"));
    m.def("b_dot", &b_dot, py::arg("B"), py::arg("v"), py::arg("w"));
    m.def("b_quadrance", &b_quadrance, py::arg("B"), py::arg("v"));
    m.def("is_b_null", &is_b_null, py::arg("B"), py::arg("v"));
    m.def("is_b_perp", &is_b_perp, py::arg("B"), py::arg("v"), py::arg("w"));
    m.def("b_cross", &b_cross, py::arg("B"), py::arg("v"), py::arg("w"));
    m.def("scalar_triple", &scalar_triple, py::arg("B"), py::arg("v1"), py::arg("v2"),
          py::arg("v3"));
    m.def("vector_triple", &vector_triple, py::arg("B"), py::arg("v1"), py::arg("v2"),
          py::arg("v3"));
    m.def("scalar_quadruple", &scalar_quadruple, py::arg("B"), py::arg("v1"), py::arg("v2"),
          py::arg("v3"), py::arg("v4"));
    m.def("vector_quadruple", &vector_quadruple, py::arg("B"), py::arg("v1"), py::arg("v2"),
          py::arg("v3"), py::arg("v4"));
    m.def("reciprocal_basis", &reciprocal_basis, py::arg("B"), py::arg("v1"), py::arg("v2"),
          py::arg("v3"));
    m.def("induced_form", &induced_form, py::arg("L"));
    m.def("archimedes", &archimedes, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("spread", &spread, py::arg("B"), py::arg("v"), py::arg("w"));

    py::class_<VectorTriangle>(m, "VectorTriangle")
        .def(py::init<Vec3, Vec3, Vec3>(), py::arg("v1"), py::arg("v2"), py::arg("v3"))
        .def("side", &VectorTriangle::side, py::arg("i"));

    py::class_<ProjectivePoint>(m, "ProjectivePoint")
        .def(py::init<const Vec3&>(), py::arg("v"))
        .def("rep", &ProjectivePoint::rep)
        .def("__repr__",
             [](const ProjectivePoint& p) {
                 return "ProjectivePoint(" + vec_json(p.rep()).dump() + ")";
             })
        .def(py::self == py::self)
        .def(py::self != py::self);

    py::class_<Tripod>(m, "Tripod")
        .def(py::init<ProjectivePoint, ProjectivePoint, ProjectivePoint>(), py::arg("p1"),
             py::arg("p2"), py::arg("p3"))
        .def("point", &Tripod::point, py::arg("i"))
        .def(py::self == py::self);
    m.def("is_degenerate", &is_degenerate, py::arg("t"));
    m.def("dual_tripod", &dual_tripod, py::arg("B"), py::arg("t"));
    m.def("proj_quadrance", &proj_quadrance, py::arg("B"), py::arg("p1"), py::arg("p2"));
    m.def("pythagoras_spread_solutions", &pythagoras_spread_solutions, py::arg("q2"),
          py::arg("q3"), py::arg("q1"));

    m.def("analyze_triangle_json", &triangle_json, py::arg("B"), py::arg("t"),
          "Full triangle report as a JSON string.");
    m.def("analyze_tripod_json", &tripod_json, py::arg("B"), py::arg("t"),
          "Full tripod report as a JSON string.");
    m.def("verify_random_json", &verify_random_json, py::arg("B"), py::arg("seed"),
          py::arg("cases"), "Randomized identity sweep summary as a JSON string.");
    m.def("verify_exhaustive_json", &verify_exhaustive_json, py::arg("B"),
          "Exhaustive identity sweep summary as a JSON string.");
    m.def("example_json", &example_json, py::arg("name"), py::arg("Q"),
          "Pinned worked configuration as a JSON string.");
}
