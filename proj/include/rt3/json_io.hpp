#pragma once

#include <json.hpp>

#include "rt3/verify.hpp"

namespace rt3 {

using ordered_json = nlohmann::ordered_json;

// Scalars travel as strings in the field's text grammar, never as floating
// point; absent values as null.
ordered_json scalar_json(const FieldElement& a);
ordered_json opt_scalar_json(const std::optional<FieldElement>& a);
ordered_json vec_json(const Vec3& v);
ordered_json mat_json(const Mat3& m);

// Accepts a scalar string or a JSON integer.
FieldElement scalar_from_json(const nlohmann::json& j, const FieldSpec& spec);
Vec3 vec_from_json(const nlohmann::json& j, const FieldSpec& spec);
Mat3 mat_from_json(const nlohmann::json& j, const FieldSpec& spec);

// Parses JSON text (rethrowing syntax errors as ParseError) and converts.
Vec3 vec_from_text(std::string_view text, const FieldSpec& spec);
std::array<Vec3, 3> points_from_text(std::string_view text, const FieldSpec& spec);

// "euclidean", "minkowski", or a 3x3 JSON matrix literal.
BilinearForm form_from_text(std::string_view text, const FieldSpec& spec);

// Reports embed the field, the form, and the inputs, so every report
// re-parses under the input schema.
ordered_json triangle_report_json(const BilinearForm& B, const VectorTriangle& t,
                                  const TriangleReport& r);
ordered_json tripod_report_json(const BilinearForm& B, const Tripod& t, const TripodReport& r);
ordered_json verify_summary_json(const BilinearForm& B, const VerifySummary& s);

// Two-space indentation plus a trailing newline; with the fixed key order
// this makes equal reports byte-identical.
std::string dump_json(const ordered_json& j);

}  // namespace rt3
