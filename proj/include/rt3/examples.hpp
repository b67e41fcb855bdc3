#pragma once

#include "rt3/json_io.hpp"

namespace rt3 {

// A canned configuration recomputes everything from its inputs and compares
// against the pinned constants; any mismatch lands in `deviations`, so a
// regression in the kernel can never ship a silently wrong report.
struct ExampleResult {
    ordered_json report;
    std::vector<std::string> deviations;
};

// Regular-tetrahedron bond geometry (hydrogen positions (0,1,1), (1,0,1),
// (1,1,0) seen from the origin), plus the equilateral face laws at a caller
// supplied common quadrance Q != 0.
ExampleResult example_methane(const FieldElement& Q);

// Triangle with sides (-1,3,-2), (2,-5,4), (-1,2,-2) under diag(1,1,-1).
ExampleResult example_minkowski_affine();

// Tripod [(2,-1,3)], [(-2,5,0)], [(3,0,4)] under diag(1,1,-1).
ExampleResult example_minkowski_projective();

// Dispatch by name: "methane", "minkowski-affine", "minkowski-projective".
// Q only affects methane.  Throws UnknownExample.
ExampleResult run_example(const std::string& name, const FieldElement& Q);

}  // namespace rt3
