#pragma once

#include <stdexcept>
#include <string>

namespace rt3 {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic on elements of two different fields.
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

// Division by, or inversion of, zero.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Scalar text that does not match the accepted grammar.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// "n/0" is rejected at parse time.
struct DenominatorZero : ParseError {
    explicit DenominatorZero(const std::string& what) : ParseError(what) {}
};

// Bad field description: composite modulus, characteristic 2, modulus too large.
struct InvalidField : Error {
    explicit InvalidField(const std::string& what) : Error(what) {}
};

// Bilinear form matrix is not symmetric.
struct AsymmetricForm : Error {
    explicit AsymmetricForm(const std::string& what) : Error(what) {}
};

// Bilinear form matrix has determinant zero.
struct SingularForm : Error {
    explicit SingularForm(const std::string& what) : Error(what) {}
};

// reciprocal_basis needs linearly independent inputs.
struct DegenerateBasis : Error {
    explicit DegenerateBasis(const std::string& what) : Error(what) {}
};

// induced_form needs an invertible transformation.
struct SingularTransform : Error {
    explicit SingularTransform(const std::string& what) : Error(what) {}
};

// Vector triangle whose sides do not sum to zero.
struct InvalidTriangle : Error {
    explicit InvalidTriangle(const std::string& what) : Error(what) {}
};

// Spread against a null vector is undefined.
struct NullVector : Error {
    explicit NullVector(const std::string& what) : Error(what) {}
};

// The zero vector has no projective class.
struct ZeroVector : Error {
    explicit ZeroVector(const std::string& what) : Error(what) {}
};

// Normal of a point with itself is undefined.
struct IdenticalPoints : Error {
    explicit IdenticalPoints(const std::string& what) : Error(what) {}
};

// A tripod needs three pairwise distinct points.
struct RepeatedPoint : Error {
    explicit RepeatedPoint(const std::string& what) : Error(what) {}
};

// Tripod with linearly dependent representatives where independence is required.
struct DegenerateTripod : Error {
    explicit DegenerateTripod(const std::string& what) : Error(what) {}
};

// Projective quadrance against a null point is undefined.
struct NullPoint : Error {
    explicit NullPoint(const std::string& what) : Error(what) {}
};

// Operation input violates a stated precondition (e.g. Pythagoras solver).
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

// Bad sweep / command configuration (cases = 0, bad form text, ...).
struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& what) : Error(what) {}
};

// Request for a canned example that does not exist.
struct UnknownExample : Error {
    explicit UnknownExample(const std::string& what) : Error(what) {}
};

}  // namespace rt3
