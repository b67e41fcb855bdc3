#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "rt3/errors.hpp"

namespace rt3 {

enum class FieldKind { Rational, Prime };

// Description of the coefficient field: the rationals, or F_p for an odd
// prime p.  Characteristic 2 is rejected outright (the trigonometric laws
// divide by 2 and 4), as are composite moduli.  Moduli must fit in 32 bits so
// residue products stay inside uint64 arithmetic.
class FieldSpec {
  public:
    static FieldSpec rational() noexcept { return FieldSpec(FieldKind::Rational, 0); }
    static FieldSpec prime(std::uint64_t p);  // throws InvalidField

    FieldKind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == FieldKind::Rational; }
    std::uint64_t modulus() const noexcept { return p_; }  // 0 for the rationals

    // "rational" or "prime:<p>"; parse() accepts exactly those forms.
    std::string str() const;
    static FieldSpec parse(std::string_view text);

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) noexcept { return !(a == b); }

  private:
    FieldSpec(FieldKind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

// One field element, stored canonically: lowest terms with positive
// denominator over the rationals, a residue in [0, p) over F_p.  Equality is
// structural.  All binary operations insist both operands belong to the same
// field and throw FieldMismatch otherwise.
class FieldElement {
  public:
    FieldElement(const FieldSpec& spec, long long value);

    // Grammar: optional sign, digits, optional "/" followed by digits
    // (denominator must be nonzero) over the rationals; optionally signed
    // digits over F_p, reduced mod p, so text >= p is in range, not an error.
    static FieldElement parse(std::string_view text, const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    // Canonical decimal text; parse(str()) round-trips.
    std::string str() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend FieldElement inv(const FieldElement& a);

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
    FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    struct raw_rational_tag {};
    struct raw_residue_tag {};
    FieldElement(const FieldSpec& spec, mpq_class q, raw_rational_tag);
    FieldElement(const FieldSpec& spec, std::uint64_t r, raw_residue_tag);

    FieldSpec spec_;
    // Engaged exactly when spec_.is_rational(); residues never pay for a
    // bignum construction.
    std::optional<mpq_class> q_;
    std::uint64_t r_ = 0;
};

FieldElement inv(const FieldElement& a);
FieldElement square(const FieldElement& a);

}  // namespace rt3
