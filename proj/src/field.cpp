#include "rt3/field.hpp"

#include <cctype>
#include <limits>

namespace rt3 {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t(1) << 32) - 1;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on (a, p) with p prime and a != 0 mod p.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

[[noreturn]] void throw_mismatch(const FieldSpec& a, const FieldSpec& b) {
    throw FieldMismatch("operands belong to different fields: " + a.str() + " vs " + b.str());
}

void check_same(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw_mismatch(a, b);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p == 2) throw InvalidField("characteristic 2 is not supported");
    if (p > kMaxModulus) throw InvalidField("modulus does not fit in 32 bits: " + std::to_string(p));
    if (!is_prime_u64(p)) throw InvalidField("modulus is not prime: " + std::to_string(p));
    return FieldSpec(FieldKind::Prime, p);
}

std::string FieldSpec::str() const {
    if (kind_ == FieldKind::Rational) return "rational";
    return "prime:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational") return rational();
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        if (digits.empty()) throw InvalidField("missing modulus in field description");
        std::uint64_t p = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidField("bad modulus in field description: " + std::string(text));
            if (p > kMaxModulus) throw InvalidField("modulus does not fit in 32 bits");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return prime(p);
    }
    throw InvalidField("unknown field description: " + std::string(text) +
                       " (expected \"rational\" or \"prime:<p>\")");
}

FieldElement::FieldElement(const FieldSpec& spec, mpq_class q, raw_rational_tag)
    : spec_(spec), q_(std::move(q)) {}

FieldElement::FieldElement(const FieldSpec& spec, std::uint64_t r, raw_residue_tag)
    : spec_(spec), r_(r) {}

FieldElement::FieldElement(const FieldSpec& spec, long long value) : spec_(spec) {
    if (spec_.is_rational()) {
        q_.emplace(static_cast<long>(value));
    } else {
        const std::int64_t p = static_cast<std::int64_t>(spec_.modulus());
        std::int64_t m = value % p;
        if (m < 0) m += p;
        r_ = static_cast<std::uint64_t>(m);
    }
}

FieldElement FieldElement::parse(std::string_view text, const FieldSpec& spec) {
    const std::string shown(text.substr(0, 64));
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view num = text.substr(num_begin, i - num_begin);
    if (num.empty()) throw ParseError("expected digits in scalar: \"" + shown + "\"");

    std::string_view den;
    if (i < text.size() && text[i] == '/') {
        ++i;
        const std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        den = text.substr(den_begin, i - den_begin);
        if (den.empty()) throw ParseError("expected digits after \"/\": \"" + shown + "\"");
    }
    if (i != text.size()) throw ParseError("trailing characters in scalar: \"" + shown + "\"");

    if (spec.is_rational()) {
        mpz_class n(std::string(num), 10);
        if (negative) n = -n;
        if (den.empty()) return FieldElement(spec, mpq_class(n), raw_rational_tag{});
        mpz_class d(std::string(den), 10);
        if (d == 0) throw DenominatorZero("zero denominator in scalar: \"" + shown + "\"");
        mpq_class q(n, d);
        q.canonicalize();
        return FieldElement(spec, std::move(q), raw_rational_tag{});
    }

    if (!den.empty())
        throw ParseError("fractional notation is not valid over " + spec.str() + ": \"" + shown + "\"");
    const std::uint64_t p = spec.modulus();
    std::uint64_t r = 0;
    for (char c : num) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
    if (negative && r != 0) r = p - r;
    return FieldElement(spec, r, raw_residue_tag{});
}

bool FieldElement::is_zero() const {
    if (spec_.is_rational()) return sgn(*q_) == 0;
    return r_ == 0;
}

bool FieldElement::is_one() const {
    if (spec_.is_rational()) return *q_ == 1;
    return r_ == 1;
}

std::string FieldElement::str() const {
    if (spec_.is_rational()) return q_->get_str();
    return std::to_string(r_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a.spec_, b.spec_);
    if (a.spec_.is_rational())
        return FieldElement(a.spec_, mpq_class(*a.q_ + *b.q_), FieldElement::raw_rational_tag{});
    const std::uint64_t p = a.spec_.modulus();
    std::uint64_t s = a.r_ + b.r_;
    if (s >= p) s -= p;
    return FieldElement(a.spec_, s, FieldElement::raw_residue_tag{});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a.spec_, b.spec_);
    if (a.spec_.is_rational())
        return FieldElement(a.spec_, mpq_class(*a.q_ - *b.q_), FieldElement::raw_rational_tag{});
    const std::uint64_t p = a.spec_.modulus();
    std::uint64_t s = a.r_ + p - b.r_;
    if (s >= p) s -= p;
    return FieldElement(a.spec_, s, FieldElement::raw_residue_tag{});
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a.spec_, b.spec_);
    if (a.spec_.is_rational())
        return FieldElement(a.spec_, mpq_class(*a.q_ * *b.q_), FieldElement::raw_rational_tag{});
    return FieldElement(a.spec_, (a.r_ * b.r_) % a.spec_.modulus(),
                        FieldElement::raw_residue_tag{});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a.spec_, b.spec_);
    if (b.is_zero()) throw DivisionByZero("division by zero");
    if (a.spec_.is_rational())
        return FieldElement(a.spec_, mpq_class(*a.q_ / *b.q_), FieldElement::raw_rational_tag{});
    const std::uint64_t p = a.spec_.modulus();
    return FieldElement(a.spec_, (a.r_ * mod_inverse(b.r_, p)) % p,
                        FieldElement::raw_residue_tag{});
}

FieldElement FieldElement::operator-() const {
    if (spec_.is_rational()) return FieldElement(spec_, mpq_class(-*q_), raw_rational_tag{});
    const std::uint64_t p = spec_.modulus();
    return FieldElement(spec_, r_ == 0 ? 0 : p - r_, raw_residue_tag{});
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero");
    if (a.spec_.is_rational())
        return FieldElement(a.spec_, mpq_class(1 / *a.q_), FieldElement::raw_rational_tag{});
    return FieldElement(a.spec_, mod_inverse(a.r_, a.spec_.modulus()),
                        FieldElement::raw_residue_tag{});
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    check_same(a.spec_, b.spec_);
    if (a.spec_.is_rational()) return *a.q_ == *b.q_;
    return a.r_ == b.r_;
}

FieldElement square(const FieldElement& a) { return a * a; }

}  // namespace rt3
