#include <doctest.h>

#include "rt3/field.hpp"

using namespace rt3;

namespace {

FieldElement rat(const std::string& text) {
    return FieldElement::parse(text, FieldSpec::rational());
}

FieldElement f7(long long n) { return FieldElement(FieldSpec::prime(7), n); }

}  // namespace

TEST_CASE("field descriptions") {
    CHECK(FieldSpec::rational().str() == "rational");
    CHECK(FieldSpec::prime(7).str() == "prime:7");
    CHECK(FieldSpec::parse("rational") == FieldSpec::rational());
    CHECK(FieldSpec::parse("prime:101") == FieldSpec::prime(101));
    CHECK(FieldSpec::parse("prime:4294967291") == FieldSpec::prime(4294967291ULL));

    CHECK_THROWS_AS(FieldSpec::prime(2), InvalidField);   // characteristic 2
    CHECK_THROWS_AS(FieldSpec::prime(9), InvalidField);   // composite
    CHECK_THROWS_AS(FieldSpec::prime(1), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(0), InvalidField);
    CHECK_THROWS_AS(FieldSpec::prime(4294967311ULL), InvalidField);  // > 32 bits
    CHECK_THROWS_AS(FieldSpec::parse("prime:"), InvalidField);
    CHECK_THROWS_AS(FieldSpec::parse("prime:abc"), InvalidField);
    CHECK_THROWS_AS(FieldSpec::parse("real"), InvalidField);
}

TEST_CASE("rational parsing and canonical text") {
    CHECK(rat("2/4") == rat("1/2"));
    CHECK(rat("2/4").str() == "1/2");
    CHECK(rat("-6/4").str() == "-3/2");
    CHECK(rat("-0").str() == "0");
    CHECK(rat("+7/21").str() == "1/3");
    CHECK(rat("123456789012345678901234567890").str() == "123456789012345678901234567890");

    CHECK_THROWS_AS(rat("1/0"), DenominatorZero);
    CHECK_THROWS_AS(rat(""), ParseError);
    CHECK_THROWS_AS(rat("1.5"), ParseError);
    CHECK_THROWS_AS(rat("1/"), ParseError);
    CHECK_THROWS_AS(rat("/2"), ParseError);
    CHECK_THROWS_AS(rat("1/2/3"), ParseError);
    CHECK_THROWS_AS(rat("a"), ParseError);
    CHECK_THROWS_AS(rat("1 "), ParseError);
}

TEST_CASE("prime parsing reduces mod p") {
    const FieldSpec F7 = FieldSpec::prime(7);
    CHECK(FieldElement::parse("10", F7) == f7(3));
    CHECK(FieldElement::parse("-1", F7) == f7(6));
    CHECK(FieldElement::parse("700000000000000000003", F7).str() == "3");
    CHECK_THROWS_AS(FieldElement::parse("1/2", F7), ParseError);
}

TEST_CASE("rational field axioms on a small sample") {
    const FieldElement a = rat("-3/4"), b = rat("5/6"), c = rat("7");
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == rat("0"));
    CHECK(a * inv(a) == rat("1"));
    CHECK(a / b == a * inv(b));
    CHECK((-a).str() == "3/4");
    CHECK(square(a).str() == "9/16");
    CHECK(rat("1/3") + rat("1/6") == rat("1/2"));
}

TEST_CASE("F_7 arithmetic against a brute-force inverse table") {
    for (long long x = 1; x < 7; ++x) {
        const FieldElement e = f7(x);
        long long want = 0;
        for (long long y = 1; y < 7; ++y)
            if (x * y % 7 == 1) want = y;
        CHECK(inv(e) == f7(want));
        CHECK(e * inv(e) == f7(1));
    }
    CHECK(f7(3) / f7(5) == f7(2));
    CHECK(f7(4) + f7(5) == f7(2));
    CHECK(f7(2) - f7(5) == f7(4));
    CHECK(-f7(3) == f7(4));
    CHECK(f7(6) * f7(6) == f7(1));
}

TEST_CASE("large-modulus products stay exact") {
    const FieldSpec F = FieldSpec::prime(4294967291ULL);
    const FieldElement a(F, 4294967290LL);  // -1
    CHECK(a * a == FieldElement(F, 1));
    CHECK((a * a).str() == "1");
    CHECK(inv(a) == a);
}

TEST_CASE("division and inversion of zero") {
    CHECK_THROWS_AS(rat("1") / rat("0"), DivisionByZero);
    CHECK_THROWS_AS(inv(rat("0")), DivisionByZero);
    CHECK_THROWS_AS(f7(1) / f7(0), DivisionByZero);
    CHECK_THROWS_AS(inv(f7(0)), DivisionByZero);
}

TEST_CASE("cross-field operations are rejected") {
    CHECK_THROWS_AS(rat("1") + f7(1), FieldMismatch);
    CHECK_THROWS_AS(f7(1) == FieldElement(FieldSpec::prime(11), 1), FieldMismatch);
}

TEST_CASE("text round-trips through parse") {
    for (const char* text : {"0", "1", "-1", "5/3", "-22/7", "20"})
        CHECK(FieldElement::parse(rat(text).str(), FieldSpec::rational()) == rat(text));
    const FieldSpec F7 = FieldSpec::prime(7);
    for (long long r = 0; r < 7; ++r)
        CHECK(FieldElement::parse(f7(r).str(), F7) == f7(r));
}
