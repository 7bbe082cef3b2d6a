#include "doctest.h"

#include <random>
#include <sstream>

#include "spaceform/rational.hpp"

using namespace spaceform;

TEST_CASE("construction canonicalizes and serializes with denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(Int("123456789123456789"), Int(3)).str() ==
          "41152263041152263/1");
    CHECK(Rational(7, 3).num() == 7);
    CHECK(Rational(7, 3).den() == 3);
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), ValidationError);
}

TEST_CASE("parse accepts num/den and bare integers, round-trips") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational::parse("-17") == Rational(-17));
    CHECK(Rational::parse("0") == Rational(0));

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> nd(-1000000, 1000000);
    std::uniform_int_distribution<long> dd(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Rational r(nd(rng), dd(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
    CHECK_THROWS_AS(Rational::parse(""), ValidationError);
    CHECK_THROWS_AS(Rational::parse("/"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("/2"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ValidationError);
    CHECK_THROWS_AS(Rational::parse(" 1/2"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/2 "), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("+3"), ValidationError);
}

TEST_CASE("arithmetic matches hand values") {
    CHECK(Rational(1, 6) + Rational(1, 10) == Rational(4, 15));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK(Rational(1, 3).sign() == 1);
    CHECK(Rational(-1, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(5, 2).is_integer());
}

TEST_CASE("ordering is the numeric order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(2, 6) >= Rational(1, 3));
    CHECK(Rational(1, 3) != Rational(2, 3));
}

TEST_CASE("floor, ceiling, phi, frac on exact rationals") {
    // Integers: floor == ceil, phi == 0, frac == 0.
    CHECK(floor_int(Rational(7)) == 7);
    CHECK(ceil_int(Rational(7)) == 7);
    CHECK(phi(Rational(7)) == 0);
    CHECK(frac(Rational(7)) == Rational(0));
    CHECK(phi(Rational(-3)) == 0);
    CHECK(phi(Rational(0)) == 0);

    // Positive non-integers.
    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(ceil_int(Rational(7, 2)) == 4);
    CHECK(phi(Rational(7, 2)) == 1);
    CHECK(frac(Rational(7, 2)) == Rational(1, 2));

    // Negative non-integers: floor rounds toward -infinity.
    CHECK(floor_int(Rational(-7, 2)) == -4);
    CHECK(ceil_int(Rational(-7, 2)) == -3);
    CHECK(phi(Rational(-7, 2)) == 1);
    CHECK(frac(Rational(-7, 2)) == Rational(1, 2));
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(mod1(Rational(13, 4)) == Rational(1, 4));
    CHECK(mod1(Rational(-13, 4)) == Rational(3, 4));
}

TEST_CASE("bracket identities hold on random rationals") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> nd(-10000, 10000);
    std::uniform_int_distribution<long> dd(1, 500);
    for (int i = 0; i < 500; ++i) {
        Rational a(nd(rng), dd(rng));
        Int f = floor_int(a);
        Int c = ceil_int(a);
        CHECK(Rational(f) <= a);
        CHECK(a < Rational(f) + Rational(1));
        CHECK(Rational(c) >= a);
        CHECK(a > Rational(c) - Rational(1));
        CHECK(c - f == phi(a));
        CHECK(frac(a) == a - Rational(f));
        CHECK(frac(a) >= Rational(0));
        CHECK(frac(a) < Rational(1));
        // phi is 0 exactly on integers.
        CHECK((phi(a) == 0) == a.is_integer());
    }
}

TEST_CASE("stream output matches str") {
    std::ostringstream os;
    os << Rational(-5, 8);
    CHECK(os.str() == "-5/8");
}
