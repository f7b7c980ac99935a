#include <doctest.h>

#include <random>
#include <sstream>

#include "heronq/errors.hpp"
#include "heronq/rational.hpp"

using namespace heronq;

TEST_CASE("canonical form") {
    CHECK(Rational(3, 4) == Rational(-6, -8));
    CHECK(Rational(6, 8).num() == 3);
    CHECK(Rational(6, 8).den() == 4);
    CHECK(Rational(2, -4).num() == -1);
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(0, 7) == Rational());
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), InvalidInput);
}

TEST_CASE("arithmetic and comparisons") {
    Rational a(3, 4), b(-5, 6);
    CHECK(a + b == Rational(-1, 12));
    CHECK(a - b == Rational(19, 12));
    CHECK(a * b == Rational(-5, 8));
    CHECK(a / b == Rational(-9, 10));
    CHECK(-b == Rational(5, 6));
    CHECK_THROWS_AS(a / Rational(0), InvalidInput);
    CHECK(b < a);
    CHECK(a <= a);
    CHECK(Rational(1, 3) > Rational(33, 100));
    CHECK(2 * a == Rational(3, 2));
    CHECK(1 - a == Rational(1, 4));

    Rational c = a;
    c += b;
    c *= Rational(12);
    CHECK(c == Rational(-1));

    // expression-template constructor: -z and a*b are mpz expressions
    Integer z(7);
    CHECK(Rational(-z) == Rational(-7));
    CHECK(Rational(z * z) == Rational(49));
}

TEST_CASE("predicates") {
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-1, 9).is_negative());
    CHECK(Rational(1, 9).is_positive());
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(-3, 7).inverse() == Rational(-7, 3));
    CHECK_THROWS_AS(Rational(0).inverse(), InvalidInput);
    CHECK(Rational(-5, 6).squared() == Rational(25, 36));
}

TEST_CASE("squares and roots") {
    CHECK(Rational(49, 9).is_square());
    CHECK(*Rational(49, 9).sqrt() == Rational(7, 3));
    CHECK(Rational(0).is_square());
    CHECK(*Rational(0).sqrt() == Rational(0));
    CHECK(!Rational(-4).is_square());
    CHECK(!Rational(8, 9).is_square());
    CHECK(!Rational(8, 9).sqrt());
    // square with large entries: (10^30 + 1)^2 / 7^2
    Integer big = Integer("1000000000000000000000000000001");
    CHECK(Rational(big * big, Integer(49)).is_square());
    CHECK(*Rational(big * big, Integer(49)).sqrt() == Rational(big, Integer(7)));
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), InvalidInput);
}

TEST_CASE("parse") {
    CHECK(*Rational::parse("22/7") == Rational(22, 7));
    CHECK(*Rational::parse(" -22/7 ") == Rational(-22, 7));
    CHECK(*Rational::parse("+3") == Rational(3));
    CHECK(*Rational::parse("4/-6") == Rational(-2, 3));
    CHECK(!Rational::parse("3/0"));
    CHECK(!Rational::parse(""));
    CHECK(!Rational::parse("1/2/3"));
    CHECK(!Rational::parse("a"));
    CHECK(!Rational::parse("1.5"));
    CHECK(Rational::parse_or_throw("-9/12") == Rational(-3, 4));
    CHECK_THROWS_AS(Rational::parse_or_throw("nope"), InvalidInput);
}

TEST_CASE("str round-trip") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-8).str() == "-8");
    CHECK(Rational(0).str() == "0");
    std::ostringstream os;
    os << Rational(-5, 9);
    CHECK(os.str() == "-5/9");

    std::mt19937 rng(20260816);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational r(Integer(num(rng)), Integer(den(rng)));
        CHECK(*Rational::parse(r.str()) == r);
    }
}
