#include "cw/arith.hpp"

#include "doctest.h"

using namespace cw;

TEST_CASE("rational parsing round trip") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(Rational(-2, 3)) == "-2/3");
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("affine and quadratic evaluation") {
    AffinePoly amp = parse_affine("10c - b - 1");
    CHECK(amp == AffinePoly(-1, -1, 10));
    CHECK(amp.eval(Rational(1, 2), Rational(1, 5)) == Rational(1, 2));

    QuadPoly vol = parse_quad("-b^2 + 20bc - 2b + 224c^2 - 52c + 3");
    CHECK(vol.eval(1, 1) == 192);
    CHECK(vol == QuadPoly(3, -2, -52, -1, 20, 224));
}

TEST_CASE("product of affine polynomials") {
    AffinePoly x = parse_affine("3c - 2");
    QuadPoly sq = x * x;
    CHECK(sq == parse_quad("9c^2 - 12c + 4"));
    // expand at a few points by hand
    for (int i = 0; i < 4; ++i) {
        Rational b(i, 7), c(i + 2, 5);
        CHECK(sq.eval(b, c) == (3 * c - 2) * (3 * c - 2));
    }
}

TEST_CASE("scaled squares") {
    Rational k;
    AffinePoly lin;
    REQUIRE(as_scaled_square(parse_quad("-9c^2 + 12c - 4"), k, lin));
    CHECK(k == -1);
    CHECK((lin == parse_affine("3c - 2") || lin == parse_affine("2 - 3c")));
    CHECK_FALSE(as_scaled_square(parse_quad("c^2 + b"), k, lin));
    CHECK_FALSE(as_scaled_square(QuadPoly(), k, lin));
}
