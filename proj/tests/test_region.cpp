#include "cw/region.hpp"

#include "doctest.h"

#include <algorithm>

using namespace cw;

namespace {

bool has_vertex(const std::vector<Point>& v, Rational b, Rational c) {
    return std::find(v.begin(), v.end(), Point{b, c}) != v.end();
}

}  // namespace

TEST_CASE("top chamber corners") {
    Region r({parse_constraint("c > 2/3")});
    auto v = r.vertices();
    CHECK(v.size() == 3);
    CHECK(has_vertex(v, Rational(2, 3), Rational(2, 3)));
    CHECK(has_vertex(v, 1, Rational(2, 3)));
    CHECK(has_vertex(v, 1, 1));
    CHECK(r.dimension() == 2);
}

TEST_CASE("emptiness and segments") {
    CHECK(Region({parse_constraint("c > 1/2"), parse_constraint("c <= 1/3")}).empty());
    Region diag({parse_constraint("b = c"), parse_constraint("c > 1/4"), parse_constraint("c <= 1/3")});
    CHECK_FALSE(diag.empty());
    CHECK(diag.dimension() == 1);
    auto w = diag.witness();
    REQUIRE(w);
    CHECK(diag.contains(*w));

    Region seg({parse_constraint("c = b/3"), parse_constraint("c > 1/6"), parse_constraint("c <= 1/4")});
    auto v = seg.vertices();
    CHECK(v.size() == 2);
    CHECK(has_vertex(v, Rational(1, 2), Rational(1, 6)));
    CHECK(has_vertex(v, Rational(3, 4), Rational(1, 4)));
}

TEST_CASE("strict boundaries classify exactly") {
    Region r({parse_constraint("c > 1/4")});
    CHECK_FALSE(r.contains({Rational(1, 2), Rational(1, 4)}));
    CHECK(r.contains({Rational(1, 2), Rational(1, 3)}));
    // the ambient line 10c - b - 1 = 0 is open
    CHECK_FALSE(Region::full().contains({1, Rational(1, 5)}));
}

TEST_CASE("ambient facet") {
    bool found = false;
    for (const auto& f : Region::full().facets()) {
        if (!f.constraint.poly.is_zero() && f.constraint.same_line(parse_constraint("10c - b - 1 > 0"))) {
            found = true;
            CHECK(f.ambient);
            bool ends = (f.p == Point{Rational(1, 9), Rational(1, 9)} && f.q == Point{1, Rational(1, 5)}) ||
                        (f.q == Point{Rational(1, 9), Rational(1, 9)} && f.p == Point{1, Rational(1, 5)});
            CHECK(ends);
        }
    }
    CHECK(found);
}

TEST_CASE("implication and equality") {
    Region r({parse_constraint("c > 1/2")});
    CHECK(r.implies(parse_constraint("c > 1/3")));
    CHECK_FALSE(r.implies(parse_constraint("c > 2/3")));
    Region a({parse_constraint("2c - 1 > 0")});
    CHECK(a.equals(r));
    CHECK(r.intersect(Region({parse_constraint("c <= 1/2")})).empty());
}
