#include "cw/picard.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <algorithm>
#include <set>

using namespace cw;

namespace {

DivisorClass affine_class(std::vector<AffinePoly> v) {
    DivisorClass d;
    d.v = std::move(v);
    return d;
}

std::set<IVec> as_set(std::vector<IVec> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("intersection pairing") {
    auto p = LatticeType::plane(6);
    CHECK(dot(p, parse_class(p, "h"), parse_class(p, "h")) == 1);
    CHECK(dot(p, parse_class(p, "e1"), parse_class(p, "e1")) == -1);
    IVec t = parse_class(p, "h - e1 - e2 - e3");
    CHECK(dot(p, t, t) == -2);
    auto q = LatticeType::quadric(2);
    CHECK(dot(q, parse_class(q, "h1"), parse_class(q, "h2")) == 1);
    CHECK(dot(q, parse_class(q, "h1"), parse_class(q, "h1")) == 0);
}

TEST_CASE("canonical classes") {
    auto p = LatticeType::plane(6);
    CHECK(canonical_ivec(p) == parse_class(p, "-3h + e1 + e2 + e3 + e4 + e5 + e6"));
    auto q = LatticeType::quadric(0);
    CHECK(canonical_ivec(q) == parse_class(q, "-2h1 - 2h2"));
    CHECK(dot(p, canonical_ivec(p), canonical_ivec(p)) == 3);
}

TEST_CASE("27 lines and Schlaefli incidence") {
    auto p = LatticeType::plane(6);
    auto lines = exceptional_classes(p);
    REQUIRE(lines.size() == 27);
    for (const auto& x : lines) {
        int meets = 0;
        for (const auto& y : lines)
            if (x != y && dot(p, x, y) == 1) ++meets;
        CHECK(meets == 10);
    }
    auto brute = oracle::plane_classes(6, -1, 1, 5, 3);
    CHECK(as_set(brute) == as_set(lines));
}

TEST_CASE("special positions") {
    auto conic = LatticeType::plane(6);
    conic.onConic = true;
    conic.derive_special();
    auto neg = negative_curves(conic);
    CHECK(neg.minusTwo == std::vector<IVec>{parse_class(conic, "2h - e1 - e2 - e3 - e4 - e5 - e6")});
    CHECK(neg.minusOne.size() == 21);

    auto two = LatticeType::plane(6, {{1, 2, 3}, {3, 4, 5}});
    auto n2 = negative_curves(two);
    CHECK(as_set(n2.minusTwo) == as_set({parse_class(two, "h - e1 - e2 - e3"), parse_class(two, "h - e3 - e4 - e5")}));
}

TEST_CASE("cremona is an isometry") {
    auto p = LatticeType::plane(6);
    auto cr = cremona(p, 1, 2, 3);
    auto lines = exceptional_classes(p);
    for (const auto& x : lines)
        for (const auto& y : lines) CHECK(dot(cr.target, cr.apply(x), cr.apply(y)) == dot(p, x, y));
    CHECK(cr.apply(parse_class(p, "e1")) == parse_class(p, "h - e2 - e3"));
}

TEST_CASE("quadric presented as a plane blow-up") {
    auto q = LatticeType::quadric(2);
    auto bc = quadric_to_plane(q);
    IVec h1 = parse_class(q, "h1"), h2 = parse_class(q, "h2"), e1 = parse_class(q, "e1");
    for (const auto& x : {h1, h2, e1})
        for (const auto& y : {h1, h2, e1}) CHECK(dot(bc.target, bc.apply(x), bc.apply(y)) == dot(q, x, y));
}

TEST_CASE("positivity constraints") {
    auto p = LatticeType::plane(0);
    auto ks = positivity_constraints(p, affine_class({parse_affine("3c - 2")}));
    REQUIRE(ks.size() == 1);
    CHECK(ks[0] == parse_constraint("3c - 2 > 0"));

    auto q = LatticeType::quadric(0);
    auto kq = positivity_constraints(q, affine_class({parse_affine("b + c - 1"), parse_affine("4c - 1")}));
    Region got(kq, Ambient::Box);
    Region want({parse_constraint("4c - 1 > 0"), parse_constraint("b + c - 1 > 0")}, Ambient::Box);
    CHECK(got.equals(want));
}

TEST_CASE("self intersections") {
    auto q = LatticeType::quadric(0);
    auto d = affine_class({parse_affine("2c - 1"), parse_affine("3c")});
    CHECK(self_intersection(q, d) == parse_quad("12c^2 - 6c"));

    // Type 3' divisor on Bl5 P2: K + b l + c(others) + conductors
    auto p = LatticeType::plane(5, {{1, 2, 3}, {1, 4, 5}});
    DivisorClass k(canonical_ivec(p));
    DivisorClass sum = k;
    auto add = [&](const char* cls, AffinePoly w) { sum += w * DivisorClass(parse_class(p, cls)); };
    add("h - e2 - e4", AffinePoly::B());
    for (const char* c : {"h - e2 - e5", "h - e3 - e4", "h - e3 - e5", "h - e1"}) add(c, AffinePoly::C());
    for (const char* c : {"h - e1 - e2 - e3", "h - e1 - e4 - e5", "e1", "e2", "e3", "e4", "e5"}) add(c, AffinePoly(1));
    QuadPoly v = self_intersection(p, sum);
    CHECK(v == parse_quad("-b^2 + 4bc + 2b + 5c^2 + 4c - 3"));
}

TEST_CASE("class strings") {
    auto p = LatticeType::plane(6);
    IVec x = parse_class(p, "2h - e1 - e2 - e3 - e4 - e5");
    CHECK(parse_class(p, class_str(p, x)) == x);
    CHECK_THROWS(parse_class(p, "e9"));
}
