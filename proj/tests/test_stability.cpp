#include "cw/stability.hpp"

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace cw;

TEST_CASE("single quadric component") {
    auto s0 = support::step_model("E2A1-two-nodes", "0");
    const auto& comp = s0.at("5b");
    CHECK(component_volume(comp) == parse_quad("8c^2 - 8c + 2"));
    CHECK(oracle::same_quadratic(oracle::fn(component_volume(comp)), [&](const Rational& b, const Rational& c) {
        return oracle::component_volume(comp, b, c);
    }));
}

TEST_CASE("empty model") {
    SurfaceModel s;
    CHECK(volume(s).is_zero());
    CHECK_FALSE(volume_check(s).satisfiable);
}

TEST_CASE("step 1 fails ampleness at c = 1/2") {
    auto s1 = support::step_model("E2A1-two-nodes", "1");
    auto rep = stability_report(s1, Point{1, Rational(1, 2)});
    CHECK_FALSE(rep.stableAt);
    bool ruling = false;
    for (const auto& f : rep.failingCertificates)
        if (f.condition == "ample" && f.source == "ruling h2 on component 4") ruling = true;
    CHECK(ruling);
    CHECK(stability_report(s1, Point{1, Rational(3, 5)}).stableAt);
}

TEST_CASE("volume matches the target on every scan model") {
    auto d = enumerate_variant(support::entry("E2A1-two-nodes"));
    for (const auto& ch : d.chambers) {
        const auto& m = ch.models.front()->model;
        auto w = ch.region.witness();
        REQUIRE(w);
        CHECK(oracle::model_volume(m, w->b, w->c) == target_volume().eval(w->b, w->c));
    }
}

TEST_CASE("three concurrent lines") {
    Component comp;
    comp.id = "P";
    comp.lattice = LatticeType::plane(0);
    for (int i = 0; i < 3; ++i) comp.boundary.push_back({{1}, AffinePoly::C(), "ordinary-line"});
    SurfaceModel s;
    s.components.push_back(comp);
    s.points.push_back({"P", {{CurveKind::Boundary, 0}, {CurveKind::Boundary, 1}, {CurveKind::Boundary, 2}}, false});
    auto slc = slc_constraints(s);
    bool found = false;
    for (const auto& k : slc) found = found || k == parse_constraint("3c <= 2");
    CHECK(found);
}

TEST_CASE("stability region of the seed") {
    auto s0 = support::step_model("E2A1-two-nodes", "0");
    CHECK(stability_region(s0).equals(support::region({"c > 2/3"})));
}
