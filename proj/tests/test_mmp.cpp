#include "cw/mmp.hpp"

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

#include <algorithm>

using namespace cw;

namespace {

// Component data up to relabeling of gluing ids and ordering.
struct Shape {
    std::vector<std::pair<IVec, std::string>> boundary;
    std::vector<IVec> conductors;
    bool operator==(const Shape&) const = default;
};

Shape shape(const Component& c) {
    Shape s;
    for (const auto& b : c.boundary) s.boundary.push_back({b.cls, b.weight.str()});
    for (const auto& k : c.conductors) s.conductors.push_back(k.cls);
    std::sort(s.boundary.begin(), s.boundary.end());
    std::sort(s.conductors.begin(), s.conductors.end());
    return s;
}

}  // namespace

TEST_CASE("gluing conditions on the seed") {
    auto s0 = support::step_model("E2A1-two-nodes", "0");
    auto rep = check_gluing_conditions(s0, parse_constraint("c = 2/3"), {Rational(4, 5), Rational(2, 3)});
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.pass);
    CHECK_THROWS(check_gluing_conditions(s0, parse_constraint("c = 2/3"), {Rational(4, 5), Rational(1, 2)}));
}

TEST_CASE("negative conductor degree fails") {
    Component comp;
    comp.id = "P";
    comp.lattice = LatticeType::plane(0);
    comp.conductors.push_back({{1}, "g"});
    SurfaceModel s;
    s.components.push_back(comp);
    auto rep = check_gluing_conditions(s, parse_constraint("c = 1/2"), {1, Rational(1, 2)});
    CHECK_FALSE(rep.pass);
    bool named = false;
    for (const auto& f : rep.failures) named = named || f.find("conductor g") != std::string::npos;
    CHECK(named);
}

TEST_CASE("blow down e7 at c = 2/3") {
    auto s0 = support::step_model("E2A1-two-nodes", "0");
    TransitionStep contract{StepKind::ContractComponentToPoint, "E"};
    TransitionStep down{StepKind::BlowDownMinusOne, "1"};
    down.classes.push_back(exceptional(s0.at("1").lattice, 7));
    auto wall = parse_constraint("c = 2/3");
    auto m = apply_step(apply_step(s0, contract, wall), down, wall);
    CHECK(m.index_of("E") < 0);
    auto s1 = support::step_model("E2A1-two-nodes", "1");
    CHECK(shape(m.at("1")) == shape(s1.at("1")));
    CHECK(volume(m) == volume(s0));
    // blowing down a curve that is not lc-trivial on the wall
    TransitionStep bad{StepKind::BlowDownMinusOne, "1"};
    bad.classes.push_back(exceptional(s0.at("1").lattice, 7));
    CHECK_THROWS_AS(apply_step(s0, bad, parse_constraint("c = 1/2")), StepError);
}

TEST_CASE("blow down then attach the plane back") {
    auto s0 = support::step_model("E2A1-two-nodes", "0");
    auto s1 = support::step_model("E2A1-two-nodes", "1");
    const auto& t1 = s1.at("1");
    // the three lines through the contracted point
    TransitionStep up{StepKind::AttachPlaneAtExceptional, "1"};
    for (const char* cls : {"h - e1 - e4", "h - e2 - e5", "h - e3 - e6"})
        up.point.push_back({parse_class(t1.lattice, cls), CurveKind::Boundary, std::nullopt});
    up.newComponent = "E";
    auto back = apply_step(s1, up, parse_constraint("c = 2/3"));
    REQUIRE(back.components.size() == s0.components.size());
    for (const auto& comp : s0.components) CHECK(shape(back.at(comp.id)) == shape(comp));
    CHECK(back.at("1").lattice == s0.at("1").lattice);
    CHECK(volume(back) == volume(s0));
    CHECK(validate_surface(back).ok());
}

TEST_CASE("Eckardt blow-up cancels") {
    auto s0 = support::step_model("E2A1-two-nodes", "0");
    auto s1 = support::step_model("E2A1-two-nodes", "1");
    QuadPoly sq = parse_affine("3c - 2") * parse_affine("3c - 2");
    CHECK(component_volume(s0.at("1")) - component_volume(s1.at("1")) == -sq);
    CHECK(component_volume(s0.at("E")) == sq);
}

TEST_CASE("cross c = 1/2") {
    auto s1 = support::step_model("E2A1-two-nodes", "1");
    auto res = cross_wall(s1, support::script("E2A1-two-nodes", "1", "2"));
    CHECK(volume(res.model) == volume(s1));
    CHECK(stability_report(res.model, Point{1, Rational(2, 5)}).stableAt);
    CHECK(res.gluing.pass);
}

TEST_CASE("terminal contraction to nodes") {
    auto s8 = support::step_model("E2A1-two-nodes", "8");
    auto res = cross_wall(s8, support::script("E2A1-two-nodes", "8", "9"));
    int nodes = 0;
    for (const auto& c : res.model.components) nodes += static_cast<int>(c.a1Nodes.size());
    CHECK(nodes == 2);
    CHECK(res.region.equals(support::region({"b = c", "c <= 1/6"})));
}

TEST_CASE("step 3 volume wall") {
    auto s = support::step_model("E2A1-two-nodes", "5");
    auto rep = stability_report(s);
    CHECK_FALSE(rep.volumeMatchesTarget);
    auto vc = volume_check(s);
    REQUIRE(vc.constraint);
    CHECK(vc.constraint->same_line(parse_constraint("c = b/3")));
    auto g = check_gluing_conditions(s, parse_constraint("c = b/3"), {Rational(2, 3), Rational(2, 9)});
    CHECK(g.pass);
}
