#include "cw/chambers.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace cw;

TEST_CASE("smooth type") {
    auto d = enumerate_chambers(support::catalog(), "smooth");
    CHECK(d.chambers.size() == 3);
    int interior = 0;
    for (const auto& w : d.walls) {
        ++interior;
        bool known = w.constraint.same_line(parse_constraint("c = 2/3")) ||
                     w.constraint.same_line(parse_constraint("c = -b/2 + 1"));
        CHECK(known);
    }
    CHECK(interior == 2);
}

TEST_CASE("slope classes") {
    CHECK(slope_class(parse_constraint("c = b/3")) == SlopeClass::Positive);
    CHECK(slope_class(parse_constraint("c = 1/4")) == SlopeClass::Zero);
    CHECK(slope_class(parse_constraint("c = -b/3 + 1/3")) == SlopeClass::Negative);
}

TEST_CASE("scan of E2A1 through two nodes") {
    auto d = enumerate_chambers(support::catalog(), "E2A1-two-nodes");
    CHECK(d.chambers.size() == 11);
    CHECK(d.find(support::region({"c = b/3", "c > 1/6", "c <= 1/4"})) >= 0);
    CHECK(d.find(support::region({"b = c", "c <= 1/6"})) >= 0);
    // floors only move down during a scan
    auto v = enumerate_variant(support::entry("E2A1-two-nodes"));
    CHECK(!v.scan.empty());
    for (const auto& s : v.scan) CHECK(s.newFloor <= s.oldFloor);
}

TEST_CASE("coverage of a single type") {
    auto d = enumerate_chambers(support::catalog(), "DA1-ell-one-node");
    CHECK(d.chambers.size() == 8);
    auto cov = coverage(d, 24);
    CHECK(cov.ok());
    CHECK(cov.points > 0);
}

TEST_CASE("refining with itself changes nothing") {
    auto d = enumerate_chambers(support::catalog(), "DA1-ell-smooth");
    auto r = refine(d, d);
    CHECK(r.chambers.size() == d.chambers.size());
}

TEST_CASE("svg output") {
    Decomposition empty;
    CHECK_THROWS(render_svg(empty));
    auto d = enumerate_chambers(support::catalog(), "smooth");
    std::string svg = render_svg(d);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
}
