#include "cw/surface.hpp"

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace cw;

namespace {

DivisorClass expected(const LatticeType& l, std::vector<std::pair<const char*, AffinePoly>> terms) {
    DivisorClass d(static_cast<size_t>(l.rank()));
    for (auto& [cls, w] : terms) d += w * DivisorClass(parse_class(l, cls));
    return d;
}

bool has_violation(const ValidationReport& r, const std::string& needle) {
    for (const auto& v : r.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("seed model validates") {
    auto s = support::step_model("E2A1-two-nodes", "0");
    CHECK(s.components.size() == 21);
    auto rep = validate_surface(s);
    for (const auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.ok());
}

TEST_CASE("log canonical divisors") {
    auto s1 = support::step_model("E2A1-two-nodes", "1");
    const auto& t1 = s1.at("1");
    AffinePoly c = AffinePoly::C();
    auto want = expected(t1.lattice, {{"h", parse_affine("7c + 3")},
                                      {"e1", -3 * c}, {"e2", -3 * c}, {"e4", -3 * c}, {"e5", -3 * c},
                                      {"e3", -c}, {"e6", parse_affine("-c - 3")}});
    CHECK(log_canonical_divisor(t1) == want);

    auto s0 = support::step_model("E2A1-two-nodes", "0");
    const auto& e = s0.at("E");
    CHECK(log_canonical_divisor(e) == expected(e.lattice, {{"h", parse_affine("3c - 2")}}));
}

TEST_CASE("divisor agrees with the hand-written pairing") {
    auto s0 = support::step_model("E2A1-two-nodes", "0");
    for (const auto& comp : s0.components) {
        auto d = log_canonical_divisor(comp);
        Rational b(5, 7), c(3, 8);
        auto od = oracle::lc_divisor(comp, b, c);
        for (size_t i = 0; i < d.size(); ++i) CHECK(d.v[i].eval(b, c) == od[i]);
    }
}

TEST_CASE("dangling gluing") {
    auto s = support::step_model("E2A1-two-nodes", "0");
    s.gluings.erase(s.gluings.begin());
    auto rep = validate_surface(s);
    CHECK_FALSE(rep.ok());
    CHECK(has_violation(rep, "dangling gluing"));
    CHECK(validate_surface(s, true).violations.size() < rep.violations.size());
}

TEST_CASE("Eckardt count on a smooth cubic") {
    Component comp;
    comp.id = "S";
    comp.lattice = LatticeType::plane(6);
    auto lines = exceptional_classes(comp.lattice);
    for (const auto& l : lines) comp.boundary.push_back({l, AffinePoly::C(), "ordinary-line"});
    // tritangent triples e_i, 2h - sum_{k != j} e_k, h - e_i - e_j
    auto idx = [&](const char* s) {
        IVec v = parse_class(comp.lattice, s);
        for (size_t i = 0; i < lines.size(); ++i)
            if (lines[i] == v) return static_cast<int>(i);
        FAIL("missing line ", s);
        return -1;
    };
    comp.eckardt = {{idx("e1"), idx("2h - e1 - e3 - e4 - e5 - e6"), idx("h - e1 - e2")},
                    {idx("e3"), idx("2h - e1 - e2 - e3 - e5 - e6"), idx("h - e3 - e4")},
                    {idx("e5"), idx("2h - e1 - e2 - e3 - e4 - e5"), idx("h - e5 - e6")},
                    {idx("e2"), idx("2h - e2 - e3 - e4 - e5 - e6"), idx("h - e1 - e2")},
                    {idx("e4"), idx("2h - e1 - e2 - e4 - e5 - e6"), idx("h - e3 - e4")}};
    SurfaceModel s;
    s.typeLabel = "smooth";
    s.components.push_back(comp);
    auto rep = validate_surface(s);
    CHECK(has_violation(rep, "5 Eckardt points"));

    s.components[0].eckardt.resize(4);
    CHECK_FALSE(has_violation(validate_surface(s), "Eckardt points"));
}

TEST_CASE("blow up a point on two curves") {
    Component comp;
    comp.id = "P";
    comp.lattice = LatticeType::plane(0);
    comp.boundary = {{{1}, AffinePoly::C(), "ordinary-line"}, {{1}, AffinePoly::C(), "ordinary-line"}};
    IVec e = blow_up_point(comp, {{CurveKind::Boundary, 0}, {CurveKind::Boundary, 1}});
    CHECK(comp.lattice.n == 1);
    CHECK(e == parse_class(comp.lattice, "e1"));
    CHECK(comp.boundary[0].cls == parse_class(comp.lattice, "h - e1"));
}
