#pragma once

#include "cw/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cw {

enum class Rel { GT, GE, EQ };

const char* rel_name(Rel r);
Rel parse_rel(std::string_view s);

// poly (rel) 0
struct LinearConstraint {
    AffinePoly poly;
    Rel rel = Rel::GT;

    bool holds(const Rational& b, const Rational& c) const;
    // Primitive integer coefficients; EQ additionally gets a sign convention.
    LinearConstraint canonical() const;
    bool same_line(const LinearConstraint& o) const;
    bool operator==(const LinearConstraint& o) const;
    std::string str() const;
};

LinearConstraint gt(const AffinePoly& p);
LinearConstraint ge(const AffinePoly& p);
LinearConstraint eq(const AffinePoly& p);
// "10c - b - 1 > 0", "c <= 2/3", "b = c"
LinearConstraint parse_constraint(std::string_view s);
// The line poly = 0 scaled to primitive integers with a fixed sign.
AffinePoly line_key(const AffinePoly& p);

struct Point {
    Rational b, c;
    bool operator==(const Point&) const = default;
    std::string str() const;
};

enum class Ambient {
    Amp,  // b <= 1, b >= c, 10c - b - 1 > 0
    Box,  // 1/9 < c <= b <= 1
};

std::vector<LinearConstraint> ambient_constraints(Ambient a);

struct Facet {
    LinearConstraint constraint;
    Point p, q;
    bool ambient = false;
};

class Region {
public:
    Region() = default;
    explicit Region(std::vector<LinearConstraint> cons, Ambient amb = Ambient::Amp);

    static Region full(Ambient amb = Ambient::Amp) { return Region({}, amb); }

    const std::vector<LinearConstraint>& constraints() const { return cons_; }
    Ambient ambient() const { return amb_; }
    std::vector<LinearConstraint> all_constraints() const;

    bool empty() const;
    std::optional<Point> witness() const;
    // Vertices of the closure in counter-clockwise order.
    std::vector<Point> vertices() const;
    int dimension() const;  // -1 empty, 0, 1, 2
    bool contains(const Point& p) const;
    bool implies(const LinearConstraint& k) const;
    bool subset_of(const Region& o) const;
    bool equals(const Region& o) const { return subset_of(o) && o.subset_of(*this); }
    bool intersects(const Region& o) const { return !intersect(o).empty(); }

    Region intersect(const Region& o) const;
    Region with(const LinearConstraint& k) const;
    Region normalized() const;
    std::vector<Facet> facets() const;

    Rational min_c() const;
    Rational max_c() const;
    std::string str() const;

private:
    std::vector<LinearConstraint> cons_;
    Ambient amb_ = Ambient::Amp;
};

Region region_intersect(const Region& a, const Region& b);

}  // namespace cw
