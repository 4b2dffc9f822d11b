#include "cw/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace cw {

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::GT: return "GT";
        case Rel::GE: return "GE";
        case Rel::EQ: return "EQ";
    }
    return "?";
}

Rel parse_rel(std::string_view s) {
    if (s == "GT" || s == ">") return Rel::GT;
    if (s == "GE" || s == ">=") return Rel::GE;
    if (s == "EQ" || s == "=") return Rel::EQ;
    throw std::invalid_argument("bad relation: " + std::string(s));
}

bool LinearConstraint::holds(const Rational& b, const Rational& c) const {
    Rational v = poly.eval(b, c);
    switch (rel) {
        case Rel::GT: return v > 0;
        case Rel::GE: return v >= 0;
        case Rel::EQ: return v == 0;
    }
    return false;
}

namespace {

BigInt igcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

AffinePoly primitive(const AffinePoly& p) {
    if (p.is_zero()) return p;
    BigInt den = 1;
    for (const Rational* x : {&p.q0, &p.qb, &p.qc}) {
        BigInt d = boost::multiprecision::denominator(*x);
        den = den / igcd(den, d) * d;
    }
    BigInt g = 0;
    for (const Rational* x : {&p.q0, &p.qb, &p.qc}) g = igcd(g, boost::multiprecision::numerator(*x * Rational(den)));
    return p * (Rational(den) / Rational(g));
}

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) { return a * d - b * c; }

std::optional<Point> meet(const AffinePoly& l1, const AffinePoly& l2) {
    // qb b + qc c = -q0
    Rational d = det2(l1.qb, l1.qc, l2.qb, l2.qc);
    if (d == 0) return std::nullopt;
    Rational b = det2(-l1.q0, l1.qc, -l2.q0, l2.qc) / d;
    Rational c = det2(l1.qb, -l1.q0, l2.qb, -l2.q0) / d;
    return Point{b, c};
}

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.b - o.b) * (b.c - o.c) - (a.c - o.c) * (b.b - o.b);
}

bool point_less(const Point& x, const Point& y) { return x.b < y.b || (x.b == y.b && x.c < y.c); }

std::vector<Point> hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

AffinePoly line_key(const AffinePoly& p) {
    AffinePoly q = primitive(p);
    const Rational& lead = q.qc != 0 ? q.qc : (q.qb != 0 ? q.qb : q.q0);
    if (lead < 0) q = -q;
    return q;
}

LinearConstraint LinearConstraint::canonical() const {
    LinearConstraint k{primitive(poly), rel};
    if (rel == Rel::EQ) k.poly = line_key(poly);
    return k;
}

bool LinearConstraint::same_line(const LinearConstraint& o) const {
    return line_key(poly) == line_key(o.poly);
}

bool LinearConstraint::operator==(const LinearConstraint& o) const {
    LinearConstraint a = canonical(), b = o.canonical();
    return a.rel == b.rel && a.poly == b.poly;
}

std::string LinearConstraint::str() const {
    const char* op = rel == Rel::GT ? " > 0" : rel == Rel::GE ? " >= 0" : " = 0";
    return canonical().poly.str() + op;
}

LinearConstraint gt(const AffinePoly& p) { return {p, Rel::GT}; }
LinearConstraint ge(const AffinePoly& p) { return {p, Rel::GE}; }
LinearConstraint eq(const AffinePoly& p) { return {p, Rel::EQ}; }

LinearConstraint parse_constraint(std::string_view s) {
    static const std::pair<const char*, int> ops[] = {{">=", 0}, {"<=", 1}, {"!=", -1}, {">", 2}, {"<", 3}, {"=", 4}};
    std::string t(s);
    for (auto [op, kind] : ops) {
        auto pos = t.find(op);
        if (pos == std::string::npos) continue;
        if (kind < 0) break;
        AffinePoly lhs = parse_affine(t.substr(0, pos));
        AffinePoly rhs = parse_affine(t.substr(pos + std::char_traits<char>::length(op)));
        switch (kind) {
            case 0: return ge(lhs - rhs);
            case 1: return ge(rhs - lhs);
            case 2: return gt(lhs - rhs);
            case 3: return gt(rhs - lhs);
            default: return eq(lhs - rhs);
        }
    }
    throw std::invalid_argument("bad constraint: " + t);
}

std::string Point::str() const { return "(" + to_string(b) + ", " + to_string(c) + ")"; }

std::vector<LinearConstraint> ambient_constraints(Ambient a) {
    std::vector<LinearConstraint> v = {ge({1, -1, 0}), ge({0, 1, -1})};
    if (a == Ambient::Amp) {
        v.push_back(gt({-1, -1, 10}));
    } else {
        v.push_back(gt({-1, 0, 9}));
    }
    return v;
}

Region::Region(std::vector<LinearConstraint> cons, Ambient amb) : cons_(std::move(cons)), amb_(amb) {}

std::vector<LinearConstraint> Region::all_constraints() const {
    auto v = ambient_constraints(amb_);
    v.insert(v.end(), cons_.begin(), cons_.end());
    return v;
}

namespace {

struct Closure {
    bool feasible = false;
    std::vector<Point> verts;
};

bool closure_holds(const LinearConstraint& k, const Point& p) {
    Rational v = k.poly.eval(p.b, p.c);
    return k.rel == Rel::EQ ? v == 0 : v >= 0;
}

Closure closure_of(const std::vector<LinearConstraint>& all) {
    Closure cl;
    for (const auto& k : all)
        if (k.poly.is_const()) {
            const Rational& v = k.poly.q0;
            bool ok = k.rel == Rel::EQ ? v == 0 : (k.rel == Rel::GE ? v >= 0 : v > 0);
            if (!ok) return cl;
        }
    std::vector<Point> cand;
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i].poly.is_const()) continue;
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (all[j].poly.is_const()) continue;
            auto p = meet(all[i].poly, all[j].poly);
            if (!p) continue;
            bool ok = true;
            for (const auto& k : all)
                if (!closure_holds(k, *p)) {
                    ok = false;
                    break;
                }
            if (ok) cand.push_back(*p);
        }
    }
    if (cand.empty()) return cl;
    cl.feasible = true;
    cl.verts = hull(cand);
    return cl;
}

bool nonempty(const std::vector<LinearConstraint>& all) {
    Closure cl = closure_of(all);
    if (!cl.feasible) return false;
    for (const auto& k : all) {
        if (k.rel != Rel::GT || k.poly.is_const()) continue;
        bool pos = false;
        for (const auto& v : cl.verts)
            if (k.poly.eval(v.b, v.c) > 0) {
                pos = true;
                break;
            }
        if (!pos) return false;
    }
    return true;
}

}  // namespace

bool Region::empty() const { return !nonempty(all_constraints()); }

std::vector<Point> Region::vertices() const {
    auto all = all_constraints();
    if (!nonempty(all)) return {};
    return closure_of(all).verts;
}

int Region::dimension() const {
    auto v = vertices();
    if (v.empty()) return -1;
    if (v.size() == 1) return 0;
    if (v.size() == 2) return 1;
    return 2;
}

std::optional<Point> Region::witness() const {
    auto v = vertices();
    if (v.empty()) return std::nullopt;
    Point w{0, 0};
    for (const auto& p : v) {
        w.b += p.b;
        w.c += p.c;
    }
    w.b /= Rational(static_cast<long>(v.size()));
    w.c /= Rational(static_cast<long>(v.size()));
    return w;
}

bool Region::contains(const Point& p) const {
    for (const auto& k : all_constraints())
        if (!k.holds(p.b, p.c)) return false;
    return true;
}

bool Region::implies(const LinearConstraint& k) const {
    auto all = all_constraints();
    auto test = [&](LinearConstraint neg) {
        all.push_back(neg);
        bool e = !nonempty(all);
        all.pop_back();
        return e;
    };
    switch (k.rel) {
        case Rel::GT: return test(ge(-k.poly));
        case Rel::GE: return test(gt(-k.poly));
        case Rel::EQ: return test(gt(k.poly)) && test(gt(-k.poly));
    }
    return false;
}

bool Region::subset_of(const Region& o) const {
    if (empty()) return true;
    for (const auto& k : o.all_constraints())
        if (!implies(k)) return false;
    return true;
}

Region Region::intersect(const Region& o) const {
    auto v = cons_;
    v.insert(v.end(), o.cons_.begin(), o.cons_.end());
    return Region(std::move(v), amb_).normalized();
}

Region Region::with(const LinearConstraint& k) const {
    auto v = cons_;
    v.push_back(k);
    return Region(std::move(v), amb_);
}

Region Region::normalized() const {
    std::vector<LinearConstraint> v;
    for (const auto& k : cons_) {
        auto ck = k.canonical();
        if (std::find(v.begin(), v.end(), ck) == v.end()) v.push_back(ck);
    }
    if (Region(v, amb_).empty()) return Region(v, amb_);
    for (size_t i = v.size(); i-- > 0;) {
        std::vector<LinearConstraint> rest = v;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (Region(rest, amb_).implies(v[i])) v = std::move(rest);
    }
    return Region(std::move(v), amb_);
}

std::vector<Facet> Region::facets() const {
    std::vector<Facet> out;
    auto verts = vertices();
    if (verts.size() < 2) return out;
    auto amb = ambient_constraints(amb_);
    auto all = all_constraints();
    if (verts.size() == 2) {
        for (size_t i = 0; i < all.size(); ++i)
            if (all[i].rel == Rel::EQ) out.push_back({all[i], verts[0], verts[1], i < amb.size()});
        return out;
    }
    std::vector<AffinePoly> seen;
    // Prefer non-ambient constraints as the facet's supporting constraint.
    std::vector<size_t> order;
    for (size_t i = amb.size(); i < all.size(); ++i) order.push_back(i);
    for (size_t i = 0; i < amb.size(); ++i) order.push_back(i);
    for (size_t i : order) {
        const auto& k = all[i];
        if (k.poly.is_const()) continue;
        AffinePoly key = line_key(k.poly);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        std::vector<Point> on;
        for (const auto& p : verts)
            if (k.poly.eval(p.b, p.c) == 0) on.push_back(p);
        if (on.size() < 2) continue;
        seen.push_back(key);
        std::sort(on.begin(), on.end(), point_less);
        out.push_back({k, on.front(), on.back(), i < amb.size()});
    }
    return out;
}

Rational Region::min_c() const {
    auto v = vertices();
    if (v.empty()) throw std::logic_error("min_c of empty region");
    Rational m = v[0].c;
    for (const auto& p : v) m = std::min(m, p.c);
    return m;
}

Rational Region::max_c() const {
    auto v = vertices();
    if (v.empty()) throw std::logic_error("max_c of empty region");
    Rational m = v[0].c;
    for (const auto& p : v) m = std::max(m, p.c);
    return m;
}

std::string Region::str() const {
    if (cons_.empty()) return "{ambient}";
    std::string s = "{";
    for (size_t i = 0; i < cons_.size(); ++i) {
        if (i) s += ", ";
        s += cons_[i].str();
    }
    return s + "}";
}

Region region_intersect(const Region& a, const Region& b) { return a.intersect(b); }

}  // namespace cw
