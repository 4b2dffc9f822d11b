#include "cw/picard.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace cw {

LatticeType LatticeType::plane(int n, std::vector<std::array<int, 3>> triples) {
    LatticeType l;
    l.kind = LatticeKind::Plane;
    l.n = n;
    l.colinearTriples = std::move(triples);
    l.derive_special();
    return l;
}

LatticeType LatticeType::quadric(int n, std::vector<int> diag) {
    LatticeType l;
    l.kind = LatticeKind::Quadric;
    l.n = n;
    l.onDiagonal = std::move(diag);
    l.derive_special();
    return l;
}

void LatticeType::derive_special() {
    special.clear();
    auto add = [&](IVec v) {
        if (dot(*this, v, v) <= -2 && std::find(special.begin(), special.end(), v) == special.end())
            special.push_back(std::move(v));
    };
    int off = offset();
    auto check_idx = [&](int i) {
        if (i < 1 || i > n) throw std::invalid_argument("point index out of range in " + name());
    };
    if (kind == LatticeKind::Plane) {
        for (const auto& t : colinearTriples) {
            IVec v(rank(), 0);
            v[0] = 1;
            for (int i : t) {
                check_idx(i);
                v[off + i - 1] = -1;
            }
            add(v);
        }
        if (onConic) {
            IVec v(rank(), 0);
            v[0] = 2;
            for (int i = 1; i <= std::min(n, 6); ++i) v[off + i - 1] = -1;
            add(v);
        }
    } else if (!onDiagonal.empty()) {
        IVec v(rank(), 0);
        v[0] = v[1] = 1;
        for (int i : onDiagonal) {
            check_idx(i);
            v[off + i - 1] = -1;
        }
        add(v);
    }
    for (auto [i, j] : infinitelyNear) {
        check_idx(i);
        check_idx(j);
        IVec v(rank(), 0);
        v[off + i - 1] = 1;
        v[off + j - 1] = -1;
        add(v);
    }
}

bool LatticeType::operator==(const LatticeType& o) const {
    auto sorted = [](std::vector<IVec> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return kind == o.kind && n == o.n && sorted(special) == sorted(o.special);
}

std::string LatticeType::name() const {
    std::string base = kind == LatticeKind::Plane ? "P2" : "F0";
    return n == 0 ? base : "Bl" + std::to_string(n) + base;
}

DivisorClass::DivisorClass(const IVec& iv) {
    v.reserve(iv.size());
    for (long x : iv) v.emplace_back(Rational(x));
}

bool DivisorClass::is_integral() const {
    for (const auto& a : v)
        if (!a.is_const() || boost::multiprecision::denominator(a.q0) != 1) return false;
    return true;
}

IVec DivisorClass::to_ivec() const {
    if (!is_integral()) throw std::logic_error("class is not integral");
    IVec out;
    for (const auto& a : v) out.push_back(static_cast<long>(boost::multiprecision::numerator(a.q0)));
    return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (o.v.size() != v.size()) throw std::invalid_argument("lattice mismatch");
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (o.v.size() != v.size()) throw std::invalid_argument("lattice mismatch");
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
}

DivisorClass operator*(const AffinePoly& k, const DivisorClass& d) {
    if (!k.is_const()) {
        // Only scalar-by-integral products are needed: the result must stay affine.
        if (!d.is_integral()) throw std::invalid_argument("nonlinear divisor coefficient");
        DivisorClass out(d.size());
        for (size_t i = 0; i < d.size(); ++i) out.v[i] = k * d.v[i].q0;
        return out;
    }
    DivisorClass out = d;
    for (auto& a : out.v) a *= k.q0;
    return out;
}

namespace {

void check_rank(const LatticeType& l, size_t a, size_t b) {
    if (static_cast<int>(a) != l.rank() || static_cast<int>(b) != l.rank())
        throw std::invalid_argument("lattice mismatch: expected rank " + std::to_string(l.rank()));
}

}  // namespace

long dot(const LatticeType& l, const IVec& x, const IVec& y) {
    check_rank(l, x.size(), y.size());
    long s = 0;
    if (l.kind == LatticeKind::Plane) {
        s += x[0] * y[0];
        for (size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
    } else {
        s += x[0] * y[1] + x[1] * y[0];
        for (size_t i = 2; i < x.size(); ++i) s -= x[i] * y[i];
    }
    return s;
}

AffinePoly dot(const LatticeType& l, const DivisorClass& x, const IVec& y) {
    check_rank(l, x.size(), y.size());
    std::vector<Rational> yr(y.begin(), y.end());
    AffinePoly s;
    if (l.kind == LatticeKind::Plane) {
        s += x.v[0] * yr[0];
        for (size_t i = 1; i < yr.size(); ++i) s -= x.v[i] * yr[i];
    } else {
        s += x.v[0] * yr[1];
        s += x.v[1] * yr[0];
        for (size_t i = 2; i < yr.size(); ++i) s -= x.v[i] * yr[i];
    }
    return s;
}

QuadPoly dot(const LatticeType& l, const DivisorClass& x, const DivisorClass& y) {
    check_rank(l, x.size(), y.size());
    QuadPoly s;
    if (l.kind == LatticeKind::Plane) {
        s += x.v[0] * y.v[0];
        for (size_t i = 1; i < x.size(); ++i) s -= x.v[i] * y.v[i];
    } else {
        s += x.v[0] * y.v[1];
        s += x.v[1] * y.v[0];
        for (size_t i = 2; i < x.size(); ++i) s -= x.v[i] * y.v[i];
    }
    return s;
}

QuadPoly intersection_number(const LatticeType& l, const DivisorClass& x, const DivisorClass& y) {
    return dot(l, x, y);
}

QuadPoly self_intersection(const LatticeType& l, const DivisorClass& d) { return dot(l, d, d); }

IVec canonical_ivec(const LatticeType& l) {
    IVec k(l.rank(), 1);
    if (l.kind == LatticeKind::Plane) {
        k[0] = -3;
    } else {
        k[0] = k[1] = -2;
    }
    return k;
}

DivisorClass canonical_class(const LatticeType& l) { return DivisorClass(canonical_ivec(l)); }

IVec basis_vector(const LatticeType& l, int idx) {
    IVec v(l.rank(), 0);
    v.at(idx) = 1;
    return v;
}

IVec exceptional(const LatticeType& l, int i) {
    if (i < 1 || i > l.n) throw std::out_of_range("exceptional index");
    return basis_vector(l, l.offset() + i - 1);
}

IVec hyperplane(const LatticeType& l) {
    if (l.kind != LatticeKind::Plane) throw std::logic_error("hyperplane class on a quadric");
    return basis_vector(l, 0);
}

std::vector<IVec> exceptional_classes(const LatticeType& l, int maxDeg, int maxMult) {
    std::vector<IVec> out;
    IVec k = canonical_ivec(l);
    int off = l.offset();
    IVec x(l.rank(), 0);
    // Odometer over e-coefficients for each choice of leading coefficients.
    auto scan_tail = [&]() {
        std::fill(x.begin() + off, x.end(), -maxMult);
        while (true) {
            if (dot(l, x, x) == -1 && dot(l, x, k) == -1) {
                bool ok = true;
                bool lead_zero = true;
                for (int i = 0; i < off; ++i) lead_zero = lead_zero && x[i] == 0;
                if (lead_zero)
                    for (int i = off; i < l.rank(); ++i) ok = ok && x[i] >= 0;
                if (ok) out.push_back(x);
            }
            int i = off;
            while (i < l.rank() && x[i] == maxMult) x[i++] = -maxMult;
            if (i == l.rank()) break;
            ++x[i];
        }
    };
    if (l.kind == LatticeKind::Plane) {
        for (int a = 0; a <= maxDeg; ++a) {
            x[0] = a;
            scan_tail();
        }
    } else {
        for (int a = 0; a <= maxDeg; ++a)
            for (int b = 0; b <= maxDeg; ++b) {
                x[0] = a;
                x[1] = b;
                scan_tail();
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

const std::vector<IVec>& cached_exceptional(const LatticeType& l, int maxDeg, int maxMult) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, std::vector<IVec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(l.kind), l.n, maxDeg, maxMult);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, exceptional_classes(l, maxDeg, maxMult)).first;
    return it->second;
}

}  // namespace

NegativeCurveSet negative_curves(const LatticeType& l, int maxDeg, int maxMult) {
    if (l.rank() > 9) throw std::invalid_argument("unsupported rank " + std::to_string(l.rank()));
    NegativeCurveSet s;
    for (const auto& e : cached_exceptional(l, maxDeg, maxMult)) {
        bool irreducible = true;
        for (const auto& nc : l.special)
            if (dot(l, e, nc) < 0) irreducible = false;
        if (irreducible) s.minusOne.push_back(e);
    }
    for (const auto& nc : l.special)
        if (dot(l, nc, nc) == -2) s.minusTwo.push_back(nc);
    std::sort(s.minusTwo.begin(), s.minusTwo.end());
    return s;
}

std::vector<IVec> test_curves(const LatticeType& l, const std::vector<IVec>& exclude) {
    std::vector<IVec> out;
    auto add = [&](const IVec& v) {
        if (std::find(exclude.begin(), exclude.end(), v) != exclude.end()) return;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    auto neg = negative_curves(l);
    for (const auto& v : neg.minusOne) add(v);
    for (const auto& v : l.special) add(v);
    if (l.kind == LatticeKind::Plane) {
        add(basis_vector(l, 0));
        if (l.n == 1) {
            IVec f = basis_vector(l, 0);
            f[1] = -1;
            add(f);
        }
    } else {
        add(basis_vector(l, 0));
        add(basis_vector(l, 1));
    }
    return out;
}

std::vector<LinearConstraint> positivity_constraints(const LatticeType& l, const DivisorClass& d,
                                                     const std::vector<IVec>& exclude) {
    std::vector<LinearConstraint> out;
    for (const auto& cv : test_curves(l, exclude)) {
        LinearConstraint k = gt(dot(l, d, cv)).canonical();
        if (k.poly.is_const() && k.poly.q0 > 0) continue;
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    return out;
}

IVec BasisChange::apply(const IVec& x) const {
    IVec y(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
}

DivisorClass BasisChange::apply(const DivisorClass& x) const {
    DivisorClass y(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (m[i][j] != 0) y.v[i] += x.v[j] * Rational(m[i][j]);
    return y;
}

namespace {

// Build a change of basis from the images of the old basis vectors.
BasisChange from_images(const LatticeType& target, const std::vector<IVec>& images) {
    BasisChange bc;
    bc.target = target;
    bc.m.assign(target.rank(), IVec(images.size(), 0));
    for (size_t j = 0; j < images.size(); ++j)
        for (int i = 0; i < target.rank(); ++i) bc.m[i][j] = images[j][i];
    return bc;
}

LatticeType transport(const LatticeType& src, LatticeKind kind, int n, const BasisChange& partial) {
    LatticeType t;
    t.kind = kind;
    t.n = n;
    for (const auto& s : src.special) t.special.push_back(partial.apply(s));
    return t;
}

}  // namespace

BasisChange quadric_to_plane(const LatticeType& l) {
    if (l.kind != LatticeKind::Quadric || l.n < 1) throw std::logic_error("quadric_to_plane needs Bl_n F0, n >= 1");
    int N = l.n + 1;
    LatticeType tgt;
    tgt.kind = LatticeKind::Plane;
    tgt.n = N;
    auto E = [&](int i) {
        IVec v(N + 1, 0);
        v[i] = 1;
        return v;
    };
    IVec h = E(0);
    auto sub = [](IVec a, const IVec& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    };
    std::vector<IVec> img;
    img.push_back(sub(h, E(2)));
    img.push_back(sub(h, E(1)));
    img.push_back(sub(sub(h, E(1)), E(2)));
    for (int i = 2; i <= l.n; ++i) img.push_back(E(i + 1));
    BasisChange bc = from_images(tgt, img);
    bc.target = transport(l, LatticeKind::Plane, N, bc);
    return bc;
}

BasisChange plane_to_quadric(const LatticeType& l) {
    if (l.kind != LatticeKind::Plane || l.n < 2) throw std::logic_error("plane_to_quadric needs Bl_n P2, n >= 2");
    int n = l.n - 1;
    LatticeType tgt;
    tgt.kind = LatticeKind::Quadric;
    tgt.n = n;
    auto V = [&](int i) {
        IVec v(n + 2, 0);
        v[i] = 1;
        return v;
    };
    auto sub = [](IVec a, const IVec& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    };
    auto add = [](IVec a, const IVec& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    std::vector<IVec> img;
    img.push_back(sub(add(V(0), V(1)), V(2)));
    img.push_back(sub(V(0), V(2)));
    img.push_back(sub(V(1), V(2)));
    for (int k = 3; k <= l.n; ++k) img.push_back(V(k));
    BasisChange bc = from_images(tgt, img);
    bc.target = transport(l, LatticeKind::Quadric, n, bc);
    return bc;
}

BasisChange cremona(const LatticeType& l, int i, int j, int k) {
    if (l.kind != LatticeKind::Plane) throw std::logic_error("cremona on a quadric");
    if (i == j || j == k || i == k) throw std::invalid_argument("cremona indices must be distinct");
    IVec r(l.rank(), 0);
    r[0] = 1;
    for (int t : {i, j, k}) r.at(t) = -1;
    std::vector<IVec> img;
    for (int b = 0; b < l.rank(); ++b) {
        IVec x = basis_vector(l, b);
        long d = dot(l, x, r);
        for (int t = 0; t < l.rank(); ++t) x[t] += d * r[t];
        img.push_back(x);
    }
    LatticeType tgt;
    tgt.kind = LatticeKind::Plane;
    tgt.n = l.n;
    BasisChange bc = from_images(tgt, img);
    bc.target = transport(l, LatticeKind::Plane, l.n, bc);
    return bc;
}

namespace {

std::vector<std::string> basis_names(const LatticeType& l) {
    std::vector<std::string> names;
    if (l.kind == LatticeKind::Plane) {
        names.push_back("h");
    } else {
        names.push_back("h1");
        names.push_back("h2");
    }
    for (int i = 1; i <= l.n; ++i) names.push_back("e" + std::to_string(i));
    return names;
}

}  // namespace

std::string class_str(const LatticeType& l, const IVec& x) {
    return class_str(l, DivisorClass(x));
}

std::string class_str(const LatticeType& l, const DivisorClass& x) {
    auto names = basis_names(l);
    std::string s;
    for (size_t i = 0; i < x.size() && i < names.size(); ++i) {
        const AffinePoly& a = x.v[i];
        if (a.is_zero()) continue;
        if (a.is_const()) {
            bool negative = a.q0 < 0;
            std::string coef = to_string(negative ? Rational(-a.q0) : a.q0);
            if (coef == "1") coef.clear();
            s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
            s += coef + names[i];
        } else {
            s += s.empty() ? "" : " + ";
            s += "(" + a.str() + ")" + names[i];
        }
    }
    return s.empty() ? "0" : s;
}

IVec parse_class(const LatticeType& l, std::string_view sv) {
    std::string t;
    for (char ch : sv)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    IVec v(l.rank(), 0);
    if (t == "0") return v;
    size_t i = 0;
    while (i < t.size()) {
        long sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        long k = 1;
        size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j > i) k = std::stol(t.substr(i, j - i));
        i = j;
        if (i >= t.size()) throw std::invalid_argument("bad class: " + t);
        char sym = t[i++];
        size_t d = i;
        while (d < t.size() && std::isdigit(static_cast<unsigned char>(t[d]))) ++d;
        int idx = d > i ? std::stoi(t.substr(i, d - i)) : 0;
        i = d;
        if (sym == 'h') {
            if (l.kind == LatticeKind::Plane) {
                if (idx != 0) throw std::invalid_argument("h" + std::to_string(idx) + " on a plane lattice");
                v[0] += sign * k;
            } else {
                if (idx != 1 && idx != 2) throw std::invalid_argument("quadric classes use h1, h2");
                v[idx - 1] += sign * k;
            }
        } else if (sym == 'e') {
            if (idx < 1 || idx > l.n) throw std::invalid_argument("e index out of range: " + t);
            v[l.offset() + idx - 1] += sign * k;
        } else {
            throw std::invalid_argument("bad class symbol in " + t);
        }
    }
    return v;
}

}  // namespace cw
