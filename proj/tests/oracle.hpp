#pragma once

// Helpers recomputed from first principles, used to cross-check the library.

#include "cw/surface.hpp"

#include <functional>
#include <vector>

namespace oracle {

using cw::Rational;

// Intersection pairing written out by hand: h^2 = 1 on the plane, h1.h2 = 1 on the quadric, e_i^2 = -1.
inline Rational pair(const cw::LatticeType& l, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    int off = 1;
    if (l.kind == cw::LatticeKind::Plane) {
        s = x[0] * y[0];
    } else {
        s = x[0] * y[1] + x[1] * y[0];
        off = 2;
    }
    for (size_t i = off; i < x.size(); ++i) s -= x[i] * y[i];
    return s;
}

inline std::vector<Rational> vec(const cw::IVec& v) { return {v.begin(), v.end()}; }

// K + sum w B + sum conductors at (b, c), then the A1 nodes made orthogonal.
inline std::vector<Rational> lc_divisor(const cw::Component& comp, const Rational& b, const Rational& c) {
    const auto& l = comp.lattice;
    int rank = l.kind == cw::LatticeKind::Plane ? l.n + 1 : l.n + 2;
    std::vector<Rational> d(rank, 1);
    if (l.kind == cw::LatticeKind::Plane) {
        d[0] = -3;
    } else {
        d[0] = d[1] = -2;
    }
    for (const auto& bc : comp.boundary) {
        Rational w = bc.weight.q0 + bc.weight.qb * b + bc.weight.qc * c;
        for (int i = 0; i < rank; ++i) d[i] += w * bc.cls[i];
    }
    for (const auto& cc : comp.conductors)
        for (int i = 0; i < rank; ++i) d[i] += cc.cls[i];
    for (const auto& n : comp.a1Nodes) {
        auto nv = vec(n);
        Rational t = pair(l, d, nv) / 2;
        for (int i = 0; i < rank; ++i) d[i] += t * nv[i];
    }
    return d;
}

inline Rational component_volume(const cw::Component& comp, const Rational& b, const Rational& c) {
    auto d = lc_divisor(comp, b, c);
    return pair(comp.lattice, d, d);
}

inline Rational model_volume(const cw::SurfaceModel& s, const Rational& b, const Rational& c) {
    Rational v = 0;
    for (const auto& comp : s.components) v += component_volume(comp, b, c);
    return v;
}

// A quadratic in (b, c) is determined by its values on a 3x3 grid.
inline bool same_quadratic(const std::function<Rational(const Rational&, const Rational&)>& f,
                           const std::function<Rational(const Rational&, const Rational&)>& g) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational b(i + 1, 3), c(2 * j - 1, 5);
            if (f(b, c) != g(b, c)) return false;
        }
    return true;
}

inline std::function<Rational(const Rational&, const Rational&)> fn(const cw::QuadPoly& q) {
    return [q](const Rational& b, const Rational& c) { return q.eval(b, c); };
}

// All dh - sum m_i e_i on Bl_n P2 with given self-intersection and degree against -K.
inline std::vector<cw::IVec> plane_classes(int n, long self, long antiK, int maxDeg, int maxMult) {
    std::vector<cw::IVec> out;
    cw::IVec x(n + 1, 0);
    for (long d = 0; d <= maxDeg; ++d) {
        x[0] = d;
        std::vector<long> m(n, -maxMult);
        while (true) {
            long sq = d * d, k = 3 * d;
            for (long v : m) {
                sq -= v * v;
                k -= v;
            }
            if (sq == self && k == antiK) {
                for (int i = 0; i < n; ++i) x[i + 1] = -m[i];
                out.push_back(x);
            }
            int i = 0;
            while (i < n && m[i] == maxMult) m[i++] = -maxMult;
            if (i == n) break;
            ++m[i];
        }
    }
    return out;
}

}  // namespace oracle
