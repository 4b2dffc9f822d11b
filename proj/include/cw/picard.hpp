#pragma once

#include "cw/region.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace cw {

// Integral class: coefficient of h (or h1, h2) first, then e1..en.
// e_i is stored with coefficient +1, so h - e1 - e2 is {1, -1, -1, 0, ...}.
using IVec = std::vector<long>;

enum class LatticeKind { Plane, Quadric };

struct LatticeType {
    LatticeKind kind = LatticeKind::Plane;
    int n = 0;
    std::vector<std::array<int, 3>> colinearTriples;
    bool onConic = false;
    std::vector<int> onDiagonal;
    std::vector<std::pair<int, int>> infinitelyNear;
    // Irreducible curves of self-intersection <= -2 forced by the configuration.
    std::vector<IVec> special;

    static LatticeType plane(int n, std::vector<std::array<int, 3>> triples = {});
    static LatticeType quadric(int n, std::vector<int> diag = {});
    // Recompute `special` from the configuration keys.
    void derive_special();

    int rank() const { return kind == LatticeKind::Plane ? n + 1 : n + 2; }
    int offset() const { return kind == LatticeKind::Plane ? 1 : 2; }
    bool operator==(const LatticeType& o) const;
    std::string name() const;
};

struct DivisorClass {
    std::vector<AffinePoly> v;

    DivisorClass() = default;
    explicit DivisorClass(size_t rank) : v(rank) {}
    DivisorClass(const IVec& iv);

    size_t size() const { return v.size(); }
    bool is_integral() const;
    IVec to_ivec() const;
    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& o) { return a += o; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& o) { return a -= o; }
    friend DivisorClass operator*(const AffinePoly& k, const DivisorClass& d);
    bool operator==(const DivisorClass&) const = default;
};

struct NegativeCurveSet {
    std::vector<IVec> minusOne;
    std::vector<IVec> minusTwo;
};

long dot(const LatticeType& l, const IVec& x, const IVec& y);
AffinePoly dot(const LatticeType& l, const DivisorClass& x, const IVec& y);
QuadPoly dot(const LatticeType& l, const DivisorClass& x, const DivisorClass& y);
QuadPoly intersection_number(const LatticeType& l, const DivisorClass& x, const DivisorClass& y);
QuadPoly self_intersection(const LatticeType& l, const DivisorClass& d);

IVec canonical_ivec(const LatticeType& l);
DivisorClass canonical_class(const LatticeType& l);
IVec basis_vector(const LatticeType& l, int idx);  // 0 = h / h1, 1 = h2 (quadric), then e_i
IVec exceptional(const LatticeType& l, int i);     // e_i, 1-based
IVec hyperplane(const LatticeType& l);             // h (plane) only

// Exhaustive search with h-degree in [0, maxDeg] and e-coefficients in [-maxMult, maxMult].
std::vector<IVec> exceptional_classes(const LatticeType& l, int maxDeg = 3, int maxMult = 2);
NegativeCurveSet negative_curves(const LatticeType& l, int maxDeg = 3, int maxMult = 2);

// Curves whose positive intersection with a divisor characterizes ampleness.
std::vector<IVec> test_curves(const LatticeType& l, const std::vector<IVec>& exclude = {});
std::vector<LinearConstraint> positivity_constraints(const LatticeType& l, const DivisorClass& d,
                                                     const std::vector<IVec>& exclude = {});

// Change of basis maps; `m` acts on column vectors of coefficients.
struct BasisChange {
    LatticeType target;
    std::vector<IVec> m;  // m[i][j]: coefficient of new basis i in the image of old basis j
    IVec apply(const IVec& x) const;
    DivisorClass apply(const DivisorClass& x) const;
};

// Bl_n F0 presented as Bl_{n+1} P2: h1 -> h - E2, h2 -> h - E1, e1 -> h - E1 - E2, e_i -> E_{i+1}.
BasisChange quadric_to_plane(const LatticeType& l);
// Bl_n P2 (n >= 2) presented as Bl_{n-1} F0; inverse of quadric_to_plane.
BasisChange plane_to_quadric(const LatticeType& l);
// Reflection in h - e_i - e_j - e_k (1-based, distinct).
BasisChange cremona(const LatticeType& l, int i, int j, int k);

std::string class_str(const LatticeType& l, const IVec& x);
std::string class_str(const LatticeType& l, const DivisorClass& x);
IVec parse_class(const LatticeType& l, std::string_view s);

}  // namespace cw
