#pragma once

#include "cw/picard.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cw {

struct BoundaryCurve {
    IVec cls;
    AffinePoly weight;  // nonnegative integer combination of b and c
    std::string role = "ordinary-line";
};

struct ConductorCurve {
    IVec cls;
    std::string gluingId;
};

struct Component {
    std::string id;
    LatticeType lattice;
    std::vector<BoundaryCurve> boundary;
    std::vector<ConductorCurve> conductors;
    std::vector<IVec> a1Nodes;
    std::vector<std::array<int, 3>> eckardt;  // boundary indices
    std::vector<int> eckardtAllowed;          // empty: default rule

    int find_conductor(const std::string& gluingId) const;
};

enum class CurveKind { Boundary, Conductor };

struct CurveRef {
    CurveKind kind = CurveKind::Boundary;
    int index = 0;
    bool operator==(const CurveRef&) const = default;
    auto operator<=>(const CurveRef&) const = default;
};

struct MultiPoint {
    std::string component;
    std::vector<CurveRef> curves;
    bool atA1 = false;
};

struct GluingRef {
    std::string component;
    std::string gluingId;
    bool operator==(const GluingRef&) const = default;
};

struct Gluing {
    GluingRef a, b;
    bool selfInvolution = false;
};

struct SurfaceModel {
    std::string typeLabel;
    std::vector<Component> components;
    std::vector<Gluing> gluings;
    std::vector<MultiPoint> points;

    int index_of(const std::string& id) const;
    const Component& at(const std::string& id) const;
    Component& at(const std::string& id);
    // Partner of a conductor, if glued.
    std::optional<GluingRef> partner(const GluingRef& r) const;
    std::string fresh_gluing_id() const;
};

// K + sum w_i B_i + sum conductors, before A1 discrepancy terms.
DivisorClass log_canonical_divisor_smooth(const Component& comp);
// Adds (D.N / 2) N for every contracted (-2) class N, so that D.N = 0.
DivisorClass log_canonical_divisor(const Component& comp);

AffinePoly curve_weight(const Component& comp, const CurveRef& r);
const IVec& curve_class(const Component& comp, const CurveRef& r);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_surface(const SurfaceModel& s, bool allowDangling = false);

// Blow up a point lying on the listed curves of `comp`. Returns the new exceptional class.
IVec blow_up_point(Component& comp, const std::vector<CurveRef>& incident);

// Remove curves and keep points/Eckardt triples consistent. Points left with fewer
// than two curves are dropped.
void erase_curves(SurfaceModel& s, const std::string& comp, std::vector<CurveRef> refs);

const std::vector<int>& smooth_cubic_eckardt_counts();

}  // namespace cw
