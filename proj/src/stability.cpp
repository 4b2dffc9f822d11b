#include "cw/stability.hpp"

#include <algorithm>

namespace cw {

QuadPoly target_volume() { return {3, -2, -52, -1, 20, 224}; }

namespace {

std::string curve_desc(const Component& comp, const CurveRef& r) {
    const IVec& cls = curve_class(comp, r);
    std::string kind = r.kind == CurveKind::Boundary ? "B" : "C";
    return kind + std::to_string(r.index) + "[" + class_str(comp.lattice, cls) + "]";
}

void add_unique(std::vector<SourcedConstraint>& out, SourcedConstraint sc) {
    sc.constraint = sc.constraint.canonical();
    if (sc.constraint.poly.is_const()) {
        const Rational& v = sc.constraint.poly.q0;
        bool ok = sc.constraint.rel == Rel::GT ? v > 0 : (sc.constraint.rel == Rel::GE ? v >= 0 : v == 0);
        if (ok) return;
    }
    for (const auto& x : out)
        if (x.constraint == sc.constraint) return;
    out.push_back(std::move(sc));
}

}  // namespace

std::vector<SourcedConstraint> slc_constraints_sourced(const SurfaceModel& s) {
    std::vector<SourcedConstraint> out;
    for (const auto& comp : s.components)
        for (size_t i = 0; i < comp.boundary.size(); ++i)
            add_unique(out, {ge(AffinePoly(1) - comp.boundary[i].weight), "slc",
                             "weight of " + curve_desc(comp, {CurveKind::Boundary, static_cast<int>(i)}) + " on component " + comp.id});
    auto point_constraint = [&](const Component& comp, const std::vector<CurveRef>& curves, bool atA1) {
        AffinePoly sum;
        std::string desc = atA1 ? "A1 point on" : "point on";
        for (const auto& r : curves) {
            sum += curve_weight(comp, r);
            desc += " " + curve_desc(comp, r);
        }
        desc += " on component " + comp.id;
        add_unique(out, {ge(AffinePoly(2) - sum), "slc", desc});
    };
    for (const auto& p : s.points) point_constraint(s.at(p.component), p.curves, p.atA1);
    for (const auto& comp : s.components)
        for (const auto& t : comp.eckardt) {
            std::vector<CurveRef> refs;
            for (int i : t) refs.push_back({CurveKind::Boundary, i});
            point_constraint(comp, refs, false);
        }
    return out;
}

std::vector<SourcedConstraint> ample_constraints_sourced(const SurfaceModel& s) {
    std::vector<SourcedConstraint> out;
    for (const auto& comp : s.components) {
        DivisorClass d = log_canonical_divisor(comp);
        for (const auto& cv : test_curves(comp.lattice, comp.a1Nodes)) {
            std::string what = dot(comp.lattice, cv, cv) == 0 ? "ruling " : "curve ";
            add_unique(out, {gt(dot(comp.lattice, d, cv)), "ample", what + class_str(comp.lattice, cv) + " on component " + comp.id});
        }
    }
    return out;
}

std::vector<LinearConstraint> slc_constraints(const SurfaceModel& s) {
    std::vector<LinearConstraint> v;
    for (const auto& sc : slc_constraints_sourced(s)) v.push_back(sc.constraint);
    return v;
}

std::vector<LinearConstraint> ample_constraints(const SurfaceModel& s) {
    std::vector<LinearConstraint> v;
    for (const auto& sc : ample_constraints_sourced(s)) v.push_back(sc.constraint);
    return v;
}

QuadPoly component_volume(const Component& comp) {
    return self_intersection(comp.lattice, log_canonical_divisor(comp));
}

QuadPoly volume(const SurfaceModel& s) {
    QuadPoly v;
    for (const auto& comp : s.components) v += component_volume(comp);
    return v;
}

VolumeCheck volume_check(const SurfaceModel& s, const QuadPoly& target) {
    VolumeCheck vc;
    QuadPoly diff = volume(s) - target;
    if (diff.is_zero()) {
        vc.identical = vc.satisfiable = true;
        return vc;
    }
    Rational k;
    AffinePoly lin;
    if (as_scaled_square(diff, k, lin)) {
        vc.satisfiable = true;
        vc.constraint = eq(lin).canonical();
    } else {
        vc.constraint = eq(AffinePoly(1));
    }
    return vc;
}

Region stability_region(const SurfaceModel& s, Ambient amb) {
    std::vector<LinearConstraint> cons = slc_constraints(s);
    for (auto& k : ample_constraints(s)) cons.push_back(k);
    auto vc = volume_check(s);
    if (vc.constraint) cons.push_back(*vc.constraint);
    return Region(std::move(cons), amb).normalized();
}

StabilityReport stability_report(const SurfaceModel& s, std::optional<Point> at, Ambient amb) {
    StabilityReport rep;
    auto slc = slc_constraints_sourced(s);
    auto amp = ample_constraints_sourced(s);
    std::vector<LinearConstraint> ks, ka;
    for (const auto& x : slc) ks.push_back(x.constraint);
    for (const auto& x : amp) ka.push_back(x.constraint);
    rep.slcRegion = Region(ks, amb).normalized();
    rep.ampleRegion = Region(ka, amb).normalized();
    rep.volume = volume(s);
    auto vc = volume_check(s);
    rep.volumeMatchesTarget = vc.identical;
    rep.region = stability_region(s, amb);
    rep.at = at;
    if (at) {
        for (const auto& k : ambient_constraints(amb))
            if (!k.holds(at->b, at->c)) rep.failingCertificates.push_back({"domain", "weight domain", k});
        for (const auto* list : {&slc, &amp})
            for (const auto& sc : *list)
                if (!sc.constraint.holds(at->b, at->c))
                    rep.failingCertificates.push_back({sc.condition, sc.source, sc.constraint});
        if (vc.constraint && !vc.constraint->holds(at->b, at->c))
            rep.failingCertificates.push_back({"volume", "volume " + rep.volume.str(), *vc.constraint});
        rep.stableAt = rep.failingCertificates.empty();
    }
    return rep;
}

}  // namespace cw
