#include "cw/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cw {

int Component::find_conductor(const std::string& gluingId) const {
    for (size_t i = 0; i < conductors.size(); ++i)
        if (conductors[i].gluingId == gluingId) return static_cast<int>(i);
    return -1;
}

int SurfaceModel::index_of(const std::string& id) const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].id == id) return static_cast<int>(i);
    return -1;
}

const Component& SurfaceModel::at(const std::string& id) const {
    int i = index_of(id);
    if (i < 0) throw std::out_of_range("no component " + id);
    return components[i];
}

Component& SurfaceModel::at(const std::string& id) {
    int i = index_of(id);
    if (i < 0) throw std::out_of_range("no component " + id);
    return components[i];
}

std::optional<GluingRef> SurfaceModel::partner(const GluingRef& r) const {
    for (const auto& g : gluings) {
        if (g.a == r) return g.b;
        if (g.b == r) return g.a;
    }
    return std::nullopt;
}

std::string SurfaceModel::fresh_gluing_id() const {
    std::set<std::string> used;
    for (const auto& c : components)
        for (const auto& k : c.conductors) used.insert(k.gluingId);
    for (int i = 0;; ++i) {
        std::string id = "n" + std::to_string(i);
        if (!used.count(id)) return id;
    }
}

DivisorClass log_canonical_divisor_smooth(const Component& comp) {
    DivisorClass d = canonical_class(comp.lattice);
    for (const auto& bc : comp.boundary) d += bc.weight * DivisorClass(bc.cls);
    for (const auto& cc : comp.conductors) d += DivisorClass(cc.cls);
    return d;
}

DivisorClass log_canonical_divisor(const Component& comp) {
    DivisorClass d0 = log_canonical_divisor_smooth(comp);
    DivisorClass d = d0;
    for (const auto& nc : comp.a1Nodes) {
        AffinePoly a = dot(comp.lattice, d0, nc) * Rational(1, 2);
        d += a * DivisorClass(nc);
    }
    return d;
}

AffinePoly curve_weight(const Component& comp, const CurveRef& r) {
    if (r.kind == CurveKind::Conductor) return AffinePoly(1);
    return comp.boundary.at(r.index).weight;
}

const IVec& curve_class(const Component& comp, const CurveRef& r) {
    if (r.kind == CurveKind::Conductor) return comp.conductors.at(r.index).cls;
    return comp.boundary.at(r.index).cls;
}

const std::vector<int>& smooth_cubic_eckardt_counts() {
    static const std::vector<int> v = {0, 1, 2, 3, 4, 6, 9, 10, 18};
    return v;
}

namespace {

bool weight_ok(const AffinePoly& w) {
    auto nonneg_int = [](const Rational& q) { return q >= 0 && boost::multiprecision::denominator(q) == 1; };
    return w.q0 == 0 && nonneg_int(w.qb) && nonneg_int(w.qc) && !w.is_zero();
}

bool smooth_rational(const LatticeType& l, const IVec& c) {
    return dot(l, c, c) + dot(l, c, canonical_ivec(l)) == -2;
}

}  // namespace

ValidationReport validate_surface(const SurfaceModel& s, bool allowDangling) {
    ValidationReport rep;
    auto bad = [&](std::string m) { rep.violations.push_back(std::move(m)); };
    std::set<std::string> ids;
    for (const auto& comp : s.components) {
        const std::string where = "component " + comp.id;
        if (!ids.insert(comp.id).second) bad(where + ": duplicate id");
        const auto& l = comp.lattice;
        if (l.n < 0 || l.rank() > 9) bad(where + ": unsupported lattice rank");
        auto check_class = [&](const IVec& c, const std::string& what) {
            if (static_cast<int>(c.size()) != l.rank()) {
                bad(where + ": " + what + " has wrong length");
                return false;
            }
            return true;
        };
        for (size_t i = 0; i < comp.boundary.size(); ++i) {
            const auto& bc = comp.boundary[i];
            std::string what = "boundary " + std::to_string(i);
            if (!check_class(bc.cls, what)) continue;
            if (!weight_ok(bc.weight)) bad(where + ": " + what + " has invalid weight " + bc.weight.str());
            if (!smooth_rational(l, bc.cls)) bad(where + ": " + what + " is not a smooth rational class");
            for (const auto& nc : l.special)
                if (nc != bc.cls && dot(l, bc.cls, nc) < 0)
                    bad(where + ": " + what + " is reducible (meets " + class_str(l, nc) + " negatively)");
        }
        std::set<std::string> gids;
        for (size_t i = 0; i < comp.conductors.size(); ++i) {
            const auto& cc = comp.conductors[i];
            std::string what = "conductor " + cc.gluingId;
            if (!gids.insert(cc.gluingId).second) bad(where + ": duplicate gluing id " + cc.gluingId);
            if (!check_class(cc.cls, what)) continue;
            if (!smooth_rational(l, cc.cls)) bad(where + ": " + what + " fails adjunction (not genus 0)");
            if (!allowDangling && !s.partner({comp.id, cc.gluingId}))
                bad(where + ": dangling gluing " + cc.gluingId);
        }
        for (const auto& nc : comp.a1Nodes)
            if (check_class(nc, "a1 node") && (dot(l, nc, nc) != -2 || dot(l, nc, canonical_ivec(l)) != 0))
                bad(where + ": a1 node " + class_str(l, nc) + " is not a (-2) class");
        for (const auto& t : comp.eckardt) {
            bool inRange = true;
            for (int i : t)
                if (i < 0 || i >= static_cast<int>(comp.boundary.size())) inRange = false;
            if (!inRange) {
                bad(where + ": Eckardt triple references a missing curve");
                continue;
            }
            for (int x = 0; x < 3; ++x)
                for (int y = x + 1; y < 3; ++y)
                    if (dot(l, comp.boundary[t[x]].cls, comp.boundary[t[y]].cls) < 1)
                        bad(where + ": Eckardt triple curves do not meet pairwise");
        }
        int count = static_cast<int>(comp.eckardt.size());
        const std::vector<int>* allowed = nullptr;
        if (!comp.eckardtAllowed.empty()) {
            allowed = &comp.eckardtAllowed;
        } else if (l.kind == LatticeKind::Plane && l.n == 6 && l.special.empty()) {
            allowed = &smooth_cubic_eckardt_counts();
        }
        if (allowed && std::find(allowed->begin(), allowed->end(), count) == allowed->end())
            bad(where + ": " + std::to_string(count) + " Eckardt points not in the allowed set");
    }
    for (const auto& g : s.gluings) {
        for (const GluingRef* r : {&g.a, &g.b}) {
            int ci = s.index_of(r->component);
            if (ci < 0 || s.components[ci].find_conductor(r->gluingId) < 0)
                bad("gluing references missing conductor " + r->component + ":" + r->gluingId);
        }
        if (g.selfInvolution) {
            if (!(g.a == g.b)) bad("self-involution gluing with distinct ends");
        } else if (g.a == g.b) {
            bad("gluing partners must be distinct: " + g.a.component + ":" + g.a.gluingId);
        }
    }
    std::map<std::pair<std::string, std::string>, int> uses;
    for (const auto& g : s.gluings) {
        ++uses[{g.a.component, g.a.gluingId}];
        if (!g.selfInvolution) ++uses[{g.b.component, g.b.gluingId}];
    }
    for (const auto& [k, n] : uses)
        if (n > 1) bad("conductor " + k.first + ":" + k.second + " appears in " + std::to_string(n) + " gluings");
    for (const auto& p : s.points) {
        int ci = s.index_of(p.component);
        if (ci < 0) {
            bad("point on missing component " + p.component);
            continue;
        }
        const auto& comp = s.components[ci];
        for (const auto& r : p.curves) {
            size_t lim = r.kind == CurveKind::Boundary ? comp.boundary.size() : comp.conductors.size();
            if (r.index < 0 || static_cast<size_t>(r.index) >= lim) bad("point on " + comp.id + " references a missing curve");
        }
        size_t need = p.atA1 ? 1 : 2;
        if (p.curves.size() < need) bad("point on " + comp.id + " has too few curves");
    }
    return rep;
}

IVec blow_up_point(Component& comp, const std::vector<CurveRef>& incident) {
    auto& l = comp.lattice;
    if (l.rank() + 1 > 9) throw std::length_error("blow-up exceeds lattice rank 9 on " + comp.id);
    auto extend = [](IVec& v) { v.push_back(0); };
    for (auto& b : comp.boundary) extend(b.cls);
    for (auto& c : comp.conductors) extend(c.cls);
    for (auto& a : comp.a1Nodes) extend(a);
    for (auto& s : l.special) extend(s);
    l.n += 1;
    // The configuration keys describe the old points; special classes now carry the data.
    for (const auto& r : incident) {
        IVec& c = r.kind == CurveKind::Boundary ? comp.boundary.at(r.index).cls : comp.conductors.at(r.index).cls;
        c.back() -= 1;
        if (dot(l, c, c) <= -2 && std::find(l.special.begin(), l.special.end(), c) == l.special.end())
            l.special.push_back(c);
    }
    return exceptional(l, l.n);
}

void erase_curves(SurfaceModel& s, const std::string& compId, std::vector<CurveRef> refs) {
    Component& comp = s.at(compId);
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    auto remap = [&](const CurveRef& r) -> int {
        if (std::binary_search(refs.begin(), refs.end(), r)) return -1;
        int shift = 0;
        for (const auto& x : refs)
            if (x.kind == r.kind && x.index < r.index) ++shift;
        return r.index - shift;
    };
    for (auto& p : s.points) {
        if (p.component != compId) continue;
        std::vector<CurveRef> kept;
        for (const auto& r : p.curves) {
            int ni = remap(r);
            if (ni >= 0) kept.push_back({r.kind, ni});
        }
        p.curves = std::move(kept);
    }
    s.points.erase(std::remove_if(s.points.begin(), s.points.end(),
                                  [&](const MultiPoint& p) {
                                      return p.component == compId && p.curves.size() < (p.atA1 ? 1u : 2u);
                                  }),
                   s.points.end());
    std::vector<std::array<int, 3>> ecks;
    for (const auto& t : comp.eckardt) {
        std::array<int, 3> nt{};
        bool keep = true;
        for (int i = 0; i < 3; ++i) {
            int ni = remap({CurveKind::Boundary, t[i]});
            if (ni < 0) keep = false;
            nt[i] = ni;
        }
        if (keep) ecks.push_back(nt);
    }
    comp.eckardt = std::move(ecks);
    for (auto it = refs.rbegin(); it != refs.rend(); ++it) {
        if (it->kind == CurveKind::Boundary) {
            comp.boundary.erase(comp.boundary.begin() + it->index);
        } else {
            std::string gid = comp.conductors.at(it->index).gluingId;
            comp.conductors.erase(comp.conductors.begin() + it->index);
            GluingRef me{compId, gid};
            s.gluings.erase(std::remove_if(s.gluings.begin(), s.gluings.end(),
                                           [&](const Gluing& g) { return g.a == me || g.b == me; }),
                            s.gluings.end());
        }
    }
}

}  // namespace cw
