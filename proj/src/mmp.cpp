#include "cw/mmp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cw {

const char* step_name(StepKind k) {
    switch (k) {
        case StepKind::BlowDownMinusOne: return "BlowDownMinusOne";
        case StepKind::ContractRulingToCurve: return "ContractRulingToCurve";
        case StepKind::ContractComponentToPoint: return "ContractComponentToPoint";
        case StepKind::ContractComponentToCurve: return "ContractComponentToCurve";
        case StepKind::ContractMinusTwoToNode: return "ContractMinusTwoToNode";
        case StepKind::BlowUpPoint: return "BlowUpPoint";
        case StepKind::AttachPlaneAtExceptional: return "AttachPlaneAtExceptional";
    }
    return "?";
}

StepKind parse_step_kind(std::string_view s) {
    for (auto k : {StepKind::BlowDownMinusOne, StepKind::ContractRulingToCurve, StepKind::ContractComponentToPoint,
                   StepKind::ContractComponentToCurve, StepKind::ContractMinusTwoToNode, StepKind::BlowUpPoint,
                   StepKind::AttachPlaneAtExceptional})
        if (s == step_name(k)) return k;
    throw std::invalid_argument("unknown step tag: " + std::string(s));
}

bool vanishes_on(const AffinePoly& p, const LinearConstraint& wall) {
    const AffinePoly& w = wall.poly;
    return p.qb * w.qc == p.qc * w.qb && p.q0 * w.qb == p.qb * w.q0 && p.q0 * w.qc == p.qc * w.q0;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) { throw StepError(where + ": " + msg); }

void apply_change(Component& comp, const BasisChange& bc, std::vector<IVec>& pending, size_t from) {
    for (auto& b : comp.boundary) b.cls = bc.apply(b.cls);
    for (auto& c : comp.conductors) c.cls = bc.apply(c.cls);
    for (auto& a : comp.a1Nodes) a = bc.apply(a);
    for (size_t j = from; j < pending.size(); ++j) pending[j] = bc.apply(pending[j]);
    comp.lattice = bc.target;
}

int basis_exceptional_index(const LatticeType& l, const IVec& v) {
    int off = l.offset();
    int found = -1;
    for (int i = 0; i < l.rank(); ++i) {
        if (v[i] == 0) continue;
        if (v[i] != 1 || i < off || found >= 0) return -1;
        found = i - off + 1;
    }
    return found;
}

// Change basis until pending[idx] is a basis exceptional class; returns its index.
int make_exceptional(Component& comp, std::vector<IVec>& pending, size_t idx) {
    for (int guard = 0; guard < 64; ++guard) {
        const LatticeType& l = comp.lattice;
        const IVec& e = pending[idx];
        int k = basis_exceptional_index(l, e);
        if (k > 0) return k;
        if (l.kind == LatticeKind::Quadric) {
            if (l.n == 0) break;
            apply_change(comp, quadric_to_plane(l), pending, idx);
            continue;
        }
        if (e[0] <= 0) break;
        if (l.n >= 3) {
            std::vector<int> order;
            for (int i = 1; i <= l.n; ++i) order.push_back(i);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return -e[a] > -e[b]; });
            apply_change(comp, cremona(l, order[0], order[1], order[2]), pending, idx);
        } else if (l.n == 2) {
            apply_change(comp, plane_to_quadric(l), pending, idx);
        } else {
            break;
        }
    }
    fail(comp.id, "cannot reduce " + class_str(comp.lattice, pending[idx]) + " to an exceptional basis class");
}

IVec drop_coord(const IVec& v, int pos) {
    IVec out = v;
    out.erase(out.begin() + pos);
    return out;
}

void delete_exceptional(Component& comp, int k, std::vector<IVec>& pending, size_t from) {
    int pos = comp.lattice.offset() + k - 1;
    for (auto& b : comp.boundary) b.cls = drop_coord(b.cls, pos);
    for (auto& c : comp.conductors) c.cls = drop_coord(c.cls, pos);
    for (auto& a : comp.a1Nodes) a = drop_coord(a, pos);
    for (size_t j = from; j < pending.size(); ++j) pending[j] = drop_coord(pending[j], pos);
    LatticeType l;
    l.kind = comp.lattice.kind;
    l.n = comp.lattice.n - 1;
    for (const auto& s : comp.lattice.special) {
        IVec t = drop_coord(s, pos);
        bool zero = std::all_of(t.begin(), t.end(), [](long x) { return x == 0; });
        if (!zero && dot(l, t, t) <= -2 && std::find(l.special.begin(), l.special.end(), t) == l.special.end())
            l.special.push_back(t);
    }
    comp.lattice = l;
}

std::vector<CurveRef> curves_of_class(const Component& comp, const IVec& cls) {
    std::vector<CurveRef> out;
    for (size_t i = 0; i < comp.boundary.size(); ++i)
        if (comp.boundary[i].cls == cls) out.push_back({CurveKind::Boundary, static_cast<int>(i)});
    for (size_t i = 0; i < comp.conductors.size(); ++i)
        if (comp.conductors[i].cls == cls) out.push_back({CurveKind::Conductor, static_cast<int>(i)});
    return out;
}

std::vector<CurveRef> incident_curves(const Component& comp, const IVec& e) {
    std::vector<CurveRef> out;
    auto visit = [&](CurveKind kind, size_t n) {
        for (size_t i = 0; i < n; ++i) {
            CurveRef r{kind, static_cast<int>(i)};
            long k = dot(comp.lattice, curve_class(comp, r), e);
            for (long t = 0; t < k; ++t) out.push_back(r);
        }
    };
    visit(CurveKind::Boundary, comp.boundary.size());
    visit(CurveKind::Conductor, comp.conductors.size());
    return out;
}

void drop_points_touching(SurfaceModel& m, const std::string& compId, const std::vector<CurveRef>& refs) {
    m.points.erase(std::remove_if(m.points.begin(), m.points.end(),
                                  [&](const MultiPoint& p) {
                                      if (p.component != compId) return false;
                                      for (const auto& r : p.curves)
                                          if (std::find(refs.begin(), refs.end(), r) != refs.end()) return true;
                                      return false;
                                  }),
                   m.points.end());
}

void remove_component(SurfaceModel& m, const std::string& id) {
    m.gluings.erase(std::remove_if(m.gluings.begin(), m.gluings.end(),
                                   [&](const Gluing& g) { return g.a.component == id || g.b.component == id; }),
                    m.gluings.end());
    m.points.erase(std::remove_if(m.points.begin(), m.points.end(), [&](const MultiPoint& p) { return p.component == id; }),
                   m.points.end());
    m.components.erase(m.components.begin() + m.index_of(id));
}

void conductor_to_boundary(SurfaceModel& m, const GluingRef& ref, const AffinePoly& weight, const std::string& role) {
    Component& comp = m.at(ref.component);
    int ci = comp.find_conductor(ref.gluingId);
    if (ci < 0) fail(ref.component, "no conductor " + ref.gluingId);
    int bi = static_cast<int>(comp.boundary.size());
    comp.boundary.push_back({comp.conductors[ci].cls, weight, role});
    comp.conductors.erase(comp.conductors.begin() + ci);
    for (auto& p : m.points) {
        if (p.component != ref.component) continue;
        for (auto& r : p.curves) {
            if (r.kind != CurveKind::Conductor) continue;
            if (r.index == ci) {
                r = {CurveKind::Boundary, bi};
            } else if (r.index > ci) {
                --r.index;
            }
        }
    }
    m.gluings.erase(std::remove_if(m.gluings.begin(), m.gluings.end(),
                                   [&](const Gluing& g) { return g.a == ref || g.b == ref; }),
                    m.gluings.end());
}

std::vector<CurveRef> resolve_selectors(const Component& comp, const std::vector<CurveSelector>& sel) {
    std::vector<CurveRef> out;
    for (const auto& s : sel) {
        bool found = false;
        for (const auto& r : curves_of_class(comp, s.cls)) {
            if (s.kind && r.kind != *s.kind) continue;
            if (s.weight && !(curve_weight(comp, r) == *s.weight)) continue;
            if (std::find(out.begin(), out.end(), r) != out.end()) continue;
            out.push_back(r);
            found = true;
            break;
        }
        if (!found) fail(comp.id, "no curve of class " + class_str(comp.lattice, s.cls) + " for the point");
    }
    return out;
}

void drop_point_exactly(SurfaceModel& m, const std::string& compId, std::vector<CurveRef> refs) {
    std::sort(refs.begin(), refs.end());
    m.points.erase(std::remove_if(m.points.begin(), m.points.end(),
                                  [&](const MultiPoint& p) {
                                      if (p.component != compId) return false;
                                      auto c = p.curves;
                                      std::sort(c.begin(), c.end());
                                      c.erase(std::unique(c.begin(), c.end()), c.end());
                                      return c == refs;
                                  }),
                   m.points.end());
    Component& comp = m.at(compId);
    comp.eckardt.erase(std::remove_if(comp.eckardt.begin(), comp.eckardt.end(),
                                      [&](const std::array<int, 3>& t) {
                                          std::vector<CurveRef> c;
                                          for (int i : t) c.push_back({CurveKind::Boundary, i});
                                          std::sort(c.begin(), c.end());
                                          return c == refs;
                                      }),
                       comp.eckardt.end());
}

void step_blow_down(SurfaceModel& m, const TransitionStep& st, const LinearConstraint& wall) {
    std::vector<IVec> pending = st.classes;
    for (size_t i = 0; i < pending.size(); ++i) {
        Component& comp = m.at(st.component);
        const LatticeType& l = comp.lattice;
        const IVec e = pending[i];
        if (static_cast<int>(e.size()) != l.rank()) fail(comp.id, "class has wrong length for blow-down");
        if (dot(l, e, e) != -1 || dot(l, e, canonical_ivec(l)) != -1)
            fail(comp.id, class_str(l, e) + " is not a (-1) class");
        AffinePoly de = dot(l, log_canonical_divisor(comp), e);
        if (!vanishes_on(de, wall))
            fail(comp.id, "blow-down of " + class_str(l, e) + " needs D.E = 0 on the wall, got " + de.str());
        auto own = curves_of_class(comp, e);
        drop_points_touching(m, comp.id, own);
        erase_curves(m, comp.id, own);
        Component& c2 = m.at(st.component);
        int k = make_exceptional(c2, pending, i);
        auto inc = incident_curves(c2, pending[i]);
        delete_exceptional(c2, k, pending, i + 1);
        if (inc.size() >= 2) m.points.push_back({c2.id, inc, false});
    }
}

void step_contract_to_point(SurfaceModel& m, const TransitionStep& st, const LinearConstraint& wall) {
    const Component& comp = m.at(st.component);
    DivisorClass d = log_canonical_divisor(comp);
    for (const auto& a : d.v)
        if (!vanishes_on(a, wall))
            fail(comp.id, "contraction to a point needs D = 0 on the wall, got " + class_str(comp.lattice, d));
    remove_component(m, st.component);
}

void step_contract_ruling(SurfaceModel& m, const TransitionStep& st, const LinearConstraint& wall) {
    const Component& comp = m.at(st.component);
    if (st.classes.size() != 1) fail(comp.id, "ruling contraction takes exactly one class");
    const LatticeType& l = comp.lattice;
    const IVec& r = st.classes[0];
    if (static_cast<int>(r.size()) != l.rank() || dot(l, r, r) != 0) fail(comp.id, "ruling class must have square 0");
    AffinePoly dr = dot(l, log_canonical_divisor(comp), r);
    if (!vanishes_on(dr, wall)) fail(comp.id, "ruling contraction needs D.r = 0 on the wall, got " + dr.str());
    AffinePoly w;
    bool marked = false;
    for (const auto& b : comp.boundary) {
        long k = dot(l, b.cls, r);
        if (k > 0) {
            w += b.weight * Rational(k);
            marked = marked || b.role == "marked-line";
        }
    }
    std::vector<GluingRef> sections;
    for (const auto& c : comp.conductors) {
        long k = dot(l, c.cls, r);
        if (k == 0) continue;
        if (k > 1) fail(comp.id, "multisection conductors are not supported");
        auto p = m.partner({comp.id, c.gluingId});
        if (!p) fail(comp.id, "section conductor " + c.gluingId + " has no partner");
        sections.push_back(*p);
    }
    std::string id = comp.id;
    remove_component(m, id);
    if (sections.size() == 1) {
        if (!st.absorbing.empty() && sections[0].component != st.absorbing)
            fail(id, "image curve lands on " + sections[0].component + ", expected " + st.absorbing);
        if (w.is_zero()) {
            Component& tgt = m.at(sections[0].component);
            int ci = tgt.find_conductor(sections[0].gluingId);
            erase_curves(m, tgt.id, {{CurveKind::Conductor, ci}});
        } else {
            conductor_to_boundary(m, sections[0], w, marked ? "marked-line" : "ordinary-line");
        }
    } else if (sections.size() == 2) {
        if (!w.is_zero()) fail(id, "boundary sections between two glued sections are not supported");
        m.gluings.push_back({sections[0], sections[1], false});
    } else {
        fail(id, "ruling contraction needs one or two section conductors, found " + std::to_string(sections.size()));
    }
}

void step_node(SurfaceModel& m, const TransitionStep& st, const LinearConstraint& wall) {
    for (const auto& nc : st.classes) {
        Component& comp = m.at(st.component);
        const LatticeType& l = comp.lattice;
        if (static_cast<int>(nc.size()) != l.rank() || dot(l, nc, nc) != -2 || dot(l, nc, canonical_ivec(l)) != 0)
            fail(comp.id, "node contraction needs a (-2) class");
        AffinePoly dn = dot(l, log_canonical_divisor(comp), nc);
        if (!vanishes_on(dn, wall)) fail(comp.id, "node contraction needs D.N = 0 on the wall, got " + dn.str());
        auto own = curves_of_class(comp, nc);
        drop_points_touching(m, comp.id, own);
        erase_curves(m, comp.id, own);
        Component& c2 = m.at(st.component);
        auto inc = incident_curves(c2, nc);
        c2.a1Nodes.push_back(nc);
        if (!inc.empty()) m.points.push_back({c2.id, inc, true});
    }
}

void step_blow_up(SurfaceModel& m, const TransitionStep& st) {
    Component& comp = m.at(st.component);
    auto refs = resolve_selectors(comp, st.point);
    drop_point_exactly(m, comp.id, refs);
    Component& c2 = m.at(st.component);
    IVec e = blow_up_point(c2, refs);
    if (st.glueTo) {
        std::string gid = st.glueTo->gluingId;
        if (c2.find_conductor(gid) >= 0) gid = m.fresh_gluing_id();
        c2.conductors.push_back({e, gid});
        m.gluings.push_back({{c2.id, gid}, *st.glueTo, false});
    } else {
        if (!st.newWeight) fail(c2.id, "blow-up needs a weight or a gluing target for the exceptional curve");
        c2.boundary.push_back({e, *st.newWeight, "exceptional"});
    }
}

void step_attach_plane(SurfaceModel& m, const TransitionStep& st) {
    Component& comp = m.at(st.component);
    auto refs = resolve_selectors(comp, st.point);
    std::vector<AffinePoly> weights;
    for (const auto& r : refs) weights.push_back(curve_weight(comp, r));
    drop_point_exactly(m, comp.id, refs);
    std::string gid = m.fresh_gluing_id();
    Component& c2 = m.at(st.component);
    IVec e = blow_up_point(c2, refs);
    c2.conductors.push_back({e, gid});
    Component plane;
    plane.id = st.newComponent.empty() ? c2.id + "-E" : st.newComponent;
    if (m.index_of(plane.id) >= 0) fail(plane.id, "component already exists");
    plane.lattice = LatticeType::plane(0);
    for (const auto& w : weights) plane.boundary.push_back({{1}, w, "ordinary-line"});
    plane.conductors.push_back({{1}, gid});
    std::string host = c2.id;
    m.components.push_back(plane);
    m.gluings.push_back({{host, gid}, {plane.id, gid}, false});
}

}  // namespace

SurfaceModel apply_step(const SurfaceModel& s, const TransitionStep& step, const LinearConstraint& wall) {
    SurfaceModel m = s;
    if (m.index_of(step.component) < 0) fail(step.component, "no such component");
    switch (step.kind) {
        case StepKind::BlowDownMinusOne: step_blow_down(m, step, wall); break;
        case StepKind::ContractComponentToPoint: step_contract_to_point(m, step, wall); break;
        case StepKind::ContractRulingToCurve:
        case StepKind::ContractComponentToCurve: step_contract_ruling(m, step, wall); break;
        case StepKind::ContractMinusTwoToNode: step_node(m, step, wall); break;
        case StepKind::BlowUpPoint: step_blow_up(m, step); break;
        case StepKind::AttachPlaneAtExceptional: step_attach_plane(m, step); break;
    }
    return m;
}

GluingCheckReport check_gluing_conditions(const SurfaceModel& s, const LinearConstraint& wall, const Point& w) {
    if (wall.poly.eval(w.b, w.c) != 0) throw std::invalid_argument("witness " + w.str() + " is off the wall");
    GluingCheckReport rep;
    rep.witness = w;
    rep.pass = true;
    for (const auto& comp : s.components) {
        ComponentGluingCheck cc;
        cc.component = comp.id;
        const auto& l = comp.lattice;
        DivisorClass d = log_canonical_divisor(comp);
        cc.nef = true;
        for (const auto& cv : test_curves(l, comp.a1Nodes)) {
            Rational v = dot(l, d, cv).eval(w.b, w.c);
            if (v < 0) {
                cc.nef = false;
                cc.failures.push_back("D." + class_str(l, cv) + " = " + to_string(v) + " < 0");
            }
        }
        cc.big = self_intersection(l, d).eval(w.b, w.c) > 0;
        cc.bigNef = cc.nef && cc.big;
        for (const auto& cond : comp.conductors) {
            AffinePoly deg = dot(l, d, cond.cls);
            cc.conductorDegrees.push_back({cond.gluingId, deg});
            if (deg.eval(w.b, w.c) < 0)
                cc.failures.push_back("conductor " + cond.gluingId + " has negative degree " + deg.str());
        }
        if (!cc.failures.empty()) {
            rep.pass = false;
            for (const auto& f : cc.failures) rep.failures.push_back(comp.id + ": " + f);
        }
        rep.components.push_back(std::move(cc));
    }
    return rep;
}

std::optional<Point> wall_witness(const Region& region, const LinearConstraint& wall) {
    std::vector<LinearConstraint> closed;
    for (const auto& k : region.constraints()) closed.push_back(k.rel == Rel::GT ? ge(k.poly) : k);
    closed.push_back(eq(wall.poly));
    Region seg(closed, region.ambient());
    // Ambient strict bounds stay strict, so the segment keeps its relative interior.
    auto v = seg.vertices();
    if (v.size() != 2) return std::nullopt;
    return Point{(v[0].b + v[1].b) / 2, (v[0].c + v[1].c) / 2};
}

bool vanishes_on_region(const QuadPoly& q, const Region& r) {
    auto v = r.vertices();
    if (v.empty()) return true;
    if (v.size() >= 3) return q.is_zero();
    if (v.size() == 1) return q.eval(v[0].b, v[0].c) == 0;
    Point mid{(v[0].b + v[1].b) / 2, (v[0].c + v[1].c) / 2};
    return q.eval(v[0].b, v[0].c) == 0 && q.eval(v[1].b, v[1].c) == 0 && q.eval(mid.b, mid.c) == 0;
}

CrossResult cross_wall(const SurfaceModel& s, const TransitionScript& script, Ambient amb) {
    if (script.wall.rel != Rel::EQ) throw StepError("wall must be an EQ constraint");
    Region src = stability_region(s, amb);
    if (src.empty()) throw StepError("source model is unstable everywhere");
    auto w = wall_witness(src, script.wall);
    if (!w) throw StepError("wall " + script.wall.str() + " is not a facet of the source chamber " + src.str());
    CrossResult res;
    res.gluing = check_gluing_conditions(s, script.wall, *w);
    if (!res.gluing.pass) {
        std::string msg = "gluing conditions fail at " + w->str();
        for (const auto& f : res.gluing.failures) msg += "; " + f;
        throw StepError(msg);
    }
    SurfaceModel m = s;
    for (const auto& st : script.steps) m = apply_step(m, st, script.wall);
    for (const auto& cc : res.gluing.components)
        if (!cc.big && m.index_of(cc.component) >= 0) {
            // A surviving component must stay big; its divisor may only drop on contracted curves.
            const Component& now = m.at(cc.component);
            if (self_intersection(now.lattice, log_canonical_divisor(now)).eval(w->b, w->c) <= 0)
                throw StepError(cc.component + " is not big on the wall and is not contracted by the script");
        }
    auto vr = validate_surface(m);
    if (!vr.ok()) throw StepError("destination model invalid: " + vr.violations.front());
    Region dst = stability_region(m, amb);
    if (dst.empty()) throw StepError("destination model is unstable everywhere");
    if (src.intersects(dst)) throw StepError("destination chamber overlaps the source " + dst.str());
    AffinePoly key = line_key(script.wall.poly);
    auto dw = dst.witness();
    Rational side = key.eval(dw->b, dw->c);
    bool onWall = dst.implies(eq(script.wall.poly));
    if (!onWall) {
        if ((script.side == "below" && side >= 0) || (script.side == "above" && side <= 0))
            throw StepError("destination lies on the wrong side of " + script.wall.str());
        bool facet = false;
        for (const auto& f : dst.facets())
            if (f.constraint.same_line(script.wall)) facet = true;
        if (!facet) throw StepError("wall " + script.wall.str() + " is not a facet of the destination " + dst.str());
    }
    if (!vanishes_on_region(volume(m) - target_volume(), dst)) throw StepError("volume changes across the wall");
    auto rep = stability_report(m, *dw, amb);
    if (!rep.stableAt) throw StepError("destination not stable at " + dw->str());
    res.model = std::move(m);
    res.region = dst;
    return res;
}

}  // namespace cw
