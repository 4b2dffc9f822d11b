#include "cw/chambers.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cw {

using nlohmann::json;

const char* failure_name(FailureKind k) {
    switch (k) {
        case FailureKind::SLC: return "SLC";
        case FailureKind::AMPLE: return "AMPLE";
        case FailureKind::VOLUME: return "VOLUME";
        case FailureKind::CATALOG: return "CATALOG";
    }
    return "?";
}

const char* slope_name(SlopeClass s) {
    switch (s) {
        case SlopeClass::Negative: return "negative";
        case SlopeClass::Zero: return "zero";
        case SlopeClass::Positive: return "positive";
        case SlopeClass::Vertical: return "vertical";
    }
    return "?";
}

// qb b + qc c + q0 = 0 has slope -qb/qc.
SlopeClass slope_class(const LinearConstraint& k) {
    const auto& p = k.poly;
    if (p.qc == 0) return SlopeClass::Vertical;
    Rational s = -p.qb / p.qc;
    if (s == 0) return SlopeClass::Zero;
    return s > 0 ? SlopeClass::Positive : SlopeClass::Negative;
}

ModelRef make_model_ref(const std::string& key, const std::string& variant, const std::string& step, SurfaceModel m) {
    auto info = std::make_shared<ModelInfo>();
    info->typeKey = key;
    info->variant = variant;
    info->step = step;
    info->slc = slc_constraints_sourced(m);
    info->ample = ample_constraints_sourced(m);
    info->volume = volume_check(m).constraint;
    info->model = std::move(m);
    return info;
}

int Decomposition::find(const Region& r) const {
    for (size_t i = 0; i < chambers.size(); ++i)
        if (chambers[i].region.equals(r)) return static_cast<int>(i);
    return -1;
}

int Decomposition::find_label(const std::string& label) const {
    for (size_t i = 0; i < chambers.size(); ++i)
        if (chambers[i].label == label) return static_cast<int>(i);
    return -1;
}

namespace {

Region closure(const Region& r) {
    std::vector<LinearConstraint> cons;
    for (const auto& k : r.constraints()) cons.push_back(k.rel == Rel::GT ? ge(k.poly) : k);
    return Region(cons, r.ambient());
}

// Position along a line, used to order and merge segments.
Rational along(const LinearConstraint& line, const Point& p) {
    return line.poly.qc == 0 ? p.c : p.b;
}

struct Box {
    Rational b0, b1, c0, c1;
    bool meets(const Box& o) const { return !(b1 < o.b0 || o.b1 < b0 || c1 < o.c0 || o.c1 < c0); }
};

Box box_of(const std::vector<Point>& v) {
    Box x{v[0].b, v[0].b, v[0].c, v[0].c};
    for (const auto& p : v) {
        x.b0 = std::min(x.b0, p.b);
        x.b1 = std::max(x.b1, p.b);
        x.c0 = std::min(x.c0, p.c);
        x.c1 = std::max(x.c1, p.c);
    }
    return x;
}

// Closed polygon (hull order) cut by a line: empty, a point, or a segment.
std::optional<std::pair<Point, Point>> cut(const std::vector<Point>& poly, const LinearConstraint& line) {
    std::vector<Point> on;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point &p = poly[i], &q = poly[(i + 1) % n];
        Rational vp = line.poly.eval(p.b, p.c), vq = line.poly.eval(q.b, q.c);
        if (vp == 0) on.push_back(p);
        if (n > 2 && ((vp < 0 && vq > 0) || (vp > 0 && vq < 0))) {
            Rational t = vp / (vp - vq);
            on.push_back({p.b + t * (q.b - p.b), p.c + t * (q.c - p.c)});
        }
    }
    if (on.empty()) return std::nullopt;
    auto [lo, hi] = std::minmax_element(on.begin(), on.end(), [&](const Point& x, const Point& y) { return along(line, x) < along(line, y); });
    return std::make_pair(*lo, *hi);
}

std::optional<std::pair<Point, Point>> shared_segment(const std::vector<Point>& a, const std::vector<Point>& b, const LinearConstraint& line) {
    auto sa = cut(a, line);
    if (!sa) return std::nullopt;
    auto sb = cut(b, line);
    if (!sb) return std::nullopt;
    const Point& lo = along(line, sa->first) < along(line, sb->first) ? sb->first : sa->first;
    const Point& hi = along(line, sa->second) < along(line, sb->second) ? sa->second : sb->second;
    if (!(along(line, lo) < along(line, hi))) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::vector<LinearConstraint> wall_lines(const Region& r) {
    std::vector<LinearConstraint> out;
    auto add = [&](const LinearConstraint& k) {
        LinearConstraint e = eq(k.poly).canonical();
        for (const auto& x : out)
            if (x.same_line(e)) return;
        out.push_back(e);
    };
    int dim = r.dimension();
    if (dim == 1) {
        for (const auto& k : r.constraints())
            if (k.rel == Rel::EQ) add(k);
    }
    for (const auto& f : r.facets())
        if (!f.ambient) add(f.constraint);
    // Segment chambers sit on ambient lines too (b = c).
    if (dim == 1)
        for (const auto& f : r.facets()) add(f.constraint);
    return out;
}

bool is_horizontal_segment(const Region& r) {
    if (r.dimension() != 1) return false;
    auto v = r.vertices();
    return v[0].c == v[1].c;
}

Point mid(const Point& p, const Point& q) { return {(p.b + q.b) / 2, (p.c + q.c) / 2}; }

}  // namespace

void build_walls(Decomposition& d) {
    d.walls.clear();
    d.adjacency.clear();
    std::vector<LinearConstraint> lines;
    for (const auto& ch : d.chambers)
        for (const auto& l : wall_lines(ch.region))
            if (std::none_of(lines.begin(), lines.end(), [&](const LinearConstraint& x) { return x.same_line(l); }))
                lines.push_back(l);

    struct Seg {
        Point p, q;
        int a, b;
    };
    std::vector<std::vector<Point>> verts;
    std::vector<Box> boxes;
    for (const auto& ch : d.chambers) {
        verts.push_back(closure(ch.region).vertices());
        boxes.push_back(box_of(verts.back()));
    }
    for (const auto& line : lines) {
        std::vector<Seg> segs;
        for (size_t i = 0; i < d.chambers.size(); ++i)
            for (size_t j = i + 1; j < d.chambers.size(); ++j)
                if (!boxes[i].meets(boxes[j])) continue;
                else if (auto s = shared_segment(verts[i], verts[j], line))
                    segs.push_back({s->first, s->second, static_cast<int>(i), static_cast<int>(j)});
        if (segs.empty()) continue;
        std::sort(segs.begin(), segs.end(), [&](const Seg& x, const Seg& y) { return along(line, x.p) < along(line, y.p); });
        size_t first = d.walls.size();
        for (const auto& s : segs) {
            bool merged = false;
            for (size_t w = first; w < d.walls.size(); ++w) {
                Wall& wall = d.walls[w];
                if (along(line, s.p) <= along(line, wall.q) && along(line, wall.p) <= along(line, s.q)) {
                    if (along(line, s.q) > along(line, wall.q)) wall.q = s.q;
                    if (along(line, s.p) < along(line, wall.p)) wall.p = s.p;
                    d.adjacency.push_back({static_cast<int>(w), s.a, s.b});
                    merged = true;
                    break;
                }
            }
            if (merged) continue;
            Wall wall;
            wall.constraint = line;
            wall.p = s.p;
            wall.q = s.q;
            wall.slope = slope_class(line);
            d.walls.push_back(wall);
            d.adjacency.push_back({static_cast<int>(d.walls.size() - 1), s.a, s.b});
        }
    }

    // Certificates: which condition of which neighboring model fails along the wall.
    for (const auto& adj : d.adjacency) {
        Wall& wall = d.walls[adj.wall];
        for (int ci : {adj.a, adj.b})
            for (const auto& m : d.chambers[ci].models) {
                auto note = [&](FailureKind kind, const std::string& what) {
                    std::string cert = m->typeKey + (m->variant.empty() ? "" : "/" + m->variant) + " step " + m->step + ": " + what;
                    if (std::find(wall.certificates.begin(), wall.certificates.end(), cert) != wall.certificates.end()) return;
                    if (wall.certificates.empty() || static_cast<int>(kind) < static_cast<int>(wall.kind)) wall.kind = kind;
                    wall.certificates.push_back(cert);
                };
                for (const auto& sc : m->slc)
                    if (sc.constraint.same_line(wall.constraint)) note(FailureKind::SLC, "slc " + sc.source + " (" + sc.constraint.str() + ")");
                for (const auto& sc : m->ample)
                    if (sc.constraint.same_line(wall.constraint)) note(FailureKind::AMPLE, "ample " + sc.source + " (" + sc.constraint.str() + ")");
                if (m->volume && m->volume->same_line(wall.constraint)) note(FailureKind::VOLUME, "volume (" + m->volume->str() + ")");
            }
    }
}

Decomposition enumerate_variant(const TypeEntry& t, Ambient amb) {
    Decomposition d;
    d.name = t.key() + (t.variant.empty() ? "" : "/" + t.variant);
    d.ambient = amb;
    if (t.region_only()) {
        for (const auto& lr : t.expectedChambers) {
            Region r(lr.region.constraints(), amb);
            d.chambers.push_back({r.normalized(), t.key(), "", lr.label, {}});
        }
        build_walls(d);
        return d;
    }

    struct Pending {
        int chamber;
        Facet facet;
    };
    std::vector<Pending> pending, unscripted;
    std::map<std::string, int> stepChamber;
    Rational oldFloor = 1, newFloor = 1;

    auto add_chamber = [&](SurfaceModel m, const std::string& step, const Region& r, const std::string& crossed) {
        if (stepChamber.count(step)) {
            const Region& prev = d.chambers[stepChamber[step]].region;
            if (!prev.equals(r)) throw ScanError(d.name + ": step " + step + " reached with two regions " + prev.str() + " and " + r.str());
            return;
        }
        int idx = static_cast<int>(d.chambers.size());
        Chamber ch{r, t.key(), step, "step " + step, {make_model_ref(t.key(), t.variant, step, std::move(m))}};
        for (const auto& lr : t.expectedChambers)
            if (lr.region.equals(r)) ch.label = lr.label;
        d.chambers.push_back(std::move(ch));
        stepChamber[step] = idx;

        ScanEntry e{step, r.str(), oldFloor, newFloor, 'b', crossed};
        if (is_horizontal_segment(r)) {
            e.floorCase = 'c';
            oldFloor = newFloor;
            newFloor = r.min_c();
        } else if (r.min_c() < newFloor) {
            e.floorCase = 'a';
            oldFloor = newFloor;
            newFloor = r.min_c();
        }
        e.oldFloor = oldFloor;
        e.newFloor = newFloor;
        d.scan.push_back(e);

        if (r.dimension() != 2) return;
        for (const auto& f : r.facets())
            if (!f.ambient) pending.push_back({idx, f});
    };

    const SurfaceModel& seed = *t.seedModel;
    Region r0 = stability_region(seed, amb);
    if (!r0.contains({1, 1})) throw ScanError(d.name + ": seed model is not stable at (1,1); region " + r0.str());
    add_chamber(seed, "0", r0, "");

    while (!pending.empty()) {
        // Top walls first, then right to left.
        auto best = std::max_element(pending.begin(), pending.end(), [](const Pending& x, const Pending& y) {
            Rational cx = std::max(x.facet.p.c, x.facet.q.c), cy = std::max(y.facet.p.c, y.facet.q.c);
            if (cx != cy) return cx < cy;
            return std::max(x.facet.p.b, x.facet.q.b) < std::max(y.facet.p.b, y.facet.q.b);
        });
        Pending cur = *best;
        pending.erase(best);
        const Chamber& ch = d.chambers[cur.chamber];
        const TransitionScript* script = nullptr;
        for (const auto& s : t.transitions)
            if (s.fromStep == ch.step && (s.variant.empty() || s.variant == t.variant) && s.wall.same_line(cur.facet.constraint)) {
                script = &s;
                break;
            }
        if (!script) {
            unscripted.push_back(cur);
            continue;
        }
        CrossResult res;
        try {
            res = cross_wall(ch.models.front()->model, *script, amb);
        } catch (const std::exception& e) {
            throw ScanError(d.name + ": crossing " + script->wall.str() + " from step " + ch.step + ": " + e.what());
        }
        add_chamber(std::move(res.model), script->toStep, res.region, script->wall.str());
    }

    for (const auto& u : unscripted) {
        LinearConstraint line = eq(u.facet.constraint.poly);
        bool covered = false;
        for (size_t j = 0; j < d.chambers.size() && !covered; ++j)
            if (static_cast<int>(j) != u.chamber && shared_segment(closure(d.chambers[u.chamber].region).vertices(), closure(d.chambers[j].region).vertices(), line))
                covered = true;
        if (!covered)
            throw ScanError(d.name + ": missing transition script for wall " + line.str() + " from step " + d.chambers[u.chamber].step);
    }

    bool terminal = false;
    Point corner{Rational(1, 9), Rational(1, 9)};
    for (const auto& ch : d.chambers) {
        Region diag = ch.region.with(eq(AffinePoly{0, 1, -1}));
        if (diag.empty()) continue;
        for (const auto& v : diag.vertices())
            if (v == corner) terminal = true;
    }
    if (!terminal) throw ScanError(d.name + ": scan never reached (1/9+eps, 1/9+eps)");

    build_walls(d);
    auto cov = coverage(d, 24);
    if (!cov.ok())
        throw ScanError(d.name + ": chambers do not partition the domain near " + cov.firstBad->str());
    return d;
}

namespace {

Decomposition overlay(const Decomposition& a, const Decomposition& b) {
    Decomposition d;
    d.name = a.name + " & " + b.name;
    d.ambient = a.ambient;
    std::vector<Box> bb;
    for (const auto& y : b.chambers) bb.push_back(box_of(closure(y.region).vertices()));
    for (const auto& x : a.chambers) {
        Box bx = box_of(closure(x.region).vertices());
        for (size_t j = 0; j < b.chambers.size(); ++j) {
            if (!bx.meets(bb[j])) continue;
            const auto& y = b.chambers[j];
            Region r = x.region.intersect(y.region);
            if (r.empty()) continue;
            Chamber ch{r, x.typeKey, x.step, x.label, x.models};
            ch.models.insert(ch.models.end(), y.models.begin(), y.models.end());
            d.chambers.push_back(std::move(ch));
        }
    }
    d.scan = a.scan;
    d.scan.insert(d.scan.end(), b.scan.begin(), b.scan.end());
    return d;
}

}  // namespace

Decomposition refine(const Decomposition& a, const Decomposition& b) {
    Decomposition d = overlay(a, b);
    build_walls(d);
    return d;
}

Decomposition enumerate_chambers(const CatalogFile& cat, const std::string& key, Ambient amb) {
    auto entries = cat.entries(key);
    if (entries.empty()) throw ScanError("no catalog entry for type " + key);
    Decomposition d = enumerate_variant(*entries.front(), amb);
    for (size_t i = 1; i < entries.size(); ++i) d = refine(d, enumerate_variant(*entries[i], amb));
    d.name = key;
    // Labels: catalog expectations of any variant win over step names.
    for (auto& ch : d.chambers)
        for (const auto* e : entries)
            for (const auto& lr : e->expectedChambers)
                if (Region(lr.region.constraints(), amb).equals(ch.region)) ch.label = lr.label;
    return d;
}

Decomposition merge_global(const CatalogFile& cat, const std::vector<Decomposition>& parts) {
    if (parts.empty()) throw ScanError("nothing to merge");
    Decomposition d = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) d = overlay(d, parts[i]);
    d.name = "global";
    build_walls(d);
    if (parts.size() == 1) return d;

    const auto& g = cat.global;
    for (auto& ch : d.chambers) {
        ch.label.clear();
        for (const auto& lr : g.chambers)
            if (Region(lr.region.constraints(), d.ambient).equals(ch.region)) ch.label = lr.label;
    }
    size_t limit = g.expectedChamberCount ? static_cast<size_t>(*g.expectedChamberCount) : d.chambers.size();
    if (d.chambers.size() > limit) {
        std::string msg = "refinement has " + std::to_string(d.chambers.size()) + " chambers, more than " + std::to_string(limit);
        for (const auto& ch : d.chambers) {
            if (!ch.label.empty()) continue;
            auto w = ch.region.witness();
            for (const auto& lr : g.chambers) {
                Region gr(lr.region.constraints(), d.ambient);
                if (!w || !gr.contains(*w)) continue;
                msg += "; " + lr.label + " is cut by";
                for (const auto& k : ch.region.constraints())
                    if (!gr.implies(k)) msg += " [" + k.str() + "]";
                break;
            }
        }
        throw ScanError(msg);
    }
    classify_walls(d, g);
    return d;
}

Decomposition global_decomposition(const CatalogFile& cat, Ambient amb) {
    std::vector<Decomposition> parts;
    for (const auto& key : cat.keys()) parts.push_back(enumerate_chambers(cat, key, amb));
    return merge_global(cat, parts);
}

WallClass classify_wall(const Decomposition& d, int wall, const GlobalData& g) {
    if (wall < 0 || wall >= static_cast<int>(d.walls.size())) throw std::out_of_range("wall not in decomposition");
    const Wall& w = d.walls[wall];
    if (w.slope == SlopeClass::Positive) {
        // The chamber holding the wall's midpoint must be the upper one or a segment on the wall.
        Point m = mid(w.p, w.q);
        std::string where = "no chamber";
        for (const auto& ch : d.chambers)
            if (ch.region.contains(m)) {
                auto cw = ch.region.witness();
                bool onWall = ch.region.implies(eq(w.constraint.poly));
                bool upper = cw && cw->c - (-w.constraint.poly.qb * cw->b - w.constraint.poly.q0) / w.constraint.poly.qc >= 0;
                where = onWall ? "segment chamber" : (upper ? "upper chamber" : "lower chamber");
            }
        return {true, "positive slope, wall in " + where};
    }
    for (const auto& k : g.moduliChangingWalls)
        if (k.same_line(w.constraint)) return {false, "moduli-changing wall"};
    return {true, "coarse moduli unchanged"};
}

void classify_walls(Decomposition& d, const GlobalData& g) {
    for (size_t i = 0; i < d.walls.size(); ++i) {
        auto c = classify_wall(d, static_cast<int>(i), g);
        d.walls[i].moduliChange = !c.coarseModuliIsomorphic;
        d.walls[i].rule = c.rule;
    }
}

std::vector<std::string> check_morphisms(const Decomposition& d, const GlobalData& g) {
    std::vector<std::string> bad;
    for (const auto& m : g.morphisms) {
        int a = d.find_label(m.from), b = d.find_label(m.to);
        if (a < 0 || b < 0) {
            bad.push_back("unknown chamber in " + m.from + " -> " + m.to);
            continue;
        }
        Region meet = closure(d.chambers[a].region).intersect(closure(d.chambers[b].region));
        if (meet.empty()) {
            bad.push_back(m.from + " -> " + m.to + ": closures do not meet");
            continue;
        }
        bool onModuliWall = false;
        for (const auto& k : g.moduliChangingWalls)
            if (!meet.with(eq(k.poly)).empty()) onModuliWall = true;
        if (!m.iso && !onModuliWall) bad.push_back(m.from + " -> " + m.to + " is marked non-isomorphic away from the moduli-changing walls");
    }
    return bad;
}

CoverageReport coverage(const Decomposition& d, int maxDen) {
    struct IntCons {
        long long q0, qb, qc;
        Rel rel;
    };
    auto to_ll = [](const Rational& q) { return static_cast<long long>(boost::multiprecision::numerator(q)); };
    std::vector<std::vector<IntCons>> cons;
    for (const auto& ch : d.chambers) {
        std::vector<IntCons> v;
        for (const auto& k : ch.region.all_constraints()) {
            auto c = k.canonical();
            v.push_back({to_ll(c.poly.q0), to_ll(c.poly.qb), to_ll(c.poly.qc), c.rel});
        }
        cons.push_back(std::move(v));
    }
    std::vector<std::pair<long long, long long>> fr;  // p/q in [1/9, 1]
    for (long long q = 1; q <= maxDen; ++q)
        for (long long p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1 && 9 * p >= q) fr.push_back({p, q});
    std::vector<IntCons> amb;
    for (const auto& k : ambient_constraints(d.ambient)) {
        auto c = k.canonical();
        amb.push_back({to_ll(c.poly.q0), to_ll(c.poly.qb), to_ll(c.poly.qc), c.rel});
    }
    auto holds = [](const IntCons& k, long long pb, long long B, long long pc, long long C) {
        long long v = k.q0 * B * C + k.qb * pb * C + k.qc * pc * B;
        return k.rel == Rel::GT ? v > 0 : (k.rel == Rel::GE ? v >= 0 : v == 0);
    };
    CoverageReport rep;
    for (const auto& [pb, B] : fr)
        for (const auto& [pc, C] : fr) {
            bool in = std::all_of(amb.begin(), amb.end(), [&](const IntCons& k) { return holds(k, pb, B, pc, C); });
            if (!in) continue;
            ++rep.points;
            int n = 0;
            for (const auto& v : cons)
                if (std::all_of(v.begin(), v.end(), [&](const IntCons& k) { return holds(k, pb, B, pc, C); })) ++n;
            if (n == 1) continue;
            (n == 0 ? rep.uncovered : rep.multiply)++;
            if (!rep.firstBad) rep.firstBad = Point{Rational(pb, B), Rational(pc, C)};
        }
    return rep;
}

namespace {

json point_json(const Point& p) { return {to_string(p.b), to_string(p.c)}; }

}  // namespace

std::string decomposition_json(const Decomposition& d, int indent) {
    json chambers = json::array();
    for (size_t i = 0; i < d.chambers.size(); ++i) {
        const auto& ch = d.chambers[i];
        json region = json::array();
        for (const auto& k : ch.region.constraints()) region.push_back(json::parse(constraint_json(k)));
        json models = json::array();
        for (const auto& m : ch.models) {
            json mj = {{"type", m->typeKey}, {"step", m->step}};
            if (!m->variant.empty()) mj["variant"] = m->variant;
            models.push_back(mj);
        }
        auto w = ch.region.witness();
        chambers.push_back({{"id", i},
                            {"label", ch.label},
                            {"region", region},
                            {"description", ch.region.str()},
                            {"dimension", ch.region.dimension()},
                            {"witness", w ? point_json(*w) : json(nullptr)},
                            {"models", models}});
    }
    json walls = json::array();
    for (size_t i = 0; i < d.walls.size(); ++i) {
        const auto& w = d.walls[i];
        walls.push_back({{"id", i},
                         {"constraint", json::parse(constraint_json(w.constraint))},
                         {"line", w.constraint.str()},
                         {"from", point_json(w.p)},
                         {"to", point_json(w.q)},
                         {"kind", failure_name(w.kind)},
                         {"slope", slope_name(w.slope)},
                         {"moduliChange", w.moduliChange},
                         {"rule", w.rule},
                         {"certificates", w.certificates}});
    }
    json adj = json::array();
    for (const auto& a : d.adjacency) adj.push_back({{"wall", a.wall}, {"chambers", {a.a, a.b}}});
    json scan = json::array();
    for (const auto& e : d.scan)
        scan.push_back({{"step", e.step},
                        {"region", e.region},
                        {"crossed", e.crossed},
                        {"oldFloor", to_string(e.oldFloor)},
                        {"newFloor", to_string(e.newFloor)},
                        {"case", std::string(1, e.floorCase)}});
    json j = {{"name", d.name}, {"chamberCount", d.chambers.size()}, {"chambers", chambers}, {"walls", walls}, {"adjacency", adj}, {"scan", scan}};
    return j.dump(indent);
}

}  // namespace cw
