#include "cw/catalog.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef CW_DATA_DIR
#define CW_DATA_DIR "data"
#endif

namespace cw {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) { throw CatalogError(path, msg); }

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) schema(path, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string str_at(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_string()) schema(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

int int_of(const json& v, const std::string& path) {
    if (!v.is_number_integer()) schema(path, "expected an integer");
    return v.get<int>();
}

Rational rat_of(const json& v, const std::string& path) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long long>());
    } catch (const std::exception& e) {
        schema(path, e.what());
    }
    schema(path, "expected a rational string");
}

json rat_json(const Rational& q) { return to_string(q); }

IVec class_of(const json& v, int rank, const std::string& path) {
    if (!v.is_array()) schema(path, "class must be an array");
    if (static_cast<int>(v.size()) != rank)
        schema(path, "class has " + std::to_string(v.size()) + " entries, lattice rank is " + std::to_string(rank));
    IVec out;
    for (size_t i = 0; i < v.size(); ++i) {
        Rational q = rat_of(v[i], path + "/" + std::to_string(i));
        if (boost::multiprecision::denominator(q) != 1) schema(path + "/" + std::to_string(i), "curve classes are integral");
        out.push_back(static_cast<long>(boost::multiprecision::numerator(q)));
    }
    return out;
}

json class_json(const IVec& v) {
    json a = json::array();
    for (long x : v) a.push_back(std::to_string(x));
    return a;
}

AffinePoly weight_of(const json& v, const std::string& path) {
    if (!v.is_object()) schema(path, "weight must be {\"b\": int, \"c\": int}");
    for (auto it = v.begin(); it != v.end(); ++it)
        if (it.key() != "b" && it.key() != "c") schema(path, "unknown weight key '" + it.key() + "'");
    int b = v.contains("b") ? int_of(v.at("b"), path + "/b") : 0;
    int c = v.contains("c") ? int_of(v.at("c"), path + "/c") : 0;
    if (b < 0 || c < 0) schema(path, "weights are nonnegative");
    return {0, b, c};
}

json weight_json(const AffinePoly& w) {
    return {{"b", static_cast<long>(boost::multiprecision::numerator(w.qb))},
            {"c", static_cast<long>(boost::multiprecision::numerator(w.qc))}};
}

LinearConstraint constraint_of(const json& v, const std::string& path) {
    if (!v.is_object()) schema(path, "constraint must be an object");
    LinearConstraint k;
    k.poly = {v.contains("q0") ? rat_of(v.at("q0"), path + "/q0") : Rational(0),
              v.contains("qb") ? rat_of(v.at("qb"), path + "/qb") : Rational(0),
              v.contains("qc") ? rat_of(v.at("qc"), path + "/qc") : Rational(0)};
    try {
        k.rel = parse_rel(str_at(v, "rel", path));
    } catch (const std::invalid_argument& e) {
        schema(path + "/rel", e.what());
    }
    if (k.poly.is_zero() && k.rel != Rel::EQ) schema(path, "zero polynomial in a strict or weak constraint");
    return k;
}

json constraint_to_json(const LinearConstraint& k) {
    return {{"q0", rat_json(k.poly.q0)}, {"qb", rat_json(k.poly.qb)}, {"qc", rat_json(k.poly.qc)}, {"rel", rel_name(k.rel)}};
}

Region region_of(const json& v, const std::string& path) {
    if (!v.is_array()) schema(path, "region must be a constraint array");
    std::vector<LinearConstraint> cons;
    for (size_t i = 0; i < v.size(); ++i) cons.push_back(constraint_of(v[i], path + "/" + std::to_string(i)));
    return Region(std::move(cons));
}

json region_json(const Region& r) {
    json a = json::array();
    for (const auto& k : r.constraints()) a.push_back(constraint_to_json(k));
    return a;
}

LatticeType lattice_of(const json& v, const std::string& path) {
    std::string kind = str_at(v, "kind", path);
    LatticeType l;
    if (kind == "plane") l.kind = LatticeKind::Plane;
    else if (kind == "quadric") l.kind = LatticeKind::Quadric;
    else schema(path + "/kind", "expected plane or quadric");
    l.n = int_of(need(v, "n", path), path + "/n");
    if (l.n < 0 || l.rank() > 9) schema(path + "/n", "unsupported number of points");
    if (v.contains("colinearTriples")) {
        for (size_t i = 0; i < v["colinearTriples"].size(); ++i) {
            const json& t = v["colinearTriples"][i];
            std::string tp = path + "/colinearTriples/" + std::to_string(i);
            if (!t.is_array() || t.size() != 3) schema(tp, "triples have three indices");
            std::array<int, 3> a{int_of(t[0], tp), int_of(t[1], tp), int_of(t[2], tp)};
            for (int x : a)
                if (x < 1 || x > l.n) schema(tp, "index out of range");
            l.colinearTriples.push_back(a);
        }
        for (size_t i = 0; i < l.colinearTriples.size(); ++i)
            for (size_t j = i + 1; j < l.colinearTriples.size(); ++j) {
                int common = 0;
                for (int x : l.colinearTriples[i])
                    common += std::count(l.colinearTriples[j].begin(), l.colinearTriples[j].end(), x);
                if (common > 1) schema(path + "/colinearTriples", "two triples share more than one point");
            }
    }
    if (v.contains("onDiagonal"))
        for (size_t i = 0; i < v["onDiagonal"].size(); ++i) {
            int x = int_of(v["onDiagonal"][i], path + "/onDiagonal");
            if (x < 1 || x > l.n) schema(path + "/onDiagonal", "index out of range");
            l.onDiagonal.push_back(x);
        }
    if (v.contains("onConic")) l.onConic = v["onConic"].get<bool>();
    if (v.contains("infinitelyNear"))
        for (const auto& p : v["infinitelyNear"]) {
            if (!p.is_array() || p.size() != 2) schema(path + "/infinitelyNear", "pairs expected");
            l.infinitelyNear.push_back({p[0].get<int>(), p[1].get<int>()});
        }
    try {
        l.derive_special();
    } catch (const std::exception& e) {
        schema(path, e.what());
    }
    if (v.contains("specialClasses")) {
        l.special.clear();
        for (size_t i = 0; i < v["specialClasses"].size(); ++i)
            l.special.push_back(class_of(v["specialClasses"][i], l.rank(), path + "/specialClasses/" + std::to_string(i)));
    }
    return l;
}

json lattice_json(const LatticeType& l) {
    json j = {{"kind", l.kind == LatticeKind::Plane ? "plane" : "quadric"}, {"n", l.n}};
    json triples = json::array();
    for (const auto& t : l.colinearTriples) triples.push_back({t[0], t[1], t[2]});
    j["colinearTriples"] = triples;
    j["onDiagonal"] = l.onDiagonal;
    if (l.onConic) j["onConic"] = true;
    if (!l.infinitelyNear.empty()) {
        json a = json::array();
        for (auto [x, y] : l.infinitelyNear) a.push_back({x, y});
        j["infinitelyNear"] = a;
    }
    LatticeType derived = l;
    derived.derive_special();
    if (!(derived == l)) {
        json a = json::array();
        for (const auto& s : l.special) a.push_back(class_json(s));
        j["specialClasses"] = a;
    }
    return j;
}

GluingRef gref_of(const json& v, const std::string& path) {
    return {str_at(v, "component", path), str_at(v, "gluingId", path)};
}

json gref_json(const GluingRef& r) { return {{"component", r.component}, {"gluingId", r.gluingId}}; }

CurveRef cref_of(const json& v, const std::string& path) {
    std::string kind = str_at(v, "kind", path);
    CurveRef r;
    if (kind == "boundary") r.kind = CurveKind::Boundary;
    else if (kind == "conductor") r.kind = CurveKind::Conductor;
    else schema(path + "/kind", "expected boundary or conductor");
    r.index = int_of(need(v, "index", path), path + "/index");
    return r;
}

json cref_json(const CurveRef& r) {
    return {{"kind", r.kind == CurveKind::Boundary ? "boundary" : "conductor"}, {"index", r.index}};
}

Component component_of(const json& v, const std::string& path) {
    Component c;
    c.id = str_at(v, "id", path);
    c.lattice = lattice_of(need(v, "lattice", path), path + "/lattice");
    int rank = c.lattice.rank();
    if (v.contains("boundary"))
        for (size_t i = 0; i < v["boundary"].size(); ++i) {
            const json& b = v["boundary"][i];
            std::string bp = path + "/boundary/" + std::to_string(i);
            BoundaryCurve bc;
            bc.cls = class_of(need(b, "class", bp), rank, bp + "/class");
            bc.weight = weight_of(need(b, "weight", bp), bp + "/weight");
            if (bc.weight.is_zero()) schema(bp + "/weight", "boundary weight must be nonzero");
            bc.role = b.contains("role") ? b["role"].get<std::string>() : "ordinary-line";
            if (bc.role != "marked-line" && bc.role != "ordinary-line" && bc.role != "exceptional")
                schema(bp + "/role", "unknown role " + bc.role);
            c.boundary.push_back(bc);
        }
    if (v.contains("conductors"))
        for (size_t i = 0; i < v["conductors"].size(); ++i) {
            const json& k = v["conductors"][i];
            std::string kp = path + "/conductors/" + std::to_string(i);
            if (k.contains("weight")) schema(kp + "/weight", "conductors carry implicit weight 1");
            c.conductors.push_back({class_of(need(k, "class", kp), rank, kp + "/class"), str_at(k, "gluingId", kp)});
        }
    if (v.contains("a1Nodes"))
        for (size_t i = 0; i < v["a1Nodes"].size(); ++i)
            c.a1Nodes.push_back(class_of(v["a1Nodes"][i], rank, path + "/a1Nodes/" + std::to_string(i)));
    if (v.contains("eckardt"))
        for (size_t i = 0; i < v["eckardt"].size(); ++i) {
            const json& t = v["eckardt"][i];
            std::string tp = path + "/eckardt/" + std::to_string(i);
            if (!t.is_array() || t.size() != 3) schema(tp, "Eckardt points are triples of boundary indices");
            c.eckardt.push_back({int_of(t[0], tp), int_of(t[1], tp), int_of(t[2], tp)});
        }
    if (v.contains("eckardtAllowed")) c.eckardtAllowed = v["eckardtAllowed"].get<std::vector<int>>();
    return c;
}

json component_json(const Component& c) {
    json j = {{"id", c.id}, {"lattice", lattice_json(c.lattice)}};
    json b = json::array();
    for (const auto& x : c.boundary) b.push_back({{"class", class_json(x.cls)}, {"weight", weight_json(x.weight)}, {"role", x.role}});
    j["boundary"] = b;
    json k = json::array();
    for (const auto& x : c.conductors) k.push_back({{"class", class_json(x.cls)}, {"gluingId", x.gluingId}});
    j["conductors"] = k;
    json a = json::array();
    for (const auto& x : c.a1Nodes) a.push_back(class_json(x));
    j["a1Nodes"] = a;
    json e = json::array();
    for (const auto& t : c.eckardt) e.push_back({t[0], t[1], t[2]});
    j["eckardt"] = e;
    if (!c.eckardtAllowed.empty()) j["eckardtAllowed"] = c.eckardtAllowed;
    return j;
}

SurfaceModel model_of(const json& v, const std::string& path, const std::string& label) {
    SurfaceModel m;
    m.typeLabel = v.contains("typeLabel") ? v["typeLabel"].get<std::string>() : label;
    const json& comps = need(v, "components", path);
    for (size_t i = 0; i < comps.size(); ++i) m.components.push_back(component_of(comps[i], path + "/components/" + std::to_string(i)));
    if (v.contains("gluings"))
        for (size_t i = 0; i < v["gluings"].size(); ++i) {
            const json& g = v["gluings"][i];
            std::string gp = path + "/gluings/" + std::to_string(i);
            m.gluings.push_back({gref_of(need(g, "a", gp), gp + "/a"), gref_of(need(g, "b", gp), gp + "/b"),
                                 g.value("selfInvolution", false)});
        }
    if (v.contains("points"))
        for (size_t i = 0; i < v["points"].size(); ++i) {
            const json& p = v["points"][i];
            std::string pp = path + "/points/" + std::to_string(i);
            MultiPoint mp;
            mp.component = str_at(p, "component", pp);
            const json& cs = need(p, "curves", pp);
            for (size_t k = 0; k < cs.size(); ++k) mp.curves.push_back(cref_of(cs[k], pp + "/curves/" + std::to_string(k)));
            mp.atA1 = p.value("atA1", false);
            m.points.push_back(mp);
        }
    return m;
}

json model_json(const SurfaceModel& m) {
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(component_json(c));
    json gl = json::array();
    for (const auto& g : m.gluings) gl.push_back({{"a", gref_json(g.a)}, {"b", gref_json(g.b)}, {"selfInvolution", g.selfInvolution}});
    json pts = json::array();
    for (const auto& p : m.points) {
        json cs = json::array();
        for (const auto& r : p.curves) cs.push_back(cref_json(r));
        pts.push_back({{"component", p.component}, {"curves", cs}, {"atA1", p.atA1}});
    }
    return {{"typeLabel", m.typeLabel}, {"components", comps}, {"gluings", gl}, {"points", pts}};
}

CurveSelector selector_of(const json& v, int rank, const std::string& path) {
    CurveSelector s;
    s.cls = class_of(need(v, "class", path), rank, path + "/class");
    if (v.contains("kind")) {
        std::string k = v["kind"].get<std::string>();
        if (k == "boundary") s.kind = CurveKind::Boundary;
        else if (k == "conductor") s.kind = CurveKind::Conductor;
        else schema(path + "/kind", "expected boundary or conductor");
    }
    if (v.contains("weight")) s.weight = weight_of(v["weight"], path + "/weight");
    return s;
}

json selector_json(const CurveSelector& s) {
    json j = {{"class", class_json(s.cls)}};
    if (s.kind) j["kind"] = *s.kind == CurveKind::Boundary ? "boundary" : "conductor";
    if (s.weight) j["weight"] = weight_json(*s.weight);
    return j;
}

// Classes in steps are checked against the component rank when the step runs,
// so only their integrality is checked here.
IVec loose_class(const json& v, const std::string& path) {
    if (!v.is_array()) schema(path, "class must be an array");
    return class_of(v, static_cast<int>(v.size()), path);
}

TransitionStep step_of(const json& v, const std::string& path) {
    TransitionStep st;
    try {
        st.kind = parse_step_kind(str_at(v, "tag", path));
    } catch (const std::invalid_argument& e) {
        schema(path + "/tag", e.what());
    }
    st.component = str_at(v, "component", path);
    if (v.contains("classes"))
        for (size_t i = 0; i < v["classes"].size(); ++i)
            st.classes.push_back(loose_class(v["classes"][i], path + "/classes/" + std::to_string(i)));
    if (v.contains("absorbing")) st.absorbing = v["absorbing"].get<std::string>();
    if (v.contains("point"))
        for (size_t i = 0; i < v["point"].size(); ++i) {
            const json& p = v["point"][i];
            std::string pp = path + "/point/" + std::to_string(i);
            st.point.push_back(selector_of(p, static_cast<int>(need(p, "class", pp).size()), pp));
        }
    if (v.contains("newWeight")) st.newWeight = weight_of(v["newWeight"], path + "/newWeight");
    if (v.contains("glueTo")) st.glueTo = gref_of(v["glueTo"], path + "/glueTo");
    if (v.contains("newComponent")) st.newComponent = v["newComponent"].get<std::string>();
    bool needsClasses = st.kind == StepKind::BlowDownMinusOne || st.kind == StepKind::ContractMinusTwoToNode ||
                        st.kind == StepKind::ContractRulingToCurve || st.kind == StepKind::ContractComponentToCurve;
    if (needsClasses && st.classes.empty()) schema(path, std::string(step_name(st.kind)) + " needs classes");
    if ((st.kind == StepKind::BlowUpPoint || st.kind == StepKind::AttachPlaneAtExceptional) && st.point.empty())
        schema(path, std::string(step_name(st.kind)) + " needs a point");
    return st;
}

json step_json(const TransitionStep& st) {
    json j = {{"tag", step_name(st.kind)}, {"component", st.component}};
    if (!st.classes.empty()) {
        json a = json::array();
        for (const auto& c : st.classes) a.push_back(class_json(c));
        j["classes"] = a;
    }
    if (!st.absorbing.empty()) j["absorbing"] = st.absorbing;
    if (!st.point.empty()) {
        json a = json::array();
        for (const auto& s : st.point) a.push_back(selector_json(s));
        j["point"] = a;
    }
    if (st.newWeight) j["newWeight"] = weight_json(*st.newWeight);
    if (st.glueTo) j["glueTo"] = gref_json(*st.glueTo);
    if (!st.newComponent.empty()) j["newComponent"] = st.newComponent;
    return j;
}

TransitionScript script_of(const json& v, const std::string& path) {
    TransitionScript s;
    s.fromStep = v.value("fromStep", "0");
    s.variant = v.value("variant", "");
    s.wall = constraint_of(need(v, "wall", path), path + "/wall");
    if (s.wall.rel != Rel::EQ) schema(path + "/wall/rel", "walls are EQ constraints");
    s.side = str_at(v, "side", path);
    if (s.side != "below" && s.side != "above") schema(path + "/side", "expected below or above");
    const json& steps = need(v, "steps", path);
    if (!steps.is_array() || steps.empty()) schema(path + "/steps", "a transition needs at least one step");
    for (size_t i = 0; i < steps.size(); ++i) s.steps.push_back(step_of(steps[i], path + "/steps/" + std::to_string(i)));
    s.toStep = str_at(v, "toStep", path);
    return s;
}

json script_json(const TransitionScript& s) {
    json steps = json::array();
    for (const auto& st : s.steps) steps.push_back(step_json(st));
    json j = {{"fromStep", s.fromStep}, {"wall", constraint_to_json(s.wall)}, {"side", s.side}, {"steps", steps}, {"toStep", s.toStep}};
    if (!s.variant.empty()) j["variant"] = s.variant;
    return j;
}

std::vector<LabeledRegion> labeled_of(const json& v, const std::string& path) {
    std::vector<LabeledRegion> out;
    for (size_t i = 0; i < v.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        out.push_back({v[i].value("label", ""), region_of(need(v[i], "region", p), p + "/region")});
    }
    return out;
}

json labeled_json(const std::vector<LabeledRegion>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back({{"label", x.label}, {"region", region_json(x.region)}});
    return a;
}

TypeEntry type_of(const json& v, const std::string& path) {
    TypeEntry t;
    t.typeLabel = str_at(v, "typeLabel", path);
    t.ellChoice = v.value("ellChoice", "");
    t.variant = v.value("variant", "");
    if (v.contains("seedModel") && !v["seedModel"].is_null())
        t.seedModel = model_of(v["seedModel"], path + "/seedModel", t.typeLabel);
    if (v.contains("eckardtOptions"))
        for (auto it = v["eckardtOptions"].begin(); it != v["eckardtOptions"].end(); ++it)
            t.eckardtOptions[it.key()] = it.value().get<std::vector<int>>();
    if (v.contains("transitions"))
        for (size_t i = 0; i < v["transitions"].size(); ++i)
            t.transitions.push_back(script_of(v["transitions"][i], path + "/transitions/" + std::to_string(i)));
    if (v.contains("expectedChamberCount")) t.expectedChamberCount = int_of(v["expectedChamberCount"], path + "/expectedChamberCount");
    if (v.contains("expectedWalls"))
        for (size_t i = 0; i < v["expectedWalls"].size(); ++i)
            t.expectedWalls.push_back(constraint_of(v["expectedWalls"][i], path + "/expectedWalls/" + std::to_string(i)));
    if (v.contains("expectedChambers")) t.expectedChambers = labeled_of(v["expectedChambers"], path + "/expectedChambers");
    t.notes = v.value("notes", "");
    return t;
}

json type_json(const TypeEntry& t) {
    json j = {{"typeLabel", t.typeLabel}, {"ellChoice", t.ellChoice}};
    if (!t.variant.empty()) j["variant"] = t.variant;
    j["seedModel"] = t.seedModel ? model_json(*t.seedModel) : json(nullptr);
    json eo = json::object();
    for (const auto& [k, v] : t.eckardtOptions) eo[k] = v;
    j["eckardtOptions"] = eo;
    json tr = json::array();
    for (const auto& s : t.transitions) tr.push_back(script_json(s));
    j["transitions"] = tr;
    if (t.expectedChamberCount) j["expectedChamberCount"] = *t.expectedChamberCount;
    json ew = json::array();
    for (const auto& k : t.expectedWalls) ew.push_back(constraint_to_json(k));
    j["expectedWalls"] = ew;
    if (!t.expectedChambers.empty()) j["expectedChambers"] = labeled_json(t.expectedChambers);
    if (!t.notes.empty()) j["notes"] = t.notes;
    return j;
}

void check_entry(const TypeEntry& t, const std::string& path) {
    if (t.seedModel) {
        auto rep = validate_surface(*t.seedModel);
        if (!rep.ok()) throw CatalogError(path + "/seedModel", rep.violations.front());
        for (const auto& [id, allowed] : t.eckardtOptions)
            if (t.seedModel->index_of(id) < 0) throw CatalogError(path + "/eckardtOptions", "unknown component " + id);
    } else if (t.expectedChambers.empty()) {
        throw CatalogError(path, "an entry needs a seed model or chamber regions");
    }
    std::set<std::string> steps = {"0"};
    for (const auto& s : t.transitions) steps.insert(s.toStep);
    for (size_t i = 0; i < t.transitions.size(); ++i)
        if (!steps.count(t.transitions[i].fromStep))
            throw CatalogError(path + "/transitions/" + std::to_string(i) + "/fromStep",
                               "step '" + t.transitions[i].fromStep + "' does not resolve");
}

}  // namespace

std::string constraint_json(const LinearConstraint& k) { return constraint_to_json(k).dump(); }

std::vector<const TypeEntry*> CatalogFile::entries(const std::string& key) const {
    std::vector<const TypeEntry*> out;
    for (const auto& t : types)
        if (t.key() == key) out.push_back(&t);
    return out;
}

std::vector<std::string> CatalogFile::keys() const {
    std::vector<std::string> out;
    for (const auto& t : types)
        if (std::find(out.begin(), out.end(), t.key()) == out.end()) out.push_back(t.key());
    return out;
}

CatalogFile load_catalog(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CatalogError("", std::string("invalid JSON: ") + e.what());
    }
    CatalogFile c;
    try {
        c.schemaVersion = int_of(need(j, "schemaVersion", ""), "/schemaVersion");
        if (c.schemaVersion != 1) schema("/schemaVersion", "unsupported schema version");
        const json& types = need(j, "types", "");
        for (size_t i = 0; i < types.size(); ++i) {
            std::string p = "/types/" + std::to_string(i);
            c.types.push_back(type_of(types[i], p));
            check_entry(c.types.back(), p);
        }
        if (j.contains("global")) {
            const json& g = j["global"];
            if (g.contains("expectedChamberCount")) c.global.expectedChamberCount = int_of(g["expectedChamberCount"], "/global/expectedChamberCount");
            if (g.contains("chambers")) c.global.chambers = labeled_of(g["chambers"], "/global/chambers");
            if (g.contains("moduliChangingWalls"))
                for (size_t i = 0; i < g["moduliChangingWalls"].size(); ++i)
                    c.global.moduliChangingWalls.push_back(
                        constraint_of(g["moduliChangingWalls"][i], "/global/moduliChangingWalls/" + std::to_string(i)));
            if (g.contains("morphisms"))
                for (const auto& m : g["morphisms"])
                    c.global.morphisms.push_back({m.at("from").get<std::string>(), m.at("to").get<std::string>(), m.value("iso", true)});
        }
    } catch (const json::exception& e) {
        throw CatalogError("", std::string("schema violation: ") + e.what());
    }
    return c;
}

CatalogFile load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError(path, "cannot read catalog");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

std::string serialize_catalog(const CatalogFile& c, int indent) {
    json types = json::array();
    for (const auto& t : c.types) types.push_back(type_json(t));
    json j = {{"schemaVersion", c.schemaVersion}, {"types", types}};
    json g = json::object();
    if (c.global.expectedChamberCount) g["expectedChamberCount"] = *c.global.expectedChamberCount;
    if (!c.global.chambers.empty()) g["chambers"] = labeled_json(c.global.chambers);
    if (!c.global.moduliChangingWalls.empty()) {
        json a = json::array();
        for (const auto& k : c.global.moduliChangingWalls) a.push_back(constraint_to_json(k));
        g["moduliChangingWalls"] = a;
    }
    if (!c.global.morphisms.empty()) {
        json a = json::array();
        for (const auto& m : c.global.morphisms) a.push_back({{"from", m.from}, {"to", m.to}, {"iso", m.iso}});
        g["morphisms"] = a;
    }
    if (!g.empty()) j["global"] = g;
    return j.dump(indent);
}

std::string builtin_catalog_path() {
    if (const char* env = std::getenv("CW_CATALOG")) return env;
    return std::string(CW_DATA_DIR) + "/catalog.json";
}

CatalogFile load_builtin_catalog() { return load_catalog_file(builtin_catalog_path()); }

bool SelfCheckReport::ok() const {
    for (const auto& f : findings)
        if (f.severity == "error") return false;
    return true;
}

SelfCheckReport self_check(const CatalogFile& c) {
    SelfCheckReport rep;
    for (const auto& t : c.types) {
        std::string name = t.key() + (t.variant.empty() ? "" : "/" + t.variant);
        auto add = [&](bool ok, const std::string& msg) { rep.findings.push_back({name, ok ? "ok" : "error", msg}); };
        if (!t.seedModel) {
            bool disjoint = true;
            for (size_t i = 0; i < t.expectedChambers.size(); ++i)
                for (size_t j = i + 1; j < t.expectedChambers.size(); ++j)
                    if (t.expectedChambers[i].region.intersects(t.expectedChambers[j].region)) disjoint = false;
            add(disjoint, "region-only chambers pairwise disjoint");
            if (t.expectedChamberCount)
                add(static_cast<int>(t.expectedChambers.size()) == *t.expectedChamberCount,
                    "region-only chamber count " + std::to_string(t.expectedChambers.size()));
            continue;
        }
        const SurfaceModel& m = *t.seedModel;
        auto vr = validate_surface(m);
        add(vr.ok(), vr.ok() ? "seed model valid" : vr.violations.front());
        QuadPoly vol = volume(m);
        add(vol == target_volume(), "seed volume " + vol.str());
        Region r = stability_region(m);
        bool top = !r.empty() && Region(r.constraints()).with(ge(AffinePoly{-1, 0, 1} + AffinePoly{Rational(1, 100), 0, 0})).dimension() >= 0;
        add(top, "seed stable near (1,1): " + r.str());
        for (const auto& comp : m.components) {
            auto it = t.eckardtOptions.find(comp.id);
            if (it == t.eckardtOptions.end()) continue;
            int n = static_cast<int>(comp.eckardt.size());
            bool ok = std::find(it->second.begin(), it->second.end(), n) != it->second.end();
            add(ok, comp.id + " declares " + std::to_string(n) + " Eckardt points");
        }
    }
    return rep;
}

}  // namespace cw
