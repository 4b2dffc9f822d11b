#include "cw/chambers.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace cw;
using nlohmann::json;

namespace {

struct Options {
    std::string catalog = "builtin";
    std::string type;
    std::string variant;
    std::string step = "0";
    std::string b, c;
    std::string format = "text";
    std::string out;
    std::string component;
    int n = 6;
    std::string kind = "plane";
    std::string triples;
    bool conic = false;
    bool global = false;
    std::string ambient = "amp";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CatalogFile load(const Options& o) {
    return o.catalog == "builtin" ? load_builtin_catalog() : load_catalog_file(o.catalog);
}

Ambient ambient_of(const Options& o) {
    if (o.ambient == "amp") return Ambient::Amp;
    if (o.ambient == "box") return Ambient::Box;
    throw UsageError("--ambient must be amp or box");
}

const TypeEntry& entry_of(const CatalogFile& cat, const Options& o) {
    if (o.type.empty()) throw UsageError("--type is required");
    auto es = cat.entries(o.type);
    if (es.empty()) throw CatalogError("/types", "no type " + o.type);
    for (const auto* e : es)
        if (o.variant.empty() || e->variant == o.variant) return *e;
    throw CatalogError("/types", "type " + o.type + " has no variant " + o.variant);
}

// The model of a scan step; step "0" is the seed.
SurfaceModel model_of(const CatalogFile& cat, const Options& o) {
    const TypeEntry& e = entry_of(cat, o);
    if (e.region_only()) throw CatalogError("/types", o.type + " carries region data only");
    if (o.step == "0") return *e.seedModel;
    Decomposition d = enumerate_variant(e, ambient_of(o));
    for (const auto& ch : d.chambers)
        if (ch.step == o.step) return ch.models.front()->model;
    throw CatalogError("/types", "scan of " + o.type + " never reaches step " + o.step);
}

std::optional<Point> point_of(const Options& o) {
    if (o.b.empty() && o.c.empty()) return std::nullopt;
    if (o.b.empty() || o.c.empty()) throw UsageError("--b and --c go together");
    try {
        return Point{parse_rational(o.b), parse_rational(o.c)};
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad weight: ") + e.what());
    }
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

std::string word(const std::string& condition) {
    if (condition == "ample") return "not ample";
    if (condition == "slc") return "not slc";
    if (condition == "volume") return "volume changes";
    return "outside the domain";
}

int cmd_check(const Options& o) {
    CatalogFile cat = load(o);
    SurfaceModel m = model_of(cat, o);
    auto at = point_of(o);
    if (!at) throw UsageError("check needs --b and --c");
    auto rep = stability_report(m, at, ambient_of(o));
    if (o.format == "json") {
        json fails = json::array();
        for (const auto& f : rep.failingCertificates)
            fails.push_back({{"condition", f.condition},
                             {"source", f.source},
                             {"constraint", json::parse(constraint_json(f.constraint))},
                             {"value", to_string(f.constraint.poly.eval(at->b, at->c))}});
        json j = {{"type", o.type}, {"step", o.step}, {"at", {to_string(at->b), to_string(at->c)}}, {"stable", rep.stableAt},
                  {"region", rep.region.str()}, {"volume", rep.volume.str()}, {"failing", fails}};
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << o.type << " step " << o.step << " at " << at->str() << ": " << (rep.stableAt ? "stable" : "unstable") << "\n";
        std::cout << "stability region: " << rep.region.str() << "\n";
    }
    for (const auto& f : rep.failingCertificates)
        std::cerr << word(f.condition) << ": " << f.source << " (" << f.constraint.poly.str() << " = "
                  << to_string(f.constraint.poly.eval(at->b, at->c)) << ")\n";
    return rep.stableAt ? 0 : 1;
}

Decomposition decomposition_of(const CatalogFile& cat, const Options& o) {
    if (o.global) return global_decomposition(cat, ambient_of(o));
    if (o.type.empty()) throw UsageError("--type or --global is required");
    if (!o.variant.empty()) return enumerate_variant(entry_of(cat, o), ambient_of(o));
    Decomposition d = enumerate_chambers(cat, o.type, ambient_of(o));
    classify_walls(d, cat.global);
    return d;
}

int cmd_walls(const Options& o) {
    CatalogFile cat = load(o);
    Decomposition d = decomposition_of(cat, o);
    if (o.format == "json") {
        json j = json::parse(decomposition_json(d));
        emit(o, json{{"name", d.name}, {"walls", j["walls"]}}.dump(1) + "\n");
        return 0;
    }
    std::ostringstream s;
    for (const auto& w : d.walls) {
        s << w.constraint.str() << "  from " << w.p.str() << " to " << w.q.str() << "  " << failure_name(w.kind) << ", slope "
          << slope_name(w.slope) << (w.moduliChange ? ", moduli-changing" : "") << "\n";
        for (const auto& c : w.certificates) s << "    " << c << "\n";
    }
    emit(o, s.str());
    return 0;
}

int cmd_chambers(const Options& o) {
    CatalogFile cat = load(o);
    Decomposition d = decomposition_of(cat, o);
    if (o.format == "json") {
        emit(o, decomposition_json(d) + "\n");
        return 0;
    }
    std::ostringstream s;
    s << d.name << ": " << d.chambers.size() << " chambers\n";
    for (size_t i = 0; i < d.chambers.size(); ++i) {
        const auto& ch = d.chambers[i];
        s << "  [" << i << "] " << (ch.label.empty() ? "-" : ch.label) << "  " << ch.region.str() << "\n";
    }
    emit(o, s.str());
    return 0;
}

int cmd_global(Options o) {
    o.global = true;
    if (o.format == "json") return cmd_chambers(o);
    CatalogFile cat = load(o);
    Decomposition d = decomposition_of(cat, o);
    std::ostringstream s;
    s << d.name << ": " << d.chambers.size() << " chambers\n";
    for (size_t i = 0; i < d.chambers.size(); ++i) {
        const auto& ch = d.chambers[i];
        s << "  [" << i << "] " << (ch.label.empty() ? "-" : ch.label) << "  " << ch.region.str() << "\n";
    }
    int changing = 0;
    for (const auto& w : d.walls) changing += w.moduliChange;
    s << d.walls.size() << " walls, " << changing << " moduli-changing\n";
    auto cov = coverage(d, 60);
    s << "coverage (denominators <= 60): " << cov.points << " points, " << cov.uncovered << " uncovered, " << cov.multiply << " in several chambers\n";
    auto bad = check_morphisms(d, cat.global);
    s << "morphisms: " << cat.global.morphisms.size() << " listed, " << bad.size() << " inconsistent\n";
    for (const auto& b : bad) s << "  " << b << "\n";
    emit(o, s.str());
    return cov.ok() && bad.empty() ? 0 : 1;
}

int cmd_volume(const Options& o) {
    CatalogFile cat = load(o);
    SurfaceModel m = model_of(cat, o);
    QuadPoly total = volume(m);
    auto vc = volume_check(m);
    if (o.format == "json") {
        json comps = json::object();
        for (const auto& c : m.components) comps[c.id] = component_volume(c).str();
        json j = {{"components", comps}, {"total", total.str()}, {"target", target_volume().str()}, {"identical", vc.identical}};
        if (vc.constraint) j["constraint"] = vc.constraint->str();
        std::cout << j.dump(1) << "\n";
    } else {
        for (const auto& c : m.components) std::cout << c.id << ": " << component_volume(c).str() << "\n";
        std::cout << "total: " << total.str() << "\ntarget: " << target_volume().str() << "\n";
        std::cout << (vc.identical ? "identical" : (vc.constraint ? "agrees only on " + vc.constraint->str() : "differs")) << "\n";
    }
    return 0;
}

int cmd_neg_curves(const Options& o) {
    LatticeType l;
    if (!o.type.empty()) {
        CatalogFile cat = load(o);
        SurfaceModel m = model_of(cat, o);
        if (o.component.empty()) throw UsageError("--component is required with --type");
        l = m.at(o.component).lattice;
    } else {
        l = o.kind == "quadric" ? LatticeType::quadric(o.n) : LatticeType::plane(o.n);
        if (!o.triples.empty()) {
            std::stringstream ss(o.triples);
            std::string t;
            while (std::getline(ss, t, ';')) {
                std::array<int, 3> a{};
                if (std::sscanf(t.c_str(), "%d,%d,%d", &a[0], &a[1], &a[2]) != 3) throw UsageError("bad triple " + t);
                l.colinearTriples.push_back(a);
            }
        }
        l.onConic = o.conic;
        l.derive_special();
    }
    auto minus1 = exceptional_classes(l);
    json j = {{"lattice", l.name()}, {"minusOne", json::array()}, {"special", json::array()}};
    for (const auto& e : minus1) j["minusOne"].push_back(class_str(l, e));
    for (const auto& s : l.special) j["special"].push_back(class_str(l, s));
    if (o.format == "json") {
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << l.name() << ": " << minus1.size() << " (-1)-curves\n";
        for (const auto& e : minus1) std::cout << "  " << class_str(l, e) << "\n";
        std::cout << l.special.size() << " special classes\n";
        for (const auto& s : l.special) std::cout << "  " << class_str(l, s) << "  (" << dot(l, s, s) << ")\n";
    }
    return 0;
}

int cmd_render(const Options& o) {
    if (o.out.empty()) throw UsageError("render needs -o");
    CatalogFile cat = load(o);
    Decomposition d = decomposition_of(cat, o);
    emit(o, render_svg(d));
    return 0;
}

int cmd_export(const Options& o) {
    CatalogFile cat = load(o);
    CatalogFile out;
    out.global = cat.global;
    std::vector<std::string> keys = o.type.empty() ? cat.keys() : std::vector<std::string>{o.type};
    for (const auto& key : keys) {
        Decomposition d = enumerate_chambers(cat, key, ambient_of(o));
        const TypeEntry& src = *cat.entries(key).front();
        TypeEntry t;
        t.typeLabel = src.typeLabel;
        t.ellChoice = src.ellChoice;
        t.expectedChamberCount = static_cast<int>(d.chambers.size());
        for (const auto& w : d.walls)
            if (std::none_of(t.expectedWalls.begin(), t.expectedWalls.end(), [&](const LinearConstraint& k) { return k.same_line(w.constraint); }))
                t.expectedWalls.push_back(w.constraint);
        for (const auto& ch : d.chambers) t.expectedChambers.push_back({ch.label, ch.region});
        t.notes = "computed decomposition";
        out.types.push_back(std::move(t));
    }
    emit(o, serialize_catalog(out) + "\n");
    return 0;
}

int cmd_self_check(const Options& o) {
    CatalogFile cat = load(o);
    auto rep = self_check(cat);
    if (o.format == "json") {
        json a = json::array();
        for (const auto& f : rep.findings) a.push_back({{"type", f.type}, {"severity", f.severity}, {"message", f.message}});
        std::cout << json{{"ok", rep.ok()}, {"findings", a}}.dump(1) << "\n";
    } else {
        for (const auto& f : rep.findings) std::cout << (f.severity == "ok" ? "ok    " : "ERROR ") << f.type << ": " << f.message << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wall-and-chamber decompositions for (b,c)-weighted marked cubic surfaces"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* s) {
        s->add_option("--catalog", o.catalog, "catalog path or 'builtin'");
        s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        s->add_option("--ambient", o.ambient, "amp or box")->check(CLI::IsMember({"amp", "box"}));
    };
    auto typed = [&](CLI::App* s) {
        s->add_option("--type", o.type, "type key, e.g. E2A1-two-nodes");
        s->add_option("--variant", o.variant, "catalog variant of the type");
    };
    auto out = [&](CLI::App* s) { s->add_option("-o,--output", o.out, "output path"); };

    auto* check = app.add_subcommand("check", "stability of a scan model at (b,c)");
    common(check), typed(check);
    check->add_option("--step", o.step, "scan step of the model");
    check->add_option("--b", o.b)->required();
    check->add_option("--c", o.c)->required();
    auto* walls = app.add_subcommand("walls", "walls of a type");
    common(walls), typed(walls), out(walls);
    walls->add_flag("--global", o.global, "walls of the merged decomposition");
    auto* chambers = app.add_subcommand("chambers", "chambers of a type");
    common(chambers), typed(chambers), out(chambers);
    auto* global = app.add_subcommand("global", "merged decomposition of all types");
    common(global), out(global);
    auto* vol = app.add_subcommand("volume", "volume of a scan model");
    common(vol), typed(vol);
    vol->add_option("--step", o.step);
    auto* neg = app.add_subcommand("neg-curves", "(-1) and special (-2) classes of a lattice");
    common(neg), typed(neg);
    neg->add_option("--step", o.step);
    neg->add_option("--component", o.component);
    neg->add_option("--kind", o.kind)->check(CLI::IsMember({"plane", "quadric"}));
    neg->add_option("--n", o.n, "number of blown-up points");
    neg->add_option("--triples", o.triples, "colinear triples, e.g. '1,2,3;3,4,5'");
    neg->add_flag("--conic", o.conic, "six points on a conic");
    auto* render = app.add_subcommand("render", "SVG diagram");
    common(render), typed(render), out(render);
    render->add_flag("--global", o.global);
    auto* exp = app.add_subcommand("export", "computed decompositions as a region-only catalog");
    common(exp), out(exp);
    exp->add_option("--type", o.type);
    auto* sc = app.add_subcommand("self-check", "catalog consistency report");
    common(sc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*check) return cmd_check(o);
        if (*walls) return cmd_walls(o);
        if (*chambers) return cmd_chambers(o);
        if (*global) return cmd_global(o);
        if (*vol) return cmd_volume(o);
        if (*neg) return cmd_neg_curves(o);
        if (*render) return cmd_render(o);
        if (*exp) return cmd_export(o);
        if (*sc) return cmd_self_check(o);
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        std::cerr << "catalog: " << e.what() << "\n";
        return 3;
    } catch (const ScanError& e) {
        std::cerr << "scan: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
