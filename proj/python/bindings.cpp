#include "cw/chambers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cw;

namespace {

const CatalogFile& catalog() {
    static const CatalogFile c = load_builtin_catalog();
    return c;
}

const TypeEntry& entry(const std::string& key) {
    auto es = catalog().entries(key);
    if (es.empty()) throw py::key_error("no type " + key);
    return *es.front();
}

SurfaceModel model(const std::string& key, const std::string& step) {
    const TypeEntry& e = entry(key);
    if (e.region_only()) throw py::value_error(key + " carries region data only");
    if (step == "0") return *e.seedModel;
    for (const auto& ch : enumerate_variant(e).chambers)
        if (ch.step == step) return ch.models.front()->model;
    throw py::value_error("scan of " + key + " never reaches step " + step);
}

py::list chamber_list(const Decomposition& d) {
    py::list out;
    for (const auto& ch : d.chambers) {
        py::dict x;
        x["label"] = ch.label;
        x["region"] = ch.region.str();
        x["dimension"] = ch.region.dimension();
        out.append(x);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact wall-and-chamber computations for weighted marked cubic surfaces";

    m.def("catalog_keys", [] { return catalog().keys(); });

    m.def("evaluate", [](const std::string& poly, const std::string& b, const std::string& c) {
        return to_string(parse_quad(poly).eval(parse_rational(b), parse_rational(c)));
    }, py::arg("poly"), py::arg("b"), py::arg("c"));

    m.def("volume", [](const std::string& key, const std::string& step) { return volume(model(key, step)).str(); },
          py::arg("type"), py::arg("step") = "0");

    m.def("check", [](const std::string& key, const std::string& step, const std::string& b, const std::string& c) {
        auto rep = stability_report(model(key, step), Point{parse_rational(b), parse_rational(c)});
        py::list failing;
        for (const auto& f : rep.failingCertificates)
            failing.append(py::make_tuple(f.condition, f.source, f.constraint.str()));
        py::dict out;
        out["stable"] = rep.stableAt;
        out["region"] = rep.region.str();
        out["failing"] = failing;
        return out;
    }, py::arg("type"), py::arg("step"), py::arg("b"), py::arg("c"));

    m.def("chambers", [](const std::string& key) { return chamber_list(enumerate_chambers(catalog(), key)); },
          py::arg("type"));

    m.def("global_chambers", [] { return chamber_list(global_decomposition(catalog())); });

    m.def("exceptional_curves", [](int n, std::vector<std::array<int, 3>> triples) {
        auto l = LatticeType::plane(n, std::move(triples));
        auto neg = negative_curves(l);
        std::vector<std::string> one, two;
        for (const auto& x : neg.minusOne) one.push_back(class_str(l, x));
        for (const auto& x : neg.minusTwo) two.push_back(class_str(l, x));
        return py::make_tuple(one, two);
    }, py::arg("n"), py::arg("triples") = std::vector<std::array<int, 3>>{});
}
