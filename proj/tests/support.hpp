#pragma once

#include "cw/chambers.hpp"

#include <stdexcept>
#include <string>

namespace support {

inline const cw::CatalogFile& catalog() {
    static const cw::CatalogFile c = cw::load_builtin_catalog();
    return c;
}

inline const cw::TypeEntry& entry(const std::string& key, const std::string& variant = "A") {
    for (const auto* e : catalog().entries(key))
        if (e->variant == variant || e->variant.empty()) return *e;
    throw std::runtime_error("no catalog entry " + key);
}

inline cw::SurfaceModel step_model(const std::string& key, const std::string& step, const std::string& variant = "A") {
    const auto& e = entry(key, variant);
    if (step == "0") return *e.seedModel;
    auto d = cw::enumerate_variant(e);
    for (const auto& ch : d.chambers)
        if (ch.step == step) return ch.models.front()->model;
    throw std::runtime_error("step " + step + " not reached");
}

inline const cw::TransitionScript& script(const std::string& key, const std::string& from, const std::string& to,
                                          const std::string& variant = "A") {
    for (const auto& s : entry(key, variant).transitions)
        if (s.fromStep == from && s.toStep == to) return s;
    throw std::runtime_error("no script " + from + " -> " + to);
}

inline cw::Region region(std::initializer_list<const char*> cons) {
    std::vector<cw::LinearConstraint> v;
    for (const char* s : cons) v.push_back(cw::parse_constraint(s));
    return cw::Region(v);
}

}  // namespace support
