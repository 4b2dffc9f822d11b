#pragma once

#include "cw/mmp.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cw {

struct CatalogError : std::runtime_error {
    std::string path;
    CatalogError(std::string p, const std::string& msg) : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

struct LabeledRegion {
    std::string label;
    Region region;
};

struct TypeEntry {
    std::string typeLabel;
    std::string ellChoice;
    std::string variant;
    std::optional<SurfaceModel> seedModel;
    std::map<std::string, std::vector<int>> eckardtOptions;
    std::vector<TransitionScript> transitions;
    std::optional<int> expectedChamberCount;
    std::vector<LinearConstraint> expectedWalls;
    std::vector<LabeledRegion> expectedChambers;
    std::string notes;

    // "smooth", "DA1-ell-smooth", "E2A1-two-nodes", ...
    std::string key() const { return ellChoice.empty() ? typeLabel : typeLabel + "-" + ellChoice; }
    bool region_only() const { return !seedModel.has_value(); }
};

struct Morphism {
    std::string from, to;
    bool iso = true;
};

struct GlobalData {
    std::optional<int> expectedChamberCount;
    std::vector<LabeledRegion> chambers;
    std::vector<LinearConstraint> moduliChangingWalls;
    std::vector<Morphism> morphisms;
};

struct CatalogFile {
    int schemaVersion = 1;
    std::vector<TypeEntry> types;
    GlobalData global;

    std::vector<const TypeEntry*> entries(const std::string& key) const;
    std::vector<std::string> keys() const;  // distinct, in file order
};

CatalogFile load_catalog(const std::string& text);
CatalogFile load_catalog_file(const std::string& path);
std::string serialize_catalog(const CatalogFile& c, int indent = 1);
// Path of the bundled catalog ("builtin").
std::string builtin_catalog_path();
CatalogFile load_builtin_catalog();

// Structural JSON helpers shared with the CLI.
std::string constraint_json(const LinearConstraint& k);

struct SelfCheckFinding {
    std::string type;
    std::string severity;  // "ok", "error"
    std::string message;
};

struct SelfCheckReport {
    std::vector<SelfCheckFinding> findings;
    bool ok() const;
};

SelfCheckReport self_check(const CatalogFile& c);

}  // namespace cw
