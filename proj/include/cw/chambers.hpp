#pragma once

#include "cw/catalog.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cw {

enum class FailureKind { SLC, AMPLE, VOLUME, CATALOG };
enum class SlopeClass { Negative, Zero, Positive, Vertical };

const char* failure_name(FailureKind k);
const char* slope_name(SlopeClass s);
SlopeClass slope_class(const LinearConstraint& k);

struct Wall {
    LinearConstraint constraint;  // EQ, canonical
    Point p, q;                   // segment endpoints
    FailureKind kind = FailureKind::CATALOG;
    std::vector<std::string> certificates;
    SlopeClass slope = SlopeClass::Zero;
    bool moduliChange = false;
    std::string rule;
};

struct ModelInfo {
    std::string typeKey, variant, step;
    SurfaceModel model;
    std::vector<SourcedConstraint> slc, ample;
    std::optional<LinearConstraint> volume;
};
using ModelRef = std::shared_ptr<const ModelInfo>;
ModelRef make_model_ref(const std::string& key, const std::string& variant, const std::string& step, SurfaceModel m);

struct Chamber {
    Region region;
    std::string typeKey;
    std::string step;  // model reference inside the type ("" for region-only data)
    std::string label;
    std::vector<ModelRef> models;  // every model valid on the region
};

struct Adjacency {
    int wall;
    int a, b;
};

struct ScanEntry {
    std::string step;
    std::string region;
    Rational oldFloor, newFloor;
    char floorCase = 'b';  // (a) lowered, (b) unchanged, (c) horizontal segment
    std::string crossed;   // wall crossed to reach this chamber
};

struct Decomposition {
    std::string name;
    Ambient ambient = Ambient::Amp;
    std::vector<Chamber> chambers;
    std::vector<Wall> walls;
    std::vector<Adjacency> adjacency;
    std::vector<ScanEntry> scan;

    int find(const Region& r) const;
    int find_label(const std::string& label) const;
};

struct ScanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One scan of one catalog entry (one variant).
Decomposition enumerate_variant(const TypeEntry& t, Ambient amb = Ambient::Amp);
// All variants of a type key, refined together; region-only entries use their stored chambers.
Decomposition enumerate_chambers(const CatalogFile& cat, const std::string& key, Ambient amb = Ambient::Amp);

// Common refinement; chambers of the result carry the labels of `a`.
Decomposition refine(const Decomposition& a, const Decomposition& b);
// Recomputes walls and adjacency from the chamber list.
void build_walls(Decomposition& d);

Decomposition merge_global(const CatalogFile& cat, const std::vector<Decomposition>& parts);
Decomposition global_decomposition(const CatalogFile& cat, Ambient amb = Ambient::Amp);

struct WallClass {
    bool coarseModuliIsomorphic = true;
    std::string rule;
};
WallClass classify_wall(const Decomposition& d, int wall, const GlobalData& g);
void classify_walls(Decomposition& d, const GlobalData& g);
// Every non-isomorphic morphism of the catalog must cross a moduli-changing wall.
std::vector<std::string> check_morphisms(const Decomposition& d, const GlobalData& g);

struct CoverageReport {
    long points = 0;
    long uncovered = 0;
    long multiply = 0;
    std::optional<Point> firstBad;
    bool ok() const { return uncovered == 0 && multiply == 0; }
};
// Every rational point of the ambient domain with denominators <= maxDen lies in exactly one chamber.
CoverageReport coverage(const Decomposition& d, int maxDen = 60);

std::string decomposition_json(const Decomposition& d, int indent = 1);
std::string render_svg(const Decomposition& d);

}  // namespace cw
