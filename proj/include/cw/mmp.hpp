#pragma once

#include "cw/stability.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cw {

enum class StepKind {
    BlowDownMinusOne,
    ContractRulingToCurve,
    ContractComponentToPoint,
    ContractComponentToCurve,
    ContractMinusTwoToNode,
    BlowUpPoint,
    AttachPlaneAtExceptional,
};

const char* step_name(StepKind k);
StepKind parse_step_kind(std::string_view s);

// Picks a curve on a component by class, optionally narrowed by kind and weight.
struct CurveSelector {
    IVec cls;
    std::optional<CurveKind> kind;
    std::optional<AffinePoly> weight;
};

struct TransitionStep {
    StepKind kind = StepKind::BlowDownMinusOne;
    std::string component;
    // BlowDownMinusOne / ContractMinusTwoToNode: classes handled in order.
    // ContractRulingToCurve / ContractComponentToCurve: the contracted ruling.
    std::vector<IVec> classes;
    // ContractRulingToCurve: expected absorbing neighbor (checked when set).
    std::string absorbing;
    // BlowUpPoint / AttachPlaneAtExceptional: curves through the point.
    std::vector<CurveSelector> point;
    // BlowUpPoint: the exceptional curve enters as boundary with this weight,
    // or as a conductor glued to `glueTo` when that is set.
    std::optional<AffinePoly> newWeight;
    std::optional<GluingRef> glueTo;
    // AttachPlaneAtExceptional: id of the new plane component.
    std::string newComponent;
};

struct TransitionScript {
    std::string fromStep;
    std::string variant;
    LinearConstraint wall;  // EQ
    std::string side;       // "below" or "above": sign of the wall polynomial on the destination
    std::vector<TransitionStep> steps;
    std::string toStep;
};

struct StepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Does p vanish identically on the wall line?
bool vanishes_on(const AffinePoly& p, const LinearConstraint& wall);

SurfaceModel apply_step(const SurfaceModel& s, const TransitionStep& step, const LinearConstraint& wall);

struct ComponentGluingCheck {
    std::string component;
    bool nef = false;
    bool big = false;
    bool bigNef = false;
    std::vector<std::pair<std::string, AffinePoly>> conductorDegrees;
    std::vector<std::string> failures;
};

struct GluingCheckReport {
    std::vector<ComponentGluingCheck> components;
    Point witness;
    bool pass = false;
    std::vector<std::string> failures;
};

GluingCheckReport check_gluing_conditions(const SurfaceModel& s, const LinearConstraint& wall, const Point& witness);

// Midpoint of the wall facet of `region`'s closure.
std::optional<Point> wall_witness(const Region& region, const LinearConstraint& wall);

struct CrossResult {
    SurfaceModel model;
    Region region;
    GluingCheckReport gluing;
};

// Applies the script from a model whose stability region is `source`.
CrossResult cross_wall(const SurfaceModel& s, const TransitionScript& script, Ambient amb = Ambient::Amp);

// Does q vanish on every point of the region (identically when it is 2-dimensional)?
bool vanishes_on_region(const QuadPoly& q, const Region& r);

}  // namespace cw
