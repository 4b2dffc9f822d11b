#pragma once

#include "cw/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cw {

// Volume of the marked cubic pair: -b^2 + 20bc - 2b + 224c^2 - 52c + 3.
QuadPoly target_volume();

struct Certificate {
    std::string condition;  // "slc", "ample", "volume"
    std::string source;     // component / point / curve description
    LinearConstraint constraint;
};

struct SourcedConstraint {
    LinearConstraint constraint;
    std::string condition;
    std::string source;
};

std::vector<SourcedConstraint> slc_constraints_sourced(const SurfaceModel& s);
std::vector<SourcedConstraint> ample_constraints_sourced(const SurfaceModel& s);
std::vector<LinearConstraint> slc_constraints(const SurfaceModel& s);
std::vector<LinearConstraint> ample_constraints(const SurfaceModel& s);

QuadPoly component_volume(const Component& comp);
QuadPoly volume(const SurfaceModel& s);

// The constraint enforcing volume == target: none if identical, EQ lin if the
// difference is a multiple of lin^2, otherwise an unsatisfiable constraint.
struct VolumeCheck {
    bool identical = false;
    bool satisfiable = false;
    std::optional<LinearConstraint> constraint;
};
VolumeCheck volume_check(const SurfaceModel& s, const QuadPoly& target = target_volume());

struct StabilityReport {
    Region slcRegion;
    Region ampleRegion;
    Region region;  // ambient, slc, ample and volume together
    QuadPoly volume;
    bool volumeMatchesTarget = false;
    std::optional<Point> at;
    bool stableAt = false;
    std::vector<Certificate> failingCertificates;
};

StabilityReport stability_report(const SurfaceModel& s, std::optional<Point> at = std::nullopt,
                                 Ambient amb = Ambient::Amp);
Region stability_region(const SurfaceModel& s, Ambient amb = Ambient::Amp);

}  // namespace cw
