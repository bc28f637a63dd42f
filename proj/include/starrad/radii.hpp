#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starrad/regions.hpp"

namespace starrad {

/// One row of the radius catalog: the closed-form constant, the independently
/// solved value, and the quadratic equation whose smallest positive root is
/// the radius. For the lemniscate target, two equivalent derivations exist
/// (the containment-lemma disk and the disk about 1); `route` records which
/// one produced `solved` and `route_discrepancy` the gap between them.
struct RadiusResult {
    ClassId cls = ClassId::Pi1;
    TargetRegion region;
    double closed_form = 0.0;
    double solved = 0.0;
    bool sharp = true;  // false for the Pi2 lemniscate and sine bounds
    std::string equation;
    double eq_a = 0.0, eq_b = 0.0, eq_c = 0.0;  // eq_a r^2 + eq_b r + eq_c = 0
    std::string route = "lemma-disk";
    std::optional<double> route_discrepancy;
};

/// The closed-form radius constant for the pair, evaluated in double precision.
double closed_form_radius(ClassId cls, const TargetRegion& region);

/// Whether the constant is proved sharp (false for Pi2 lemniscate/sine,
/// which are lower bounds only).
bool radius_is_sharp(ClassId cls, RegionTag tag);

std::string radius_equation(ClassId cls, const TargetRegion& region);
void radius_equation_coeffs(ClassId cls, const TargetRegion& region,
                            double& qa, double& qb, double& qc);

/// Containment margin m(r) = max_disk_radius(region, a(r)) - b(r);
/// nullopt once a(r) leaves the region's admissible center interval.
std::optional<double> containment_margin_at(ClassId cls, const TargetRegion& region, double r);

/// Largest r with m(r) >= 0, localized by bisection under a verified sign
/// change. Throws NoSignChangeError if m never turns negative before a(r)
/// exits the admissible interval; requires m(tol) > 0.
double solve_radius(ClassId cls, const TargetRegion& region, double tol = 1e-12);

/// Lemniscate radius via the disk about 1: largest r with
/// b(r) + (a(r) - 1) <= sqrt(2) - 1.
double solve_radius_disk_about_one(ClassId cls, double tol = 1e-12);

/// Materialize the radius catalog for one class: one row per half-plane
/// order in `alphas` followed by one row per remaining region, each with
/// closed form and solver value cross-checked.
std::vector<RadiusResult> radius_table(ClassId cls, const std::vector<double>& alphas);

}  // namespace starrad
