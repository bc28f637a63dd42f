#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starrad/radii.hpp"

namespace starrad {

enum class Verdict { Contained, Touches, Violates };
std::string_view verdict_name(Verdict v);

struct VerifyTolerances {
    double inside = 1e-9;  // min margin above this counts as contained
    double touch = 1e-6;   // |min margin| below this counts as a boundary touch
    double solver = 1e-12;
};

/// Result of a containment / sharpness / cross-validation run. The core
/// fields describe one sampled circle; cross_validate additionally fills the
/// closed-form / solver comparison and the overall pass flag.
struct VerificationReport {
    ClassId cls = ClassId::Pi1;
    FunctionId function_id = FunctionId::F0;
    TargetRegion region;
    double radius_tested = 0.0;
    int n_samples = 0;
    double min_margin = 0.0;
    std::optional<Complex> touch_point;  // sample attaining the min margin
    double touch_angle = 0.0;            // its angle on the circle
    Verdict verdict = Verdict::Violates;
    VerifyTolerances tolerances;

    std::optional<double> closed_form;
    std::optional<double> solved;
    bool sharp = true;
    bool pass = true;
    std::string route;
    std::optional<double> route_discrepancy;
    std::vector<std::string> failures;
};

/// The function witnessing sharpness for each class: f0 for Pi1, f3 for Pi2.
FunctionId extremal_function(ClassId cls);

/// Sign s of the boundary-touch point z* = s R for a sharp item. The touches
/// happen at -R except for the Pi1 lemniscate and sine items, which touch
/// at +R.
double designated_touch_sign(ClassId cls, RegionTag tag);

/// Evaluate w = z f'/f on n uniform samples of |z| = r and report the
/// minimum containment margin. Requires 0 < r < 1 and n >= 360. Throws
/// InconclusiveError if more than 1% of samples raise a branch warning.
VerificationReport check_function_containment(FunctionId id, const TargetRegion& region,
                                              double r, int n,
                                              const VerifyTolerances& tol = {});

/// True iff the image of z_star lies on the region boundary to within tol.
/// Requires |z_star| = R to 1e-12.
bool check_sharpness(FunctionId id, const TargetRegion& region, double R,
                     Complex z_star, double tol);

/// Largest r (to tol) at which the image circle of z f'/f stays contained,
/// bisected on the verdict at 2048 samples. Throws NoSignChangeError when
/// containment never fails below the scan cap.
double estimate_radius_function_level(FunctionId id, const TargetRegion& region, double tol);

/// Full cross-check of one (class, region) pair: closed form vs solver to
/// 1e-9, extremal function contained at 0.999 R, boundary touch at R for
/// sharp items (lower-bound-only items skip the touch requirement).
VerificationReport cross_validate(ClassId cls, const TargetRegion& region,
                                  int n = 2048, const VerifyTolerances& tol = {});

}  // namespace starrad
