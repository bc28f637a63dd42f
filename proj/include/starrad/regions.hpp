#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "starrad/complex_kernel.hpp"

namespace starrad {

/// The eight target regions. All contain w = 1 in their interior.
///
///   HalfPlane(alpha)  { Re w > alpha },  0 <= alpha < 1
///   Lemniscate        { |w^2 - 1| < 1 }
///   Parabolic         { Re w > |w - 1| }
///   Exp               { |log w| < 1 }
///   Cardioid          image of the unit disk under 1 + 4z/3 + 2z^2/3
///   Sine              image of the unit disk under 1 + sin z
///   Lune              { |w^2 - 1| < 2|w| }
///   Rational          image of the unit disk under 1 + (kz+z^2)/(k^2-kz),
///                     k = sqrt(2)+1
enum class RegionTag { HalfPlane, Lemniscate, Parabolic, Exp, Cardioid, Sine, Lune, Rational };

inline const double kRationalK = 2.41421356237309504880;  // sqrt(2) + 1

struct TargetRegion {
    RegionTag tag = RegionTag::HalfPlane;
    double alpha = 0.0;  // half-plane order; ignored by the other tags

    static TargetRegion half_plane(double alpha);
    static TargetRegion make(RegionTag tag);

    friend bool operator==(const TargetRegion&, const TargetRegion&) = default;
};

const std::array<RegionTag, 8>& all_region_tags();

std::string_view region_name(RegionTag tag);    // "halfplane", "lemniscate", ...
std::string_view region_symbol(RegionTag tag);  // "S_star", "S_L", ...

/// Membership verdict. Only the sign of margin carries contract weight:
/// positive means strictly inside, zero is boundary (reported not inside),
/// negative outside. The magnitude is region-specific, not a Euclidean
/// distance.
struct ContainmentMargin {
    bool inside = false;
    double margin = 0.0;
    bool branch_warning = false;  // sine domain only: w within 1e-12 of 0 or 2
};

/// Decide membership of w. Margins: HalfPlane Re w - alpha; Lemniscate
/// 1 - |w^2-1|; Parabolic Re w - |w-1|; Exp 1 - |Log w|; Lune 2|w| - |w^2-1|;
/// Cardioid and Rational invert the defining map (quadratic in z) and report
/// 1 - min root modulus; Sine reports 1 - |arcsin(w-1)| via the principal
/// branch (sin is univalent on the unit disk, which lies in |Re z| < pi/2).
ContainmentMargin contains(const TargetRegion& region, Complex w);

/// n points tracing the region boundary once, ordered by parameter.
/// For HalfPlane, a clipped segment of the line Re w = alpha.
std::vector<Complex> boundary_points(const TargetRegion& region, int n);

/// Open interval of admissible real centers a for max_disk_radius
/// (hi = +infinity when unbounded).
struct CenterInterval {
    double lo = 0.0;
    double hi = 0.0;
};
CenterInterval admissible_center_interval(const TargetRegion& region);

/// Radius of the largest disk centered at real a contained in the region,
/// as the piecewise closed forms of the containment lemmas:
///
///   HalfPlane  a - alpha                                   a > alpha
///   Lemniscate sqrt(sqrt(1-a^2)-(1-a^2))  on (0, 2sqrt2/3], then sqrt(2)-a
///   Parabolic  a - 1/2 on (1/2, 3/2],     then sqrt(2a-2)
///   Exp        a - 1/e on (1/e, (e+1/e)/2], then e - a
///   Cardioid   a - 1/3 on (1/3, 5/3],     then 3 - a
///   Sine       sin(1) - |a - 1|
///   Lune       1 - |sqrt(2) - a|
///   Rational   a - 2(sqrt(2)-1) on (2(sqrt2-1), sqrt2], then 2 - a
///
/// Throws DomainError for a outside the open interval.
double max_disk_radius(const TargetRegion& region, double a);

/// Sampled-boundary polygon used by the point-in-polygon oracle.
struct RegionPolygon {
    std::vector<Complex> pts;  // implicitly closed (last vertex joins first)
    double threshold = 0.0;    // conclusive-distance cutoff: 2*pi*diameter/n
};
enum class OracleVerdict { Inside, Outside, Inconclusive };

RegionPolygon make_region_polygon(const TargetRegion& region, int n);
OracleVerdict polygon_classify(const RegionPolygon& poly, Complex w);

/// Independent even-odd crossing test of w against boundary_points(region, n).
/// Requires n >= 512; throws InconclusiveError when w is within
/// 2*pi*diameter/n of the polygon.
bool contains_oracle(const TargetRegion& region, Complex w, int n);

/// Implicit polynomial of the cardioid boundary,
/// (9x^2+9y^2-18x+5)^2 - 16(9x^2+9y^2-6x+1); zero on the curve.
double cardioid_quartic(Complex w);

}  // namespace starrad
