#include "starrad/radii.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace starrad {

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kE = std::numbers::e;
const double kSin1 = std::sin(1.0);

void require_alpha(const TargetRegion& region) {
    if (region.tag == RegionTag::HalfPlane &&
        (!(region.alpha >= 0.0) || region.alpha >= 1.0))
        throw DomainError("half-plane order must lie in [0, 1)");
}

// Generic bisection for a margin that is positive at lo and changes sign
// once. Returns the largest r with margin >= 0.
template <typename Margin>
double bisect_margin(Margin&& margin, double tol, const char* what) {
    if (!(tol > 0.0) || tol > 1e-6)
        throw DomainError("solver tolerance must lie in (0, 1e-6]");
    double lo = tol;
    {
        const std::optional<double> m0 = margin(lo);
        if (!m0 || *m0 <= 0.0)
            throw DomainError(std::string("containment margin not positive at r = tol for ") + what);
    }
    constexpr double kStep = 1e-3;
    double hi = 0.0;
    bool bracketed = false;
    for (double r = lo + kStep; r < kEvalCap; r += kStep) {
        const std::optional<double> m = margin(r);
        if (!m) break;  // disk center left the admissible interval
        if (*m < 0.0) {
            hi = r;
            bracketed = true;
            break;
        }
        lo = r;
    }
    if (!bracketed)
        throw NoSignChangeError(std::string("containment margin never turns negative for ") + what);
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const std::optional<double> m = margin(mid);
        if (m && *m >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

double closed_form_radius(ClassId cls, const TargetRegion& region) {
    require_alpha(region);
    const double al = region.alpha;
    if (cls == ClassId::Pi1) {
        switch (region.tag) {
            case RegionTag::HalfPlane:
                return (1.0 - al) / (3.0 + std::sqrt(8.0 + al * al));
            case RegionTag::Lemniscate:
                return (kSqrt2 - 1.0) * (std::sqrt(10.0) - 3.0);
            case RegionTag::Parabolic:
                return (6.0 - std::sqrt(33.0)) / 3.0;
            case RegionTag::Exp:
                return (kE - 1.0) / (3.0 * kE + std::sqrt(8.0 * kE * kE + 1.0));
            case RegionTag::Cardioid:
                return (9.0 - std::sqrt(73.0)) / 4.0;
            case RegionTag::Sine:
                return kSin1 / (std::sqrt(9.0 + kSin1 * kSin1 + 2.0 * kSin1) + 3.0);
            case RegionTag::Lune:
                return 3.0 / kSqrt2 - std::sqrt(0.5 * (11.0 - 2.0 * kSqrt2));
            case RegionTag::Rational:
                return (3.0 - 2.0 * std::sqrt(5.0 - 2.0 * kSqrt2)) / (2.0 * kSqrt2 - 1.0);
        }
    } else {
        switch (region.tag) {
            case RegionTag::HalfPlane:
                return 2.0 * (1.0 - al) / (5.0 + std::sqrt(4.0 * al * al - 4.0 * al + 25.0));
            case RegionTag::Lemniscate:
                return (std::sqrt(4.0 * kSqrt2 + 25.0) - 5.0) / (2.0 * (kSqrt2 + 2.0));
            case RegionTag::Parabolic:
                return 5.0 - 2.0 * std::sqrt(6.0);
            case RegionTag::Exp:
                return 2.0 * (kE - 1.0) / (5.0 * kE + std::sqrt(25.0 * kE * kE - 4.0 * kE + 4.0));
            case RegionTag::Cardioid:
                return (15.0 - std::sqrt(217.0)) / 2.0;
            case RegionTag::Sine:
                return (std::sqrt(25.0 + 4.0 * (3.0 + kSin1) * kSin1) - 5.0) / (2.0 * (3.0 + kSin1));
            case RegionTag::Lune:
                return (5.0 - std::sqrt(41.0 - 12.0 * kSqrt2)) / (2.0 * (kSqrt2 - 1.0));
            case RegionTag::Rational:
                return (5.0 - std::sqrt(81.0 - 40.0 * kSqrt2)) / (4.0 * (kSqrt2 - 1.0));
        }
    }
    throw DomainError("unknown (class, region) pair");
}

bool radius_is_sharp(ClassId cls, RegionTag tag) {
    if (cls == ClassId::Pi2 &&
        (tag == RegionTag::Lemniscate || tag == RegionTag::Sine))
        return false;
    return true;
}

void radius_equation_coeffs(ClassId cls, const TargetRegion& region,
                            double& qa, double& qb, double& qc) {
    require_alpha(region);
    const double al = region.alpha;
    if (cls == ClassId::Pi1) {
        switch (region.tag) {
            case RegionTag::HalfPlane: qa = 1.0 + al; qb = -6.0; qc = 1.0 - al; return;
            case RegionTag::Lemniscate: qa = 1.0 + kSqrt2; qb = 6.0; qc = 1.0 - kSqrt2; return;
            case RegionTag::Parabolic: qa = 3.0; qb = -12.0; qc = 1.0; return;
            case RegionTag::Exp: qa = kE + 1.0; qb = -6.0 * kE; qc = kE - 1.0; return;
            case RegionTag::Cardioid: qa = 2.0; qb = -9.0; qc = 1.0; return;
            case RegionTag::Sine: qa = 2.0 + kSin1; qb = 6.0; qc = -kSin1; return;
            case RegionTag::Lune: qa = kSqrt2; qb = -6.0; qc = 2.0 - kSqrt2; return;
            case RegionTag::Rational: qa = 2.0 * kSqrt2 - 1.0; qb = -6.0; qc = 3.0 - 2.0 * kSqrt2; return;
        }
    } else {
        switch (region.tag) {
            case RegionTag::HalfPlane: qa = al; qb = -5.0; qc = 1.0 - al; return;
            case RegionTag::Lemniscate: qa = 2.0 + kSqrt2; qb = 5.0; qc = -(kSqrt2 - 1.0); return;
            case RegionTag::Parabolic: qa = 1.0; qb = -10.0; qc = 1.0; return;
            case RegionTag::Exp: qa = 1.0; qb = -5.0 * kE; qc = kE - 1.0; return;
            case RegionTag::Cardioid: qa = 1.0; qb = -15.0; qc = 2.0; return;
            case RegionTag::Sine: qa = 3.0 + kSin1; qb = 5.0; qc = -kSin1; return;
            case RegionTag::Lune: qa = kSqrt2 - 1.0; qb = -5.0; qc = 2.0 - kSqrt2; return;
            case RegionTag::Rational: qa = 2.0 * (kSqrt2 - 1.0); qb = -5.0; qc = 3.0 - 2.0 * kSqrt2; return;
        }
    }
    throw DomainError("unknown (class, region) pair");
}

std::string radius_equation(ClassId cls, const TargetRegion& region) {
    require_alpha(region);
    std::ostringstream os;
    if (region.tag == RegionTag::HalfPlane) {
        if (cls == ClassId::Pi1)
            os << "(1+alpha) r^2 - 6 r + (1-alpha) = 0";
        else
            os << "alpha r^2 - 5 r + (1-alpha) = 0";
        os << " with alpha = " << region.alpha;
        return os.str();
    }
    if (cls == ClassId::Pi1) {
        switch (region.tag) {
            case RegionTag::Lemniscate: return "(1+sqrt(2)) r^2 + 6 r + 1 - sqrt(2) = 0";
            case RegionTag::Parabolic: return "3 r^2 - 12 r + 1 = 0";
            case RegionTag::Exp: return "(e+1) r^2 - 6 e r + e - 1 = 0";
            case RegionTag::Cardioid: return "2 r^2 - 9 r + 1 = 0";
            case RegionTag::Sine: return "(2+sin 1) r^2 + 6 r - sin 1 = 0";
            case RegionTag::Lune: return "sqrt(2) r^2 - 6 r + 2 - sqrt(2) = 0";
            case RegionTag::Rational: return "(2 sqrt(2) - 1) r^2 - 6 r + 3 - 2 sqrt(2) = 0";
            default: break;
        }
    } else {
        switch (region.tag) {
            case RegionTag::Lemniscate: return "(2+sqrt(2)) r^2 + 5 r - (sqrt(2) - 1) = 0";
            case RegionTag::Parabolic: return "r^2 - 10 r + 1 = 0";
            case RegionTag::Exp: return "r^2 - 5 e r + e - 1 = 0";
            case RegionTag::Cardioid: return "r^2 - 15 r + 2 = 0";
            case RegionTag::Sine: return "(3+sin 1) r^2 + 5 r - sin 1 = 0";
            case RegionTag::Lune: return "(sqrt(2) - 1) r^2 - 5 r + 2 - sqrt(2) = 0";
            case RegionTag::Rational: return "2 (sqrt(2) - 1) r^2 - 5 r + 3 - 2 sqrt(2) = 0";
            default: break;
        }
    }
    throw DomainError("unknown (class, region) pair");
}

std::optional<double> containment_margin_at(ClassId cls, const TargetRegion& region, double r) {
    const double a = bound_center(r);
    const CenterInterval iv = admissible_center_interval(region);
    if (!(a > iv.lo && a < iv.hi)) return std::nullopt;
    return max_disk_radius(region, a) - bound_radius(cls, r);
}

double solve_radius(ClassId cls, const TargetRegion& region, double tol) {
    require_alpha(region);
    std::ostringstream what;
    what << class_name(cls) << "/" << region_name(region.tag);
    return bisect_margin(
        [&](double r) { return containment_margin_at(cls, region, r); }, tol,
        what.str().c_str());
}

double solve_radius_disk_about_one(ClassId cls, double tol) {
    // |w - 1| <= b(r) + (a(r) - 1) and the disk about 1 with radius
    // sqrt(2)-1 lies in the lemniscate.
    return bisect_margin(
        [&](double r) -> std::optional<double> {
            return (kSqrt2 - 1.0) - (bound_radius(cls, r) + (bound_center(r) - 1.0));
        },
        tol, "lemniscate disk-about-1 route");
}

namespace {

RadiusResult make_result(ClassId cls, const TargetRegion& region) {
    RadiusResult row;
    row.cls = cls;
    row.region = region;
    row.closed_form = closed_form_radius(cls, region);
    row.sharp = radius_is_sharp(cls, region.tag);
    row.equation = radius_equation(cls, region);
    radius_equation_coeffs(cls, region, row.eq_a, row.eq_b, row.eq_c);
    if (region.tag == RegionTag::Lemniscate) {
        const double lemma_route = solve_radius(cls, region);
        const double about_one = solve_radius_disk_about_one(cls);
        // Pi2 uses the disk about 1, matching the derivation that yields the
        // known constant; both routes are recorded either way.
        if (cls == ClassId::Pi2) {
            row.solved = about_one;
            row.route = "disk-about-1";
        } else {
            row.solved = lemma_route;
            row.route = "lemma-disk";
        }
        row.route_discrepancy = std::abs(lemma_route - about_one);
    } else {
        row.solved = solve_radius(cls, region);
    }
    return row;
}

}  // namespace

std::vector<RadiusResult> radius_table(ClassId cls, const std::vector<double>& alphas) {
    std::vector<double> sorted_alphas = alphas;
    std::sort(sorted_alphas.begin(), sorted_alphas.end());
    std::vector<RadiusResult> rows;
    rows.reserve(sorted_alphas.size() + 7);
    for (double al : sorted_alphas)
        rows.push_back(make_result(cls, TargetRegion::half_plane(al)));
    for (RegionTag tag : all_region_tags()) {
        if (tag == RegionTag::HalfPlane) continue;
        rows.push_back(make_result(cls, TargetRegion::make(tag)));
    }
    return rows;
}

}  // namespace starrad
