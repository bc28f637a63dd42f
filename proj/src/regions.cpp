#include "starrad/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace starrad {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::numbers::sqrt2;
const double kE = std::numbers::e;
const double kSin1 = std::sin(1.0);

// Clip extents for the two open regions. The far offset only shapes the
// artificial closure of the oracle polygon; it stays well outside the
// sampling windows used by the tests.
constexpr double kHalfPlaneClip = 8.0;
constexpr double kHalfPlaneFar = 20.0;
constexpr double kParabolaClip = 4.0;  // |Im w| along the parabola arc

void require_finite(Complex w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw DomainError("non-finite complex input");
}

ContainmentMargin from_margin(double m) {
    return ContainmentMargin{m > 0.0, m, false};
}

Complex cardioid_map(Complex z) {
    return 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z;
}

Complex rational_map(Complex z) {
    const double k = kRationalK;
    return 1.0 + (k * z + z * z) / (k * k - k * z);
}

// Outer/inner polar radius of the lune boundary |w^2-1| = 2|w|:
// r^2 = c +- sqrt(c^2-1) with c = 2 + cos(2 phi); the two roots multiply
// to 1, so the inner branch is computed as the reciprocal.
double lune_boundary_radius(double phi, bool outer) {
    const double c = 2.0 + std::cos(2.0 * phi);
    const double rp2 = c + std::sqrt(std::max(c * c - 1.0, 0.0));
    return std::sqrt(outer ? rp2 : 1.0 / rp2);
}

}  // namespace

TargetRegion TargetRegion::half_plane(double alpha) {
    if (!(alpha >= 0.0) || alpha >= 1.0)
        throw DomainError("half-plane order must lie in [0, 1)");
    return TargetRegion{RegionTag::HalfPlane, alpha};
}

TargetRegion TargetRegion::make(RegionTag tag) { return TargetRegion{tag, 0.0}; }

const std::array<RegionTag, 8>& all_region_tags() {
    static const std::array<RegionTag, 8> tags = {
        RegionTag::HalfPlane, RegionTag::Lemniscate, RegionTag::Parabolic,
        RegionTag::Exp,       RegionTag::Cardioid,   RegionTag::Sine,
        RegionTag::Lune,      RegionTag::Rational};
    return tags;
}

std::string_view region_name(RegionTag tag) {
    switch (tag) {
        case RegionTag::HalfPlane: return "halfplane";
        case RegionTag::Lemniscate: return "lemniscate";
        case RegionTag::Parabolic: return "parabolic";
        case RegionTag::Exp: return "exp";
        case RegionTag::Cardioid: return "cardioid";
        case RegionTag::Sine: return "sine";
        case RegionTag::Lune: return "lune";
        case RegionTag::Rational: return "rational";
    }
    return "?";
}

std::string_view region_symbol(RegionTag tag) {
    switch (tag) {
        case RegionTag::HalfPlane: return "S_star";
        case RegionTag::Lemniscate: return "S_L";
        case RegionTag::Parabolic: return "S_P";
        case RegionTag::Exp: return "S_e";
        case RegionTag::Cardioid: return "S_c";
        case RegionTag::Sine: return "S_sin";
        case RegionTag::Lune: return "S_lune";
        case RegionTag::Rational: return "S_R";
    }
    return "?";
}

double cardioid_quartic(Complex w) {
    const double x = w.real(), y = w.imag();
    const double s = 9.0 * x * x + 9.0 * y * y;
    const double a = s - 18.0 * x + 5.0;
    const double b = s - 6.0 * x + 1.0;
    return a * a - 16.0 * b;
}

ContainmentMargin contains(const TargetRegion& region, Complex w) {
    require_finite(w);
    switch (region.tag) {
        case RegionTag::HalfPlane:
            return from_margin(w.real() - region.alpha);
        case RegionTag::Lemniscate:
            return from_margin(1.0 - std::abs(w * w - 1.0));
        case RegionTag::Parabolic:
            return from_margin(w.real() - std::abs(w - 1.0));
        case RegionTag::Exp: {
            if (w == Complex{0.0, 0.0})
                throw DomainError("log undefined at w = 0");
            return from_margin(1.0 - std::abs(std::log(w)));
        }
        case RegionTag::Cardioid: {
            // w = 1 + 4z/3 + 2z^2/3 inverts to z = -1 +- sqrt(6w-2)/2;
            // inside iff a preimage lies in the unit disk.
            const Complex s = 0.5 * std::sqrt(6.0 * w - 2.0);
            const double m = std::min(std::abs(-1.0 + s), std::abs(-1.0 - s));
            return from_margin(1.0 - m);
        }
        case RegionTag::Sine: {
            ContainmentMargin cm =
                from_margin(1.0 - std::abs(std::asin(w - 1.0)));
            cm.branch_warning =
                std::abs(w) < 1e-12 || std::abs(w - 2.0) < 1e-12;
            return cm;
        }
        case RegionTag::Lune:
            return from_margin(2.0 * std::abs(w) - std::abs(w * w - 1.0));
        case RegionTag::Rational: {
            // preimages solve z^2 + k w z - k^2 (w - 1) = 0
            const double k = kRationalK;
            const Complex d = std::sqrt(w * w + 4.0 * w - 4.0);
            const double m = std::min(std::abs(0.5 * k * (-w + d)),
                                      std::abs(0.5 * k * (-w - d)));
            return from_margin(1.0 - m);
        }
    }
    throw DomainError("unknown region");
}

std::vector<Complex> boundary_points(const TargetRegion& region, int n) {
    if (n < 16) throw DomainError("boundary_points requires n >= 16");
    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(n));
    switch (region.tag) {
        case RegionTag::HalfPlane: {
            for (int i = 0; i < n; ++i) {
                const double t =
                    -kHalfPlaneClip + 2.0 * kHalfPlaneClip * i / (n - 1);
                pts.emplace_back(region.alpha, t);
            }
            break;
        }
        case RegionTag::Parabolic: {
            // Re w = |w - 1| is the parabola x = (1 + y^2)/2.
            for (int i = 0; i < n; ++i) {
                const double t =
                    -kParabolaClip + 2.0 * kParabolaClip * i / (n - 1);
                pts.emplace_back(0.5 * (1.0 + t * t), t);
            }
            break;
        }
        case RegionTag::Lemniscate: {
            // figure eight r^2 = 2 cos(2 phi), phi in [-pi/4, pi/4] per lobe
            for (int i = 0; i < n; ++i) {
                const double t = 2.0 * kPi * i / n;
                const bool left = t >= kPi;
                const double u = left ? t - kPi : t;
                const double phi = -kPi / 4.0 + 0.5 * u;
                const double r =
                    std::sqrt(std::max(2.0 * std::cos(2.0 * phi), 0.0));
                const Complex w = std::polar(r, phi);
                pts.push_back(left ? -w : w);
            }
            break;
        }
        case RegionTag::Exp: {
            for (int i = 0; i < n; ++i) {
                const double t = 2.0 * kPi * i / n;
                pts.push_back(std::exp(std::polar(1.0, t)));
            }
            break;
        }
        case RegionTag::Cardioid: {
            for (int i = 0; i < n; ++i) {
                const double t = 2.0 * kPi * i / n;
                pts.push_back(cardioid_map(std::polar(1.0, t)));
            }
            break;
        }
        case RegionTag::Sine: {
            for (int i = 0; i < n; ++i) {
                const double t = 2.0 * kPi * i / n;
                pts.push_back(1.0 + std::sin(std::polar(1.0, t)));
            }
            break;
        }
        case RegionTag::Lune: {
            // Single closed walk through the pinch points +-i:
            // right outer (i -> -i), right inner (-i -> i),
            // left outer (i -> -i), left inner (-i -> i).
            for (int i = 0; i < n; ++i) {
                const double t = 2.0 * kPi * i / n;
                double phi;
                bool outer;
                if (t < kPi / 2.0) {
                    phi = kPi / 2.0 - 2.0 * t;
                    outer = true;
                } else if (t < kPi) {
                    phi = -kPi / 2.0 + 2.0 * (t - kPi / 2.0);
                    outer = false;
                } else if (t < 1.5 * kPi) {
                    phi = kPi / 2.0 + 2.0 * (t - kPi);
                    outer = true;
                } else {
                    phi = 1.5 * kPi - 2.0 * (t - 1.5 * kPi);
                    outer = false;
                }
                pts.push_back(std::polar(lune_boundary_radius(phi, outer), phi));
            }
            break;
        }
        case RegionTag::Rational: {
            for (int i = 0; i < n; ++i) {
                const double t = 2.0 * kPi * i / n;
                pts.push_back(rational_map(std::polar(1.0, t)));
            }
            break;
        }
    }
    return pts;
}

CenterInterval admissible_center_interval(const TargetRegion& region) {
    const double inf = std::numeric_limits<double>::infinity();
    switch (region.tag) {
        case RegionTag::HalfPlane: return {region.alpha, inf};
        case RegionTag::Lemniscate: return {0.0, kSqrt2};
        case RegionTag::Parabolic: return {0.5, inf};
        case RegionTag::Exp: return {1.0 / kE, kE};
        case RegionTag::Cardioid: return {1.0 / 3.0, 3.0};
        case RegionTag::Sine: return {1.0 - kSin1, 1.0 + kSin1};
        case RegionTag::Lune: return {kSqrt2 - 1.0, kSqrt2 + 1.0};
        case RegionTag::Rational: return {2.0 * (kSqrt2 - 1.0), 2.0};
    }
    throw DomainError("unknown region");
}

double max_disk_radius(const TargetRegion& region, double a) {
    const CenterInterval iv = admissible_center_interval(region);
    if (!(a > iv.lo && a < iv.hi)) {
        std::ostringstream os;
        os << "center " << a << " outside the admissible interval ("
           << iv.lo << ", " << iv.hi << ") of region " << region_name(region.tag);
        throw DomainError(os.str());
    }
    switch (region.tag) {
        case RegionTag::HalfPlane:
            return a - region.alpha;
        case RegionTag::Lemniscate: {
            if (a <= 2.0 * kSqrt2 / 3.0) {
                const double t = 1.0 - a * a;
                return std::sqrt(std::sqrt(t) - t);
            }
            return kSqrt2 - a;
        }
        case RegionTag::Parabolic:
            return a <= 1.5 ? a - 0.5 : std::sqrt(2.0 * a - 2.0);
        case RegionTag::Exp:
            return a <= 0.5 * (kE + 1.0 / kE) ? a - 1.0 / kE : kE - a;
        case RegionTag::Cardioid:
            return a <= 5.0 / 3.0 ? a - 1.0 / 3.0 : 3.0 - a;
        case RegionTag::Sine:
            return kSin1 - std::abs(a - 1.0);
        case RegionTag::Lune:
            return 1.0 - std::abs(kSqrt2 - a);
        case RegionTag::Rational:
            return a <= kSqrt2 ? a - 2.0 * (kSqrt2 - 1.0) : 2.0 - a;
    }
    throw DomainError("unknown region");
}

RegionPolygon make_region_polygon(const TargetRegion& region, int n) {
    RegionPolygon poly;
    poly.pts = boundary_points(region, n);
    if (region.tag == RegionTag::HalfPlane) {
        // close the clipped line into a rectangle far to the right
        const double far_x = region.alpha + kHalfPlaneFar;
        poly.pts.emplace_back(far_x, kHalfPlaneClip);
        poly.pts.emplace_back(far_x, -kHalfPlaneClip);
    }
    double xmin = poly.pts.front().real(), xmax = xmin;
    double ymin = poly.pts.front().imag(), ymax = ymin;
    for (const Complex& p : poly.pts) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    }
    const double diameter = std::hypot(xmax - xmin, ymax - ymin);
    poly.threshold = 2.0 * kPi * diameter / n;
    return poly;
}

OracleVerdict polygon_classify(const RegionPolygon& poly, Complex w) {
    const double x = w.real(), y = w.imag();
    const auto& p = poly.pts;
    const size_t count = p.size();
    bool inside = false;
    double min_d2 = std::numeric_limits<double>::infinity();
    for (size_t i = 0, j = count - 1; i < count; j = i++) {
        const double xi = p[i].real(), yi = p[i].imag();
        const double xj = p[j].real(), yj = p[j].imag();
        if ((yi > y) != (yj > y)) {
            const double x_cross = xi + (y - yi) * (xj - xi) / (yj - yi);
            if (x < x_cross) inside = !inside;
        }
        const double dx = xj - xi, dy = yj - yi;
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0.0 ? ((x - xi) * dx + (y - yi) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double ex = xi + t * dx - x;
        const double ey = yi + t * dy - y;
        min_d2 = std::min(min_d2, ex * ex + ey * ey);
    }
    if (min_d2 < poly.threshold * poly.threshold)
        return OracleVerdict::Inconclusive;
    return inside ? OracleVerdict::Inside : OracleVerdict::Outside;
}

bool contains_oracle(const TargetRegion& region, Complex w, int n) {
    if (n < 512) throw DomainError("contains_oracle requires n >= 512");
    require_finite(w);
    const RegionPolygon poly = make_region_polygon(region, n);
    switch (polygon_classify(poly, w)) {
        case OracleVerdict::Inside: return true;
        case OracleVerdict::Outside: return false;
        case OracleVerdict::Inconclusive: break;
    }
    std::ostringstream os;
    os << "point (" << w.real() << ", " << w.imag()
       << ") is within " << poly.threshold << " of the sampled boundary of "
       << region_name(region.tag) << "; too close to call";
    throw InconclusiveError(os.str());
}

}  // namespace starrad
