#include "starrad/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace starrad {

namespace {

constexpr double kPi = std::numbers::pi;

Verdict classify_margin(double min_margin, const VerifyTolerances& tol) {
    if (std::abs(min_margin) <= tol.touch) return Verdict::Touches;
    if (min_margin > tol.inside) return Verdict::Contained;
    return Verdict::Violates;
}

double angle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Contained: return "CONTAINED";
        case Verdict::Touches: return "TOUCHES";
        case Verdict::Violates: return "VIOLATES";
    }
    return "?";
}

FunctionId extremal_function(ClassId cls) {
    return cls == ClassId::Pi1 ? FunctionId::F0 : FunctionId::F3;
}

double designated_touch_sign(ClassId cls, RegionTag tag) {
    if (cls == ClassId::Pi1 &&
        (tag == RegionTag::Lemniscate || tag == RegionTag::Sine))
        return 1.0;
    return -1.0;
}

VerificationReport check_function_containment(FunctionId id, const TargetRegion& region,
                                              double r, int n,
                                              const VerifyTolerances& tol) {
    if (!(r > 0.0) || r >= 1.0) throw DomainError("radius must lie in (0, 1)");
    if (n < 360) throw DomainError("sample count must be >= 360");

    VerificationReport rep;
    rep.function_id = id;
    rep.region = region;
    rep.radius_tested = r;
    rep.n_samples = n;
    rep.tolerances = tol;

    double min_margin = std::numeric_limits<double>::infinity();
    Complex argmin{};
    double argmin_angle = 0.0;
    int warnings = 0;
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * kPi * j / n;
        const Complex w = eval_logderiv(id, std::polar(r, theta));
        const ContainmentMargin cm = contains(region, w);
        if (cm.branch_warning) {
            ++warnings;
            continue;  // excluded from margin statistics
        }
        if (cm.margin < min_margin) {
            min_margin = cm.margin;
            argmin = w;
            argmin_angle = theta;
        }
    }
    if (warnings * 100 > n) {
        std::ostringstream os;
        os << warnings << " of " << n << " samples raised a branch warning";
        throw InconclusiveError(os.str());
    }
    rep.min_margin = min_margin;
    rep.touch_angle = argmin_angle;
    rep.verdict = classify_margin(min_margin, tol);
    if (rep.verdict != Verdict::Contained) rep.touch_point = argmin;
    return rep;
}

bool check_sharpness(FunctionId id, const TargetRegion& region, double R,
                     Complex z_star, double tol) {
    if (std::abs(std::abs(z_star) - R) > 1e-12)
        throw DomainError("|z_star| must equal R to 1e-12");
    const ContainmentMargin cm = contains(region, eval_logderiv(id, z_star));
    return std::abs(cm.margin) <= tol;
}

double estimate_radius_function_level(FunctionId id, const TargetRegion& region, double tol) {
    if (!(tol >= 1e-10)) throw DomainError("tolerance must be >= 1e-10");
    constexpr int kSamples = 2048;
    constexpr double kScanCap = 0.999;
    const VerifyTolerances vt;

    auto contained = [&](double r) {
        return check_function_containment(id, region, r, kSamples, vt).verdict ==
               Verdict::Contained;
    };

    double lo = 0.01;
    if (!contained(lo))
        throw NoSignChangeError("image circle not contained at the scan start");
    double hi = 0.0;
    bool bracketed = false;
    for (double r = lo + 0.01; r <= kScanCap; r += 0.01) {
        if (!contained(r)) {
            hi = r;
            bracketed = true;
            break;
        }
        lo = r;
    }
    if (!bracketed) {
        std::ostringstream os;
        os << "containment of " << function_name(id) << " in "
           << region_name(region.tag) << " never fails below r = " << kScanCap;
        throw NoSignChangeError(os.str());
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (contained(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

VerificationReport cross_validate(ClassId cls, const TargetRegion& region,
                                  int n, const VerifyTolerances& tol) {
    VerificationReport rep;
    rep.cls = cls;
    rep.function_id = extremal_function(cls);
    rep.region = region;
    rep.tolerances = tol;
    rep.sharp = radius_is_sharp(cls, region.tag);

    auto fail = [&rep](std::string msg) {
        rep.failures.push_back(std::move(msg));
    };

    const double closed = closed_form_radius(cls, region);
    rep.closed_form = closed;
    rep.route = "lemma-disk";
    try {
        if (region.tag == RegionTag::Lemniscate) {
            const double lemma_route = solve_radius(cls, region, tol.solver);
            const double about_one = solve_radius_disk_about_one(cls, tol.solver);
            rep.route_discrepancy = std::abs(lemma_route - about_one);
            if (cls == ClassId::Pi2) {
                rep.solved = about_one;
                rep.route = "disk-about-1";
            } else {
                rep.solved = lemma_route;
            }
        } else {
            rep.solved = solve_radius(cls, region, tol.solver);
        }
    } catch (const NoSignChangeError& e) {
        fail(std::string("solver: ") + e.what());
    }
    if (rep.solved && std::abs(*rep.solved - closed) > 1e-9) {
        std::ostringstream os;
        os << "closed form " << closed << " and solver value " << *rep.solved
           << " differ by more than 1e-9";
        fail(os.str());
    }

    const FunctionId id = rep.function_id;
    const VerificationReport below =
        check_function_containment(id, region, 0.999 * closed, n, tol);
    if (below.verdict != Verdict::Contained) {
        std::ostringstream os;
        os << "expected CONTAINED at 0.999 R, got " << verdict_name(below.verdict)
           << " (min margin " << below.min_margin << ")";
        fail(os.str());
    }

    const VerificationReport at =
        check_function_containment(id, region, closed, n, tol);
    rep.radius_tested = at.radius_tested;
    rep.n_samples = at.n_samples;
    rep.min_margin = at.min_margin;
    rep.touch_point = at.touch_point;
    rep.touch_angle = at.touch_angle;
    rep.verdict = at.verdict;

    if (rep.sharp) {
        if (at.verdict != Verdict::Touches) {
            std::ostringstream os;
            os << "expected TOUCHES at R, got " << verdict_name(at.verdict)
               << " (min margin " << at.min_margin << ")";
            fail(os.str());
        }
        const double sign = designated_touch_sign(cls, region.tag);
        const double theta_star = sign > 0.0 ? 0.0 : kPi;
        if (angle_distance(at.touch_angle, theta_star) > 2.0 * kPi / n + 1e-12) {
            std::ostringstream os;
            os << "margin minimizer at angle " << at.touch_angle
               << " is away from the designated touch angle " << theta_star;
            fail(os.str());
        }
        if (!check_sharpness(id, region, closed, Complex{sign * closed, 0.0}, tol.touch))
            fail("boundary-touch check failed at the designated point");
    }

    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace starrad
