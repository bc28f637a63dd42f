#pragma once

#include <complex>
#include <string_view>

#include "starrad/errors.hpp"

namespace starrad {

using Complex = std::complex<double>;

/// Catalog of the concrete analytic functions handled by the kernel.
/// Each tag maps to exactly one closed-form expression on the unit disk:
///
///   f0 = z(1+z)^2/(1-z)^4    f1 = z/(1+z)^2
///   f2 = z/(1-z)             f3 = z(1+z)^2/(1-z)^3
///   g0 = z(1+z)/(1-z)^3      g1 = z/(1-z^2)
///   g2 = z/(1-z^2)           g3 = z(1+z)/(1-z)^3
///   k  = z/(1-z)^2           (Koebe)
enum class FunctionId { F0, F1, F2, F3, G0, G1, G2, G3, Koebe };

/// The two ratio-defined function classes under study.
enum class ClassId { Pi1, Pi2 };

std::string_view function_name(FunctionId id);
std::string_view class_name(ClassId cls);  // "pi1" / "pi2"

/// Closed disk {w : |w - center| <= radius} with real center.
struct DiskSpec {
    double center = 0.0;
    double radius = 0.0;

    bool covers(Complex w, double inflate = 0.0) const {
        return std::abs(w - Complex{center, 0.0}) <= radius + inflate;
    }
};

/// Hard cap on |z| for all evaluations; keeps clear of the boundary poles.
inline constexpr double kEvalCap = 1.0 - 1e-9;

/// Evaluate the catalog function at z, |z| <= kEvalCap.
Complex eval_function(FunctionId id, Complex z);

/// Evaluate z f'(z)/f(z) from a per-function closed form (no numeric
/// differentiation). The value at z = 0 is 1 by normalization.
Complex eval_logderiv(FunctionId id, Complex z);

/// Image of the disk |z| <= r under (1+z)/(1-z): the disk with center
/// (1+r^2)/(1-r^2) and radius 2r/(1-r^2). Requires 0 <= r < 1.
DiskSpec mobius_disk_image(double r);

/// Disk covering z f'/f over |z| <= r for the whole class: center
/// a(r) = (1+r^2)/(1-r^2), radius 6r/(1-r^2) for Pi1 and (5r+r^2)/(1-r^2)
/// for Pi2.
DiskSpec logderiv_bound(ClassId cls, double r);

/// a(r) and b(r) of logderiv_bound, exposed for the radius solver.
double bound_center(double r);
double bound_radius(ClassId cls, double r);

}  // namespace starrad
