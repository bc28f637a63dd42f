#include "starrad/complex_kernel.hpp"

#include <cmath>

namespace starrad {

namespace {

void require_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("non-finite complex input");
}

void require_in_eval_disk(Complex z) {
    require_finite(z);
    if (std::abs(z) > kEvalCap)
        throw DomainError("evaluation point outside |z| <= 1 - 1e-9");
}

void require_unit_radius(double r) {
    if (!(r >= 0.0) || r >= 1.0)
        throw DomainError("radius must lie in [0, 1)");
}

Complex sq(Complex w) { return w * w; }
Complex cube(Complex w) { return w * w * w; }

}  // namespace

std::string_view function_name(FunctionId id) {
    switch (id) {
        case FunctionId::F0: return "f0";
        case FunctionId::F1: return "f1";
        case FunctionId::F2: return "f2";
        case FunctionId::F3: return "f3";
        case FunctionId::G0: return "g0";
        case FunctionId::G1: return "g1";
        case FunctionId::G2: return "g2";
        case FunctionId::G3: return "g3";
        case FunctionId::Koebe: return "k";
    }
    return "?";
}

std::string_view class_name(ClassId cls) {
    return cls == ClassId::Pi1 ? "pi1" : "pi2";
}

Complex eval_function(FunctionId id, Complex z) {
    require_in_eval_disk(z);
    const Complex one{1.0, 0.0};
    Complex w;
    switch (id) {
        case FunctionId::F0: w = z * sq(one + z) / (sq(one - z) * sq(one - z)); break;
        case FunctionId::F1: w = z / sq(one + z); break;
        case FunctionId::F2: w = z / (one - z); break;
        case FunctionId::F3: w = z * sq(one + z) / cube(one - z); break;
        case FunctionId::G0: w = z * (one + z) / cube(one - z); break;
        case FunctionId::G1:
        case FunctionId::G2: w = z / (one - z * z); break;
        case FunctionId::G3: w = z * (one + z) / cube(one - z); break;
        case FunctionId::Koebe: w = z / sq(one - z); break;
    }
    require_finite(w);
    return w;
}

Complex eval_logderiv(FunctionId id, Complex z) {
    require_in_eval_disk(z);
    // Hand-derived rational forms; all equal 1 at z = 0 (removable
    // singularity by normalization f(0)=0, f'(0)=1).
    const Complex one{1.0, 0.0};
    Complex w;
    switch (id) {
        case FunctionId::F0: w = (one + 6.0 * z + z * z) / (one - z * z); break;
        case FunctionId::F1: w = (one - z) / (one + z); break;
        case FunctionId::F2: w = one / (one - z); break;
        case FunctionId::F3: w = (one + 5.0 * z) / (one - z * z); break;
        case FunctionId::G0:
        case FunctionId::G3: w = (one + 4.0 * z + z * z) / (one - z * z); break;
        case FunctionId::G1:
        case FunctionId::G2: w = (one + z * z) / (one - z * z); break;
        case FunctionId::Koebe: w = (one + z) / (one - z); break;
    }
    require_finite(w);
    return w;
}

DiskSpec mobius_disk_image(double r) {
    require_unit_radius(r);
    const double d = 1.0 - r * r;
    return DiskSpec{(1.0 + r * r) / d, 2.0 * r / d};
}

double bound_center(double r) {
    require_unit_radius(r);
    return (1.0 + r * r) / (1.0 - r * r);
}

double bound_radius(ClassId cls, double r) {
    require_unit_radius(r);
    const double d = 1.0 - r * r;
    return cls == ClassId::Pi1 ? 6.0 * r / d : (5.0 * r + r * r) / d;
}

DiskSpec logderiv_bound(ClassId cls, double r) {
    return DiskSpec{bound_center(r), bound_radius(cls, r)};
}

}  // namespace starrad
