#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "starrad/complex_kernel.hpp"

using namespace starrad;

namespace {

constexpr double kPi = std::numbers::pi;

const FunctionId kAllFunctions[] = {
    FunctionId::F0, FunctionId::F1, FunctionId::F2,    FunctionId::F3, FunctionId::G0,
    FunctionId::G1, FunctionId::G2, FunctionId::G3, FunctionId::Koebe};

Complex random_disk_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = rmax * std::sqrt(unit(rng));
    const double theta = 2.0 * kPi * unit(rng);
    return std::polar(r, theta);
}

// Independent oracle: z f'(z)/f(z) with f' from central differences.
Complex logderiv_numeric(FunctionId id, Complex z, double h = 1e-6) {
    const Complex fp =
        (eval_function(id, z + h) - eval_function(id, z - h)) / (2.0 * h);
    return z * fp / eval_function(id, z);
}

}  // namespace

TEST_CASE("catalog functions are normalized") {
    for (FunctionId id : kAllFunctions) {
        CHECK(eval_function(id, Complex{0.0, 0.0}) == Complex{0.0, 0.0});
        CHECK(eval_logderiv(id, Complex{0.0, 0.0}) == Complex{1.0, 0.0});
    }
}

TEST_CASE("eval_function spot values") {
    CHECK(std::abs(eval_function(FunctionId::Koebe, Complex{0.5, 0.0}) -
                   Complex{2.0, 0.0}) < 1e-15);

    // independent evaluation of the defining formula for f3 at 0.1
    const double expected = 0.1 * std::pow(1.1, 2) / std::pow(0.9, 3);
    const Complex got = eval_function(FunctionId::F3, Complex{0.1, 0.0});
    CHECK(std::abs(got - Complex{expected, 0.0}) < 1e-15);
    CHECK(got.real() == doctest::Approx(0.165981).epsilon(1e-5));
}

TEST_CASE("log-derivative zeros and the univalence anchors") {
    const double r1 = 3.0 - 2.0 * std::sqrt(2.0);
    CHECK(std::abs(eval_logderiv(FunctionId::F0, Complex{-r1, 0.0})) < 1e-12);
    CHECK(std::abs(eval_logderiv(FunctionId::F3, Complex{-0.2, 0.0})) < 1e-13);
    CHECK(eval_logderiv(FunctionId::F1, Complex{0.0, 0.0}) == Complex{1.0, 0.0});
}

TEST_CASE("eval domain is capped") {
    CHECK_THROWS_AS(eval_function(FunctionId::F0, Complex{1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(eval_function(FunctionId::F2, Complex{0.8, 0.7}), DomainError);
    CHECK_THROWS_AS(eval_logderiv(FunctionId::Koebe, Complex{-1.0, 1e-6}), DomainError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(eval_function(FunctionId::F1, Complex{nan, 0.0}), DomainError);
    CHECK_NOTHROW(eval_logderiv(FunctionId::F0, Complex{kEvalCap, 0.0}));
}

TEST_CASE("mobius_disk_image matches the sampling oracle") {
    const DiskSpec at0 = mobius_disk_image(0.0);
    CHECK(at0.center == 1.0);
    CHECK(at0.radius == 0.0);

    // oracle: the image of |z| = r is a circle with real center, so its
    // center/radius follow from the modulus extremes over the circle
    for (double r : {0.5, 1.0 / 3.0}) {
        double lo = 1e300, hi = 0.0;
        const int n = 200000;
        for (int j = 0; j < n; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / n);
            const double mod = std::abs((1.0 + z) / (1.0 - z));
            lo = std::min(lo, mod);
            hi = std::max(hi, mod);
        }
        const DiskSpec disk = mobius_disk_image(r);
        CHECK(disk.center == doctest::Approx(0.5 * (hi + lo)).epsilon(1e-8));
        CHECK(disk.radius == doctest::Approx(0.5 * (hi - lo)).epsilon(1e-8));
    }
    CHECK(mobius_disk_image(0.5).center == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(mobius_disk_image(0.5).radius == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(mobius_disk_image(1.0 / 3.0).center == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(mobius_disk_image(1.0 / 3.0).radius == doctest::Approx(0.75).epsilon(1e-14));

    CHECK_THROWS_AS(mobius_disk_image(1.0), DomainError);
    CHECK_THROWS_AS(mobius_disk_image(-0.1), DomainError);
}

TEST_CASE("logderiv_bound touches zero exactly at the starlikeness radii") {
    const DiskSpec base = logderiv_bound(ClassId::Pi1, 0.0);
    CHECK(base.center == 1.0);
    CHECK(base.radius == 0.0);

    const double r1 = 3.0 - 2.0 * std::sqrt(2.0);
    const DiskSpec d1 = logderiv_bound(ClassId::Pi1, r1);
    CHECK(std::abs(d1.center - d1.radius) < 1e-12);

    const DiskSpec d2 = logderiv_bound(ClassId::Pi2, 0.2);
    CHECK(std::abs(d2.center - d2.radius) < 1e-12);

    CHECK_THROWS_AS(logderiv_bound(ClassId::Pi1, 1.0), DomainError);
}

TEST_CASE("closed-form log-derivatives agree with numeric differentiation") {
    std::mt19937_64 rng(0x5eed0001);
    for (FunctionId id : kAllFunctions) {
        for (int i = 0; i < 10000; ++i) {
            Complex z = random_disk_point(rng, 0.95);
            if (std::abs(z) < 1e-8) continue;  // 0/0 in the oracle
            const Complex closed = eval_logderiv(id, z);
            const Complex numeric = logderiv_numeric(id, z);
            const double scale = std::max(1.0, std::abs(closed));
            CHECK(std::abs(closed - numeric) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("class disk actually covers the extremal log-derivative") {
    for (double r = 0.05; r < 0.96; r += 0.05) {
        const DiskSpec disk = logderiv_bound(ClassId::Pi1, r);
        for (int j = 0; j < 720; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / 720);
            CHECK(disk.covers(eval_logderiv(FunctionId::F0, z), 1e-9));
        }
    }
}

TEST_CASE("bound center and radius are monotone") {
    double prev_a = -1.0, prev_b1 = -1.0, prev_b2 = -1.0;
    for (double r = 0.0; r < 0.99; r += 0.01) {
        const double a = bound_center(r);
        const double b1 = bound_radius(ClassId::Pi1, r);
        const double b2 = bound_radius(ClassId::Pi2, r);
        CHECK(a >= 1.0);
        CHECK(a > prev_a);
        CHECK(b1 > prev_b1);
        CHECK(b2 > prev_b2);
        prev_a = a;
        prev_b1 = b1;
        prev_b2 = b2;
    }
}

TEST_CASE("witness pairs satisfy their class conditions") {
    std::mt19937_64 rng(0x5eed0002);
    auto ratio_cond = [](FunctionId f, FunctionId g, Complex z) {
        return eval_function(f, z) / eval_function(g, z);
    };
    auto koebe_cond = [](FunctionId g, Complex z) {
        const Complex one{1.0, 0.0};
        return (one - z) * (one - z) * eval_function(g, z) / z;
    };
    for (int i = 0; i < 10000; ++i) {
        Complex z = random_disk_point(rng, 0.98);
        if (std::abs(z) < 1e-8) continue;
        CHECK(ratio_cond(FunctionId::F0, FunctionId::G0, z).real() > 0.0);
        CHECK(ratio_cond(FunctionId::F1, FunctionId::G1, z).real() > 0.0);
        CHECK(koebe_cond(FunctionId::G0, z).real() > 0.0);
        CHECK(koebe_cond(FunctionId::G1, z).real() > 0.0);
        CHECK(std::abs(ratio_cond(FunctionId::F2, FunctionId::G2, z) - 1.0) < 1.0);
        CHECK(std::abs(ratio_cond(FunctionId::F3, FunctionId::G3, z) - 1.0) < 1.0);
    }
}
