#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uavnet/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace uavnet;

TEST_CASE("finite integrals of closed-form integrands") {
    auto id = [](double x) { return x; };
    auto r = integrate_finite(id, 0.0, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-10));

    r = integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));

    r = integrate_finite([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(1.71828182845905).epsilon(1e-12));
}

TEST_CASE("empty and degenerate intervals") {
    auto f = [](double x) { return x * x; };
    auto r = integrate_finite(f, 2.0, 2.0);
    CHECK(r.value == 0.0);
    CHECK_THROWS_AS(integrate_finite(f, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("semi-infinite integrals") {
    auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));

    r = integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 1.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));

    r = integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0.0);
    CHECK(r.value == doctest::Approx(0.886226925452758).epsilon(1e-8));
}

TEST_CASE("error estimate brackets the true error") {
    auto f = [](double x) { return std::cos(10.0 * x) * std::exp(-x); };
    const double exact = (10.0 * std::sin(10.0) - std::cos(10.0)) * std::exp(-1.0) / 101.0
                         + 1.0 / 101.0;
    auto r = integrate_finite(f, 0.0, 1.0);
    CHECK(std::fabs(r.value - exact) <= std::max(r.error, 1e-12));
}

TEST_CASE("linearity within 10x tolerance") {
    QuadratureSpec spec;
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    auto f = [](double x) { return std::exp(-x) * std::cos(x); };
    auto g = [](double x) { return 1.0 / (1.0 + x * x); };
    for (int i = 0; i < 20; ++i) {
        const double a = coef(rng), b = coef(rng);
        auto combo = integrate_finite([&](double x) { return a * f(x) + b * g(x); }, 0.0, 5.0, spec);
        auto parts = a * integrate_finite(f, 0.0, 5.0, spec).value
                     + b * integrate_finite(g, 0.0, 5.0, spec).value;
        CHECK(combo.value == doctest::Approx(parts).epsilon(10 * spec.rel_tol));
    }
}

TEST_CASE("interval additivity within 10x tolerance") {
    QuadratureSpec spec;
    auto f = [](double x) { return std::sqrt(x) * std::sin(x); };
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mid(0.5, 5.5);
    for (int i = 0; i < 20; ++i) {
        const double m = mid(rng);
        auto whole = integrate_finite(f, 0.0, 6.0, spec);
        auto split = integrate_finite(f, 0.0, m, spec).value
                     + integrate_finite(f, m, 6.0, spec).value;
        CHECK(whole.value == doctest::Approx(split).epsilon(10 * spec.rel_tol));
    }
}

TEST_CASE("breakpoints let kinked integrands converge tightly") {
    auto f = [](double x) { return std::fabs(x - std::numbers::inv_pi); };
    const double k = std::numbers::inv_pi;
    const double exact = (k * k + (1.0 - k) * (1.0 - k)) / 2.0;
    const double bp[] = {k};
    auto r = integrate_finite(f, 0.0, 1.0, bp, {1e-12, 1e-14, 100});
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("non-convergence carries the best estimate") {
    // 1/sqrt(x) singularity with a tiny subdivision budget
    auto f = [](double x) { return 1.0 / std::sqrt(x); };
    QuadratureSpec spec{1e-14, 0.0, 3};
    auto r = integrate_finite(f, 1e-12, 1.0, spec);
    CHECK_FALSE(r.converged);
    CHECK(r.value > 0.0);
    CHECK(r.value < 2.1e6); // best estimate stays in a sane range
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0,
                                     QuadratureSpec{0.0, 0.0, 10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0,
                                     QuadratureSpec{1e-6, -1.0, 10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 0.0, 1.0,
                                     QuadratureSpec{1e-6, 0.0, 0}),
                    std::invalid_argument);
}
