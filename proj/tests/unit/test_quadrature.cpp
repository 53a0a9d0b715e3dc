#include <doctest.h>

#include <cmath>
#include <numbers>

#include "phaseless/quadrature.hpp"

using namespace phaseless;

TEST_CASE("config validation") {
    QuadratureConfig q;
    CHECK_NOTHROW(validate(q));
    q.nodes = 32;
    CHECK_THROWS_AS(validate(q), InvalidParameter);
    q = {};
    q.tol = 0.0;
    CHECK_THROWS_AS(validate(q), InvalidParameter);
    q = {};
    q.radius = -1.0;
    CHECK_THROWS_AS(validate(q), InvalidParameter);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials of degree 31 exactly") {
    const Segment seg{-1.0, 2.0};
    for (int deg = 0; deg <= 31; ++deg) {
        const auto r = integrate_fixed([&](double x) { return cplx{std::pow(x, deg), 0.0}; }, std::span(&seg, 1), 16);
        const double exact = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        CHECK(r.value.real() == doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("grading resolves a kink") {
    const double kinks[] = {0.3};
    const auto segs = split_at_kinks(-1.0, 1.0, kinks);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].graded_hi);
    CHECK(segs[1].graded_lo);
    // int |x - 0.3|^{1.5} over [-1, 1]
    const auto r = integrate([](double x) { return cplx{std::pow(std::abs(x - 0.3), 1.5), 0.0}; }, segs,
                             QuadratureConfig{}, "kink");
    const double exact = (std::pow(1.3, 2.5) + std::pow(0.7, 2.5)) / 2.5;
    CHECK(r.value.real() == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("kinks outside the interval are ignored") {
    const double kinks[] = {-5.0, 5.0};
    const auto segs = split_at_kinks(-1.0, 1.0, kinks);
    REQUIRE(segs.size() == 1);
    CHECK_FALSE(segs[0].graded_lo);
    CHECK_FALSE(segs[0].graded_hi);
}

TEST_CASE("node doubling flags an under-resolved integrand") {
    QuadratureConfig q;
    q.nodes = 64;
    const Segment seg{0.0, 100.0};
    CHECK_THROWS_AS(integrate([](double x) { return std::exp(cplx{0.0, 40.0 * x}) * std::exp(-x / 50.0); },
                              std::span(&seg, 1), q, "oscillatory"),
                    QuadratureError);
}

TEST_CASE("envelope radius drops the requested number of nats") {
    for (double m : {1.5, 2.0, 3.0}) {
        for (double n : {0.0, 10.0, 80.0}) {
            const double a = 1.0;
            const double R = envelope_radius(a, m, 0.0, n);
            auto log_env = [&](double x) { return -a * std::pow(x, m) + (n > 0 ? n * std::log(x) : 0.0); };
            const double peak_x = n > 0 ? std::pow(n / (a * m), 1.0 / m) : 0.0;
            CHECK(log_env(peak_x) - log_env(R) == doctest::Approx(45.0).epsilon(1e-8));
        }
    }
}
