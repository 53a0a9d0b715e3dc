#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>
#include <vector>

#include "phaseless/entire.hpp"
#include "phaseless/sampling.hpp"

using namespace phaseless;
using std::numbers::e;
using std::numbers::pi;

namespace {

std::vector<double> power_terms(double c, double p, int count) {
    std::vector<double> v;
    for (int k = 1; k <= count; ++k) {
        v.push_back(c * std::pow(k, p));
    }
    return v;
}

}  // namespace

TEST_CASE("tau bounds") {
    const auto g = max_tau_bounds(2.0, pi);
    CHECK(g.tau1_max == doctest::Approx(std::sqrt(1.0 / (pi * e))).epsilon(1e-14));
    CHECK(g.tau2_max == doctest::Approx(std::sqrt(1.0 / (pi * e))).epsilon(1e-14));
    CHECK(g.tau1_max == doctest::Approx(0.34221).epsilon(1e-5));

    const auto u = max_tau_bounds(2.0, 1.0);
    CHECK(u.tau1_max == doctest::Approx(0.19300).epsilon(1e-4));
    CHECK(u.tau2_max == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));

    const auto f = max_tau_bounds(1.5, 1.0);
    CHECK(f.tau1_max == doctest::Approx(0.18820).epsilon(1e-4));
    // (2 / (1.5 e))^{2/3}
    CHECK(f.tau2_max == doctest::Approx(std::pow(2.0 / (1.5 * e), 2.0 / 3.0)).epsilon(1e-14));
    CHECK(f.tau2_max == doctest::Approx(0.62196).epsilon(1e-4));

    CHECK_THROWS_AS(max_tau_bounds(1.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(max_tau_bounds(2.0, 0.0), InvalidParameter);
}

TEST_CASE("tau1 simplifies to sqrt(a / (pi^2 e)) for m = 2") {
    for (double a : {0.1, 0.5, 1.0, pi, 7.0}) {
        CHECK(max_tau_bounds(2.0, a).tau1_max == doctest::Approx(std::sqrt(a / (pi * pi * e))).epsilon(1e-14));
    }
}

TEST_CASE("tau bounds are uniqueness thresholds of the continuation") {
    for (double m : {1.2, 1.5, 2.0, 3.0}) {
        for (double a : {0.5, 1.0, pi, 5.0}) {
            const auto t = max_tau_bounds(m, a);
            const auto g = predicted_growth(m, a);
            const double u1 = uniqueness_threshold(g.order, g.type);
            const double u2 = uniqueness_threshold(m, a);
            CHECK(std::abs(t.tau1_max - u1) < 1e-12 * u1);
            CHECK(std::abs(t.tau2_max - u2) < 1e-12 * u2);
        }
    }
}

TEST_CASE("sampling set entries") {
    const auto s = generate_sampling_set(1.5, 0.1, 0.5, 8);
    REQUIRE(s.points.size() == 32);
    const auto& p = s.points[28];
    CHECK(p.n == 8);
    CHECK(p.x == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(p.omega == doctest::Approx(2.0).epsilon(1e-15));

    const auto q = generate_sampling_set(2.0, 0.3, 0.3, 4);
    for (std::size_t i = 12; i < 16; ++i) {
        CHECK(std::abs(q.points[i].x) == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(std::abs(q.points[i].omega) == doctest::Approx(0.6).epsilon(1e-15));
    }

    CHECK_THROWS_AS(generate_sampling_set(2.0, 0.3, 0.3, 0), InvalidParameter);
    CHECK_THROWS_AS(generate_sampling_set(2.0, -0.3, 0.3, 4), InvalidParameter);
    CHECK_THROWS_AS(generate_sampling_set(1.0, 0.3, 0.3, 4), InvalidParameter);
}

TEST_CASE("sampling set structure") {
    for (double m : {1.2, 1.5, 2.0, 3.0}) {
        for (bool origin : {false, true}) {
            const int N = 50;
            const double tau1 = 0.13;
            const double tau2 = 0.41;
            const auto s = generate_sampling_set(m, tau1, tau2, N, origin, 1.5);
            REQUIRE(s.points.size() == static_cast<std::size_t>(4 * N + (origin ? 1 : 0)));
            CHECK(s.includes_origin == origin);
            std::size_t i = 0;
            if (origin) {
                CHECK(s.points[0].n == 0);
                CHECK(s.points[0].x == 0.0);
                CHECK(s.points[0].omega == 0.0);
                i = 1;
            }
            std::set<std::tuple<double, double>> all;
            for (const auto& p : s.points) {
                all.emplace(p.x, p.omega);
            }
            const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
            double worst = 0.0;
            for (int n = 1; n <= N; ++n) {
                for (int qd = 0; qd < 4; ++qd, ++i) {
                    const auto& p = s.points[i];
                    CHECK(p.n == n);
                    CHECK(p.sign_x == signs[qd][0]);
                    CHECK(p.sign_omega == signs[qd][1]);
                    CHECK(all.count({-p.x, p.omega}) == 1);
                    CHECK(all.count({p.x, -p.omega}) == 1);
                    const double t1 = std::abs(p.x) / std::pow(n, (m - 1) / m);
                    const double t2 = std::abs(p.omega) / std::pow(n, 1 / m);
                    worst = std::max({worst, std::abs(t1 - tau1) / tau1, std::abs(t2 - tau2) / tau2});
                }
            }
            CHECK(worst < 1e-14);
        }
    }
}

TEST_CASE("sampling set warnings") {
    Warnings w;
    generate_sampling_set(2.0, 0.1, 0.1, 4, false, std::nullopt, &w);
    CHECK(w.size() == 1);
    w.clear();
    generate_sampling_set(2.0, 0.1, 0.1, 4, false, pi, &w);
    CHECK(w.empty());
    generate_sampling_set(2.0, 0.5, 0.1, 4, false, pi, &w);
    CHECK(w.size() == 1);
    const auto s = generate_sampling_set(2.0, 0.1, 0.1, 4, false, pi);
    REQUIRE(s.a.has_value());
    CHECK(*s.a == pi);
}

TEST_CASE("thresholds") {
    CHECK(uniqueness_threshold(2.0, pi) == doctest::Approx(0.34221).epsilon(1e-5));
    CHECK(uniqueness_threshold(2.0, 2.0 / e) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(uniqueness_threshold(3.0, 1.0) == doctest::Approx(std::cbrt(2.0 / (3.0 * e))).epsilon(1e-14));
    CHECK(uniqueness_threshold(3.0, 1.0) == doctest::Approx(0.62595).epsilon(1e-5));

    CHECK(nonuniqueness_threshold(2.0, pi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(nonuniqueness_threshold(3.0, pi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(nonuniqueness_threshold(4.0, 1.0) == doctest::Approx(std::pow(pi, 0.25)).epsilon(1e-15));
    CHECK(nonuniqueness_threshold(4.0, 1.0) == doctest::Approx(1.33134).epsilon(1e-5));
    // rho = 5: |sin(5 pi / 2)| = 1
    CHECK(nonuniqueness_threshold(5.0, 2.0) == doctest::Approx(std::pow(pi / 2.0, 0.2)).epsilon(1e-14));
    // sin(pi rho / 2) < 0 on (2, 4): the modulus is used
    CHECK(nonuniqueness_threshold(2.5, 1.0) > 0.0);

    CHECK_THROWS_AS(uniqueness_threshold(1.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(nonuniqueness_threshold(2.0, 0.0), InvalidParameter);
}

TEST_CASE("the indeterminate gap is never empty") {
    for (double rho = 1.05; rho <= 8.0; rho += 0.05) {
        for (double b : {0.01, 0.5, 1.0, pi, 10.0, 1000.0}) {
            CHECK(uniqueness_threshold(rho, b) < nonuniqueness_threshold(rho, b));
        }
    }
}

TEST_CASE("density index") {
    const auto a = density_index(power_terms(0.3, 0.5, 200), 2.0);
    CHECK(a.value == doctest::Approx(0.3).epsilon(1e-14));
    CHECK_FALSE(a.diverging);

    std::vector<double> b;
    for (int k = 1; k <= 200; ++k) {
        b.push_back(0.3 * std::sqrt(k) * (1.0 + 1.0 / k));
    }
    CHECK(density_index(b, 2.0).value == doctest::Approx(0.3).epsilon(0.01));
    CHECK_FALSE(density_index(b, 2.0).diverging);

    const auto c = density_index(power_terms(1.0, 1.0, 200), 2.0);
    CHECK(c.diverging);
    CHECK(c.value == doctest::Approx(std::sqrt(101.0)).epsilon(1e-14));

    CHECK_THROWS_AS(density_index(power_terms(1.0, 0.5, 15), 2.0), InsufficientData);
    auto bad = power_terms(1.0, 0.5, 20);
    bad[5] = bad[4];
    CHECK_THROWS_AS(density_index(bad, 2.0), InvalidParameter);
}

TEST_CASE("classification") {
    CHECK(classify_sequence(power_terms(0.3, 0.5, 200), 2.0, pi).verdict == Verdict::Unique);
    CHECK(classify_sequence(power_terms(0.6, 0.5, 200), 2.0, pi).verdict == Verdict::Indeterminate);
    CHECK(classify_sequence(power_terms(1.5, 0.5, 200), 2.0, pi).verdict == Verdict::NotUnique);
    const auto r = classify_sequence(power_terms(0.3, 0.5, 200), 2.0, pi);
    CHECK(r.uniqueness_threshold == doctest::Approx(uniqueness_threshold(2.0, pi)));
    CHECK(r.nonuniqueness_threshold == doctest::Approx(1.0));
    CHECK(to_string(Verdict::Indeterminate) == "Indeterminate");
}

TEST_CASE("classification is scale consistent") {
    const double rho = 2.0;
    const double b = pi;
    const auto base = power_terms(1.0, 1.0 / rho, 200);
    const double lo = uniqueness_threshold(rho, b);
    const double hi = nonuniqueness_threshold(rho, b);
    for (double c : {0.05, 0.2, 0.34, 0.35, 0.7, 0.99, 1.01, 2.0, 10.0}) {
        auto scaled = base;
        for (auto& v : scaled) {
            v *= c;
        }
        const auto r = classify_sequence(scaled, rho, b);
        CHECK(r.density == doctest::Approx(c * density_index(base, rho).value).epsilon(1e-14));
        const Verdict expected = c < lo ? Verdict::Unique : (c > hi ? Verdict::NotUnique : Verdict::Indeterminate);
        CHECK(r.verdict == expected);
    }
}
