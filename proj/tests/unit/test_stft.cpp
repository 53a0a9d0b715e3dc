#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "phaseless/entire.hpp"
#include "phaseless/stft.hpp"

using namespace phaseless;
using std::numbers::pi;

namespace {

const WindowModel kGauss = make_generalized_gaussian(pi, 2.0, 1.0);
const Signal kF = make_signal({gaussian_atom()});

// int e^{-pi (t - z)^2} e^{2 pi i z' t} e^{-pi t^2} dt
cplx gaussian_extension(cplx z, cplx zp) {
    const cplx s = z + cplx{0.0, 1.0} * zp;
    return std::sqrt(0.5) * std::exp(pi * s * s / 2.0 - pi * z * z);
}

SamplingSet valid_set(int N, bool origin) {
    const auto b = max_tau_bounds(2.0, pi);
    return generate_sampling_set(2.0, 0.9 * b.tau1_max, 0.9 * b.tau2_max, N, origin, pi);
}

}  // namespace

TEST_CASE("Gaussian STFT values") {
    CHECK(std::abs(stft_eval(kF, kGauss, 0.0, 0.0) - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(stft_eval(kF, kGauss, 1.0, 0.0)) == doctest::Approx(0.146993058107811).epsilon(1e-12));
    CHECK(std::abs(stft_eval(kF, kGauss, 1.0, 0.0)) == doctest::Approx(oracle::gaussian_stft_magnitude(1, 0)));
    CHECK(stft_eval(zero_signal(), kGauss, 0.3, 0.2) == cplx{});
    for (double x = -2.0; x <= 2.0; x += 0.5) {
        for (double w = -2.0; w <= 2.0; w += 0.5) {
            const double ref = oracle::gaussian_stft_magnitude(x, w);
            CHECK(std::abs(std::abs(stft_eval(kF, kGauss, x, w)) - ref) < 1e-12 * ref + 1e-15);
        }
    }
}

TEST_CASE("time-side and Fourier-side STFT agree") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 8; ++i) {
        const Signal f = oracle::random_mixture(rng);
        for (auto [x, w] : {std::pair{0.0, 0.0}, std::pair{0.7, -0.4}, std::pair{-1.3, 1.1}}) {
            const cplx a = stft_eval(f, kGauss, x, w);
            const cplx b = stft_eval_fourier(f, kGauss, x, w);
            CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("non-Gaussian window against a time-domain oracle") {
    // |ghat| = e^{-|xi|^1.5}: integrate f(t) conj(g(t - x)) e^{-2 pi i omega t} with g from time_window_eval.
    const auto w = make_generalized_gaussian(1.0, 1.5, 1.0);
    const Signal f = make_signal({gaussian_atom(0.3, 0.8, 0.2)});
    for (auto [x, om] : {std::pair{0.0, 0.0}, std::pair{0.5, 0.4}}) {
        const cplx fourier = stft_eval(f, w, x, om);
        cplx direct{};
        const double h = 1.0 / 64.0;
        for (double t = -6.0; t <= 6.0; t += h) {
            direct += f(t) * std::conj(time_window_eval(w, t - x)) * std::polar(1.0, -2 * pi * om * t) * h;
        }
        CHECK(std::abs(fourier - direct) < 1e-9);
    }
}

TEST_CASE("grid signals use their own samples") {
    const Signal g = make_signal(sample(kF, -6.0, 1.0 / 32.0, 385));
    for (auto [x, w] : {std::pair{0.0, 0.0}, std::pair{0.5, -0.75}}) {
        CHECK(std::abs(stft_eval(g, kGauss, x, w) - stft_eval(kF, kGauss, x, w)) < 1e-12);
    }
}

TEST_CASE("spectrogram on a sampling set") {
    const auto lambda = valid_set(8, true);
    const auto s = spectrogram_on_set(kF, kGauss, lambda);
    REQUIRE(s.magnitudes.size() == lambda.points.size());
    CHECK(s.magnitudes[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(s.quad_config_id == quad_config_id(QuadratureConfig{}));
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        CHECK(s.points[i].first == lambda.points[i].x);
        CHECK(s.points[i].second == lambda.points[i].omega);
    }
    const auto z = spectrogram_on_set(zero_signal(), kGauss, lambda);
    for (double v : z.magnitudes) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("quadrature failures name the sampling point") {
    QuadratureConfig q;
    q.tol = 1e-300;
    try {
        spectrogram_on_set(kF, kGauss, valid_set(4, false), q);
        FAIL("expected a quadrature error");
    } catch (const QuadratureError& e) {
        CHECK(std::string(e.what()).find("point 0") != std::string::npos);
    }
}

TEST_CASE("global phase invariance") {
    const auto lambda = valid_set(16, true);
    std::mt19937_64 rng(17);
    std::vector<Signal> signals = {kF, make_signal({hermite_atom(2, 0.3, 1.1)})};
    for (int i = 0; i < 3; ++i) {
        signals.push_back(oracle::random_mixture(rng));
    }
    for (const auto& f : signals) {
        const auto base = spectrogram_on_set(f, kGauss, lambda);
        for (double alpha : {pi / 7, pi / 3, pi}) {
            const auto rot = spectrogram_on_set(scaled(f, std::polar(1.0, alpha)), kGauss, lambda);
            for (std::size_t i = 0; i < base.magnitudes.size(); ++i) {
                CHECK(std::abs(rot.magnitudes[i] - base.magnitudes[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("shift covariance") {
    for (double mu : {0.25, 1.0}) {
        const Signal g = shifted(kF, mu);
        for (double x = -1.5; x <= 1.5; x += 0.5) {
            for (double w = -1.0; w <= 1.0; w += 0.5) {
                CHECK(std::abs(std::abs(stft_eval(g, kGauss, x, w)) - std::abs(stft_eval(kF, kGauss, x - mu, w))) <
                      1e-8);
            }
        }
    }
}

TEST_CASE("phase alignment") {
    std::mt19937_64 rng(23);
    const Signal f = oracle::random_mixture(rng);
    const auto same = global_phase_residual(f, f);
    CHECK(std::abs(same.alpha) < 1e-14);
    CHECK(same.residual < 1e-14);

    const auto rot = global_phase_residual(f, scaled(f, std::polar(1.0, -pi / 3)));
    CHECK(rot.alpha == doctest::Approx(pi / 3).epsilon(1e-13));
    CHECK(rot.residual < 1e-13);

    // Orthogonal pair: ||f - e^{i alpha} h|| / ||f|| = sqrt(1 + ||h||^2 / ||f||^2) = sqrt(1 + sqrt 2)
    const Signal h = make_signal({hermite_atom(1)});
    CHECK(std::abs(inner_product(kF, h)) < 1e-14);
    const auto orth = global_phase_residual(kF, h);
    CHECK(orth.residual == doctest::Approx(std::sqrt(1.0 + std::sqrt(2.0))).epsilon(1e-12));
    CHECK(orth.alpha >= 0.0);
    CHECK(orth.alpha < 2 * pi);

    CHECK_THROWS_AS(global_phase_residual(zero_signal(), kF), ZeroNorm);
    CHECK_THROWS_AS(global_phase_residual(kF, zero_signal()), ZeroNorm);
}

TEST_CASE("discrimination") {
    const auto lambda = valid_set(32, true);
    const auto eq = discriminate(kF, scaled(kF, std::polar(1.0, 0.7)), kGauss, lambda);
    CHECK(eq.verdict == DiscriminationVerdict::EquivalentUpToPhase);
    CHECK(eq.spectrograms_match);
    CHECK(eq.aligned_residual < 1e-6);

    const auto neg = discriminate(kF, scaled(kF, -1.0), kGauss, lambda);
    CHECK(neg.verdict == DiscriminationVerdict::EquivalentUpToPhase);
    CHECK(neg.alpha == doctest::Approx(pi).epsilon(1e-14));

    const auto lam = valid_set(32, false);
    const auto d = discriminate(kF, make_signal({hermite_atom(1)}), kGauss, lam);
    CHECK(d.verdict == DiscriminationVerdict::Distinct);
    CHECK_FALSE(d.spectrograms_match);
    CHECK(d.max_spectrogram_deviation == doctest::Approx(0.1795138701217395).epsilon(1e-9));
    CHECK(d.max_spectrogram_deviation > 1e-6 * d.max_magnitude);
    CHECK(to_string(d.verdict) == "Distinct");
}

TEST_CASE("energy identity") {
    TFRect coarse;
    coarse.step = 1.0;
    TFRect medium;
    medium.step = 0.25;
    const double e_coarse = moyal_energy_check(kF, kGauss, coarse);
    const double e_medium = moyal_energy_check(kF, kGauss, medium);
    CHECK(e_medium < 1e-6);
    CHECK(e_coarse > e_medium);
    CHECK(moyal_energy_check(zero_signal(), kGauss, medium) == 0.0);
}

TEST_CASE("complex extension") {
    for (auto [x, w] : {std::pair{0.0, 0.0}, std::pair{0.4, 0.9}, std::pair{-1.2, -0.3}}) {
        const cplx ref = stft_eval(kF, kGauss, x, w);
        CHECK(std::abs(extend_stft(kF, kGauss, x, -w) - ref) < 1e-10 * std::abs(ref));
    }
    for (cplx z : {cplx{0.0, 0.5}, cplx{0.3, 1.0}, cplx{-0.2, -2.0}}) {
        for (cplx zp : {cplx{0.0, 0.0}, cplx{0.5, 0.5}, cplx{0.0, 1.5}}) {
            const cplx ref = gaussian_extension(z, zp);
            CHECK(std::abs(extend_stft(kF, kGauss, z, zp) - ref) < 1e-10 * std::abs(ref));
        }
    }
}

TEST_CASE("growth of the extension") {
    const double tau = predicted_growth(2.0, pi).type;
    for (double y : {0.5, 1.0, 2.0}) {
        const double lg = std::log(std::abs(extend_stft(kF, kGauss, cplx{0.0, y}, 0.0)));
        CHECK(lg <= tau * y * y);
    }
    // log|V(0, iy')| - log|V(0, 0)| ~ c y'^2; slope in log-log coordinates is the order.
    const double base = std::log(std::abs(extend_stft(kF, kGauss, 0.0, 0.0)));
    std::vector<double> lx;
    std::vector<double> ly;
    for (double y : {1.0, 2.0, 4.0}) {
        lx.push_back(std::log(y));
        ly.push_back(std::log(std::log(std::abs(extend_stft(kF, kGauss, 0.0, cplx{0.0, y}))) - base));
    }
    const double slope = (ly[2] - ly[0]) / (lx[2] - lx[0]);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.02));
}
