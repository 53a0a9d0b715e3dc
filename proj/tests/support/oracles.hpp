#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's quadrature or special-function code.

#include <complex>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include "phaseless/signal.hpp"

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

/// int_R |xi|^n e^{-a |xi|^m} dxi by double-exponential quadrature, split at the peak.
inline double moment(int n, double a, double m) {
    auto f = [=](double x) {
        if (x <= 0.0) {
            return n == 0 ? 1.0 : 0.0;
        }
        return std::exp(n * std::log(x) - a * std::pow(x, m));
    };
    const double peak = n == 0 ? 1.0 : std::pow(n / (a * m), 1.0 / m);
    boost::math::quadrature::tanh_sinh<double> inner;
    boost::math::quadrature::exp_sinh<double> outer;
    const double head = inner.integrate(f, 0.0, peak, 1e-14);
    const double tail = outer.integrate([&](double u) { return f(peak + u); }, 1e-14);
    return 2.0 * (head + tail);
}

/// Taylor coefficients of sqrt(pi/a) exp(-pi^2 z^2 / a), the continuation of
/// the time window for ghat = e^{-a xi^2}.
inline std::vector<cplx> gaussian_continuation_coefficients(double a, int N) {
    std::vector<cplx> c(static_cast<std::size_t>(N) + 1);
    for (int k = 0; 2 * k <= N; ++k) {
        const double log_mag = 0.5 * std::log(kPi / a) + k * std::log(kPi * kPi / a) - std::lgamma(k + 1.0);
        c[static_cast<std::size_t>(2 * k)] = (k % 2 == 0 ? 1.0 : -1.0) * std::exp(log_mag);
    }
    return c;
}

/// zeta(s, q) from GSL.
inline double hurwitz_zeta(double s, double q) {
    static const auto previous = gsl_set_error_handler_off();
    (void)previous;
    gsl_sf_result r;
    if (gsl_sf_hzeta_e(s, q, &r) != GSL_SUCCESS) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return r.val;
}

/// V(w) = e^{gamma w / c} / Gamma(1 - w/c): genus-1 product with zeros omega_k = c k.
inline cplx linear_zero_product(double c, cplx w) {
    // log Gamma for complex argument by Lanczos (g = 7, n = 9).
    static constexpr double g = 7.0;
    static constexpr double coef[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                      771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    auto log_gamma = [&](cplx z) -> cplx {
        if (z.real() < 0.5) {
            const cplx reflected = std::log(kPi / std::sin(kPi * z));
            z = 1.0 - z;
            z -= 1.0;
            cplx x = coef[0];
            for (int i = 1; i < 9; ++i) {
                x += coef[i] / (z + static_cast<double>(i));
            }
            const cplx t = z + g + 0.5;
            return reflected - (0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x));
        }
        z -= 1.0;
        cplx x = coef[0];
        for (int i = 1; i < 9; ++i) {
            x += coef[i] / (z + static_cast<double>(i));
        }
        const cplx t = z + g + 0.5;
        return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
    };
    constexpr double euler_gamma = 0.57721566490153286;
    return std::exp(euler_gamma * w / c - log_gamma(1.0 - w / c));
}

/// |V_g f(x, omega)| for f(t) = e^{-pi t^2}, g(t) = e^{-pi t^2}.
inline double gaussian_stft_magnitude(double x, double omega) {
    return std::sqrt(0.5) * std::exp(-kPi * (x * x + omega * omega) / 2.0);
}

/// Random Gaussian mixture with 1-3 components: centers U(-1.5, 1.5), widths
/// U(0.5, 1.5), frequencies U(-1, 1), amplitudes standard complex normal.
inline phaseless::Signal random_mixture(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_real_distribution<double> center(-1.5, 1.5);
    std::uniform_real_distribution<double> width(0.5, 1.5);
    std::uniform_real_distribution<double> freq(-1.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<phaseless::Atom> atoms;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const double c = center(rng);
        const double w = width(rng);
        const double f = freq(rng);
        const double re = normal(rng);
        const double im = normal(rng);
        atoms.push_back(phaseless::gaussian_atom(c, w, f, cplx{re, im}));
    }
    return phaseless::make_signal(std::move(atoms));
}

/// Direct O(L^3) evaluation of the hop-1 circular discrete STFT.
inline std::vector<cplx> naive_dstft(const std::vector<cplx>& f, const std::vector<cplx>& g, double dt) {
    const int L = static_cast<int>(f.size());
    std::vector<cplx> out(static_cast<std::size_t>(L) * L);
    for (int x = 0; x < L; ++x) {
        for (int k = 0; k < L; ++k) {
            cplx sum{};
            for (int j = 0; j < L; ++j) {
                sum += f[j] * std::conj(g[(j - x + L) % L]) * std::polar(1.0, -2.0 * kPi * j * k / L);
            }
            out[static_cast<std::size_t>(x) * L + k] = dt * sum;
        }
    }
    return out;
}

}  // namespace oracle
