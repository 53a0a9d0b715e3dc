#include "phaseless/windows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace phaseless {

namespace {

constexpr double kDecayTieTol = 1e-12;
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

cplx integrate_ambiguity(const FourierFn& ghat, double omega, double xi, std::span<const Segment> segments,
                         const QuadratureConfig& quad) {
    auto integrand = [&](double eta) {
        return std::exp(kI * (2.0 * kPi * omega * eta)) * ghat(-eta) * std::conj(ghat(xi - eta));
    };
    return integrate(integrand, segments, quad, "ambiguity function").value;
}

AmbiguityScanReport summarize(double omega, std::span<const double> grid, std::vector<double> magnitudes) {
    AmbiguityScanReport report;
    report.omega = omega;
    report.grid.assign(grid.begin(), grid.end());
    report.magnitudes = std::move(magnitudes);
    const auto [lo, hi] = std::minmax_element(report.magnitudes.begin(), report.magnitudes.end());
    report.min_magnitude = *lo;
    const double threshold = kNearZeroFraction * *hi;
    const auto near_zero =
        std::count_if(report.magnitudes.begin(), report.magnitudes.end(), [&](double v) { return v <= threshold; });
    report.near_zero_fraction = static_cast<double>(near_zero) / static_cast<double>(report.magnitudes.size());
    return report;
}

}  // namespace

void validate(const WindowModel& w) {
    if (!(w.m > 1.0) || !std::isfinite(w.m)) {
        throw InvalidParameter("window decay exponent m must be > 1 (got " + std::to_string(w.m) + ")");
    }
    if (!(w.a > 0.0) || !std::isfinite(w.a)) {
        throw InvalidParameter("window decay rate a must be > 0 (got " + std::to_string(w.a) + ")");
    }
    if (!(w.C > 0.0) || !std::isfinite(w.C)) {
        throw InvalidParameter("window amplitude C must be > 0 (got " + std::to_string(w.C) + ")");
    }
    if (w.modulation && !std::isfinite(*w.modulation)) {
        throw InvalidParameter("window modulation must be finite");
    }
}

WindowModel make_generalized_gaussian(double a, double m, double C, Warnings* warnings) {
    WindowModel w{WindowFamily::GeneralizedGaussianFourier, a, m, C, std::nullopt};
    validate(w);
    if (a <= 1.0) {
        warn(warnings, "decay rate a = " + std::to_string(a) +
                           " <= 1: outside the range a > 1 assumed by the sampling-set bounds");
    }
    return w;
}

WindowModel make_modulated_generalized_gaussian(double a, double m, double C, double xi0, Warnings* warnings) {
    WindowModel w = make_generalized_gaussian(a, m, C, warnings);
    w.family = WindowFamily::ModulatedGeneralizedGaussian;
    w.modulation = xi0;
    validate(w);
    return w;
}

cplx fourier_window_eval(const WindowModel& w, double xi) {
    return w.C * std::exp(-w.a * std::pow(std::abs(xi - w.center()), w.m));
}

FourierFn fourier_evaluator(const WindowModel& w) {
    return [w](double xi) { return fourier_window_eval(w, xi); };
}

cplx time_window_eval(const WindowModel& w, cplx t, const QuadratureConfig& quad) {
    validate(w);
    validate(quad);
    const double xi0 = w.center();
    if (w.gaussian()) {
        // Saddle of -a(zeta - xi0)^2 + 2 pi i zeta t sits at xi0 + i pi t / a.
        const double eta = kPi * t.real() / w.a;
        const double mid = xi0 - kPi * t.imag() / w.a;
        const double radius = quad.radius > 0.0 ? quad.radius : envelope_radius(w.a, 2.0, 0.0, 0.0);
        auto integrand = [&](double s) {
            const cplx zeta{s, eta};
            const cplx d = zeta - xi0;
            return w.C * std::exp(-w.a * d * d + 2.0 * kPi * kI * zeta * t);
        };
        const Segment seg{mid - radius, mid + radius};
        return integrate(integrand, std::span(&seg, 1), quad, "window continuation").value;
    }
    const double beta = 2.0 * kPi * std::abs(t.imag());
    const double radius = quad.radius > 0.0 ? quad.radius : envelope_radius(w.a, w.m, beta, 0.0);
    auto integrand = [&](double xi) { return fourier_window_eval(w, xi) * std::exp(2.0 * kPi * kI * xi * t); };
    const double kinks[] = {xi0};
    const auto segments = split_at_kinks(xi0 - radius, xi0 + radius, kinks);
    return integrate(integrand, segments, quad, "window continuation").value;
}

cplx time_window_closed_form(const WindowModel& w, cplx t) {
    validate(w);
    if (!w.gaussian()) {
        throw InvalidParameter("closed-form time window exists only for m = 2");
    }
    return w.C * std::sqrt(kPi / w.a) * std::exp(-kPi * kPi * t * t / w.a + 2.0 * kPi * kI * w.center() * t);
}

cplx time_window_value(const WindowModel& w, cplx t, const QuadratureConfig& quad) {
    return w.gaussian() ? time_window_closed_form(w, t) : time_window_eval(w, t, quad);
}

double time_window_radius(const WindowModel& w) {
    if (!w.gaussian()) {
        return std::numeric_limits<double>::infinity();
    }
    return std::sqrt(46.1 * w.a) / kPi;
}

double window_energy(const WindowModel& w) {
    validate(w);
    const double log_integral = std::log(2.0) + std::lgamma(1.0 / w.m) - std::log(w.m) - std::log(2.0 * w.a) / w.m;
    return w.C * w.C * std::exp(log_integral);
}

DecayReport verify_decay(const FourierFn& ghat, double a, double m, double C, std::span<const double> grid,
                         double tol) {
    if (grid.empty()) {
        throw InvalidParameter("verify_decay: empty grid");
    }
    if (!(C > 0.0) || !(a > 0.0) || !(m > 0.0)) {
        throw InvalidParameter("verify_decay: envelope parameters must be positive");
    }
    double worst_log = -std::numeric_limits<double>::infinity();
    double worst_excess = -std::numeric_limits<double>::infinity();
    double worst_at = grid.front();
    for (double xi : grid) {
        if (!std::isfinite(xi)) {
            throw InvalidParameter("verify_decay: non-finite grid point");
        }
        const double mag = std::abs(ghat(xi));
        if (!std::isfinite(mag)) {
            throw InvalidParameter("verify_decay: non-finite window value");
        }
        const double envelope_log = std::log(C) - a * std::pow(std::abs(xi), m);
        const double log_ratio =
            mag > 0.0 ? std::log(mag) - envelope_log : -std::numeric_limits<double>::infinity();
        const double excess = mag - std::exp(envelope_log);
        // Ratios equal to rounding are tied; the larger absolute excess wins.
        const bool tied = std::abs(log_ratio - worst_log) <= kDecayTieTol;
        if ((!tied && log_ratio > worst_log) || (tied && excess > worst_excess)) {
            worst_log = log_ratio;
            worst_excess = excess;
            worst_at = xi;
        }
    }
    DecayReport report;
    report.worst_ratio = std::exp(worst_log);
    report.worst_location = worst_at;
    report.passes = report.worst_ratio <= 1.0 + tol;
    return report;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
    if (count < 1) {
        throw InvalidParameter("grid needs at least one point");
    }
    std::vector<double> grid(static_cast<std::size_t>(count));
    if (count == 1) {
        grid[0] = lo;
        return grid;
    }
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + step * i;
    }
    grid.back() = hi;
    return grid;
}

std::vector<double> default_scan_grid() { return uniform_grid(-5.0, 5.0, 1001); }

AmbiguityScanReport window_ambiguity_scan(const WindowModel& w, double omega, std::span<const double> xi_grid,
                                          const QuadratureConfig& quad) {
    validate(w);
    validate(quad);
    if (xi_grid.empty()) {
        throw InvalidParameter("ambiguity scan: empty grid");
    }
    const FourierFn ghat = fourier_evaluator(w);
    const double xi0 = w.center();
    const double radius = quad.radius > 0.0 ? quad.radius : envelope_radius(w.a, w.m, 0.0, 0.0);
    std::vector<double> magnitudes;
    magnitudes.reserve(xi_grid.size());
    for (double xi : xi_grid) {
        // Kinks of ghat(-eta) and ghat(xi - eta).
        const double k1 = -xi0;
        const double k2 = xi - xi0;
        const double kinks[] = {k1, k2};
        const auto segments = split_at_kinks(std::min(k1, k2) - radius, std::max(k1, k2) + radius, kinks);
        magnitudes.push_back(std::abs(integrate_ambiguity(ghat, omega, xi, segments, quad)));
    }
    return summarize(omega, xi_grid, std::move(magnitudes));
}

AmbiguityScanReport ambiguity_scan(const FourierFn& ghat, double omega, std::span<const double> xi_grid,
                                   const QuadratureConfig& quad) {
    validate(quad);
    if (xi_grid.empty()) {
        throw InvalidParameter("ambiguity scan: empty grid");
    }
    if (!(quad.radius > 0.0)) {
        throw InvalidParameter("ambiguity scan of a generic evaluator needs an explicit quadrature radius");
    }
    std::vector<double> magnitudes;
    magnitudes.reserve(xi_grid.size());
    for (double xi : xi_grid) {
        const double kinks[] = {0.0, xi};
        const auto segments = split_at_kinks(std::min(0.0, xi) - quad.radius, std::max(0.0, xi) + quad.radius, kinks);
        magnitudes.push_back(std::abs(integrate_ambiguity(ghat, omega, xi, segments, quad)));
    }
    return summarize(omega, xi_grid, std::move(magnitudes));
}

}  // namespace phaseless
