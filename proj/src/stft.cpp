#include "phaseless/stft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace phaseless {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

int oscillation_nodes(double length, double bandwidth, const QuadratureConfig& quad) {
    return std::max(quad.nodes, 16 * static_cast<int>(std::ceil(length * bandwidth)));
}

double window_bandwidth(const WindowModel& g) {
    return std::abs(g.center()) + envelope_radius(g.a, g.m, 0.0, 0.0);
}

cplx trapezoid_stft(const GridSamples& s, const WindowModel& g, double x, double omega,
                    const QuadratureConfig& quad) {
    cplx sum{};
    for (std::size_t j = 0; j < s.values.size(); ++j) {
        const double t = s.t(j);
        const double w = (j == 0 || j + 1 == s.values.size()) ? 0.5 * s.dt : s.dt;
        sum += w * s.values[j] * std::conj(time_window_value(g, t - x, quad)) *
               std::exp(-kI * (2.0 * kPi * omega * t));
    }
    return sum;
}

}  // namespace

cplx stft_eval_fourier(const Signal& f, const WindowModel& g, double x, double omega, const QuadratureConfig& quad) {
    validate(g);
    validate(quad);
    validate(f);
    if (!f.closed_form()) {
        throw InvalidParameter("Fourier-side STFT needs a closed-form signal");
    }
    if (is_zero(f)) {
        return {};
    }
    const double peak = omega + g.center();
    const double R = quad.radius > 0.0 ? quad.radius : envelope_radius(g.a, g.m, 0.0, 0.0);
    const auto [flo, fhi] = fourier_support(f);
    const double lo = std::max(peak - R, flo);
    const double hi = std::min(peak + R, fhi);
    if (!(lo < hi)) {
        return {};
    }
    const FourierFn ghat = fourier_evaluator(g);
    auto integrand = [&](double xi) {
        return fourier_eval(f, xi) * std::conj(ghat(xi - omega)) * std::exp(kI * (2.0 * kPi * (xi - omega) * x));
    };
    const auto [tlo, thi] = support(f);
    const double extent = std::abs(x) + std::max(std::abs(tlo), std::abs(thi)) + 1.0;
    QuadratureConfig q = quad;
    q.nodes = oscillation_nodes(hi - lo, extent, quad);
    const double kinks[] = {peak};
    const auto segments = split_at_kinks(lo, hi, kinks);
    return integrate(integrand, segments, q, "STFT (Fourier side)").value;
}

cplx stft_eval(const Signal& f, const WindowModel& g, double x, double omega, const QuadratureConfig& quad) {
    validate(g);
    validate(quad);
    validate(f);
    if (is_zero(f)) {
        return {};
    }
    if (!f.closed_form()) {
        return trapezoid_stft(f.samples(), g, x, omega, quad);
    }
    if (!g.gaussian()) {
        return stft_eval_fourier(f, g, x, omega, quad);
    }
    const double Rg = quad.radius > 0.0 ? quad.radius : time_window_radius(g);
    const auto [flo, fhi] = support(f);
    const double lo = std::max(flo, x - Rg);
    const double hi = std::min(fhi, x + Rg);
    if (!(lo < hi)) {
        return {};
    }
    auto integrand = [&](double t) {
        return f(t) * std::conj(time_window_closed_form(g, t - x)) * std::exp(-kI * (2.0 * kPi * omega * t));
    };
    QuadratureConfig q = quad;
    q.nodes = oscillation_nodes(hi - lo, std::abs(omega) + bandwidth_bound(f, lo, hi) + window_bandwidth(g), quad);
    const Segment seg{lo, hi};
    return integrate(integrand, std::span(&seg, 1), q, "STFT").value;
}

std::string quad_config_id(const QuadratureConfig& quad) {
    return fmt::format("gl16:R={:.17g}:nodes={}:tol={:.17g}:check={}", quad.radius, quad.nodes, quad.tol,
                       quad.check ? 1 : 0);
}

SpectrogramSamples spectrogram_on_set(const Signal& f, const WindowModel& g, const SamplingSet& lambda,
                                      const QuadratureConfig& quad) {
    SpectrogramSamples out;
    out.quad_config_id = quad_config_id(quad);
    out.points.reserve(lambda.points.size());
    out.magnitudes.reserve(lambda.points.size());
    for (std::size_t i = 0; i < lambda.points.size(); ++i) {
        const SamplePoint& p = lambda.points[i];
        try {
            out.magnitudes.push_back(std::abs(stft_eval(f, g, p.x, p.omega, quad)));
        } catch (const QuadratureError& e) {
            throw QuadratureError(fmt::format("sampling point {} (x={}, omega={}): {}", i, p.x, p.omega, e.what()));
        }
        out.points.emplace_back(p.x, p.omega);
    }
    return out;
}

PhaseAlignment global_phase_residual(const Signal& f, const Signal& h, const QuadratureConfig& quad) {
    const double nf = norm(f, quad);
    const double nh = norm(h, quad);
    if (!(nf > 0.0) || !(nh > 0.0)) {
        throw ZeroNorm("global_phase_residual needs nonzero signals");
    }
    const cplx ip = inner_product(f, h, quad);
    PhaseAlignment out;
    if (ip != cplx{}) {
        out.alpha = std::arg(ip);
        if (out.alpha < 0.0) {
            out.alpha += 2.0 * kPi;
        }
        if (out.alpha >= 2.0 * kPi) {
            out.alpha = 0.0;
        }
    }
    out.residual = distance(f, h, std::polar(1.0, out.alpha), quad) / nf;
    return out;
}

std::string to_string(DiscriminationVerdict v) {
    switch (v) {
        case DiscriminationVerdict::EquivalentUpToPhase:
            return "EquivalentUpToPhase";
        case DiscriminationVerdict::Distinct:
            return "Distinct";
        case DiscriminationVerdict::Inconsistent:
            return "Inconsistent";
    }
    return "Inconsistent";
}

DiscriminationReport discriminate(const Signal& f, const Signal& h, const WindowModel& g, const SamplingSet& lambda,
                                  const DiscriminationConfig& config) {
    if (!(config.tol > 0.0) || !(config.phase_tol > 0.0)) {
        throw InvalidParameter("discrimination tolerances must be positive");
    }
    const SpectrogramSamples sf = spectrogram_on_set(f, g, lambda, config.quad);
    const SpectrogramSamples sh = spectrogram_on_set(h, g, lambda, config.quad);
    DiscriminationReport report;
    for (std::size_t i = 0; i < sf.magnitudes.size(); ++i) {
        report.max_spectrogram_deviation =
            std::max(report.max_spectrogram_deviation, std::abs(sf.magnitudes[i] - sh.magnitudes[i]));
        report.max_magnitude = std::max({report.max_magnitude, sf.magnitudes[i], sh.magnitudes[i]});
    }
    report.spectrograms_match = report.max_spectrogram_deviation <= config.tol * report.max_magnitude;
    const PhaseAlignment pa = global_phase_residual(f, h, config.quad);
    report.alpha = pa.alpha;
    report.aligned_residual = pa.residual;
    const bool equal = pa.residual < config.phase_tol;
    if (report.spectrograms_match && equal) {
        report.verdict = DiscriminationVerdict::EquivalentUpToPhase;
    } else if (!report.spectrograms_match && !equal) {
        report.verdict = DiscriminationVerdict::Distinct;
    } else {
        report.verdict = DiscriminationVerdict::Inconsistent;
    }
    return report;
}

double moyal_energy_check(const Signal& f, const WindowModel& g, const TFRect& grid, const QuadratureConfig& quad) {
    validate(g);
    if (!(grid.step > 0.0) || !(grid.x_hi >= grid.x_lo) || !(grid.omega_hi >= grid.omega_lo)) {
        throw InvalidParameter("time-frequency grid needs step > 0 and ordered bounds");
    }
    if (is_zero(f)) {
        return 0.0;
    }
    const int nx = static_cast<int>(std::floor((grid.x_hi - grid.x_lo) / grid.step + 1e-9)) + 1;
    const int nw = static_cast<int>(std::floor((grid.omega_hi - grid.omega_lo) / grid.step + 1e-9)) + 1;
    double sum = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = grid.x_lo + i * grid.step;
        for (int j = 0; j < nw; ++j) {
            const double omega = grid.omega_lo + j * grid.step;
            sum += std::norm(stft_eval(f, g, x, omega, quad));
        }
    }
    sum *= grid.step * grid.step;
    const double nf = norm(f, quad);
    const double energy = nf * nf * window_energy(g);
    return std::abs(sum - energy) / energy;
}

cplx extend_stft(const Signal& f, const WindowModel& g, cplx z, cplx zprime, const QuadratureConfig& quad,
                 Warnings* warnings) {
    validate(g);
    validate(quad);
    validate(f);
    if (is_zero(f)) {
        return {};
    }
    auto integrand = [&](double t) {
        return std::conj(time_window_value(g, cplx{t, 0.0} - std::conj(z), quad)) *
               std::exp(kI * (2.0 * kPi * zprime * t)) * f(t);
    };
    if (!f.closed_form()) {
        const GridSamples& s = f.samples();
        cplx sum{};
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            const double w = (j == 0 || j + 1 == s.values.size()) ? 0.5 * s.dt : s.dt;
            sum += w * integrand(s.t(j));
        }
        return sum;
    }
    const auto [flo, fhi] = support(f);
    const double pad = 8.0 + 4.0 * std::abs(z.imag()) + 4.0 * std::abs(zprime.imag()) + std::abs(z.real());
    const double scan_lo = std::min(flo, z.real()) - pad;
    const double scan_hi = std::max(fhi, z.real()) + pad;
    constexpr int kScan = 4097;
    const double h = (scan_hi - scan_lo) / (kScan - 1);
    std::vector<double> mags(kScan);
    double peak = 0.0;
    for (int i = 0; i < kScan; ++i) {
        mags[static_cast<std::size_t>(i)] = std::abs(integrand(scan_lo + i * h));
        peak = std::max(peak, mags[static_cast<std::size_t>(i)]);
    }
    if (!std::isfinite(peak)) {
        throw OverflowError("extended STFT integrand overflows");
    }
    if (peak == 0.0) {
        return {};
    }
    const double floor = 1e-20 * peak;
    int first = 0;
    while (mags[static_cast<std::size_t>(first)] <= floor) {
        ++first;
    }
    int last = kScan - 1;
    while (mags[static_cast<std::size_t>(last)] <= floor) {
        --last;
    }
    if (first == 0 || last == kScan - 1) {
        warn(warnings, fmt::format("extended STFT at z=({}, {}), z'=({}, {}): integrand not negligible at the scan "
                                   "edge; the truncated integral may not converge",
                                   z.real(), z.imag(), zprime.real(), zprime.imag()));
    }
    const double lo = scan_lo + std::max(0, first - 1) * h;
    const double hi = scan_lo + std::min(kScan - 1, last + 1) * h;
    QuadratureConfig q = quad;
    q.nodes = oscillation_nodes(hi - lo,
                                std::abs(zprime.real()) + bandwidth_bound(f, lo, hi) + window_bandwidth(g) +
                                    std::abs(z.imag()) * g.m * 4.0,
                                quad);
    const Segment seg{lo, hi};
    return integrate(integrand, std::span(&seg, 1), q, "extended STFT").value;
}

}  // namespace phaseless
