#include "phaseless/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace phaseless {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void require_rho_b(double rho, double b) {
    if (!(rho > 1.0) || !std::isfinite(rho)) {
        throw InvalidParameter(fmt::format("rho must be > 1 (got {})", rho));
    }
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw InvalidParameter(fmt::format("b must be > 0 (got {})", b));
    }
}

}  // namespace

TauBounds max_tau_bounds(double m, double a) {
    if (!(m > 1.0) || !std::isfinite(m) || !(a > 0.0) || !std::isfinite(a)) {
        throw InvalidParameter(fmt::format("max_tau_bounds needs m > 1 and a > 0 (got m={}, a={})", m, a));
    }
    const double rho = m / (m - 1.0);
    const double denom1 = std::pow(2.0 * kPi, rho) * std::pow(m * a, -1.0 / (m - 1.0)) * kE;
    TauBounds out;
    out.tau1_max = std::pow(2.0 / denom1, (m - 1.0) / m);
    out.tau2_max = std::pow(2.0 / (a * m * kE), 1.0 / m);
    return out;
}

SamplingSet generate_sampling_set(double m, double tau1, double tau2, int N, bool include_origin,
                                  std::optional<double> a, Warnings* warnings) {
    if (!(m > 1.0) || !std::isfinite(m)) {
        throw InvalidParameter(fmt::format("m must be > 1 (got {})", m));
    }
    if (!(tau1 > 0.0) || !(tau2 > 0.0) || !std::isfinite(tau1) || !std::isfinite(tau2)) {
        throw InvalidParameter("tau1 and tau2 must be positive");
    }
    if (N < 1) {
        throw InvalidParameter(fmt::format("N must be >= 1 (got {})", N));
    }
    if (a) {
        const TauBounds bounds = max_tau_bounds(m, *a);
        if (!(tau1 < bounds.tau1_max)) {
            warn(warnings, fmt::format("tau1 = {} is not below tau1_max = {}", tau1, bounds.tau1_max));
        }
        if (!(tau2 < bounds.tau2_max)) {
            warn(warnings, fmt::format("tau2 = {} is not below tau2_max = {}", tau2, bounds.tau2_max));
        }
    } else {
        warn(warnings, "no decay rate a given: tau1, tau2 not checked against their bounds");
    }

    SamplingSet set;
    set.tau1 = tau1;
    set.tau2 = tau2;
    set.m = m;
    set.N = N;
    set.includes_origin = include_origin;
    set.a = a;
    set.points.reserve(4 * static_cast<std::size_t>(N) + (include_origin ? 1 : 0));
    if (include_origin) {
        set.points.push_back({0, 1, 1, 0.0, 0.0});
    }
    const double ex = (m - 1.0) / m;
    const double eo = 1.0 / m;
    for (int n = 1; n <= N; ++n) {
        const double x = tau1 * std::pow(static_cast<double>(n), ex);
        const double omega = tau2 * std::pow(static_cast<double>(n), eo);
        for (int sx : {1, -1}) {
            for (int so : {1, -1}) {
                set.points.push_back({n, sx, so, sx * x, so * omega});
            }
        }
    }
    return set;
}

double uniqueness_threshold(double rho, double b) {
    require_rho_b(rho, b);
    return std::pow(2.0 / (b * rho * kE), 1.0 / rho);
}

double nonuniqueness_threshold(double rho, double b) {
    require_rho_b(rho, b);
    const double half = rho / 2.0;
    if (std::abs(half - std::round(half)) < 1e-12) {
        return std::pow(kPi / b, 1.0 / rho);
    }
    return std::pow(kPi / (b * std::abs(std::sin(kPi * half))), 1.0 / rho);
}

DensityEstimate density_index(std::span<const double> lambdas, double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw InvalidParameter("rho must be positive");
    }
    if (lambdas.size() < 16) {
        throw InsufficientData(fmt::format("density_index needs at least 16 terms (have {})", lambdas.size()));
    }
    double previous = 0.0;
    for (double l : lambdas) {
        if (!(l > previous) || !std::isfinite(l)) {
            throw InvalidParameter("sequence must be positive, finite and strictly increasing");
        }
        previous = l;
    }
    const std::size_t count = lambdas.size();
    const std::size_t first = count / 2;  // tail half: k = first+1 .. count
    DensityEstimate est;
    est.terms = static_cast<int>(count);
    est.value = std::numeric_limits<double>::infinity();
    bool rising = true;
    double last_ratio = 0.0;
    double first_ratio = 0.0;
    for (std::size_t i = first; i < count; ++i) {
        const double k = static_cast<double>(i + 1);
        const double ratio = lambdas[i] / std::pow(k, 1.0 / rho);
        if (i == first) {
            first_ratio = ratio;
        } else if (ratio < last_ratio) {
            rising = false;
        }
        last_ratio = ratio;
        est.value = std::min(est.value, ratio);
    }
    est.diverging = rising && last_ratio > 1.1 * first_ratio;
    return est;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Unique:
            return "Unique";
        case Verdict::NotUnique:
            return "NotUnique";
        case Verdict::Indeterminate:
            return "Indeterminate";
    }
    return "Indeterminate";
}

ThresholdReport classify_sequence(std::span<const double> lambdas, double rho, double b) {
    ThresholdReport report;
    report.rho = rho;
    report.b = b;
    report.uniqueness_threshold = uniqueness_threshold(rho, b);
    report.nonuniqueness_threshold = nonuniqueness_threshold(rho, b);
    const DensityEstimate d = density_index(lambdas, rho);
    report.density = d.value;
    report.diverging = d.diverging;
    if (d.value < report.uniqueness_threshold) {
        report.verdict = Verdict::Unique;
    } else if (d.value > report.nonuniqueness_threshold) {
        report.verdict = Verdict::NotUnique;
    } else {
        report.verdict = Verdict::Indeterminate;
    }
    return report;
}

}  // namespace phaseless
