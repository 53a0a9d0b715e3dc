#include "phaseless/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace phaseless {

namespace detail {

namespace {

GaussRule make_rule() {
    GaussRule rule{};
    constexpr int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre_16() {
    static const GaussRule rule = make_rule();
    return rule;
}

}  // namespace detail

void validate(const QuadratureConfig& quad) {
    if (quad.nodes < 64) {
        throw InvalidParameter("quadrature nodes must be >= 64");
    }
    if (!(quad.radius >= 0.0) || !std::isfinite(quad.radius)) {
        throw InvalidParameter("quadrature radius must be finite and >= 0");
    }
    if (!(quad.tol > 0.0)) {
        throw InvalidParameter("quadrature tolerance must be positive");
    }
}

std::vector<Segment> split_at_kinks(double lo, double hi, std::span<const double> kinks) {
    std::vector<double> cuts;
    for (double k : kinks) {
        if (k > lo && k < hi) {
            cuts.push_back(k);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Segment> segments;
    double start = lo;
    bool graded_start = std::find(kinks.begin(), kinks.end(), lo) != kinks.end();
    for (double c : cuts) {
        segments.push_back({start, c, graded_start, true});
        start = c;
        graded_start = true;
    }
    const bool graded_end = std::find(kinks.begin(), kinks.end(), hi) != kinks.end();
    segments.push_back({start, hi, graded_start, graded_end});
    return segments;
}

double envelope_radius(double a, double m, double beta, double n, double drop) {
    auto phi = [&](double r) { return -a * std::pow(r, m) + beta * r + (n > 0.0 ? n * std::log(r) : 0.0); };
    auto dphi = [&](double r) { return -a * m * std::pow(r, m - 1.0) + beta + (n > 0.0 ? n / r : 0.0); };

    // The derivative is decreasing on (0, inf); bracket its root.
    double peak = 0.0;
    if (beta > 0.0 || n > 0.0) {
        double lo = 0.0;
        double hi = 1.0;
        while (dphi(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
        }
        for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (dphi(mid) > 0.0 ? lo : hi) = mid;
        }
        peak = 0.5 * (lo + hi);
    }
    const double target = phi(peak > 0.0 ? peak : 0.0) - drop;
    double lo = peak;
    double hi = std::max(1.0, 2.0 * peak);
    while (phi(hi) > target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (phi(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace phaseless
