#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "phaseless/errors.hpp"

namespace phaseless {

using cplx = std::complex<double>;

/// Settings shared by every quadrature in the library.
///
/// Integrals are composite 16-point Gauss-Legendre over uniform panels, with
/// geometric grading toward interior kinks (points where |xi|^m is not smooth).
/// With `check` set, the rule is re-run at twice the node count and the two
/// results must agree to `tol` relative to the integrand's L1 mass.
struct QuadratureConfig {
    double radius = 0.0;  ///< truncation half-width; 0 selects it from the decay envelope
    int nodes = 1024;     ///< Gauss-Legendre nodes on the uniform panels, >= 64
    double tol = 1e-10;
    bool check = true;
};

void validate(const QuadratureConfig& quad);

/// One integration interval. Graded ends receive a geometric cascade of panels.
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    bool graded_lo = false;
    bool graded_hi = false;
};

struct QuadratureResult {
    cplx value{};
    double l1 = 0.0;      ///< integral of |f| with the same rule
    double change = 0.0;  ///< |I(2n) - I(n)|, zero when unchecked
};

/// Splits [lo, hi] at the given kinks (those strictly inside), grading toward each kink.
std::vector<Segment> split_at_kinks(double lo, double hi, std::span<const double> kinks);

namespace detail {

inline constexpr int kGaussOrder = 16;
inline constexpr int kGradingLevels = 20;

struct GaussRule {
    double nodes[kGaussOrder];
    double weights[kGaussOrder];
};

const GaussRule& gauss_legendre_16();

template <class F>
void accumulate_panel(F& f, double lo, double hi, cplx& sum, double& l1) {
    const GaussRule& rule = gauss_legendre_16();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (int i = 0; i < kGaussOrder; ++i) {
        const cplx v = f(mid + half * rule.nodes[i]);
        sum += (half * rule.weights[i]) * v;
        l1 += half * rule.weights[i] * std::abs(v);
    }
}

}  // namespace detail

/// Fixed composite rule with `nodes` Gauss-Legendre points on the uniform panels.
template <class F>
QuadratureResult integrate_fixed(F&& f, std::span<const Segment> segments, int nodes) {
    double total = 0.0;
    for (const auto& s : segments) {
        total += s.hi - s.lo;
    }
    QuadratureResult out;
    if (total <= 0.0) {
        return out;
    }
    const int panels = std::max(1, nodes / detail::kGaussOrder);
    for (const auto& s : segments) {
        const double len = s.hi - s.lo;
        if (len <= 0.0) {
            continue;
        }
        const int min_panels = (s.graded_lo && s.graded_hi) ? 2 : 1;
        const int k = std::max(min_panels, static_cast<int>(std::lround(panels * len / total)));
        const double h = len / k;
        for (int p = 0; p < k; ++p) {
            double lo = s.lo + p * h;
            double hi = (p + 1 == k) ? s.hi : s.lo + (p + 1) * h;
            if (p == 0 && s.graded_lo) {
                double inner = h;
                for (int g = 0; g < detail::kGradingLevels; ++g) {
                    detail::accumulate_panel(f, s.lo + 0.5 * inner, s.lo + inner, out.value, out.l1);
                    inner *= 0.5;
                }
                detail::accumulate_panel(f, s.lo, s.lo + inner, out.value, out.l1);
                continue;
            }
            if (p + 1 == k && s.graded_hi) {
                double inner = hi - lo;
                for (int g = 0; g < detail::kGradingLevels; ++g) {
                    detail::accumulate_panel(f, s.hi - inner, s.hi - 0.5 * inner, out.value, out.l1);
                    inner *= 0.5;
                }
                detail::accumulate_panel(f, s.hi - inner, s.hi, out.value, out.l1);
                continue;
            }
            detail::accumulate_panel(f, lo, hi, out.value, out.l1);
        }
    }
    return out;
}

/// Integrates with node doubling when `quad.check` is set.
/// Throws QuadratureError naming `what` when the doubled rule disagrees.
template <class F>
QuadratureResult integrate(F&& f, std::span<const Segment> segments, const QuadratureConfig& quad,
                           const char* what) {
    if (!quad.check) {
        return integrate_fixed(f, segments, quad.nodes);
    }
    const QuadratureResult coarse = integrate_fixed(f, segments, quad.nodes);
    QuadratureResult fine = integrate_fixed(f, segments, 2 * quad.nodes);
    fine.change = std::abs(fine.value - coarse.value);
    if (fine.change > quad.tol * fine.l1) {
        throw QuadratureError(std::string(what) + ": node doubling changed the result by " +
                              std::to_string(fine.change) + " (L1 mass " + std::to_string(fine.l1) + ")");
    }
    return fine;
}

/// Radius past the peak of  -a R^m + beta R + n log R  (R >= 0) where the
/// envelope has fallen `drop` nats below its maximum. Sizes truncated domains.
double envelope_radius(double a, double m, double beta, double n, double drop = 45.0);

}  // namespace phaseless
