#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phaseless/errors.hpp"
#include "phaseless/quadrature.hpp"
#include "phaseless/windows.hpp"

namespace phaseless {

// ---------------------------------------------------------------------------
// Moments and Taylor coefficients
// ---------------------------------------------------------------------------

/// log of  int |xi|^n e^{-a|xi|^m} dxi = 2 Gamma((n+1)/m) / (m a^{(n+1)/m}).
double log_moment_integral(int n, double a, double m);

/// The moment itself; throws OverflowError when it does not fit in a double.
double moment_integral(int n, double a, double m);

struct TaylorSeries {
    std::vector<cplx> coefficients;  ///< c_0 .. c_N
    std::string source;

    int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// c_n = (2 pi i)^n / n! * int xi^n ghat(xi) dxi  for n = 0..N over [-R, R] with
/// R = quad.radius (required). Odd coefficients are exactly zero when ghat is even
/// on the quadrature nodes. Throws QuadratureError when node doubling fails or
/// when |xi^n ghat| at +-R is not negligible against the integral's L1 mass.
TaylorSeries taylor_coefficients(const FourierFn& ghat, int N, const QuadratureConfig& quad);

/// Same for a window model; the truncation radius is sized per n from the
/// envelope |xi|^n C e^{-a|xi|^m} unless quad.radius is set.
TaylorSeries taylor_coefficients(const WindowModel& w, int N, const QuadratureConfig& quad = {});

// ---------------------------------------------------------------------------
// Order and type
// ---------------------------------------------------------------------------

struct GrowthEstimate {
    double order = 0.0;
    double type = 0.0;
    std::vector<std::pair<double, double>> max_modulus_samples;  ///< (r, M_f(r)) when sampled
    std::vector<int> n_used;  ///< indices entering the tail fit; empty for analytic predictions
    double raw_tail_max = 0.0;  ///< plain max of the limsup ratio over the tail window
};

/// Order from the coefficient tail on [N/2, N] (nonzero coefficients only).
///
/// The limsup of n log n / log(1/|c_n|) converges like 1/log n, so the plain
/// tail maximum is kept only as `raw_tail_max`. The estimate fits
///     log(1/|c_n|) = A n log n + B n + C log n + D
/// by least squares on the tail and returns 1/A, which absorbs the Stirling
/// corrections of factorial and Gamma-type coefficients.
///
/// A series with no nonzero coefficient in the tail is a polynomial and
/// returns order 0. Otherwise fewer than 10 nonzero coefficients (or fewer
/// than 5 in the tail) throw InsufficientData.
GrowthEstimate estimate_order(const TaylorSeries& series);

/// Type with respect to `rho` from the tail:  y_n = log n + (rho/n) log|c_n|
/// is fitted as  L + alpha log(n)/n + beta/n  and  tau = e^L / (e rho).
/// Polynomials have type 0. Same data requirements as estimate_order.
GrowthEstimate estimate_type(const TaylorSeries& series, double rho);

/// rho = m/(m-1),  tau = ((m-1)/m) (2 pi)^{m/(m-1)} (a m)^{-1/(m-1)}.
GrowthEstimate predicted_growth(double m, double a);

inline constexpr int kDefaultTaylorTerms = 80;

// ---------------------------------------------------------------------------
// Jensen's formula and zero counting
// ---------------------------------------------------------------------------

using ComplexFn = std::function<cplx(cplx)>;

/// (1/2pi) int_0^{2pi} log|f(r e^{i theta})| d theta by the periodic trapezoid rule.
/// Throws ZeroAtOrigin when |f(0)| <= 1e-14; warns when a sample falls below 1e-300.
double jensen_integral(const ComplexFn& f, double r, int n_theta = 1024, Warnings* warnings = nullptr);

/// floor((log C + b (s r)^rho) / log s): bound on the zeros in |z| <= r of an
/// entire f with |f(z)| <= C e^{b|z|^rho}.
long zero_count_bound(double r, double s, double c_bound, double b, double rho);

// ---------------------------------------------------------------------------
// Canonical products
// ---------------------------------------------------------------------------

/// G(u; p) = (1 - u) exp(u + u^2/2 + ... + u^p/p).
cplx weierstrass_factor(cplx u, int p);
/// log G(u; p) on the principal branch of log(1 - u).
cplx weierstrass_log(cplx u, int p);

/// Zeros continuing as  omega_k = scale * k^exponent  past the retained ones.
struct PowerTail {
    double scale = 1.0;
    double exponent = 1.0;

    double at(long k) const;
};

/// V(w) = w^{m0} prod_{k<=K} G(w/omega_k; p)  [times the analytic tail factor].
struct CanonicalProduct {
    std::vector<double> zeros;  ///< omega_1 < omega_2 < ... < omega_K, all positive
    int genus = 0;
    int origin_multiplicity = 0;
    std::optional<double> density;  ///< Delta_V when the zeros follow a power law
    std::optional<PowerTail> tail;  ///< adds  prod_{k>K} G(w/omega_k; p)  in closed form

    long truncation() const { return static_cast<long>(zeros.size()); }
};

void validate(const CanonicalProduct& cp);

/// Largest |w| at which the analytic tail series is evaluated: |w| <= omega_{K+1}/2.
double tail_validity_radius(const CanonicalProduct& cp);

/// Log of the tail factor prod_{k>K} G(w/omega_k; p) via Hurwitz zeta sums:
///   -sum_{j>p} (w^j / j) scale^{-j} zeta(exponent*j, K+1).
cplx canonical_tail_log(const CanonicalProduct& cp, cplx w);

/// Complex log of V(w) (imaginary part modulo 2 pi). Real part is -inf at a retained zero.
cplx canonical_product_log(const CanonicalProduct& cp, cplx w);

/// V(w); exactly 0 at retained zeros (and at 0 when m0 > 0). Throws OverflowError
/// when log|V| exceeds the double range and InvalidParameter beyond the tail radius.
cplx canonical_product_eval(const CanonicalProduct& cp, cplx w);

/// Smallest K with  sum_{k>K} (r/omega_k)^{p+1} < tol  for power-law zeros, the
/// tail sum being evaluated exactly through the Hurwitz zeta function.
long truncation_for_tail_bound(const PowerTail& zeros, int genus, double r, double tol = 1e-8);

/// Smallest K with omega_{K+1} >= 4 r, where the analytic tail series converges fast.
long truncation_for_tail_series(const PowerTail& zeros, double r);

/// lambda_k = coefficient * k^exponent.
struct PowerSequence {
    double coefficient = 1.0;
    double exponent = 0.5;

    double at(long k) const;
    std::vector<double> terms(long count) const;
};

/// Canonical product for F(z) = V(z^2): omega_k = lambda_k^2, genus floor(rho/2), m0 = 0.
/// With K <= 0 the truncation is chosen by truncation_for_tail_series at r_max^2.
CanonicalProduct make_counterexample_product(const PowerSequence& lambda, double rho, long K = 0,
                                             double r_max = 16.0);
/// Plain truncated product from an explicit increasing list (no tail model).
CanonicalProduct make_counterexample_product(std::span<const double> lambdas, double rho);

/// F(z) = V(z^2).
cplx counterexample_eval(const CanonicalProduct& cp, cplx z);
cplx counterexample_log(const CanonicalProduct& cp, cplx z);

/// Convenience form: builds the product for lambda and evaluates F(z).
cplx counterexample_eval(const PowerSequence& lambda, double rho, cplx z, long K = 0);

struct CounterexampleGrowth {
    std::vector<double> radii;
    std::vector<double> log_max_modulus;  ///< log max_theta |F(r e^{i theta})|
    std::vector<double> argmax_theta;
    double coefficient = 0.0;  ///< least-squares slope of log M against r^rho
    double intercept = 0.0;
};

/// Samples log M_F(r) on the given radii (theta in [0, pi/2] suffices by the
/// symmetries of V(z^2) with real zeros) and fits log M = intercept + coefficient r^rho.
CounterexampleGrowth counterexample_growth(const CanonicalProduct& cp, double rho, std::span<const double> radii,
                                           int n_theta = 2048);

// ---------------------------------------------------------------------------
// Strip growth
// ---------------------------------------------------------------------------

struct StripGrowthFit {
    double a_fit = 0.0;
    double b_fit = 0.0;
    double C_fit = 1.0;
    double rho = 2.0;
    double residual = 0.0;  ///< RMS misfit of the least-squares log model
};

/// Least squares of log|f(x+iy)| against  log C - a|x|^rho + b|y|^rho  on the grid,
/// then C raised so the bound holds at every grid point. Points where f vanishes
/// are skipped; FitDegenerate when that is more than half the grid.
StripGrowthFit strip_growth_fit(const ComplexFn& f, double rho, std::span<const double> x_grid,
                                std::span<const double> y_grid);

}  // namespace phaseless
