#include "phaseless/entire.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace phaseless {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogMax = std::log(std::numeric_limits<double>::max());

// q^s * zeta(s, q) by Euler-Maclaurin; every term is a ratio (q/(q+k))^s, so
// nothing underflows for large s or q.
double scaled_hurwitz_zeta(double s, double q) {
    static constexpr double kBernoulli[] = {1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0, -1.0 / 30.0,
                                            5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
    const int direct = std::max(16, static_cast<int>(std::ceil(s)) + 16);
    double sum = 0.0;
    for (int k = 0; k < direct; ++k) {
        sum += std::exp(-s * std::log1p(k / q));
    }
    const double n = q + direct;
    const double ratio = std::exp(-s * std::log(n / q));  // (q/n)^s
    sum += ratio * n / (s - 1.0) + 0.5 * ratio;
    // B_{2i}/(2i)! * s (s+1) ... (s+2i-2) * n^{-(2i-1)}
    double rising = s;
    double factorial = 2.0;
    double power = 1.0 / n;
    double correction = 0.0;
    for (int i = 1; i <= 8; ++i) {
        correction += kBernoulli[i - 1] / factorial * rising * power;
        rising *= (s + 2 * i - 1) * (s + 2 * i);
        factorial *= (2.0 * i + 1.0) * (2.0 * i + 2.0);
        power /= n * n;
    }
    return sum + ratio * correction;
}

// log zeta(s, q) for s > 1, q > 0.
double log_hurwitz_zeta(double s, double q) { return std::log(scaled_hurwitz_zeta(s, q)) - s * std::log(q); }

struct TailPoints {
    std::vector<int> n;
    std::vector<double> log_abs;
    int nonzero_total = 0;
};

TailPoints tail_points(const TaylorSeries& series) {
    const int N = series.truncation();
    TailPoints tp;
    for (int k = 0; k <= N; ++k) {
        const double mag = std::abs(series.coefficients[static_cast<std::size_t>(k)]);
        if (!std::isfinite(mag)) {
            throw InvalidParameter("Taylor coefficient " + std::to_string(k) + " is not finite");
        }
        if (mag > 0.0) {
            ++tp.nonzero_total;
        }
        if (k >= std::max(2, (N + 1) / 2) && mag > 0.0) {
            tp.n.push_back(k);
            tp.log_abs.push_back(std::log(mag));
        }
    }
    return tp;
}

void require_tail_data(const TailPoints& tp) {
    if (tp.nonzero_total < 10) {
        throw InsufficientData("need at least 10 nonzero Taylor coefficients (have " +
                               std::to_string(tp.nonzero_total) + ")");
    }
    if (tp.n.size() < 5) {
        throw InsufficientData("need at least 5 nonzero coefficients in the tail window (have " +
                               std::to_string(tp.n.size()) + ")");
    }
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    return A.colPivHouseholderQr().solve(b);
}

cplx taylor_from_moment(cplx moment, int n) {
    if (moment == cplx{}) {
        return {};
    }
    const double log_mag = n * std::log(2.0 * kPi) - std::lgamma(n + 1.0) + std::log(std::abs(moment));
    if (log_mag > kLogMax) {
        throw OverflowError("Taylor coefficient " + std::to_string(n) + " overflows");
    }
    return std::polar(std::exp(log_mag), n * kPi / 2.0 + std::arg(moment));
}

void check_truncation(const FourierFn& ghat, int n, double lo, double hi, double l1, const QuadratureConfig& quad) {
    if (l1 <= 0.0) {
        return;
    }
    const double edge = std::max(std::abs(std::pow(lo, n) * ghat(lo)), std::abs(std::pow(hi, n) * ghat(hi)));
    if (edge * (hi - lo) > quad.tol * l1) {
        throw QuadratureError("moment " + std::to_string(n) + ": integrand not negligible at the truncation radius");
    }
}

}  // namespace

// ---------------------------------------------------------------------------

double log_moment_integral(int n, double a, double m) {
    if (n < 0) {
        throw InvalidParameter("moment order must be >= 0");
    }
    if (!(a > 0.0) || !(m >= 1.0) || !std::isfinite(a) || !std::isfinite(m)) {
        throw InvalidParameter("moment_integral needs a > 0 and m >= 1");
    }
    const double s = (n + 1.0) / m;
    return std::log(2.0) - std::log(m) - s * std::log(a) + std::lgamma(s);
}

double moment_integral(int n, double a, double m) {
    const double log_value = log_moment_integral(n, a, m);
    if (log_value > kLogMax) {
        throw OverflowError("moment_integral(" + std::to_string(n) + ") exceeds the double range");
    }
    return std::exp(log_value);
}

TaylorSeries taylor_coefficients(const FourierFn& ghat, int N, const QuadratureConfig& quad) {
    validate(quad);
    if (N < 2) {
        throw InvalidParameter("Taylor truncation N must be >= 2");
    }
    if (!(quad.radius > 0.0)) {
        throw InvalidParameter("taylor_coefficients of a generic evaluator needs an explicit quadrature radius");
    }
    const double R = quad.radius;
    bool even = true;
    for (int i = 1; i <= 256 && even; ++i) {
        const double xi = R * i / 256.0;
        const cplx plus = ghat(xi);
        const cplx minus = ghat(-xi);
        even = std::abs(plus - minus) <= 1e-14 * std::max(std::abs(plus), std::abs(minus));
    }
    const double kinks[] = {0.0};
    const auto segments = split_at_kinks(-R, R, kinks);
    TaylorSeries series;
    series.source = "quadrature of a Fourier-side evaluator on [-R, R], R = " + std::to_string(R);
    series.coefficients.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        if (even && n % 2 == 1) {
            series.coefficients.emplace_back();
            continue;
        }
        auto integrand = [&](double xi) { return std::pow(xi, n) * ghat(xi); };
        const auto result = integrate(integrand, segments, quad, "Taylor moment");
        check_truncation(ghat, n, -R, R, result.l1, quad);
        series.coefficients.push_back(taylor_from_moment(result.value, n));
    }
    return series;
}

TaylorSeries taylor_coefficients(const WindowModel& w, int N, const QuadratureConfig& quad) {
    validate(w);
    validate(quad);
    if (N < 2) {
        throw InvalidParameter("Taylor truncation N must be >= 2");
    }
    if (quad.radius > 0.0) {
        TaylorSeries series = taylor_coefficients(fourier_evaluator(w), N, quad);
        series.source = "window quadrature, fixed radius";
        return series;
    }
    const double xi0 = w.center();
    const bool even = xi0 == 0.0;
    const FourierFn ghat = fourier_evaluator(w);
    TaylorSeries series;
    series.source = "window quadrature, per-moment radius";
    for (int n = 0; n <= N; ++n) {
        if (even && n % 2 == 1) {
            series.coefficients.emplace_back();
            continue;
        }
        const double R = std::abs(xi0) + envelope_radius(w.a, w.m, 0.0, n);
        const double kinks[] = {0.0, xi0};
        const auto segments = split_at_kinks(xi0 - R, xi0 + R, kinks);
        auto integrand = [&](double xi) { return std::pow(xi, n) * ghat(xi); };
        const auto result = integrate(integrand, segments, quad, "Taylor moment");
        series.coefficients.push_back(taylor_from_moment(result.value, n));
    }
    return series;
}

// ---------------------------------------------------------------------------

GrowthEstimate estimate_order(const TaylorSeries& series) {
    if (series.truncation() < 2) {
        throw InvalidParameter("Taylor series needs N >= 2");
    }
    const TailPoints tp = tail_points(series);
    GrowthEstimate est;
    if (tp.n.empty()) {
        return est;  // polynomial
    }
    require_tail_data(tp);
    const auto rows = static_cast<Eigen::Index>(tp.n.size());
    Eigen::MatrixXd A(rows, 4);
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double n = tp.n[static_cast<std::size_t>(i)];
        const double inv_log = -tp.log_abs[static_cast<std::size_t>(i)];
        A(i, 0) = n * std::log(n);
        A(i, 1) = n;
        A(i, 2) = std::log(n);
        A(i, 3) = 1.0;
        b(i) = inv_log;
        if (inv_log > 0.0) {
            est.raw_tail_max = std::max(est.raw_tail_max, n * std::log(n) / inv_log);
        }
    }
    const Eigen::VectorXd coef = least_squares(A, b);
    est.order = coef(0) > 0.0 ? 1.0 / coef(0) : kInf;
    est.n_used = tp.n;
    return est;
}

GrowthEstimate estimate_type(const TaylorSeries& series, double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw InvalidParameter("estimate_type needs rho > 0");
    }
    if (series.truncation() < 2) {
        throw InvalidParameter("Taylor series needs N >= 2");
    }
    const TailPoints tp = tail_points(series);
    GrowthEstimate est;
    est.order = rho;
    if (tp.n.empty()) {
        return est;
    }
    require_tail_data(tp);
    const auto rows = static_cast<Eigen::Index>(tp.n.size());
    Eigen::MatrixXd A(rows, 3);
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double n = tp.n[static_cast<std::size_t>(i)];
        const double y = std::log(n) + rho / n * tp.log_abs[static_cast<std::size_t>(i)];
        A(i, 0) = 1.0;
        A(i, 1) = std::log(n) / n;
        A(i, 2) = 1.0 / n;
        b(i) = y;
        est.raw_tail_max = std::max(est.raw_tail_max, std::exp(y) / (std::numbers::e * rho));
    }
    const Eigen::VectorXd coef = least_squares(A, b);
    est.type = std::exp(coef(0)) / (std::numbers::e * rho);
    est.n_used = tp.n;
    return est;
}

GrowthEstimate predicted_growth(double m, double a) {
    if (!(m > 1.0) || !(a > 0.0) || !std::isfinite(m) || !std::isfinite(a)) {
        throw InvalidParameter("predicted_growth needs m > 1 and a > 0");
    }
    GrowthEstimate est;
    est.order = m / (m - 1.0);
    est.type = (m - 1.0) / m * std::pow(2.0 * kPi, m / (m - 1.0)) * std::pow(a * m, -1.0 / (m - 1.0));
    return est;
}

// ---------------------------------------------------------------------------

double jensen_integral(const ComplexFn& f, double r, int n_theta, Warnings* warnings) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw InvalidParameter("jensen_integral needs r > 0");
    }
    if (n_theta < 64) {
        throw InvalidParameter("jensen_integral needs at least 64 angles");
    }
    if (std::abs(f(cplx{})) <= 1e-14) {
        throw ZeroAtOrigin("jensen_integral: f(0) vanishes");
    }
    double sum = 0.0;
    bool singular = false;
    for (int k = 0; k < n_theta; ++k) {
        const double theta = 2.0 * kPi * k / n_theta;
        const double mag = std::abs(f(std::polar(r, theta)));
        if (mag < 1e-300) {
            singular = true;
        }
        sum += std::log(mag);
    }
    if (singular) {
        warn(warnings, "jensen_integral: |f| below 1e-300 on the circle r = " + std::to_string(r) +
                           "; a zero lies on or near the contour");
    }
    return sum / n_theta;
}

long zero_count_bound(double r, double s, double c_bound, double b, double rho) {
    if (!(r > 0.0) || !(s > 1.0) || !(c_bound > 0.0) || !(b >= 0.0) || !(rho > 0.0)) {
        throw InvalidParameter("zero_count_bound needs r > 0, s > 1, C > 0, b >= 0, rho > 0");
    }
    const double bound = (std::log(c_bound) + b * std::pow(s * r, rho)) / std::log(s);
    return std::max(0L, static_cast<long>(std::floor(bound)));
}

// ---------------------------------------------------------------------------

cplx weierstrass_factor(cplx u, int p) {
    if (p < 0) {
        throw InvalidParameter("genus must be >= 0");
    }
    cplx exponent{};
    cplx power{1.0, 0.0};
    for (int j = 1; j <= p; ++j) {
        power *= u;
        exponent += power / static_cast<double>(j);
    }
    return (1.0 - u) * std::exp(exponent);
}

cplx weierstrass_log(cplx u, int p) {
    if (p < 0) {
        throw InvalidParameter("genus must be >= 0");
    }
    if (std::abs(u) < 0.25) {
        // -sum_{j>p} u^j / j
        cplx power = std::pow(u, p + 1);
        cplx sum{};
        for (int j = p + 1; j < p + 200; ++j) {
            const cplx term = power / static_cast<double>(j);
            sum -= term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) {
                break;
            }
            power *= u;
        }
        return sum;
    }
    cplx sum = std::log(1.0 - u);
    cplx power{1.0, 0.0};
    for (int j = 1; j <= p; ++j) {
        power *= u;
        sum += power / static_cast<double>(j);
    }
    return sum;
}

double PowerTail::at(long k) const { return scale * std::pow(static_cast<double>(k), exponent); }

double PowerSequence::at(long k) const { return coefficient * std::pow(static_cast<double>(k), exponent); }

std::vector<double> PowerSequence::terms(long count) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(0L, count)));
    for (long k = 1; k <= count; ++k) {
        out.push_back(at(k));
    }
    return out;
}

void validate(const CanonicalProduct& cp) {
    if (cp.zeros.empty()) {
        throw InvalidParameter("canonical product needs at least one zero (K >= 1)");
    }
    if (cp.genus < 0 || cp.origin_multiplicity < 0) {
        throw InvalidParameter("genus and origin multiplicity must be >= 0");
    }
    double previous = 0.0;
    for (double z : cp.zeros) {
        if (!(z > previous) || !std::isfinite(z)) {
            throw InvalidParameter("canonical product zeros must be positive, finite and strictly increasing");
        }
        previous = z;
    }
    if (cp.tail) {
        if (!(cp.tail->scale > 0.0) || !(cp.tail->exponent > 0.0)) {
            throw InvalidParameter("power tail needs positive scale and exponent");
        }
        if (!(cp.tail->exponent * (cp.genus + 1) > 1.0)) {
            throw InvalidParameter("power tail does not converge for this genus");
        }
        if (!(cp.tail->at(cp.truncation() + 1) > cp.zeros.back())) {
            throw InvalidParameter("power tail must continue the zeros increasingly");
        }
    }
}

double tail_validity_radius(const CanonicalProduct& cp) {
    if (!cp.tail) {
        return kInf;
    }
    return 0.5 * cp.tail->at(cp.truncation() + 1);
}

cplx canonical_tail_log(const CanonicalProduct& cp, cplx w) {
    if (!cp.tail) {
        return {};
    }
    const double radius = tail_validity_radius(cp);
    if (std::abs(w) > radius) {
        throw InvalidParameter("|w| = " + std::to_string(std::abs(w)) + " beyond the tail validity radius " +
                               std::to_string(radius));
    }
    const double q = static_cast<double>(cp.truncation()) + 1.0;
    const cplx u = w / cp.tail->at(cp.truncation() + 1);  // w / omega_{K+1}
    cplx power = std::pow(u, cp.genus + 1);
    cplx sum{};
    for (int j = cp.genus + 1; j < cp.genus + 400; ++j) {
        const cplx term = power * (scaled_hurwitz_zeta(cp.tail->exponent * j, q) / j);
        sum -= term;
        if (std::abs(term) <= 1e-18 * std::max(std::abs(sum), 1e-300)) {
            break;
        }
        power *= u;
    }
    return sum;
}

cplx canonical_product_log(const CanonicalProduct& cp, cplx w) {
    if (w == cplx{}) {
        return cp.origin_multiplicity > 0 ? cplx{-kInf, 0.0} : cplx{};
    }
    if (w.imag() == 0.0 && w.real() > 0.0 && std::binary_search(cp.zeros.begin(), cp.zeros.end(), w.real())) {
        return {-kInf, 0.0};
    }
    cplx sum = static_cast<double>(cp.origin_multiplicity) * std::log(w);
    for (double omega : cp.zeros) {
        sum += weierstrass_log(w / omega, cp.genus);
    }
    return sum + canonical_tail_log(cp, w);
}

cplx canonical_product_eval(const CanonicalProduct& cp, cplx w) {
    const cplx log_value = canonical_product_log(cp, w);
    if (log_value.real() == -kInf) {
        return {};
    }
    if (log_value.real() > kLogMax) {
        throw OverflowError("canonical product magnitude e^" + std::to_string(log_value.real()) +
                            " exceeds the double range");
    }
    return std::exp(log_value);
}

long truncation_for_tail_bound(const PowerTail& zeros, int genus, double r, double tol) {
    if (!(r > 0.0) || !(tol > 0.0) || genus < 0) {
        throw InvalidParameter("truncation_for_tail_bound needs r > 0, tol > 0, genus >= 0");
    }
    const double s = zeros.exponent * (genus + 1);
    if (!(s > 1.0)) {
        throw InvalidParameter("tail sum diverges for this genus");
    }
    const double log_scale = (genus + 1) * std::log(r / zeros.scale);
    auto log_tail = [&](double K) { return log_scale + log_hurwitz_zeta(s, K + 1.0); };
    const double log_tol = std::log(tol);
    constexpr double kCap = 1e18;
    double hi = 1.0;
    while (log_tail(hi) >= log_tol) {
        hi *= 2.0;
        if (hi > kCap) {
            return static_cast<long>(kCap);
        }
    }
    double lo = std::max(1.0, std::floor(hi / 2.0));
    if (log_tail(lo) < log_tol) {
        return static_cast<long>(lo);
    }
    while (hi - lo > 1.0) {
        const double mid = std::floor(0.5 * (lo + hi));
        (log_tail(mid) < log_tol ? hi : lo) = mid;
    }
    return static_cast<long>(hi);
}

long truncation_for_tail_series(const PowerTail& zeros, double r) {
    if (!(r > 0.0)) {
        throw InvalidParameter("truncation_for_tail_series needs r > 0");
    }
    const double k_next = std::ceil(std::pow(4.0 * r / zeros.scale, 1.0 / zeros.exponent));
    long K = std::max(1L, static_cast<long>(k_next) - 1);
    while (zeros.at(K + 1) < 4.0 * r) {
        ++K;
    }
    return K;
}

CanonicalProduct make_counterexample_product(const PowerSequence& lambda, double rho, long K, double r_max) {
    if (!(rho > 1.0) || !std::isfinite(rho)) {
        throw InvalidParameter("counterexample needs rho > 1");
    }
    if (!(lambda.coefficient > 0.0) || !(lambda.exponent > 0.0)) {
        throw InvalidParameter("sequence c k^p needs c > 0 and p > 0");
    }
    CanonicalProduct cp;
    cp.genus = static_cast<int>(std::floor(rho / 2.0));
    cp.tail = PowerTail{lambda.coefficient * lambda.coefficient, 2.0 * lambda.exponent};
    if (K <= 0) {
        if (!(r_max > 0.0)) {
            throw InvalidParameter("r_max must be positive");
        }
        K = truncation_for_tail_series(*cp.tail, r_max * r_max);
    }
    cp.zeros.reserve(static_cast<std::size_t>(K));
    for (long k = 1; k <= K; ++k) {
        const double l = lambda.at(k);
        cp.zeros.push_back(l * l);
    }
    if (std::abs(lambda.exponent * rho - 1.0) < 1e-12) {
        cp.density = std::pow(lambda.coefficient, -rho);
    }
    validate(cp);
    return cp;
}

CanonicalProduct make_counterexample_product(std::span<const double> lambdas, double rho) {
    if (!(rho > 1.0) || !std::isfinite(rho)) {
        throw InvalidParameter("counterexample needs rho > 1");
    }
    CanonicalProduct cp;
    cp.genus = static_cast<int>(std::floor(rho / 2.0));
    cp.zeros.reserve(lambdas.size());
    for (double l : lambdas) {
        cp.zeros.push_back(l * l);
    }
    validate(cp);
    return cp;
}

cplx counterexample_log(const CanonicalProduct& cp, cplx z) { return canonical_product_log(cp, z * z); }

cplx counterexample_eval(const CanonicalProduct& cp, cplx z) { return canonical_product_eval(cp, z * z); }

cplx counterexample_eval(const PowerSequence& lambda, double rho, cplx z, long K) {
    const double r = std::max(1.0, std::abs(z));
    return counterexample_eval(make_counterexample_product(lambda, rho, K, r), z);
}

CounterexampleGrowth counterexample_growth(const CanonicalProduct& cp, double rho, std::span<const double> radii,
                                           int n_theta) {
    validate(cp);
    if (radii.empty()) {
        throw InvalidParameter("counterexample_growth needs at least one radius");
    }
    if (n_theta < 16) {
        throw InvalidParameter("counterexample_growth needs at least 16 angles");
    }
    CounterexampleGrowth out;
    for (double r : radii) {
        if (!(r > 0.0)) {
            throw InvalidParameter("radii must be positive");
        }
        auto log_mod = [&](double theta) { return counterexample_log(cp, std::polar(r, theta)).real(); };
        const double step = (kPi / 2.0) / (n_theta - 1);
        int best = 0;
        double best_value = -kInf;
        for (int i = 0; i < n_theta; ++i) {
            const double v = log_mod(i * step);
            if (v > best_value) {
                best_value = v;
                best = i;
            }
        }
        // Golden-section refinement inside the bracketing cells.
        double lo = std::max(0.0, (best - 1) * step);
        double hi = std::min(kPi / 2.0, (best + 1) * step);
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - g * (hi - lo);
        double x2 = lo + g * (hi - lo);
        double f1 = log_mod(x1);
        double f2 = log_mod(x2);
        for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = log_mod(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = log_mod(x1);
            }
        }
        const double refined = std::max(f1, f2);
        double theta = best * step;
        if (refined > best_value) {
            best_value = refined;
            theta = f1 > f2 ? x1 : x2;
        }
        out.radii.push_back(r);
        out.log_max_modulus.push_back(best_value);
        out.argmax_theta.push_back(theta);
    }
    if (out.radii.size() == 1) {
        out.coefficient = out.log_max_modulus[0] / std::pow(out.radii[0], rho);
        return out;
    }
    const auto rows = static_cast<Eigen::Index>(out.radii.size());
    Eigen::MatrixXd A(rows, 2);
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = std::pow(out.radii[static_cast<std::size_t>(i)], rho);
        b(i) = out.log_max_modulus[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd coef = least_squares(A, b);
    out.intercept = coef(0);
    out.coefficient = coef(1);
    return out;
}

// ---------------------------------------------------------------------------

StripGrowthFit strip_growth_fit(const ComplexFn& f, double rho, std::span<const double> x_grid,
                                std::span<const double> y_grid) {
    if (x_grid.empty() || y_grid.empty()) {
        throw InvalidParameter("strip_growth_fit needs nonempty grids");
    }
    if (!(rho > 0.0)) {
        throw InvalidParameter("strip_growth_fit needs rho > 0");
    }
    std::vector<std::array<double, 3>> rows;
    std::vector<double> values;
    const std::size_t total = x_grid.size() * y_grid.size();
    for (double x : x_grid) {
        for (double y : y_grid) {
            const double mag = std::abs(f(cplx{x, y}));
            if (!(mag > 0.0) || !std::isfinite(mag)) {
                continue;
            }
            rows.push_back({1.0, -std::pow(std::abs(x), rho), std::pow(std::abs(y), rho)});
            values.push_back(std::log(mag));
        }
    }
    if (2 * rows.size() < total) {
        throw FitDegenerate("strip_growth_fit: f vanishes on more than half of the grid");
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (int j = 0; j < 3; ++j) {
            A(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        b(i) = values[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd coef = least_squares(A, b);
    const Eigen::VectorXd resid = b - A * coef;
    StripGrowthFit fit;
    fit.rho = rho;
    fit.a_fit = coef(1);
    fit.b_fit = coef(2);
    fit.C_fit = std::exp(coef(0) + std::max(0.0, resid.maxCoeff()));
    fit.residual = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
    return fit;
}

}  // namespace phaseless
