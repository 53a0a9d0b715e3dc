#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "phaseless/errors.hpp"
#include "phaseless/quadrature.hpp"

namespace phaseless {

enum class WindowFamily { GeneralizedGaussianFourier, ModulatedGeneralizedGaussian };

/// Window specified on the Fourier side by  ghat(xi) = C exp(-a |xi - xi0|^m),
/// with xi0 = 0 unless modulated. Decay parameters always describe the
/// unmodulated envelope. Construct through the factories, which validate.
struct WindowModel {
    WindowFamily family = WindowFamily::GeneralizedGaussianFourier;
    double a = 1.0;  ///< decay rate
    double m = 2.0;  ///< decay exponent, > 1
    double C = 1.0;  ///< amplitude
    std::optional<double> modulation;

    double center() const { return modulation.value_or(0.0); }
    /// ghat is entire (m == 2), so time-domain values have a closed form and
    /// Fourier integrals may be moved off the real axis.
    bool gaussian() const { return m == 2.0; }
};

/// Throws InvalidParameter unless m > 1, a > 0, C > 0 (all finite).
void validate(const WindowModel& w);

/// a <= 1 is accepted but noted in `warnings`.
WindowModel make_generalized_gaussian(double a, double m, double C, Warnings* warnings = nullptr);
WindowModel make_modulated_generalized_gaussian(double a, double m, double C, double xi0,
                                                Warnings* warnings = nullptr);

using FourierFn = std::function<cplx(double)>;

cplx fourier_window_eval(const WindowModel& w, double xi);
FourierFn fourier_evaluator(const WindowModel& w);

/// Truncated quadrature of  int ghat(xi) e^{2 pi i xi t} dxi.  For real t this is
/// the window g(t); for complex t its entire extension. Gaussian-class windows
/// integrate along the horizontal line through the saddle point, which keeps
/// the result accurate where g is exponentially small.
cplx time_window_eval(const WindowModel& w, cplx t, const QuadratureConfig& quad = {});

/// g(t) = C sqrt(pi/a) exp(-pi^2 t^2 / a) e^{2 pi i xi0 t};  m == 2 only.
cplx time_window_closed_form(const WindowModel& w, cplx t);

/// g(t) by closed form when available, otherwise by quadrature.
cplx time_window_value(const WindowModel& w, cplx t, const QuadratureConfig& quad = {});

/// Half-width beyond which |g(t)| < 1e-20 |g|_max; +inf when g has no closed form
/// (non-Gaussian classes have algebraic time-domain tails).
double time_window_radius(const WindowModel& w);

/// ||g||_2^2 = ||ghat||_2^2 = C^2 * 2 Gamma(1/m) / (m (2a)^{1/m}).
double window_energy(const WindowModel& w);

struct DecayReport {
    bool passes = false;
    double worst_ratio = 0.0;  ///< max over the grid of |ghat| e^{a|xi|^m} / C
    double worst_location = 0.0;
};

inline constexpr double kDefaultDecayTol = 1e-12;

/// Checks |ghat(xi)| <= C e^{-a|xi|^m} (1 + tol) on `grid`. Ratios tied to 1e-12 are
/// resolved by the larger absolute excess |ghat| - envelope, then by grid order.
DecayReport verify_decay(const FourierFn& ghat, double a, double m, double C, std::span<const double> grid,
                         double tol = kDefaultDecayTol);

/// 1001 uniform points on [-5, 5].
std::vector<double> default_scan_grid();
std::vector<double> uniform_grid(double lo, double hi, int count);

struct AmbiguityScanReport {
    double omega = 0.0;
    std::vector<double> grid;
    std::vector<double> magnitudes;
    double min_magnitude = 0.0;
    double near_zero_fraction = 0.0;
};

/// Magnitudes at or below this fraction of the scan maximum count as near-zero.
inline constexpr double kNearZeroFraction = 1e-10;

/// |F(R(g_omega))(xi)| = | int e^{2 pi i omega eta} ghat(-eta) conj(ghat(xi - eta)) d eta |.
AmbiguityScanReport window_ambiguity_scan(const WindowModel& w, double omega, std::span<const double> xi_grid,
                                          const QuadratureConfig& quad = {});

/// Same scan for an arbitrary Fourier-side evaluator; `quad.radius` must be set
/// and bounds the effective support of ghat.
AmbiguityScanReport ambiguity_scan(const FourierFn& ghat, double omega, std::span<const double> xi_grid,
                                   const QuadratureConfig& quad);

}  // namespace phaseless
