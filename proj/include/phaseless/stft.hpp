#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phaseless/errors.hpp"
#include "phaseless/quadrature.hpp"
#include "phaseless/sampling.hpp"
#include "phaseless/signal.hpp"
#include "phaseless/windows.hpp"

namespace phaseless {

/// V_g f(x, omega) = int f(t) conj(g(t - x)) e^{-2 pi i omega t} dt.
///
/// Gaussian-class windows integrate in time over supp f intersected with
/// [x - R_g, x + R_g]. Other windows integrate on the Fourier side,
///     int fhat(xi) conj(ghat(xi - omega)) e^{2 pi i (xi - omega) x} dxi,
/// for closed-form f, and fall back to time_window_eval per node for grids.
/// Grid signals always use the trapezoid rule on their own samples.
cplx stft_eval(const Signal& f, const WindowModel& g, double x, double omega, const QuadratureConfig& quad = {});

/// Fourier-side formula above for any window class; closed-form f only.
cplx stft_eval_fourier(const Signal& f, const WindowModel& g, double x, double omega,
                       const QuadratureConfig& quad = {});

struct SpectrogramSamples {
    std::vector<std::pair<double, double>> points;  ///< (x, omega)
    std::vector<double> magnitudes;
    std::string quad_config_id;
};

std::string quad_config_id(const QuadratureConfig& quad);

/// |V_g f| at every point of Lambda, in the set's order. QuadratureError
/// messages name the offending point index.
SpectrogramSamples spectrogram_on_set(const Signal& f, const WindowModel& g, const SamplingSet& lambda,
                                      const QuadratureConfig& quad = {});

struct PhaseAlignment {
    double alpha = 0.0;     ///< arg <f, h> in [0, 2 pi)
    double residual = 0.0;  ///< ||f - e^{i alpha} h|| / ||f||
};

/// Throws ZeroNorm when f or h vanishes.
PhaseAlignment global_phase_residual(const Signal& f, const Signal& h, const QuadratureConfig& quad = {});

enum class DiscriminationVerdict { EquivalentUpToPhase, Distinct, Inconsistent };

std::string to_string(DiscriminationVerdict v);

struct DiscriminationReport {
    double max_spectrogram_deviation = 0.0;
    double max_magnitude = 0.0;
    bool spectrograms_match = false;
    double alpha = 0.0;
    double aligned_residual = 0.0;
    DiscriminationVerdict verdict = DiscriminationVerdict::Inconsistent;
};

struct DiscriminationConfig {
    double tol = 1e-6;        ///< match iff max deviation < tol * max magnitude
    double phase_tol = 1e-6;  ///< aligned residual below this counts as equal up to phase
    QuadratureConfig quad;
};

/// EquivalentUpToPhase: spectrograms match and the aligned residual is below
/// phase_tol. Distinct: they differ and the residual is at least phase_tol.
/// Inconsistent: any other combination.
DiscriminationReport discriminate(const Signal& f, const Signal& h, const WindowModel& g, const SamplingSet& lambda,
                                  const DiscriminationConfig& config = {});

/// Rectangular time-frequency grid, endpoints included.
struct TFRect {
    double x_lo = -4.0;
    double x_hi = 4.0;
    double omega_lo = -4.0;
    double omega_hi = 4.0;
    double step = 1.0 / 16.0;
};

/// |sum |V_g f|^2 dx domega - ||f||^2 ||g||^2| / (||f||^2 ||g||^2); 0 for f = 0.
double moyal_energy_check(const Signal& f, const WindowModel& g, const TFRect& grid = {},
                          const QuadratureConfig& quad = {});

/// int conj(g(t - conj(z))) e^{2 pi i z' t} f(t) dt with g continued to complex
/// arguments; extend_stft(f, g, x, -omega) = stft_eval(f, g, x, omega).
/// The range is found by scanning the integrand; a warning is issued when it
/// is still significant at the edge of the scan.
cplx extend_stft(const Signal& f, const WindowModel& g, cplx z, cplx zprime, const QuadratureConfig& quad = {},
                 Warnings* warnings = nullptr);

}  // namespace phaseless
