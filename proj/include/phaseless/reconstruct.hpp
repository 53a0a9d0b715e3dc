#pragma once

#include <cstdint>
#include <vector>

#include "phaseless/errors.hpp"
#include "phaseless/signal.hpp"
#include "phaseless/windows.hpp"

namespace phaseless {

/// L time samples t_j = t0 + j dt with t0 = -L dt / 2, hop 1 and a circular
/// window, and L frequency bins omega_k = k / (L dt) (aliased to negative for k >= L/2).
struct TFGrid {
    int L = 64;
    double dt = 0.125;

    double t0() const { return -0.5 * L * dt; }
    double time(int j) const { return t0() + j * dt; }
    double freq(int k) const { return (k < (L + 1) / 2 ? k : k - L) / (L * dt); }
};

void validate(const TFGrid& grid);

/// |S[x][k]| for x, k = 0..L-1, stored row-major (x major).
struct DiscreteSpectrogram {
    TFGrid grid;
    std::vector<double> magnitudes;
};

/// Window samples g(lag dt) indexed by lag mod L, lag in [-L/2, L/2).
std::vector<cplx> discrete_window(const WindowModel& g, const TFGrid& grid);

/// S[x][k] = dt sum_j f_j conj(g[(j - x) mod L]) e^{-2 pi i j k / L}.
std::vector<cplx> discrete_stft(const std::vector<cplx>& f, const std::vector<cplx>& window, const TFGrid& grid);

/// Least-squares inverse of discrete_stft (exact on its range).
std::vector<cplx> discrete_istft(const std::vector<cplx>& coeffs, const std::vector<cplx>& window,
                                 const TFGrid& grid);

DiscreteSpectrogram discrete_spectrogram(const Signal& f, const WindowModel& g, const TFGrid& grid);

struct ReconstructionConfig {
    int iters = 500;
    std::uint64_t seed = 0;
    double momentum = 0.99;  ///< 0 gives plain Griffin-Lim alternating projections
};

struct ReconstructionResult {
    Signal estimate;
    double consistency = 0.0;  ///< || |S(estimate)| - M || / ||M||, 0 when M = 0
    int iters = 0;
};

/// Alternating projections between the magnitude set and the range of the
/// discrete STFT, with the accelerated (momentum) update, from seeded random
/// phases. Throws InvalidParameter for iters < 1.
ReconstructionResult gs_reconstruct(const DiscreteSpectrogram& magnitudes, const WindowModel& g,
                                    const ReconstructionConfig& config = {});

}  // namespace phaseless
