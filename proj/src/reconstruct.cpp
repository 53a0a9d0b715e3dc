#include "phaseless/reconstruct.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <random>

#include <fmt/format.h>

namespace phaseless {

namespace {

// L transforms of length L over a contiguous L x L buffer.
class BatchFft {
public:
    BatchFft(int L, int sign) : L_(L) {
        buffer_ = fftw_alloc_complex(static_cast<std::size_t>(L) * L);
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan_ = fftw_plan_many_dft(1, &L_, L_, buffer_, nullptr, 1, L_, buffer_, nullptr, 1, L_, sign,
                                   FFTW_ESTIMATE);
    }
    ~BatchFft() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan_);
        fftw_free(buffer_);
    }
    BatchFft(const BatchFft&) = delete;
    BatchFft& operator=(const BatchFft&) = delete;

    cplx* data() { return reinterpret_cast<cplx*>(buffer_); }
    void run() { fftw_execute(plan_); }

private:
    static std::mutex& planner_mutex() {
        static std::mutex m;
        return m;
    }

    int L_;
    fftw_complex* buffer_ = nullptr;
    fftw_plan plan_ = nullptr;
};

std::size_t at(int L, int x, int k) { return static_cast<std::size_t>(x) * L + k; }

}  // namespace

void validate(const TFGrid& grid) {
    if (grid.L < 4 || !(grid.dt > 0.0) || !std::isfinite(grid.dt)) {
        throw InvalidParameter("time-frequency grid needs L >= 4 and dt > 0");
    }
}

std::vector<cplx> discrete_window(const WindowModel& g, const TFGrid& grid) {
    validate(grid);
    std::vector<cplx> w(static_cast<std::size_t>(grid.L));
    for (int lag = -grid.L / 2; lag < grid.L - grid.L / 2; ++lag) {
        w[static_cast<std::size_t>((lag + grid.L) % grid.L)] = time_window_value(g, lag * grid.dt);
    }
    return w;
}

std::vector<cplx> discrete_stft(const std::vector<cplx>& f, const std::vector<cplx>& window, const TFGrid& grid) {
    validate(grid);
    const int L = grid.L;
    if (f.size() != static_cast<std::size_t>(L) || window.size() != static_cast<std::size_t>(L)) {
        throw InvalidParameter("signal and window must have L samples");
    }
    BatchFft fft(L, FFTW_FORWARD);
    cplx* buf = fft.data();
    for (int x = 0; x < L; ++x) {
        for (int j = 0; j < L; ++j) {
            buf[at(L, x, j)] = f[static_cast<std::size_t>(j)] * std::conj(window[static_cast<std::size_t>((j - x + L) % L)]);
        }
    }
    fft.run();
    std::vector<cplx> out(buf, buf + static_cast<std::size_t>(L) * L);
    for (cplx& v : out) {
        v *= grid.dt;
    }
    return out;
}

std::vector<cplx> discrete_istft(const std::vector<cplx>& coeffs, const std::vector<cplx>& window,
                                 const TFGrid& grid) {
    validate(grid);
    const int L = grid.L;
    if (coeffs.size() != static_cast<std::size_t>(L) * L || window.size() != static_cast<std::size_t>(L)) {
        throw InvalidParameter("coefficient array must be L x L and window L samples");
    }
    double window_energy = 0.0;
    for (const cplx& v : window) {
        window_energy += std::norm(v);
    }
    if (!(window_energy > 0.0)) {
        throw ZeroNorm("discrete window vanishes on the grid");
    }
    BatchFft ifft(L, FFTW_BACKWARD);
    cplx* buf = ifft.data();
    std::copy(coeffs.begin(), coeffs.end(), buf);
    ifft.run();
    std::vector<cplx> f(static_cast<std::size_t>(L));
    const double scale = 1.0 / (L * grid.dt * window_energy);
    for (int x = 0; x < L; ++x) {
        for (int j = 0; j < L; ++j) {
            f[static_cast<std::size_t>(j)] += window[static_cast<std::size_t>((j - x + L) % L)] * buf[at(L, x, j)];
        }
    }
    for (cplx& v : f) {
        v *= scale;
    }
    return f;
}

DiscreteSpectrogram discrete_spectrogram(const Signal& f, const WindowModel& g, const TFGrid& grid) {
    validate(grid);
    validate(f);
    const GridSamples s = sample(f, grid.t0(), grid.dt, grid.L);
    const auto coeffs = discrete_stft(s.values, discrete_window(g, grid), grid);
    DiscreteSpectrogram out;
    out.grid = grid;
    out.magnitudes.reserve(coeffs.size());
    for (const cplx& c : coeffs) {
        out.magnitudes.push_back(std::abs(c));
    }
    return out;
}

ReconstructionResult gs_reconstruct(const DiscreteSpectrogram& magnitudes, const WindowModel& g,
                                    const ReconstructionConfig& config) {
    const TFGrid& grid = magnitudes.grid;
    validate(grid);
    validate(g);
    if (config.iters < 1) {
        throw InvalidParameter(fmt::format("iteration count must be >= 1 (got {})", config.iters));
    }
    if (!(config.momentum >= 0.0) || !(config.momentum < 1.0)) {
        throw InvalidParameter("momentum must lie in [0, 1)");
    }
    const std::size_t count = static_cast<std::size_t>(grid.L) * grid.L;
    if (magnitudes.magnitudes.size() != count) {
        throw InvalidParameter("magnitudes must cover the full L x L grid");
    }
    for (double m : magnitudes.magnitudes) {
        if (!(m >= 0.0) || !std::isfinite(m)) {
            throw InvalidParameter("magnitudes must be finite and nonnegative");
        }
    }
    const auto window = discrete_window(g, grid);
    const auto& M = magnitudes.magnitudes;

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<cplx> c(count);
    for (std::size_t i = 0; i < count; ++i) {
        c[i] = std::polar(M[i], phase(rng));
    }
    auto project_magnitude = [&](std::vector<cplx>& v) {
        for (std::size_t i = 0; i < count; ++i) {
            const double mag = std::abs(v[i]);
            v[i] = mag > 0.0 ? v[i] * (M[i] / mag) : cplx{M[i], 0.0};
        }
    };
    auto project_consistent = [&](const std::vector<cplx>& v) {
        return discrete_stft(discrete_istft(v, window, grid), window, grid);
    };

    project_magnitude(c);
    std::vector<cplx> t_prev = project_consistent(c);
    c = t_prev;
    for (int it = 1; it < config.iters; ++it) {
        project_magnitude(c);
        std::vector<cplx> t = project_consistent(c);
        for (std::size_t i = 0; i < count; ++i) {
            c[i] = t[i] + config.momentum * (t[i] - t_prev[i]);
        }
        t_prev = std::move(t);
    }

    GridSamples samples;
    samples.t0 = grid.t0();
    samples.dt = grid.dt;
    samples.values = discrete_istft(t_prev, window, grid);

    ReconstructionResult result;
    result.iters = config.iters;
    const auto check = discrete_stft(samples.values, window, grid);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        num += std::pow(std::abs(check[i]) - M[i], 2);
        den += M[i] * M[i];
    }
    result.consistency = den > 0.0 ? std::sqrt(num / den) : 0.0;
    result.estimate = Signal{std::move(samples), std::nullopt};
    return result;
}

}  // namespace phaseless
