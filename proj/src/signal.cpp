#include "phaseless/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace phaseless {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
constexpr double kLogDrop = 46.1;  // e^{-46.1} < 1e-20

// Half-width, in units of the atom width, past which psi_k or the Gaussian
// envelope is below 1e-20 of its peak.
double envelope_halfwidth(const Atom& atom) {
    const double k = atom.kind == AtomKind::Hermite ? atom.k : 0;
    return std::sqrt((kLogDrop + 4.0 * k) / kPi) + std::sqrt((2.0 * k + 1.0) / (2.0 * kPi));
}

cplx chirp_q(const Atom& atom) { return {1.0 / (atom.width * atom.width), -atom.chirp}; }

bool same_grid(const GridSamples& a, const GridSamples& b) {
    return a.values.size() == b.values.size() && a.t0 == b.t0 && a.dt == b.dt;
}

double trapezoid_weight(const GridSamples& g, std::size_t j) {
    return (j == 0 || j + 1 == g.values.size()) ? 0.5 * g.dt : g.dt;
}

// Gauss-Legendre segment over the union of both supports, with enough panels
// to resolve the fastest oscillation present.
Segment common_segment(const Signal& f, const Signal& h) {
    const auto [flo, fhi] = support(f);
    const auto [hlo, hhi] = support(h);
    return {std::min(flo, hlo), std::max(fhi, hhi)};
}

int common_nodes(const Signal& f, const Signal& h, const Segment& seg, const QuadratureConfig& quad) {
    const double bandwidth = std::max(bandwidth_bound(f, seg.lo, seg.hi), bandwidth_bound(h, seg.lo, seg.hi));
    // About 16 nodes per period.
    const double periods = (seg.hi - seg.lo) * bandwidth;
    return std::max(quad.nodes, 16 * static_cast<int>(std::ceil(periods)));
}

}  // namespace

Atom gaussian_atom(double center, double width, double freq, cplx amplitude) {
    return {AtomKind::Gaussian, amplitude, center, width, freq, 0.0, 0};
}

Atom hermite_atom(int k, double center, double width, double freq, cplx amplitude) {
    return {AtomKind::Hermite, amplitude, center, width, freq, 0.0, k};
}

Atom chirp_atom(double chirp, double center, double width, double freq, cplx amplitude) {
    return {AtomKind::LinearChirp, amplitude, center, width, freq, chirp, 0};
}

void validate(const Atom& atom) {
    if (!(atom.width > 0.0) || !std::isfinite(atom.width)) {
        throw InvalidParameter("atom width must be positive and finite");
    }
    if (!std::isfinite(atom.center) || !std::isfinite(atom.freq) || !std::isfinite(atom.chirp) ||
        !std::isfinite(atom.amplitude.real()) || !std::isfinite(atom.amplitude.imag())) {
        throw InvalidParameter("atom parameters must be finite");
    }
    if (atom.kind == AtomKind::Hermite && atom.k < 0) {
        throw InvalidParameter("Hermite index must be >= 0");
    }
    if (atom.kind != AtomKind::LinearChirp && atom.chirp != 0.0) {
        throw InvalidParameter("only linear-chirp atoms carry a chirp rate");
    }
}

double hermite_function(int k, double s) {
    if (k < 0) {
        throw InvalidParameter("Hermite index must be >= 0");
    }
    const double x = std::sqrt(2.0 * kPi) * s;
    double prev = 0.0;
    double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
    for (int n = 0; n < k; ++n) {
        const double next = std::sqrt(2.0 / (n + 1.0)) * x * cur - std::sqrt(n / (n + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return std::pow(2.0 * kPi, 0.25) * cur;
}

cplx atom_eval(const Atom& atom, double t) {
    const double s = t - atom.center;
    const cplx carrier = std::exp(kI * (2.0 * kPi * atom.freq * s));
    switch (atom.kind) {
        case AtomKind::Hermite:
            return atom.amplitude * hermite_function(atom.k, s / atom.width) * carrier;
        case AtomKind::Gaussian:
        case AtomKind::LinearChirp:
            break;
    }
    return atom.amplitude * std::exp(-kPi * chirp_q(atom) * s * s) * carrier;
}

cplx atom_fourier_eval(const Atom& atom, double xi) {
    const cplx translation = std::exp(-kI * (2.0 * kPi * xi * atom.center));
    const double d = xi - atom.freq;
    if (atom.kind == AtomKind::Hermite) {
        const cplx eigen = std::pow(-kI, atom.k);
        return atom.amplitude * translation * atom.width * eigen * hermite_function(atom.k, atom.width * d);
    }
    const cplx q = chirp_q(atom);
    return atom.amplitude * translation * std::exp(-kPi * d * d / q) / std::sqrt(q);
}

cplx GridSamples::at(double time) const {
    cplx sum{};
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double u = (time - t(j)) / dt;
        const double w = u == 0.0 ? 1.0 : std::sin(kPi * u) / (kPi * u);
        sum += w * values[j];
    }
    return sum;
}

cplx Signal::operator()(double t) const {
    if (const auto* cf = std::get_if<ClosedForm>(&repr)) {
        cplx sum{};
        for (const Atom& a : cf->atoms) {
            sum += atom_eval(a, t);
        }
        return sum;
    }
    return samples().at(t);
}

void validate(const Signal& f) {
    if (const auto* cf = std::get_if<ClosedForm>(&f.repr)) {
        for (const Atom& a : cf->atoms) {
            validate(a);
        }
        return;
    }
    const GridSamples& g = f.samples();
    if (g.values.size() < 2) {
        throw InvalidParameter("grid signal needs at least 2 samples");
    }
    if (!(g.dt > 0.0) || !std::isfinite(g.dt) || !std::isfinite(g.t0)) {
        throw InvalidParameter("grid signal needs finite t0 and dt > 0");
    }
    for (const cplx& v : g.values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InvalidParameter("grid signal values must be finite");
        }
    }
}

Signal make_signal(std::vector<Atom> atoms) {
    Signal f{ClosedForm{std::move(atoms)}, std::nullopt};
    validate(f);
    return f;
}

Signal make_signal(GridSamples samples) {
    Signal f{std::move(samples), std::nullopt};
    validate(f);
    return f;
}

Signal zero_signal() { return Signal{ClosedForm{}, 0.0}; }

bool is_zero(const Signal& f) {
    if (f.closed_form()) {
        return std::all_of(f.atoms().atoms.begin(), f.atoms().atoms.end(),
                           [](const Atom& a) { return a.amplitude == cplx{}; });
    }
    const auto& v = f.samples().values;
    return std::all_of(v.begin(), v.end(), [](const cplx& x) { return x == cplx{}; });
}

std::pair<double, double> support(const Signal& f) {
    if (!f.closed_form()) {
        return {f.samples().t0, f.samples().t_end()};
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Atom& a : f.atoms().atoms) {
        if (a.amplitude == cplx{}) {
            continue;
        }
        const double r = envelope_halfwidth(a) * a.width;
        lo = std::min(lo, a.center - r);
        hi = std::max(hi, a.center + r);
    }
    if (lo > hi) {
        return {0.0, 0.0};
    }
    return {lo, hi};
}

double bandwidth_bound(const Signal& f, double lo, double hi) {
    double bandwidth = 1.0;
    if (!f.closed_form()) {
        return std::max(bandwidth, 0.5 / f.samples().dt);
    }
    for (const Atom& a : f.atoms().atoms) {
        const double span = std::max(std::abs(lo - a.center), std::abs(hi - a.center));
        bandwidth = std::max(bandwidth, std::abs(a.freq) + std::abs(a.chirp) * span + 8.0 / a.width);
    }
    return bandwidth;
}

std::pair<double, double> fourier_support(const Signal& f) {
    if (!f.closed_form()) {
        throw InvalidParameter("Fourier support is available for closed-form signals only");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Atom& a : f.atoms().atoms) {
        if (a.amplitude == cplx{}) {
            continue;
        }
        double r = 0.0;
        if (a.kind == AtomKind::Hermite) {
            r = envelope_halfwidth(a) / a.width;
        } else {
            const double re_inv_q = (1.0 / std::conj(chirp_q(a))).real();
            r = std::sqrt(kLogDrop / (kPi * re_inv_q));
        }
        lo = std::min(lo, a.freq - r);
        hi = std::max(hi, a.freq + r);
    }
    if (lo > hi) {
        return {0.0, 0.0};
    }
    return {lo, hi};
}

cplx fourier_eval(const Signal& f, double xi) {
    if (!f.closed_form()) {
        throw InvalidParameter("closed-form Fourier transform is available for atom signals only");
    }
    cplx sum{};
    for (const Atom& a : f.atoms().atoms) {
        sum += atom_fourier_eval(a, xi);
    }
    return sum;
}

Signal scaled(const Signal& f, cplx c) {
    Signal out = f;
    out.norm_hint.reset();
    if (auto* cf = std::get_if<ClosedForm>(&out.repr)) {
        for (Atom& a : cf->atoms) {
            a.amplitude *= c;
        }
    } else {
        for (cplx& v : std::get<GridSamples>(out.repr).values) {
            v *= c;
        }
    }
    if (f.norm_hint) {
        out.norm_hint = *f.norm_hint * std::abs(c);
    }
    return out;
}

Signal shifted(const Signal& f, double mu) {
    Signal out = f;
    if (auto* cf = std::get_if<ClosedForm>(&out.repr)) {
        for (Atom& a : cf->atoms) {
            a.center += mu;
        }
    } else {
        std::get<GridSamples>(out.repr).t0 += mu;
    }
    return out;
}

Signal conjugated(const Signal& f) {
    Signal out = f;
    if (auto* cf = std::get_if<ClosedForm>(&out.repr)) {
        for (Atom& a : cf->atoms) {
            a.amplitude = std::conj(a.amplitude);
            a.freq = -a.freq;
            a.chirp = -a.chirp;
        }
    } else {
        for (cplx& v : std::get<GridSamples>(out.repr).values) {
            v = std::conj(v);
        }
    }
    return out;
}

Signal reflected(const Signal& f) {
    Signal out = f;
    if (auto* cf = std::get_if<ClosedForm>(&out.repr)) {
        for (Atom& a : cf->atoms) {
            a.center = -a.center;
            a.freq = -a.freq;
            if (a.kind == AtomKind::Hermite && a.k % 2 == 1) {
                a.amplitude = -a.amplitude;
            }
        }
    } else {
        auto& g = std::get<GridSamples>(out.repr);
        g.t0 = -g.t_end();
        std::reverse(g.values.begin(), g.values.end());
    }
    return out;
}

GridSamples sample(const Signal& f, double t0, double dt, int count) {
    if (count < 2 || !(dt > 0.0)) {
        throw InvalidParameter("sampling needs count >= 2 and dt > 0");
    }
    GridSamples g;
    g.t0 = t0;
    g.dt = dt;
    g.values.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        g.values.push_back(f(g.t(static_cast<std::size_t>(j))));
    }
    return g;
}

cplx inner_product(const Signal& f, const Signal& h, const QuadratureConfig& quad) {
    validate(quad);
    if (is_zero(f) || is_zero(h)) {
        return {};
    }
    if (!f.closed_form() && !h.closed_form() && same_grid(f.samples(), h.samples())) {
        const GridSamples& a = f.samples();
        const GridSamples& b = h.samples();
        cplx sum{};
        for (std::size_t j = 0; j < a.values.size(); ++j) {
            sum += trapezoid_weight(a, j) * a.values[j] * std::conj(b.values[j]);
        }
        return sum;
    }
    const Segment seg = common_segment(f, h);
    QuadratureConfig q = quad;
    q.nodes = common_nodes(f, h, seg, quad);
    auto integrand = [&](double t) { return f(t) * std::conj(h(t)); };
    return integrate(integrand, std::span(&seg, 1), q, "inner product").value;
}

double norm(const Signal& f, const QuadratureConfig& quad) {
    return std::sqrt(std::max(0.0, inner_product(f, f, quad).real()));
}

double distance(const Signal& f, const Signal& h, cplx c, const QuadratureConfig& quad) {
    validate(quad);
    if (!f.closed_form() && !h.closed_form() && same_grid(f.samples(), h.samples())) {
        const GridSamples& a = f.samples();
        const GridSamples& b = h.samples();
        double sum = 0.0;
        for (std::size_t j = 0; j < a.values.size(); ++j) {
            sum += trapezoid_weight(a, j) * std::norm(a.values[j] - c * b.values[j]);
        }
        return std::sqrt(sum);
    }
    if (is_zero(f) && is_zero(h)) {
        return 0.0;
    }
    const Segment seg = common_segment(f, h);
    const int nodes = 2 * common_nodes(f, h, seg, quad);
    auto integrand = [&](double t) { return cplx{std::norm(f(t) - c * h(t)), 0.0}; };
    return std::sqrt(std::max(0.0, integrate_fixed(integrand, std::span(&seg, 1), nodes).value.real()));
}

}  // namespace phaseless
