#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "phaseless/errors.hpp"
#include "phaseless/quadrature.hpp"

namespace phaseless {

enum class AtomKind { Gaussian, Hermite, LinearChirp };

/// amplitude * env((t - center)/width) * e^{i pi chirp (t - center)^2} * e^{2 pi i freq (t - center)}
///
/// env is e^{-pi s^2} for Gaussian and LinearChirp, and the L2-normalised
/// Hermite function psi_k(s) = (2 pi)^{1/4} h_k(sqrt(2 pi) s) for Hermite.
/// Only LinearChirp uses `chirp`.
struct Atom {
    AtomKind kind = AtomKind::Gaussian;
    cplx amplitude{1.0, 0.0};
    double center = 0.0;
    double width = 1.0;
    double freq = 0.0;
    double chirp = 0.0;
    int k = 0;
};

Atom gaussian_atom(double center = 0.0, double width = 1.0, double freq = 0.0, cplx amplitude = 1.0);
Atom hermite_atom(int k, double center = 0.0, double width = 1.0, double freq = 0.0, cplx amplitude = 1.0);
Atom chirp_atom(double chirp, double center = 0.0, double width = 1.0, double freq = 0.0, cplx amplitude = 1.0);

void validate(const Atom& atom);

/// psi_k(s), orthonormal in L2(R) and an eigenfunction of the Fourier transform
/// with eigenvalue (-i)^k.
double hermite_function(int k, double s);

cplx atom_eval(const Atom& atom, double t);
/// Fourier transform  int atom(t) e^{-2 pi i xi t} dt  in closed form.
cplx atom_fourier_eval(const Atom& atom, double xi);

/// Sum of atoms. An empty list is the zero signal.
struct ClosedForm {
    std::vector<Atom> atoms;
};

/// values[j] = f(t0 + j dt). Off-grid values use Whittaker-Shannon interpolation.
struct GridSamples {
    std::vector<cplx> values;
    double t0 = 0.0;
    double dt = 1.0;

    double t(std::size_t j) const { return t0 + static_cast<double>(j) * dt; }
    double t_end() const { return t(values.size() - 1); }
    cplx at(double time) const;
};

struct Signal {
    std::variant<ClosedForm, GridSamples> repr;
    std::optional<double> norm_hint;

    bool closed_form() const { return std::holds_alternative<ClosedForm>(repr); }
    const ClosedForm& atoms() const { return std::get<ClosedForm>(repr); }
    const GridSamples& samples() const { return std::get<GridSamples>(repr); }

    cplx operator()(double t) const;
};

void validate(const Signal& f);

Signal make_signal(std::vector<Atom> atoms);
Signal make_signal(GridSamples samples);
Signal zero_signal();

/// True for the zero signal (no atoms, zero amplitudes, or all-zero samples).
bool is_zero(const Signal& f);

/// Interval outside which |f| < 1e-20 of its atom peaks; the sample span for grids.
/// Empty signals return (0, 0).
std::pair<double, double> support(const Signal& f);

/// Rough bound on the frequencies present in f over [lo, hi]; sizes quadrature
/// node counts for oscillatory integrands.
double bandwidth_bound(const Signal& f, double lo, double hi);

/// Same for the Fourier transform; closed forms only.
std::pair<double, double> fourier_support(const Signal& f);

cplx fourier_eval(const Signal& f, double xi);

/// c f
Signal scaled(const Signal& f, cplx c);
/// f(t - mu)
Signal shifted(const Signal& f, double mu);
/// conj(f(t))
Signal conjugated(const Signal& f);
/// f(-t)
Signal reflected(const Signal& f);

/// f sampled at t0 + j dt, j = 0..count-1.
GridSamples sample(const Signal& f, double t0, double dt, int count);

/// <f, h> = int f conj(h) dt. Grids sharing t0, dt and length use the
/// trapezoid sum directly; otherwise both are evaluated on Gauss-Legendre
/// panels over the union of supports.
cplx inner_product(const Signal& f, const Signal& h, const QuadratureConfig& quad = {});
double norm(const Signal& f, const QuadratureConfig& quad = {});

/// ||f - c h||_2, integrated directly so that near-equal signals do not lose
/// digits to cancellation.
double distance(const Signal& f, const Signal& h, cplx c, const QuadratureConfig& quad = {});

}  // namespace phaseless
