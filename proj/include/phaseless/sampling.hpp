#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phaseless/errors.hpp"

namespace phaseless {

struct TauBounds {
    double tau1_max = 0.0;
    double tau2_max = 0.0;
};

/// Upper bounds on the time and frequency spacing constants for a window with
/// |ghat(xi)| <= C e^{-a|xi|^m}:
///   tau1_max = (2 / ((2 pi)^{m/(m-1)} (m a)^{-1/(m-1)} e))^{(m-1)/m}
///   tau2_max = (2 / (a m e))^{1/m}
TauBounds max_tau_bounds(double m, double a);

struct SamplePoint {
    int n = 0;
    int sign_x = 1;
    int sign_omega = 1;
    double x = 0.0;
    double omega = 0.0;
};

/// Lambda = {(+-tau1 n^{(m-1)/m}, +-tau2 n^{1/m}) : n = 1..N}, optionally with (0, 0).
struct SamplingSet {
    std::vector<SamplePoint> points;
    double tau1 = 0.0;
    double tau2 = 0.0;
    double m = 2.0;
    int N = 0;
    bool includes_origin = false;
    std::optional<double> a;  ///< decay rate the spacings were checked against
};

/// Points ordered by n, then quadrants (+,+), (+,-), (-,+), (-,-); the origin
/// (n = 0) comes first when included. Without `a` the spacings are unchecked
/// and a warning is issued; with `a` a warning is issued when a tau is not
/// strictly below its bound.
SamplingSet generate_sampling_set(double m, double tau1, double tau2, int N, bool include_origin = false,
                                  std::optional<double> a = std::nullopt, Warnings* warnings = nullptr);

/// (2 / (b rho e))^{1/rho}.
double uniqueness_threshold(double rho, double b);

/// C_rho = (pi / (b |sin(pi rho / 2)|))^{1/rho}, or (pi / b)^{1/rho} when rho/2 is an integer.
double nonuniqueness_threshold(double rho, double b);

struct DensityEstimate {
    double value = 0.0;      ///< min of lambda_k / k^{1/rho} over the tail half
    bool diverging = false;  ///< ratio still rising by more than 10% across the tail
    int terms = 0;
};

/// Needs at least 16 strictly increasing positive terms (InsufficientData otherwise).
DensityEstimate density_index(std::span<const double> lambdas, double rho);

enum class Verdict { Unique, NotUnique, Indeterminate };

std::string to_string(Verdict v);

struct ThresholdReport {
    double rho = 0.0;
    double b = 0.0;
    double uniqueness_threshold = 0.0;
    double nonuniqueness_threshold = 0.0;
    double density = 0.0;
    bool diverging = false;
    Verdict verdict = Verdict::Indeterminate;
};

/// Unique below the uniqueness threshold, NotUnique above C_rho, Indeterminate in between.
ThresholdReport classify_sequence(std::span<const double> lambdas, double rho, double b);

}  // namespace phaseless
