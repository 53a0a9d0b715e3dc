#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "phaseless/entire.hpp"
#include "phaseless/reconstruct.hpp"
#include "phaseless/sampling.hpp"
#include "phaseless/serialize.hpp"
#include "phaseless/stft.hpp"
#include "phaseless/windows.hpp"

namespace phaseless::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct QuadOptions {
    double radius = 0.0;
    int nodes = 1024;
    double tol = 1e-10;

    QuadratureConfig config() const {
        QuadratureConfig q;
        q.radius = radius;
        q.nodes = nodes;
        q.tol = tol;
        validate(q);
        return q;
    }
};

void add_quad_options(CLI::App* cmd, QuadOptions& q) {
    cmd->add_option("--R", q.radius, "quadrature truncation radius (0 = automatic)")->capture_default_str();
    cmd->add_option("--nodes", q.nodes, "Gauss-Legendre nodes, >= 64")->capture_default_str();
    cmd->add_option("--quad-tol", q.tol, "node-doubling tolerance")->capture_default_str();
}

void add_quad_meta(Metadata& meta, const QuadOptions& q) {
    meta.emplace_back("quad_R", format_double(q.radius));
    meta.emplace_back("quad_nodes", std::to_string(q.nodes));
    meta.emplace_back("quad_tol", format_double(q.tol));
}

Json meta_json(const Metadata& meta) {
    Json j = Json::object();
    for (const auto& [k, v] : meta) {
        j[k] = v;
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_or_json(const std::string& format) {
    if (format != "csv" && format != "json") {
        throw InvalidParameter(fmt::format("unknown format '{}' (csv or json)", format));
    }
    return format;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw InvalidParameter(fmt::format("cannot parse number '{}' in list '{}'", item, text));
        }
    }
    if (out.empty()) {
        throw InvalidParameter("empty number list");
    }
    return out;
}

void record_warnings(Metadata& meta, const Warnings& warnings) {
    for (const auto& w : warnings) {
        meta.emplace_back("warning", w);
    }
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
    double m = 2.0;
    double a = kPi;
};

std::string cmd_bounds(const BoundsArgs& args) {
    Warnings warnings;
    make_generalized_gaussian(args.a, args.m, 1.0, &warnings);
    const TauBounds b = max_tau_bounds(args.m, args.a);
    const GrowthEstimate z = predicted_growth(args.m, args.a);
    Metadata meta{{"command", "bounds"}, {"m", format_double(args.m)}, {"a", format_double(args.a)}};
    record_warnings(meta, warnings);
    Json j;
    j["tau1_max"] = b.tau1_max;
    j["tau2_max"] = b.tau2_max;
    j["rho_z"] = z.order;
    j["tau_z"] = z.type;
    j["meta"] = meta_json(meta);
    return dump(j);
}

struct SampleSetArgs {
    double m = 1.5;
    std::optional<double> a = 1.0;
    double tau1 = 0.1;
    double tau2 = 0.5;
    int n = 200;
    bool origin = false;
    bool no_check = false;
    std::string format = "csv";
};

std::string cmd_sample_set(const SampleSetArgs& args) {
    Warnings warnings;
    const std::optional<double> a = args.no_check ? std::nullopt : args.a;
    const SamplingSet set = generate_sampling_set(args.m, args.tau1, args.tau2, args.n, args.origin, a, &warnings);
    Metadata meta{{"command", "sample-set"},
                  {"m", format_double(args.m)},
                  {"tau1", format_double(args.tau1)},
                  {"tau2", format_double(args.tau2)},
                  {"n", std::to_string(args.n)},
                  {"origin", args.origin ? "true" : "false"}};
    if (a) {
        const TauBounds b = max_tau_bounds(args.m, *a);
        meta.emplace_back("a", format_double(*a));
        meta.emplace_back("tau1_max", format_double(b.tau1_max));
        meta.emplace_back("tau2_max", format_double(b.tau2_max));
    }
    record_warnings(meta, warnings);
    if (csv_or_json(args.format) == "csv") {
        std::ostringstream os;
        write_sampling_set_csv(os, set, meta);
        return os.str();
    }
    Json j;
    j["meta"] = meta_json(meta);
    j["points"] = Json::array();
    for (const SamplePoint& p : set.points) {
        j["points"].push_back({{"n", p.n},
                               {"sign_x", p.sign_x > 0 ? "+" : "-"},
                               {"sign_omega", p.sign_omega > 0 ? "+" : "-"},
                               {"x", p.x},
                               {"omega", p.omega}});
    }
    return dump(j);
}

struct GrowthArgs {
    double m = 2.0;
    double a = kPi;
    double C = 1.0;
    double xi0 = 0.0;
    int terms = kDefaultTaylorTerms;
    QuadOptions quad;
};

std::string cmd_growth(const GrowthArgs& args) {
    Warnings warnings;
    const WindowModel w = args.xi0 != 0.0
                              ? make_modulated_generalized_gaussian(args.a, args.m, args.C, args.xi0, &warnings)
                              : make_generalized_gaussian(args.a, args.m, args.C, &warnings);
    const GrowthEstimate predicted = predicted_growth(args.m, args.a);
    const TaylorSeries series = taylor_coefficients(w, args.terms, args.quad.config());
    const GrowthEstimate order = estimate_order(series);
    const GrowthEstimate type = estimate_type(series, predicted.order);
    Metadata meta{{"command", "growth"},  {"m", format_double(args.m)},   {"a", format_double(args.a)},
                  {"C", format_double(args.C)}, {"xi0", format_double(args.xi0)}, {"terms", std::to_string(args.terms)}};
    add_quad_meta(meta, args.quad);
    record_warnings(meta, warnings);
    Json j;
    j["predicted"] = {{"order", predicted.order}, {"type", predicted.type}};
    Json est;
    est["order"] = order.order;
    est["type"] = type.type;
    est["type_rho"] = predicted.order;
    est["n_first"] = order.n_used.empty() ? 0 : order.n_used.front();
    est["n_last"] = order.n_used.empty() ? 0 : order.n_used.back();
    est["n_count"] = order.n_used.size();
    est["order_tail_max"] = order.raw_tail_max;
    est["type_tail_max"] = type.raw_tail_max;
    j["estimated"] = est;
    j["meta"] = meta_json(meta);
    return dump(j);
}

struct ClassifyArgs {
    double rho = 2.0;
    double b = kPi;
    std::string seq;
    int terms = 200;
};

std::string cmd_classify(const ClassifyArgs& args) {
    const PowerSequence seq = parse_power_sequence(args.seq);
    const auto lambdas = seq.terms(args.terms);
    const ThresholdReport report = classify_sequence(lambdas, args.rho, args.b);
    Metadata meta{{"command", "classify"},
                  {"seq", args.seq},
                  {"seq_c", format_double(seq.coefficient)},
                  {"seq_p", format_double(seq.exponent)},
                  {"terms", std::to_string(args.terms)}};
    if (report.diverging) {
        meta.emplace_back("warning", "lambda_k / k^{1/rho} still increasing over the tail; density diverges");
    }
    Json j = to_json(report);
    j["diverging"] = report.diverging;
    j["meta"] = meta_json(meta);
    return dump(j);
}

struct DiscriminateArgs {
    std::string f = "gaussian";
    std::string h;
    double phase = 0.0;
    double m = 2.0;
    double a = kPi;
    double C = 1.0;
    double tau_fraction = 0.9;
    int n = 32;
    bool origin = false;
    double tol = 1e-6;
    double phase_tol = 1e-6;
    std::string spectrogram;
    QuadOptions quad;
};

std::string cmd_discriminate(const DiscriminateArgs& args) {
    Warnings warnings;
    const WindowModel g = make_generalized_gaussian(args.a, args.m, args.C, &warnings);
    if (!(args.tau_fraction > 0.0)) {
        throw InvalidParameter("--tau-fraction must be positive");
    }
    const TauBounds bounds = max_tau_bounds(args.m, args.a);
    const SamplingSet lambda = generate_sampling_set(args.m, args.tau_fraction * bounds.tau1_max,
                                                     args.tau_fraction * bounds.tau2_max, args.n, args.origin, args.a,
                                                     &warnings);
    const Signal f = parse_signal_spec(args.f);
    const Signal h = scaled(parse_signal_spec(args.h.empty() ? args.f : args.h), std::polar(1.0, args.phase));
    DiscriminationConfig config;
    config.tol = args.tol;
    config.phase_tol = args.phase_tol;
    config.quad = args.quad.config();
    const DiscriminationReport report = discriminate(f, h, g, lambda, config);

    Metadata meta{{"command", "discriminate"},
                  {"f", format_signal_spec(f)},
                  {"h", format_signal_spec(parse_signal_spec(args.h.empty() ? args.f : args.h))},
                  {"phase", format_double(args.phase)},
                  {"m", format_double(args.m)},
                  {"a", format_double(args.a)},
                  {"C", format_double(args.C)},
                  {"tau1", format_double(lambda.tau1)},
                  {"tau2", format_double(lambda.tau2)},
                  {"n", std::to_string(args.n)},
                  {"origin", args.origin ? "true" : "false"},
                  {"tol", format_double(args.tol)},
                  {"phase_tol", format_double(args.phase_tol)},
                  {"sign_convention", "V_g f(x,omega) = int f(t) conj(g(t-x)) exp(-2 pi i omega t) dt"}};
    add_quad_meta(meta, args.quad);
    record_warnings(meta, warnings);
    if (!args.spectrogram.empty()) {
        std::ofstream file(args.spectrogram);
        if (!file) {
            throw InvalidParameter(fmt::format("cannot open '{}' for writing", args.spectrogram));
        }
        write_spectrogram_csv(file, spectrogram_on_set(f, g, lambda, config.quad), meta);
    }
    Json j = to_json(report);
    j["max_magnitude"] = report.max_magnitude;
    j["meta"] = meta_json(meta);
    return dump(j);
}

struct CounterexampleArgs {
    double rho = 2.0;
    double b = kPi;
    std::string seq = "1.5*sqrt(k)";
    std::string radii = "4,8,16";
    long K = 0;
    int n_theta = 2048;
};

std::string cmd_counterexample(const CounterexampleArgs& args) {
    const PowerSequence seq = parse_power_sequence(args.seq);
    const std::vector<double> radii = parse_list(args.radii);
    const double r_max = *std::max_element(radii.begin(), radii.end());
    const CanonicalProduct cp = make_counterexample_product(seq, args.rho, args.K, r_max);
    const CanonicalProduct doubled = make_counterexample_product(seq, args.rho, 2 * cp.truncation(), r_max);
    const CounterexampleGrowth growth = counterexample_growth(cp, args.rho, radii, args.n_theta);
    const CounterexampleGrowth growth2 = counterexample_growth(doubled, args.rho, radii, args.n_theta);

    Metadata meta{{"command", "counterexample"},
                  {"seq", args.seq},
                  {"rho", format_double(args.rho)},
                  {"b", format_double(args.b)},
                  {"radii", args.radii},
                  {"K", std::to_string(args.K)},
                  {"n_theta", std::to_string(args.n_theta)}};
    const ThresholdReport cls = classify_sequence(seq.terms(std::max(200L, 2 * cp.truncation())), args.rho, args.b);
    if (cls.verdict != Verdict::NotUnique) {
        meta.emplace_back("warning", fmt::format("density {} does not exceed C_rho = {}; the product need not lie "
                                                 "in the growth class",
                                                 format_double(cls.density), format_double(cls.nonuniqueness_threshold)));
    }

    bool zeros_exact = true;
    for (long k = 1; k <= cp.truncation(); ++k) {
        const double l = seq.at(k);
        zeros_exact = zeros_exact && counterexample_eval(cp, cplx{l, 0.0}) == cplx{} &&
                      counterexample_eval(cp, cplx{-l, 0.0}) == cplx{};
    }
    double stability = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        stability = std::max(stability, std::abs(growth.log_max_modulus[i] - growth2.log_max_modulus[i]));
    }

    Json j;
    j["genus"] = cp.genus;
    j["K"] = cp.truncation();
    j["tail_validity_radius"] = tail_validity_radius(cp);
    j["K_plain_tail_bound"] = truncation_for_tail_bound(*cp.tail, cp.genus, r_max * r_max);
    j["density"] = cls.density;
    j["C_rho"] = cls.nonuniqueness_threshold;
    j["zeros_exact"] = zeros_exact;
    j["radii"] = growth.radii;
    j["log_max_modulus"] = growth.log_max_modulus;
    j["argmax_theta"] = growth.argmax_theta;
    j["coefficient"] = growth.coefficient;
    j["intercept"] = growth.intercept;
    j["below_b"] = growth.coefficient < args.b;
    j["doubling_change"] = stability;
    j["meta"] = meta_json(meta);
    return dump(j);
}

struct ScanArgs {
    double m = 2.0;
    double a = 1.0;
    double C = 1.0;
    double xi0 = 0.0;
    double omega = 0.0;
    double lo = -5.0;
    double hi = 5.0;
    int points = 1001;
    std::string format = "csv";
    QuadOptions quad;
};

std::string cmd_scan_window(const ScanArgs& args) {
    Warnings warnings;
    const WindowModel w = args.xi0 != 0.0
                              ? make_modulated_generalized_gaussian(args.a, args.m, args.C, args.xi0, &warnings)
                              : make_generalized_gaussian(args.a, args.m, args.C, &warnings);
    const auto grid = uniform_grid(args.lo, args.hi, args.points);
    const AmbiguityScanReport report = window_ambiguity_scan(w, args.omega, grid, args.quad.config());
    Metadata meta{{"command", "scan-window"},     {"m", format_double(args.m)},       {"a", format_double(args.a)},
                  {"C", format_double(args.C)},   {"xi0", format_double(args.xi0)},   {"omega", format_double(args.omega)},
                  {"lo", format_double(args.lo)}, {"hi", format_double(args.hi)},     {"points", std::to_string(args.points)},
                  {"min_magnitude", format_double(report.min_magnitude)},
                  {"near_zero_fraction", format_double(report.near_zero_fraction)}};
    add_quad_meta(meta, args.quad);
    record_warnings(meta, warnings);
    if (csv_or_json(args.format) == "csv") {
        std::ostringstream os;
        for (const auto& [k, v] : meta) {
            os << "# " << k << '=' << v << '\n';
        }
        os << "xi,magnitude\n";
        for (std::size_t i = 0; i < report.grid.size(); ++i) {
            os << format_double(report.grid[i]) << ',' << format_double(report.magnitudes[i]) << '\n';
        }
        return os.str();
    }
    Json j;
    j["omega"] = report.omega;
    j["min_magnitude"] = report.min_magnitude;
    j["near_zero_fraction"] = report.near_zero_fraction;
    j["grid"] = report.grid;
    j["magnitudes"] = report.magnitudes;
    j["meta"] = meta_json(meta);
    return dump(j);
}

struct ReconstructArgs {
    std::string f = "gaussian";
    double m = 2.0;
    double a = kPi;
    double C = 1.0;
    int L = 64;
    double dt = 0.125;
    int iters = 500;
    std::uint64_t seed = 0;
    double momentum = 0.99;
    std::string format = "csv";
};

std::string cmd_reconstruct(const ReconstructArgs& args) {
    Warnings warnings;
    const WindowModel g = make_generalized_gaussian(args.a, args.m, args.C, &warnings);
    const Signal f = parse_signal_spec(args.f);
    const TFGrid grid{args.L, args.dt};
    const DiscreteSpectrogram mags = discrete_spectrogram(f, g, grid);
    ReconstructionConfig config;
    config.iters = args.iters;
    config.seed = args.seed;
    config.momentum = args.momentum;
    const ReconstructionResult result = gs_reconstruct(mags, g, config);
    const Signal truth = make_signal(sample(f, grid.t0(), grid.dt, grid.L));
    double residual = 0.0;
    double alpha = 0.0;
    if (!is_zero(truth)) {
        if (is_zero(result.estimate)) {
            residual = 1.0;
        } else {
            const PhaseAlignment pa = global_phase_residual(truth, result.estimate);
            residual = pa.residual;
            alpha = pa.alpha;
        }
    }
    Metadata meta{{"command", "reconstruct"},
                  {"f", format_signal_spec(f)},
                  {"m", format_double(args.m)},
                  {"a", format_double(args.a)},
                  {"C", format_double(args.C)},
                  {"L", std::to_string(args.L)},
                  {"dt", format_double(args.dt)},
                  {"iters", std::to_string(args.iters)},
                  {"seed", std::to_string(args.seed)},
                  {"momentum", format_double(args.momentum)},
                  {"alpha", format_double(alpha)},
                  {"aligned_residual", format_double(residual)},
                  {"consistency", format_double(result.consistency)}};
    record_warnings(meta, warnings);
    const GridSamples& s = result.estimate.samples();
    if (csv_or_json(args.format) == "csv") {
        std::ostringstream os;
        for (const auto& [k, v] : meta) {
            os << "# " << k << '=' << v << '\n';
        }
        os << "t,re,im\n";
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            os << format_double(s.t(j)) << ',' << format_double(s.values[j].real()) << ','
               << format_double(s.values[j].imag()) << '\n';
        }
        return os.str();
    }
    Json j;
    j["aligned_residual"] = residual;
    j["alpha"] = alpha;
    j["consistency"] = result.consistency;
    j["t0"] = s.t0;
    j["dt"] = s.dt;
    Json re = Json::array();
    Json im = Json::array();
    for (const cplx& v : s.values) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    j["re"] = re;
    j["im"] = im;
    j["meta"] = meta_json(meta);
    return dump(j);
}

int fail(std::ostream& err, int code, std::string_view kind, std::string_view message) {
    Json j;
    j["error"] = code == kExitInvalid ? "invalid_parameter" : "numerical_failure";
    j["kind"] = kind;
    j["message"] = message;
    j["exit_code"] = code;
    err << j.dump() << '\n';
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sampling sets, growth data and spectrogram discrimination for STFT phase retrieval",
                 "phaseless-cli"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write the result to this file instead of stdout");

    BoundsArgs bounds;
    auto* c_bounds = app.add_subcommand("bounds", "tau1_max, tau2_max for a window class");
    c_bounds->add_option("--m", bounds.m, "decay exponent m > 1")->capture_default_str();
    c_bounds->add_option("--a", bounds.a, "decay rate a > 0")->capture_default_str();

    SampleSetArgs ss;
    double ss_a = 1.0;
    auto* c_ss = app.add_subcommand("sample-set", "sampling set Lambda as CSV");
    c_ss->add_option("--m", ss.m)->capture_default_str();
    c_ss->add_option("--a", ss_a, "decay rate used to check tau1, tau2")->capture_default_str();
    c_ss->add_option("--tau1", ss.tau1)->capture_default_str();
    c_ss->add_option("--tau2", ss.tau2)->capture_default_str();
    c_ss->add_option("--n", ss.n, "number of indices N")->capture_default_str();
    c_ss->add_flag("--origin", ss.origin, "include (0, 0)");
    c_ss->add_flag("--no-check", ss.no_check, "skip the tau bound check");
    c_ss->add_option("--format", ss.format, "csv or json")->capture_default_str();

    GrowthArgs growth;
    auto* c_growth = app.add_subcommand("growth", "predicted and estimated order/type of the window continuation");
    c_growth->add_option("--m", growth.m)->capture_default_str();
    c_growth->add_option("--a", growth.a)->capture_default_str();
    c_growth->add_option("--C", growth.C)->capture_default_str();
    c_growth->add_option("--xi0", growth.xi0, "modulation")->capture_default_str();
    c_growth->add_option("--terms", growth.terms, "Taylor truncation N")->capture_default_str();
    add_quad_options(c_growth, growth.quad);

    ClassifyArgs cls;
    auto* c_cls = app.add_subcommand("classify", "classify lambda_k = c k^p against the thresholds");
    c_cls->add_option("--rho", cls.rho)->capture_default_str();
    c_cls->add_option("--b", cls.b)->capture_default_str();
    c_cls->add_option("--seq", cls.seq, "c*k^p or c*sqrt(k)")->required();
    c_cls->add_option("--terms", cls.terms)->capture_default_str();

    DiscriminateArgs disc;
    auto* c_disc = app.add_subcommand("discriminate", "compare sampled spectrograms of two signals");
    c_disc->set_help_flag("--help", "Print this help message and exit");
    c_disc->add_option("--f", disc.f, "signal spec")->capture_default_str();
    c_disc->add_option("--h", disc.h, "signal spec (default: f)");
    c_disc->add_option("--phase", disc.phase, "h is multiplied by e^{i phase}")->capture_default_str();
    c_disc->add_option("--m", disc.m)->capture_default_str();
    c_disc->add_option("--a", disc.a)->capture_default_str();
    c_disc->add_option("--C", disc.C)->capture_default_str();
    c_disc->add_option("--tau-fraction", disc.tau_fraction, "tau = fraction * tau_max")->capture_default_str();
    c_disc->add_option("--n", disc.n)->capture_default_str();
    c_disc->add_flag("--origin", disc.origin);
    c_disc->add_option("--tol", disc.tol, "relative spectrogram match tolerance")->capture_default_str();
    c_disc->add_option("--phase-tol", disc.phase_tol)->capture_default_str();
    c_disc->add_option("--spectrogram", disc.spectrogram, "also write f's sampled spectrogram CSV here");
    add_quad_options(c_disc, disc.quad);

    CounterexampleArgs ce;
    auto* c_ce = app.add_subcommand("counterexample", "canonical-product counterexample F(z) = V(z^2)");
    c_ce->add_option("--rho", ce.rho)->capture_default_str();
    c_ce->add_option("--b", ce.b)->capture_default_str();
    c_ce->add_option("--seq", ce.seq)->capture_default_str();
    c_ce->add_option("--radii", ce.radii, "comma-separated radii")->capture_default_str();
    c_ce->add_option("--K", ce.K, "retained zeros (0 = automatic)")->capture_default_str();
    c_ce->add_option("--n-theta", ce.n_theta)->capture_default_str();

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan-window", "ambiguity-function scan of a window");
    c_scan->add_option("--m", scan.m)->capture_default_str();
    c_scan->add_option("--a", scan.a)->capture_default_str();
    c_scan->add_option("--C", scan.C)->capture_default_str();
    c_scan->add_option("--xi0", scan.xi0)->capture_default_str();
    c_scan->add_option("--omega", scan.omega)->capture_default_str();
    c_scan->add_option("--lo", scan.lo)->capture_default_str();
    c_scan->add_option("--hi", scan.hi)->capture_default_str();
    c_scan->add_option("--points", scan.points)->capture_default_str();
    c_scan->add_option("--format", scan.format)->capture_default_str();
    add_quad_options(c_scan, scan.quad);

    ReconstructArgs rec;
    auto* c_rec = app.add_subcommand("reconstruct", "phase retrieval from a full discrete spectrogram");
    c_rec->add_option("--f", rec.f, "signal spec")->capture_default_str();
    c_rec->add_option("--m", rec.m)->capture_default_str();
    c_rec->add_option("--a", rec.a)->capture_default_str();
    c_rec->add_option("--C", rec.C)->capture_default_str();
    c_rec->add_option("--L", rec.L)->capture_default_str();
    c_rec->add_option("--dt", rec.dt)->capture_default_str();
    c_rec->add_option("--iters", rec.iters)->capture_default_str();
    c_rec->add_option("--seed", rec.seed)->capture_default_str();
    c_rec->add_option("--momentum", rec.momentum)->capture_default_str();
    c_rec->add_option("--format", rec.format)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return fail(err, kExitInvalid, "usage", e.what());
    }

    try {
        std::string result;
        if (c_bounds->parsed()) {
            result = cmd_bounds(bounds);
        } else if (c_ss->parsed()) {
            ss.a = ss_a;
            result = cmd_sample_set(ss);
        } else if (c_growth->parsed()) {
            result = cmd_growth(growth);
        } else if (c_cls->parsed()) {
            result = cmd_classify(cls);
        } else if (c_disc->parsed()) {
            result = cmd_discriminate(disc);
        } else if (c_ce->parsed()) {
            result = cmd_counterexample(ce);
        } else if (c_scan->parsed()) {
            result = cmd_scan_window(scan);
        } else {
            result = cmd_reconstruct(rec);
        }
        if (out_path.empty()) {
            out << result;
        } else {
            std::ofstream file(out_path);
            if (!file) {
                throw InvalidParameter(fmt::format("cannot open '{}' for writing", out_path));
            }
            file << result;
        }
        return kExitOk;
    } catch (const InvalidParameter& e) {
        return fail(err, kExitInvalid, "invalid_parameter", e.what());
    } catch (const QuadratureError& e) {
        return fail(err, kExitNumerical, "quadrature", e.what());
    } catch (const OverflowError& e) {
        return fail(err, kExitNumerical, "overflow", e.what());
    } catch (const InsufficientData& e) {
        return fail(err, kExitNumerical, "insufficient_data", e.what());
    } catch (const NumericalError& e) {
        return fail(err, kExitNumerical, "numerical", e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(err, kExitInvalid, "json", e.what());
    }
}

}  // namespace phaseless::cli
