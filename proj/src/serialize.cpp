#include "phaseless/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace phaseless {

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

double parse_number(std::string_view s, std::string_view what) {
    const std::string_view original = s;
    if (s.size() > 1 && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    // Subnormal results report out_of_range but are exact.
    const bool ok = (ec == std::errc{} || (ec == std::errc::result_out_of_range && std::abs(v) < 1.0)) && ptr == end &&
                    std::isfinite(v);
    if (!ok || s.empty()) {
        throw InvalidParameter(fmt::format("cannot parse {} from '{}'", what, original));
    }
    return v;
}

int parse_sign(std::string_view s, std::string_view what) {
    if (s == "+") {
        return 1;
    }
    if (s == "-") {
        return -1;
    }
    throw InvalidParameter(fmt::format("{} must be '+' or '-' (got '{}')", what, s));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

void write_meta(std::ostream& out, const Metadata& meta) {
    for (const auto& [k, v] : meta) {
        out << "# " << k << '=' << v << '\n';
    }
}

// Consumes metadata lines and the header line.
void read_preamble(std::istream& in, std::string_view header, Metadata* meta) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (meta != nullptr && eq != std::string::npos) {
                meta->emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            }
            continue;
        }
        if (line != header) {
            throw InvalidParameter(fmt::format("expected CSV header '{}', got '{}'", header, line));
        }
        return;
    }
    throw InvalidParameter(fmt::format("missing CSV header '{}'", header));
}

const std::string* find_meta(const Metadata& meta, std::string_view key) {
    for (const auto& [k, v] : meta) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void write_sampling_set_csv(std::ostream& out, const SamplingSet& set, const Metadata& meta) {
    write_meta(out, meta);
    out << "n,sign_x,sign_omega,x,omega\n";
    for (const SamplePoint& p : set.points) {
        out << p.n << ',' << (p.sign_x > 0 ? "+" : "-") << ',' << (p.sign_omega > 0 ? "+" : "-") << ','
            << format_double(p.x) << ',' << format_double(p.omega) << '\n';
    }
}

SamplingSet read_sampling_set_csv(std::istream& in, Metadata* meta) {
    Metadata local;
    Metadata& m = meta != nullptr ? *meta : local;
    read_preamble(in, "n,sign_x,sign_omega,x,omega", &m);
    SamplingSet set;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 5) {
            throw InvalidParameter(fmt::format("malformed sampling-set row '{}'", line));
        }
        SamplePoint p;
        const double n = parse_number(f[0], "n");
        if (n < 0.0 || n != std::floor(n) || n > 2e9) {
            throw InvalidParameter(fmt::format("sampling-set index must be a nonnegative integer (got '{}')", f[0]));
        }
        p.n = static_cast<int>(n);
        p.sign_x = parse_sign(f[1], "sign_x");
        p.sign_omega = parse_sign(f[2], "sign_omega");
        p.x = parse_number(f[3], "x");
        p.omega = parse_number(f[4], "omega");
        if (p.n == 0) {
            set.includes_origin = true;
        }
        set.N = std::max(set.N, p.n);
        set.points.push_back(p);
    }
    if (const auto* v = find_meta(m, "tau1")) {
        set.tau1 = parse_number(*v, "tau1");
    }
    if (const auto* v = find_meta(m, "tau2")) {
        set.tau2 = parse_number(*v, "tau2");
    }
    if (const auto* v = find_meta(m, "m")) {
        set.m = parse_number(*v, "m");
    }
    if (const auto* v = find_meta(m, "a")) {
        set.a = parse_number(*v, "a");
    }
    return set;
}

void write_spectrogram_csv(std::ostream& out, const SpectrogramSamples& s, const Metadata& meta) {
    write_meta(out, meta);
    out << "# quad_config_id=" << s.quad_config_id << '\n';
    out << "x,omega,magnitude\n";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        out << format_double(s.points[i].first) << ',' << format_double(s.points[i].second) << ','
            << format_double(s.magnitudes[i]) << '\n';
    }
}

SpectrogramSamples read_spectrogram_csv(std::istream& in, Metadata* meta) {
    Metadata local;
    Metadata& m = meta != nullptr ? *meta : local;
    read_preamble(in, "x,omega,magnitude", &m);
    SpectrogramSamples s;
    if (const auto* v = find_meta(m, "quad_config_id")) {
        s.quad_config_id = *v;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 3) {
            throw InvalidParameter(fmt::format("malformed spectrogram row '{}'", line));
        }
        s.points.emplace_back(parse_number(f[0], "x"), parse_number(f[1], "omega"));
        s.magnitudes.push_back(parse_number(f[2], "magnitude"));
    }
    return s;
}

Json to_json(const ThresholdReport& r) {
    Json j;
    j["rho"] = r.rho;
    j["b"] = r.b;
    j["uniq_threshold"] = r.uniqueness_threshold;
    j["nonuniq_threshold"] = r.nonuniqueness_threshold;
    j["density"] = r.density;
    j["verdict"] = to_string(r.verdict);
    return j;
}

ThresholdReport threshold_report_from_json(const Json& j) {
    ThresholdReport r;
    r.rho = j.at("rho").get<double>();
    r.b = j.at("b").get<double>();
    r.uniqueness_threshold = j.at("uniq_threshold").get<double>();
    r.nonuniqueness_threshold = j.at("nonuniq_threshold").get<double>();
    r.density = j.at("density").get<double>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    return r;
}

Json to_json(const DiscriminationReport& r) {
    Json j;
    j["max_dev"] = r.max_spectrogram_deviation;
    j["match"] = r.spectrograms_match;
    j["alpha"] = r.alpha;
    j["residual"] = r.aligned_residual;
    j["verdict"] = to_string(r.verdict);
    return j;
}

DiscriminationReport discrimination_report_from_json(const Json& j) {
    DiscriminationReport r;
    r.max_spectrogram_deviation = j.at("max_dev").get<double>();
    r.spectrograms_match = j.at("match").get<bool>();
    r.alpha = j.at("alpha").get<double>();
    r.aligned_residual = j.at("residual").get<double>();
    r.verdict = parse_discrimination_verdict(j.at("verdict").get<std::string>());
    return r;
}

Verdict parse_verdict(std::string_view s) {
    for (Verdict v : {Verdict::Unique, Verdict::NotUnique, Verdict::Indeterminate}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    throw InvalidParameter(fmt::format("unknown verdict '{}'", s));
}

DiscriminationVerdict parse_discrimination_verdict(std::string_view s) {
    for (DiscriminationVerdict v : {DiscriminationVerdict::EquivalentUpToPhase, DiscriminationVerdict::Distinct,
                                    DiscriminationVerdict::Inconsistent}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    throw InvalidParameter(fmt::format("unknown discrimination verdict '{}'", s));
}

PowerSequence parse_power_sequence(std::string_view text) {
    const std::string s = strip(text);
    PowerSequence seq{1.0, 1.0};
    std::string term = s;
    const auto star = s.find('*');
    if (star != std::string::npos) {
        seq.coefficient = parse_number(std::string_view(s).substr(0, star), "sequence coefficient");
        term = s.substr(star + 1);
    }
    if (term == "k") {
        seq.exponent = 1.0;
    } else if (term == "sqrt(k)") {
        seq.exponent = 0.5;
    } else if (term.rfind("k^", 0) == 0) {
        std::string ex = term.substr(2);
        if (ex.size() > 2 && ex.front() == '(' && ex.back() == ')') {
            ex = ex.substr(1, ex.size() - 2);
        }
        const auto slash = ex.find('/');
        if (slash != std::string::npos) {
            seq.exponent = parse_number(ex.substr(0, slash), "exponent") / parse_number(ex.substr(slash + 1), "exponent");
        } else {
            seq.exponent = parse_number(ex, "exponent");
        }
    } else {
        throw InvalidParameter(fmt::format("sequence '{}' is not of the form c*k^p", std::string(text)));
    }
    if (!(seq.coefficient > 0.0) || !(seq.exponent > 0.0) || !std::isfinite(seq.exponent)) {
        throw InvalidParameter(fmt::format("sequence '{}' needs c > 0 and p > 0", std::string(text)));
    }
    return seq;
}

Signal parse_signal_spec(std::string_view text) {
    const std::string s = strip(text);
    if (s.empty() || s == "zero") {
        return zero_signal();
    }
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' && i + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[i + 1]))) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));

    std::vector<Atom> atoms;
    for (const std::string& part : parts) {
        const auto colon = part.find(':');
        const std::string kind = part.substr(0, colon);
        Atom atom;
        if (kind == "gaussian") {
            atom.kind = AtomKind::Gaussian;
        } else if (kind == "hermite") {
            atom.kind = AtomKind::Hermite;
        } else if (kind == "chirp") {
            atom.kind = AtomKind::LinearChirp;
        } else {
            throw InvalidParameter(fmt::format("unknown signal atom '{}'", kind));
        }
        double amp = 1.0;
        double phase = 0.0;
        if (colon != std::string::npos) {
            for (const std::string& kv : split(part.substr(colon + 1), ',')) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    throw InvalidParameter(fmt::format("expected key=value in '{}'", kv));
                }
                const std::string key = kv.substr(0, eq);
                const double v = parse_number(std::string_view(kv).substr(eq + 1), key);
                if (key == "center") {
                    atom.center = v;
                } else if (key == "width") {
                    atom.width = v;
                } else if (key == "freq") {
                    atom.freq = v;
                } else if (key == "amp") {
                    amp = v;
                } else if (key == "phase") {
                    phase = v;
                } else if (key == "k" && atom.kind == AtomKind::Hermite) {
                    if (v != std::floor(v)) {
                        throw InvalidParameter("Hermite index must be an integer");
                    }
                    atom.k = static_cast<int>(v);
                } else if (key == "rate" && atom.kind == AtomKind::LinearChirp) {
                    atom.chirp = v;
                } else {
                    throw InvalidParameter(fmt::format("unknown key '{}' for atom '{}'", key, kind));
                }
            }
        }
        atom.amplitude = amp * std::polar(1.0, phase);
        atoms.push_back(atom);
    }
    return make_signal(std::move(atoms));
}

std::string format_signal_spec(const Signal& f) {
    if (!f.closed_form()) {
        throw InvalidParameter("only closed-form signals have a text form");
    }
    if (f.atoms().atoms.empty()) {
        return "zero";
    }
    std::string out;
    for (const Atom& a : f.atoms().atoms) {
        if (!out.empty()) {
            out += '+';
        }
        switch (a.kind) {
            case AtomKind::Gaussian:
                out += "gaussian:";
                break;
            case AtomKind::Hermite:
                out += fmt::format("hermite:k={},", a.k);
                break;
            case AtomKind::LinearChirp:
                out += fmt::format("chirp:rate={},", format_double(a.chirp));
                break;
        }
        out += fmt::format("center={},width={},freq={},amp={},phase={}", format_double(a.center),
                           format_double(a.width), format_double(a.freq), format_double(std::abs(a.amplitude)),
                           format_double(std::arg(a.amplitude)));
    }
    return out;
}

}  // namespace phaseless
