#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "phaseless/entire.hpp"
#include "phaseless/sampling.hpp"
#include "phaseless/signal.hpp"
#include "phaseless/stft.hpp"

namespace phaseless {

using Json = nlohmann::ordered_json;

/// Ordered key=value pairs written as leading "# key=value" lines of a CSV.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// 17 significant digits; round-trips every finite double.
std::string format_double(double v);

/// Header `n,sign_x,sign_omega,x,omega`.
void write_sampling_set_csv(std::ostream& out, const SamplingSet& set, const Metadata& meta = {});
/// Points only; tau1, tau2, m, N and the origin flag are recovered from
/// metadata lines when present.
SamplingSet read_sampling_set_csv(std::istream& in, Metadata* meta = nullptr);

/// Header `x,omega,magnitude`.
void write_spectrogram_csv(std::ostream& out, const SpectrogramSamples& s, const Metadata& meta = {});
SpectrogramSamples read_spectrogram_csv(std::istream& in, Metadata* meta = nullptr);

/// Keys rho, b, uniq_threshold, nonuniq_threshold, density, verdict.
Json to_json(const ThresholdReport& r);
ThresholdReport threshold_report_from_json(const Json& j);

/// Keys max_dev, match, alpha, residual, verdict.
Json to_json(const DiscriminationReport& r);
DiscriminationReport discrimination_report_from_json(const Json& j);

Verdict parse_verdict(std::string_view s);
DiscriminationVerdict parse_discrimination_verdict(std::string_view s);

/// "c*k^p", "c*sqrt(k)", "c*k", "k^p", "sqrt(k)" or "k"; whitespace ignored.
PowerSequence parse_power_sequence(std::string_view text);

/// Atoms joined by '+', each "kind:key=value,...". Kinds: gaussian, hermite,
/// chirp. Keys: center, width, freq, amp (real), phase (radians), k (hermite),
/// rate (chirp). Example: "gaussian:center=-1,width=0.8+hermite:k=1,amp=0.5".
Signal parse_signal_spec(std::string_view text);
std::string format_signal_spec(const Signal& f);

}  // namespace phaseless
