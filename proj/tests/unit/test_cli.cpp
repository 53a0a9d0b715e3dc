#include <doctest.h>

#include <cmath>
#include <numbers>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "phaseless/serialize.hpp"

using namespace phaseless;
using std::numbers::pi;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bounds") {
    const auto r = invoke({"bounds", "--m", "2", "--a", "3.14159265"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["tau1_max"].get<double>() == doctest::Approx(0.34221).epsilon(1e-4));
    CHECK(j["tau2_max"].get<double>() == doctest::Approx(0.34221).epsilon(1e-4));
    CHECK(j["rho_z"].get<double>() == 2.0);
    CHECK(j["meta"]["command"] == "bounds");
    CHECK(j["meta"]["a"] == "3.1415926500000002");
}

TEST_CASE("sample set") {
    const auto r = invoke({"sample-set", "--m", "1.5", "--a", "1", "--tau1", "0.1", "--tau2", "0.5", "--n", "2"});
    REQUIRE(r.code == cli::kExitOk);
    std::istringstream in(r.out);
    const auto s = read_sampling_set_csv(in);
    REQUIRE(s.points.size() == 8);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(s.points[static_cast<std::size_t>(i)].x) == 0.1);
        CHECK(std::abs(s.points[static_cast<std::size_t>(i)].omega) == 0.5);
    }
    CHECK(s.tau1 == 0.1);
    CHECK(s.m == 1.5);

    const auto j = invoke({"sample-set", "--n", "3", "--origin", "--format", "json"});
    REQUIRE(j.code == cli::kExitOk);
    const Json parsed = Json::parse(j.out);
    CHECK(parsed["points"].size() == 13);
    CHECK(parsed["meta"]["origin"] == "true");
}

TEST_CASE("sample set flags out-of-bound spacings") {
    const auto r = invoke({"sample-set", "--m", "2", "--a", "1", "--tau1", "0.5", "--tau2", "0.1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("# warning=") != std::string::npos);
    const auto inside = invoke({"sample-set", "--m", "2", "--a", "1", "--tau1", "0.1", "--tau2", "0.1"});
    CHECK(inside.out.find("# warning=") == std::string::npos);
    const auto unchecked = invoke({"sample-set", "--tau1", "0.5", "--no-check"});
    CHECK(unchecked.code == cli::kExitOk);
    CHECK(unchecked.out.find("# warning=") != std::string::npos);
    CHECK(unchecked.out.find("# tau1_max=") == std::string::npos);
    CHECK(invoke({"sample-set", "--n", "0"}).code == cli::kExitInvalid);
}

TEST_CASE("classify") {
    const auto r = invoke({"classify", "--rho", "2", "--b", "3.14159265", "--seq", "0.3*sqrt(k)", "--terms", "200"});
    REQUIRE(r.code == cli::kExitOk);
    const auto report = threshold_report_from_json(Json::parse(r.out));
    CHECK(report.verdict == Verdict::Unique);
    CHECK(report.density == doctest::Approx(0.3));
    CHECK(invoke({"classify", "--seq", "1.5*sqrt(k)"}).out.find("\"NotUnique\"") != std::string::npos);
    CHECK(invoke({"classify", "--seq", "0.6*sqrt(k)"}).out.find("\"Indeterminate\"") != std::string::npos);
}

TEST_CASE("growth") {
    const auto r = invoke({"growth", "--m", "2", "--a", "3.141592653589793"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j.dump().find("order") != std::string::npos);
}

TEST_CASE("discriminate") {
    const auto r = invoke({"discriminate", "--f", "gaussian:center=0", "--h", "hermite:k=1", "--n", "32"});
    REQUIRE(r.code == cli::kExitOk);
    const auto d = discrimination_report_from_json(Json::parse(r.out));
    CHECK(d.verdict == DiscriminationVerdict::Distinct);
    CHECK(d.max_spectrogram_deviation == doctest::Approx(0.1795138701217395).epsilon(1e-9));

    const auto p = invoke({"discriminate", "--f", "gaussian:center=0.3,freq=0.2", "--phase", "1.0", "--n", "8"});
    REQUIRE(p.code == cli::kExitOk);
    CHECK(discrimination_report_from_json(Json::parse(p.out)).verdict == DiscriminationVerdict::EquivalentUpToPhase);
}

TEST_CASE("counterexample") {
    const auto r = invoke({"counterexample", "--radii", "4,8", "--n-theta", "256"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["zeros_exact"] == true);
    CHECK(j["coefficient"].get<double>() < pi);
    CHECK(j["genus"] == 1);
}

TEST_CASE("scan-window and reconstruct") {
    const auto s = invoke({"scan-window", "--points", "5", "--format", "json"});
    REQUIRE(s.code == cli::kExitOk);
    CHECK(Json::parse(s.out)["magnitudes"].size() == 5);

    const auto r = invoke({"reconstruct", "--iters", "200", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["aligned_residual"].get<double>() < 1e-3);
}

TEST_CASE("exit codes and error JSON") {
    const auto bad = invoke({"bounds", "--m", "1"});
    CHECK(bad.code == cli::kExitInvalid);
    CHECK(bad.out.empty());
    const Json e = Json::parse(bad.err);
    CHECK(e["exit_code"] == 2);
    CHECK(e.contains("message"));

    CHECK(invoke({"no-such-command"}).code == cli::kExitInvalid);
    CHECK(invoke({"bounds", "--m", "abc"}).code == cli::kExitInvalid);
    CHECK(invoke({"growth", "--nodes", "8"}).code == cli::kExitInvalid);
    CHECK(invoke({"classify"}).code == cli::kExitInvalid);

    const auto num = invoke({"classify", "--seq", "k", "--terms", "10"});
    CHECK(num.code == cli::kExitNumerical);
    CHECK(Json::parse(num.err)["exit_code"] == 3);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> runs = {
        {"sample-set", "--n", "50"},
        {"classify", "--seq", "0.6*sqrt(k)"},
        {"discriminate", "--n", "8", "--h", "gaussian:center=0.5"},
        {"reconstruct", "--iters", "50", "--seed", "7"},
    };
    for (const auto& args : runs) {
        const auto a = invoke(args);
        const auto b = invoke(args);
        CHECK(a.code == cli::kExitOk);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("emitted numbers round-trip") {
    // JSON: dump of the parsed document reproduces the text.
    const auto d = invoke({"discriminate", "--n", "8", "--h", "gaussian:center=0.5"});
    const Json j = Json::parse(d.out);
    CHECK(j.dump(2) + "\n" == d.out);
    const auto rep = discrimination_report_from_json(j);
    CHECK(to_json(rep)["max_dev"].get<double>() == j["max_dev"].get<double>());

    const auto c = invoke({"sample-set", "--n", "20"});
    std::istringstream in(c.out);
    Metadata meta;
    const auto s = read_sampling_set_csv(in, &meta);
    std::ostringstream again;
    write_sampling_set_csv(again, s, meta);
    CHECK(again.str() == c.out);
}

TEST_CASE("--out writes a file") {
    const std::string path = "cli_test_out.csv";
    const auto r = invoke({"--out", path, "sample-set", "--n", "2"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream text;
    text << f.rdbuf();
    CHECK(text.str().find("n,sign_x,sign_omega,x,omega") != std::string::npos);
    std::remove(path.c_str());
}
