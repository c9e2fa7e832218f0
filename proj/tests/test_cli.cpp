#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "expratio/montecarlo.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the CLI binary, captures stdout (stderr folded in).
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(EXPRATIO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/expratio_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("test command: happy path with json round-trip") {
    // 40 deterministic pseudo-exponential values
    std::string data = "# generated input\n";
    expratio::RngStream rng(2024);
    for (int i = 0; i < 40; ++i) data += std::to_string(rng.next_exponential()) + "\n";
    const std::string path = write_temp("ok.txt", data);

    const auto r = run_cli("test --input " + path + " --reps 2000 --seed 9 --format json");
    CHECK(r.exit_code == 0);

    const json report = json::parse(r.out);
    CHECK(report["command"] == "test");
    CHECK(report["n"] == 40);
    CHECK(report["results"].size() == 2);
    for (const auto& res : report["results"]) {
        CHECK(res["p_value"].get<double>() > 0.0);
        CHECK(res["p_value"].get<double>() <= 1.0);
    }

    // round-trip: parse -> dump -> parse preserves every value
    const json again = json::parse(report.dump());
    CHECK(again == report);

    // seed reproducibility: identical output byte for byte
    const auto r2 = run_cli("test --input " + path + " --reps 2000 --seed 9 --format json");
    CHECK(r2.out == r.out);
}

TEST_CASE("test command: W and D match the library") {
    std::vector<double> values;
    expratio::RngStream rng(77);
    std::string data;
    for (int i = 0; i < 25; ++i) {
        values.push_back(rng.next_exponential());
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g\n", values.back());
        data += buf;
    }
    const std::string path = write_temp("match.txt", data);
    const expratio::Sample sample(values);

    const auto r = run_cli("test --input " + path + " --reps 1000 --seed 3 --format json");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    for (const auto& res : report["results"]) {
        if (res["statistic"] == "W") {
            CHECK(res["value"].get<double>() ==
                  doctest::Approx(std::abs(expratio::statistic_w(sample, 2.0))).epsilon(1e-12));
            CHECK(res["signed_value"].get<double>() ==
                  doctest::Approx(expratio::statistic_w(sample, 2.0)).epsilon(1e-12));
        } else {
            CHECK(res["value"].get<double>() ==
                  doctest::Approx(expratio::statistic_d(sample)).epsilon(1e-12));
        }
    }
}

TEST_CASE("test command: input validation names the offending line") {
    const std::string zero = write_temp("zero.txt", "1.5\n2.0\n0\n3.5\n");
    const auto r = run_cli("test --input " + zero);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("line 3") != std::string::npos);

    const auto missing = run_cli("test --input /nonexistent/file.txt");
    CHECK(missing.exit_code == 2);

    const std::string tiny = write_temp("tiny.txt", "1.5\n");
    CHECK(run_cli("test --input " + tiny).exit_code == 2);

    const std::string junk = write_temp("junk.txt", "1.5\nabc\n");
    const auto rj = run_cli("test --input " + junk);
    CHECK(rj.exit_code == 2);
    CHECK(rj.out.find("line 2") != std::string::npos);
}

TEST_CASE("config validation") {
    CHECK(run_cli("test --input /tmp/whatever --reps 10").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("critical-values: median at alpha = 0.5 and monotone W grid") {
    const auto r = run_cli(
        "critical-values --statistic w --n 10 20 40 --alpha 0.5 --reps 2000 --seed 5 "
        "--format json");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);

    double prev = 1e9;
    for (const auto& cell : report["grid"]) {
        // empirical median of |W|, shrinking in n by root-n consistency
        const double c = cell["critical_value"].get<double>();
        CHECK(c < prev);
        prev = c;

        const auto dist = expratio::simulate_null(
            expratio::TestStatistic::w(2.0), cell["n"].get<int>(), 2000, 5);
        CHECK(c == dist.replicates[999]);  // rank ceil(0.5 * 2000) = 1000
    }
}

TEST_CASE("simulate: deterministic file, positive values, kotlarski option") {
    const std::string out1 = "/tmp/expratio_test_sim1.txt";
    const std::string out2 = "/tmp/expratio_test_sim2.txt";
    const auto r1 =
        run_cli("simulate --family emnw --theta 0.5 --n 500 --seed 21 --output " + out1);
    const auto r2 =
        run_cli("simulate --family emnw --theta 0.5 --n 500 --seed 21 --output " + out2);
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);

    std::ifstream f1(out1), f2(out2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);  // bit-identical rerun
    CHECK(!s1.empty());

    // the emitted file is valid CLI input
    const auto back = run_cli("test --input " + out1 + " --reps 1000 --seed 2");
    CHECK(back.exit_code == 0);

    CHECK(run_cli("simulate --family kotlarski1 --n 100 --seed 4 --output /tmp/expratio_k.txt")
              .exit_code == 0);
    CHECK(run_cli("simulate --family nosuch --n 100").exit_code == 2);
}

TEST_CASE("power: theta = 0 row sits near the nominal level") {
    const auto r = run_cli(
        "power --family weibull --theta 0 --statistic d --n 20 --alpha 0.1 --reps 2000 "
        "--seed 13 --format json");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    const double p = report["rows"][0]["power"].get<double>();
    CHECK(p > 0.06);
    CHECK(p < 0.14);
}

TEST_CASE("efficiency: full table with LAO rows in json") {
    const auto r = run_cli("efficiency --statistic both --lao --format json");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(report["rows"].size() == 10);  // 4 families + lao, per statistic
    for (const auto& row : report["rows"]) {
        CHECK(row["efficiency"].get<double>() <= 1.0 + 1e-6);
        CHECK(row["efficiency"].get<double>() > 0.75);
    }
}
