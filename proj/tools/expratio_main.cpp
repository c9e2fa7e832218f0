// Command-line front end: exponentiality tests based on the F(2,2) law of
// pairwise ratios, with Monte Carlo inference and the local-efficiency
// pipeline. See README.md for usage.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expratio/efficiency.hpp"
#include "expratio/montecarlo.hpp"
#include "expratio/quadrature.hpp"

using json = nlohmann::json;
using namespace expratio;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct CliError {
    int code;
    std::string message;
};

// One strictly positive decimal number per line; lines starting with '#'
// and blank lines are ignored.
Sample read_sample(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitInput, "cannot open input file: " + path};

    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream ls(line);
        double v;
        if (!(ls >> v)) {
            throw CliError{kExitInput,
                           path + ": line " + std::to_string(lineno) + ": not a number: " + line};
        }
        std::string rest;
        if (ls >> rest)
            throw CliError{kExitInput,
                           path + ": line " + std::to_string(lineno) + ": trailing content"};
        if (!std::isfinite(v) || v <= 0.0)
            throw CliError{kExitInput, path + ": line " + std::to_string(lineno) +
                                           ": observations must be strictly positive, got " +
                                           line};
        values.push_back(v);
    }
    if (values.size() < 2)
        throw CliError{kExitInput, path + ": need at least 2 observations, got " +
                                       std::to_string(values.size())};
    return Sample(std::move(values));
}

AlternativeModel make_model(const std::string& family, double theta, double beta) {
    try {
        if (family == "weibull") return AlternativeModel::weibull(theta);
        if (family == "gamma") return AlternativeModel::gamma(theta);
        if (family == "emnw") return AlternativeModel::emnw(theta, beta);
        if (family == "verhulst") return AlternativeModel::verhulst(theta);
        if (family == "kotlarski1") return AlternativeModel::kotlarski_inv_exp();
        if (family == "kotlarski2") return AlternativeModel::kotlarski_half_cauchy();
        if (family == "kotlarski3") return AlternativeModel::kotlarski_x_over_cube();
    } catch (const std::domain_error& e) {
        throw CliError{kExitInput, e.what()};
    }
    throw CliError{kExitInput, "unknown family: " + family};
}

std::vector<TestStatistic> selected_statistics(const std::string& which, double mu) {
    if (which == "w") return {TestStatistic::w(mu)};
    if (which == "d") return {TestStatistic::d()};
    if (which == "both") return {TestStatistic::w(mu), TestStatistic::d()};
    throw CliError{kExitInput, "unknown statistic: " + which};
}

std::string statistic_label(const TestStatistic& s) {
    if (s.kind == TestStatistic::Kind::w) {
        std::ostringstream os;
        os << "|W| (mu=" << s.mu << ")";
        return os.str();
    }
    return "D";
}

void emit(const json& report, const std::string& format, const std::string& table) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << table;
}

// ---- test ----------------------------------------------------------------

int cmd_test(const std::string& input, const std::string& which, double mu, int reps,
             std::uint64_t seed, const std::string& format) {
    const Sample sample = read_sample(input);
    const int n = static_cast<int>(sample.size());

    json results = json::array();
    std::ostringstream table;
    table << "exponentiality test: n = " << n << ", reps = " << reps << ", seed = " << seed
          << "\n";
    table << "  statistic          value      p-value\n";

    for (const auto& stat : selected_statistics(which, mu)) {
        const double value = evaluate_statistic(stat, sample);
        const double p = p_value(stat, value, n, reps, seed);
        json r = {{"statistic", stat.name()}, {"value", value}, {"p_value", p}};
        if (stat.kind == TestStatistic::Kind::w) {
            r["mu"] = stat.mu;
            r["signed_value"] = statistic_w(sample, stat.mu);
        }
        results.push_back(r);
        char line[128];
        std::snprintf(line, sizeof line, "  %-16s %9.6f   %10.6g\n", statistic_label(stat).c_str(),
                      value, p);
        table << line;
    }

    const json report = {{"command", "test"}, {"input", input},   {"n", n},
                         {"reps", reps},      {"seed", seed},     {"mu", mu},
                         {"results", results}};
    emit(report, format, table.str());
    return 0;
}

// ---- critical-values -------------------------------------------------------

int cmd_critical_values(const std::string& which, double mu, std::vector<int> ns,
                        std::vector<double> alphas, int reps, std::uint64_t seed,
                        const std::string& format) {
    json grid = json::array();
    std::ostringstream table;

    for (const auto& stat : selected_statistics(which, mu)) {
        table << "critical values for " << statistic_label(stat) << ": reps = " << reps
              << ", seed = " << seed << "\n      n";
        for (double a : alphas) {
            char h[32];
            std::snprintf(h, sizeof h, "  alpha=%-5g", a);
            table << h;
        }
        table << "\n";
        for (int n : ns) {
            const NullDistribution dist = simulate_null(stat, n, reps, seed);
            char row[32];
            std::snprintf(row, sizeof row, "  %5d", n);
            table << row;
            for (double a : alphas) {
                const double c = critical_value(dist, a);
                grid.push_back({{"statistic", stat.name()},
                                {"n", n},
                                {"alpha", a},
                                {"critical_value", c}});
                char cell[32];
                std::snprintf(cell, sizeof cell, "  %11.4f", c);
                table << cell;
            }
            table << "\n";
        }
    }

    const json report = {{"command", "critical-values"},
                         {"mu", mu},
                         {"reps", reps},
                         {"seed", seed},
                         {"grid", grid}};
    emit(report, format, table.str());
    return 0;
}

// ---- power -----------------------------------------------------------------

int cmd_power(const std::optional<std::string>& family, double theta, double beta,
              const std::string& which, double mu, int n, std::vector<double> alphas, int reps,
              std::uint64_t seed, const std::string& format) {
    std::vector<std::pair<AlternativeModel, double>> cells;
    if (family) {
        cells.emplace_back(make_model(*family, theta, beta), theta);
    } else {
        // default grid: the four test families at theta = 0.5 and 0.25
        for (double th : {0.5, 0.25}) {
            cells.emplace_back(AlternativeModel::weibull(th), th);
            cells.emplace_back(AlternativeModel::gamma(th), th);
            cells.emplace_back(AlternativeModel::emnw(th, beta), th);
            cells.emplace_back(AlternativeModel::verhulst(th), th);
        }
    }

    json rows = json::array();
    std::ostringstream table;

    for (const auto& stat : selected_statistics(which, mu)) {
        const NullDistribution dist = simulate_null(stat, n, reps, seed);
        table << "power of " << statistic_label(stat) << ": n = " << n << ", reps = " << reps
              << ", seed = " << seed << "\n  family        theta";
        for (double a : alphas) {
            char h[32];
            std::snprintf(h, sizeof h, "  alpha=%-5g", a);
            table << h;
        }
        table << "\n";

        for (const auto& [model, th] : cells) {
            const std::vector<double> alt = simulate_alternative(model, stat, n, reps, seed);
            char head[64];
            std::snprintf(head, sizeof head, "  %-12s  %5.3g", model.name().c_str(), th);
            table << head;
            for (double a : alphas) {
                const double crit = critical_value(dist, a);
                std::size_t rejected = 0;
                for (double v : alt) rejected += v > crit;
                const double pw = static_cast<double>(rejected) / reps;
                rows.push_back({{"statistic", stat.name()},
                                {"family", model.name()},
                                {"theta", th},
                                {"alpha", a},
                                {"power", pw}});
                char cell[32];
                std::snprintf(cell, sizeof cell, "  %11.4f", pw);
                table << cell;
            }
            table << "\n";
        }
    }

    const json report = {{"command", "power"}, {"n", n},       {"mu", mu},
                         {"reps", reps},       {"seed", seed}, {"rows", rows}};
    emit(report, format, table.str());
    return 0;
}

// ---- efficiency --------------------------------------------------------------

int cmd_efficiency(const std::string& which, double mu, double beta, bool lao,
                   const std::string& format) {
    json rows = json::array();
    std::ostringstream table;

    const std::vector<AlternativeModel> models = {
        AlternativeModel::weibull(0.0), AlternativeModel::gamma(0.0),
        AlternativeModel::emnw(0.0, beta), AlternativeModel::verhulst(0.0)};

    for (const auto& stat : selected_statistics(which, mu)) {
        table << "local Bahadur efficiency, statistic " << statistic_label(stat) << "\n";
        table << "  alternative      b          slope      kl         efficiency\n";
        auto add_row = [&](const EfficiencyReport& r) {
            rows.push_back({{"statistic", stat.name()},
                            {"alternative", r.alternative},
                            {"b_coeff", r.b_coeff},
                            {"slope_coeff", r.slope_coeff},
                            {"kl_coeff", r.kl_coeff},
                            {"efficiency", r.efficiency}});
            char line[128];
            std::snprintf(line, sizeof line, "  %-14s %9.4f  %9.4f  %9.4f  %9.4f\n",
                          r.alternative.c_str(), r.b_coeff, r.slope_coeff, r.kl_coeff,
                          r.efficiency);
            table << line;
        };
        for (const auto& model : models) add_row(bahadur_efficiency(model, stat));
        if (lao) add_row(bahadur_efficiency(lao_alternative(stat)));
    }

    const json report = {{"command", "efficiency"},
                         {"mu", mu},
                         {"quad_abs_tol", 1e-10},
                         {"quad_rel_tol", 1e-10},
                         {"rows", rows}};
    emit(report, format, table.str());
    return 0;
}

// ---- simulate ------------------------------------------------------------------

int cmd_simulate(const std::string& family, double theta, double beta, int n,
                 std::uint64_t seed, const std::optional<std::string>& output) {
    const AlternativeModel model = make_model(family, theta, beta);
    RngStream rng = derive_stream(seed, stream_purpose::data_gen, 0);
    const Sample sample = model.sample(static_cast<std::size_t>(n), rng);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (output) {
        file.open(*output);
        if (!file) throw CliError{kExitInput, "cannot open output file: " + *output};
        out = &file;
    }

    char buf[64];
    std::snprintf(buf, sizeof buf, "# family=%s theta=%g n=%d seed=%llu\n", model.name().c_str(),
                  theta, n, static_cast<unsigned long long>(seed));
    *out << buf;
    for (double v : sample.values()) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        *out << buf;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit tests for exponentiality based on the F(2,2) ratio law"};
    app.require_subcommand(1);

    std::string input, which = "both", format = "table", family;
    std::optional<std::string> opt_family, output;
    double mu = 2.0, theta = 0.0, beta = 3.0;
    int n = 100, reps = 10000;
    std::uint64_t seed = 12345;
    std::vector<int> ns = {10, 20, 30, 40, 50, 100};
    std::vector<double> alphas = {0.1, 0.05, 0.01};
    bool lao = false;

    auto* test = app.add_subcommand("test", "Test a data file for exponentiality");
    test->add_option("--input", input, "input file, one positive value per line")->required();
    test->add_option("--statistic", which, "w, d or both")->capture_default_str();
    test->add_option("--mu", mu, "weight parameter of W")->capture_default_str();
    test->add_option("--reps", reps, "Monte Carlo replications")->capture_default_str();
    test->add_option("--seed", seed, "RNG seed")->capture_default_str();
    test->add_option("--format", format, "table or json")->capture_default_str();

    auto* crit = app.add_subcommand("critical-values", "Simulated critical-value grid");
    crit->add_option("--statistic", which, "w, d or both")->capture_default_str();
    crit->add_option("--mu", mu)->capture_default_str();
    crit->add_option("--n", ns, "sample sizes")->capture_default_str();
    crit->add_option("--alpha", alphas, "significance levels")->capture_default_str();
    crit->add_option("--reps", reps)->capture_default_str();
    crit->add_option("--seed", seed)->capture_default_str();
    crit->add_option("--format", format)->capture_default_str();

    auto* pow = app.add_subcommand("power", "Simulated power against alternatives");
    pow->add_option("--family", opt_family,
                    "weibull, gamma, emnw, verhulst, kotlarski1..3; omit for the full grid");
    pow->add_option("--theta", theta)->capture_default_str();
    pow->add_option("--beta", beta)->capture_default_str();
    pow->add_option("--statistic", which)->capture_default_str();
    pow->add_option("--mu", mu)->capture_default_str();
    pow->add_option("--n", n)->capture_default_str();
    pow->add_option("--alpha", alphas)->capture_default_str();
    pow->add_option("--reps", reps)->capture_default_str();
    pow->add_option("--seed", seed)->capture_default_str();
    pow->add_option("--format", format)->capture_default_str();

    auto* eff = app.add_subcommand("efficiency", "Local Bahadur efficiency tables");
    eff->add_option("--statistic", which)->capture_default_str();
    eff->add_option("--mu", mu)->capture_default_str();
    eff->add_option("--beta", beta)->capture_default_str();
    eff->add_flag("--lao", lao, "include the locally optimal perturbation families");
    eff->add_option("--format", format)->capture_default_str();

    auto* sim = app.add_subcommand("simulate", "Draw a sample from an alternative model");
    sim->add_option("--family", family, "model family")->required();
    sim->add_option("--theta", theta)->capture_default_str();
    sim->add_option("--beta", beta)->capture_default_str();
    sim->add_option("--n", n)->required();
    sim->add_option("--seed", seed)->capture_default_str();
    sim->add_option("--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if ((test->parsed() || crit->parsed() || pow->parsed()) && reps < 1000)
            throw CliError{kExitInput, "--reps must be at least 1000"};
        if (test->parsed()) return cmd_test(input, which, mu, reps, seed, format);
        if (crit->parsed())
            return cmd_critical_values(which, mu, ns, alphas, reps, seed, format);
        if (pow->parsed())
            return cmd_power(opt_family, theta, beta, which, mu, n, alphas, reps, seed, format);
        if (eff->parsed()) return cmd_efficiency(which, mu, beta, lao, format);
        if (sim->parsed()) return cmd_simulate(family, theta, beta, n, seed, output);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const convergence_error& e) {
        std::cerr << "numeric error: " << e.what() << " (best estimate " << e.best_estimate()
                  << ", error bound " << e.error_bound() << ")\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
