// modspace — time-frequency analysis experiments on modulation spaces.
//
// Subcommands package the full-scale experiments: local norm equivalence,
// affine STFT covariance, nonlinear blowup sweeps, piecewise-affine
// boundedness, and Fourier multiplier checks. Output is CSV (plus a
// gnuplot-friendly .dat when --out is given).
//
// Exit codes: 0 all assertions pass, 1 an assertion failed, 2 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modspace/experiments.hpp"

namespace {

double parse_exponent(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF")
        return modspace::inf;
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw modspace::ParameterError("invalid exponent '" + s +
                                       "' (expected a numeral or 'inf')");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modspace: modulation-space norm experiments"};
    app.require_subcommand(1);

    modspace::ExperimentConfig cfg;
    std::string p_str, q_str, lambdas_str, window_str = "gaussian";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "samples per axis (power of two)");
        sub->add_option("--spacing", cfg.spacing, "sample spacing");
        sub->add_option("--p", p_str, "inner exponent p (numeral or 'inf')");
        sub->add_option("--q", q_str, "outer exponent q (numeral or 'inf')");
        sub->add_option("--radius", cfg.radius, "support radius R of the test family");
        sub->add_option("--lambdas", lambdas_str, "comma-separated lambda sweep");
        sub->add_option("--window", window_str, "window: gaussian|plateau");
        sub->add_option("--seed", cfg.seed, "seed for the randomized test family");
        sub->add_option("--out", cfg.out, "output CSV path (default stdout)");
        sub->add_option("--family-size", cfg.family_size, "test family size");
    };

    for (const char* name : {"local-equivalence", "covariance", "blowup",
                             "piecewise", "multiplier"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // all usage errors share one exit code
    }

    try {
        if (!p_str.empty()) cfg.p = parse_exponent(p_str);
        if (!q_str.empty()) cfg.q = parse_exponent(q_str);
        if (!lambdas_str.empty()) {
            cfg.lambdas.clear();
            std::istringstream ss(lambdas_str);
            std::string tok;
            while (std::getline(ss, tok, ','))
                cfg.lambdas.push_back(parse_exponent(tok));
        }
        if (window_str == "plateau")
            cfg.window = modspace::ExperimentConfig::Window::Plateau;
        else if (window_str == "gaussian")
            cfg.window = modspace::ExperimentConfig::Window::Gaussian;
        else
            throw modspace::ParameterError("invalid --window '" + window_str + "'");

        return modspace::run_experiment(app.get_subcommands().front()->get_name(), cfg);
    } catch (const modspace::ParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
