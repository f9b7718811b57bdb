#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/norms.hpp"

namespace modspace {

/// Shared configuration for the experiment subcommands. Identical config and
/// seed produce byte-identical CSV output.
struct ExperimentConfig {
    int n = 4096;
    double spacing = 32.0 / 4096.0;
    std::optional<double> p; // unset: subcommand default sweep
    std::optional<double> q;
    double radius = 1.0;
    std::vector<double> lambdas = {1, 2, 4, 8, 16, 32, 64};
    enum class Window { Gaussian, Plateau } window = Window::Gaussian;
    std::uint64_t seed = 42;
    std::string out; // empty: stdout, no .dat sidecar
    int family_size = 10;

    /// Throws ParameterError on invalid overrides (usage error, exit code 2).
    void validate() const;
    Grid grid() const;
};

/// Exit codes: 0 all assertions pass, 1 an assertion failed,
/// 2 usage/config error (thrown as ParameterError).
int cmd_local_equivalence(const ExperimentConfig& cfg, std::ostream& os);
int cmd_covariance(const ExperimentConfig& cfg, std::ostream& os);
int cmd_blowup(const ExperimentConfig& cfg, std::ostream& os);
int cmd_piecewise(const ExperimentConfig& cfg, std::ostream& os);
int cmd_multiplier(const ExperimentConfig& cfg, std::ostream& os);

/// Runs a subcommand by name, handling --out/.dat emission.
/// Returns the exit code; unknown names throw ParameterError.
int run_experiment(const std::string& name, const ExperimentConfig& cfg);

/// Regression bound for the piecewise sweep (phi(x)=|x|, default family):
/// reference run at n=4096 gave max ratio 2.142 (p=1) and 1.205 (p=2).
constexpr double kPiecewiseRegressionBound = 3.0;

/// Deterministic float formatting used in all CSV output.
std::string csv_num(double v);

} // namespace modspace
