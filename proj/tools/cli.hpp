#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgidecay/amplitude.hpp"
#include "lgidecay/correlators.hpp"

namespace lgidecay::cli {

// exit-code contract: 0 success, 1 config error, 2 numerical-tolerance failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitTolerance = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key=value run configuration; every key can also be given on the
/// command line as `--key value`. Unknown keys are rejected by name.
struct RunConfig {
    LorentzianSpectrum spectrum{0.1, 5.0, 0.0, 1.0};
    QubitState state{Complex(1.0 / std::numbers::sqrt2, 0.0),
                     Complex(1.0 / std::numbers::sqrt2, 0.0)};
    double t1 = 0.0;
    double tau_min = -1.0; // unset: sample (0, tau_max]; >= 0: inclusive [tau_min, tau_max]
    double tau_max = 0.0;  // 0 means 2*pi/omega0
    std::size_t tau_points = 400;
    int order = 4;
    SolverConfig solver{1e-3, 10.0, SolverMethod::Analytic};
    std::size_t n_modes = 2000;
    double half_width = 0.0; // 0 means 20*lambda
    double tolerance = 1e-3;
    std::string figure;
    std::string out = ".";

    std::vector<double> tau_grid() const;
    void validate() const;
};

/// Apply one key=value setting; throws ConfigError naming the offending key.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parse a `key=value` file ('#' comments, blank lines ignored).
void load_config_file(RunConfig& cfg, const std::string& path);

int cmd_amplitude(const RunConfig& cfg);
int cmd_lgi(const RunConfig& cfg);
int cmd_figure(const RunConfig& cfg);
int cmd_oracle_check(const RunConfig& cfg);

/// Full driver: argv without the program name. Catches errors and maps them
/// onto the exit-code contract.
int run(const std::vector<std::string>& args);

} // namespace lgidecay::cli
