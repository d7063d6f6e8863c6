// SPDX-License-Identifier: Apache-2.0
//
// wptsim - multi-user scheduling simulator for far-field wireless power transfer
// Copyright (C) 2026 wptsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#ifndef WPTSIM_EXPERIMENTS_HPP
#define WPTSIM_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wptsim/core.hpp"

namespace wptsim {

/// One CSV row binding a configuration point, its simulated value and the
/// matching analytic value. d_m is blank for heterogeneous placements;
/// analytic_value_w and rel_err are blank where no closed form applies.
struct ExperimentRecord {
    std::string experiment;
    std::string scheduler;
    std::string scenario;
    std::uint64_t n_ues = 0;
    double p_dbm = 0.0;
    std::optional<double> d_m;
    double sim_value_w = 0.0;
    std::optional<double> analytic_value_w;
    std::optional<double> rel_err;
    std::uint64_t seed = 0;
};

/// `experiment,scheduler,scenario,n_ues,p_dbm,d_m,sim_value_w,analytic_value_w,rel_err,seed`
std::string csv_header();
std::string to_csv_row(const ExperimentRecord& r);
ExperimentRecord parse_csv_row(const std::string& line);

/// Normalized experiment grid. Defaults reproduce the standard setting:
/// annulus 2..30 m, alpha 4, N = 1..50, P = 43..53 dBm, probe distances
/// {2, 10, 30} m.
struct ExperimentConfig {
    SystemParams params;                 ///< p_erp is overridden per grid point
    std::vector<std::uint64_t> n_grid;   ///< user counts
    std::vector<double> p_dbm_grid;      ///< beacon powers [dBm]
    std::vector<double> d_grid_m;        ///< homogeneous probe distances [m]
    std::uint64_t seed = 20150327;
    std::uint64_t slots_override = 0;    ///< 0 = per-experiment default
    unsigned threads = 0;                ///< 0 = hardware default
};

/// Carries every violation found in a config file, not just the first.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> violations);
    [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

ExperimentConfig default_config();

/// Parses and validates a JSON config with sections {params, grid, run}.
/// Unknown keys are errors. Throws ConfigError listing all problems.
ExperimentConfig validate_config(const std::filesystem::path& config_path);

/// Validates an in-memory JSON document (the file loader's core).
ExperimentConfig validate_config_json(const std::string& json_text);

/// FNV-1a over the canonical serialized config; stable across runs.
std::uint64_t config_hash(const ExperimentConfig& cfg);

/// Process exit codes of the experiment runner.
enum class RunStatus : int {
    ok = 0,
    usage_error = 1,  ///< unknown experiment name
    config_error = 2, ///< unparseable or invalid configuration
    io_error = 3,     ///< output directory or file not writable
    check_failed = 4, ///< a --check threshold was violated
};

inline const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "fig5", "fig6", "fig7", "fig8", "gof_gumbel", "gof_frechet", "vonmises"};
    return names;
}

/// Runs one named experiment: writes <name>.csv, one two-column .dat file
/// per curve, and <name>_manifest.json into out_dir. With `check`, also
/// evaluates the experiment's tolerance assertions and reports failures on
/// `log`.
RunStatus run_experiment(const std::string& name, const ExperimentConfig& cfg,
                         const std::filesystem::path& out_dir, bool check, std::ostream& log);

} // namespace wptsim

#endif // WPTSIM_EXPERIMENTS_HPP
