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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wptsim/experiments.hpp"
#include "wptsim/version.hpp"

namespace {

unsigned thread_cap_from_env() {
    const char* env = std::getenv("WPTSIM_THREADS");
    if (env == nullptr) return 0;
    const long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(wptsim::tool_version) +
                 " - scheduling experiments for far-field wireless power transfer"};
    app.require_subcommand(1);

    std::string experiment;
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    std::uint64_t slots = 0;
    bool check = false;

    CLI::App* run = app.add_subcommand("run", "run one experiment and write CSV/plot data");
    run->add_option("experiment", experiment,
                    "one of: fig5 fig6 fig7 fig8 gof_gumbel gof_frechet vonmises")
        ->required();
    run->add_option("--config", config_path, "JSON config file ({params, grid, run} sections)");
    run->add_option("--out", out_dir, "output directory")->capture_default_str();
    auto* seed_opt = run->add_option("--seed", seed, "override the run seed");
    auto* slots_opt = run->add_option("--slots", slots, "override slots per grid point");
    run->add_flag("--check", check, "assert the experiment's tolerance thresholds (exit 4 on "
                                    "failure)");

    CLI11_PARSE(app, argc, argv);

    wptsim::ExperimentConfig cfg;
    try {
        cfg = config_path.empty() ? wptsim::default_config()
                                  : wptsim::validate_config(config_path);
    } catch (const wptsim::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return static_cast<int>(wptsim::RunStatus::config_error);
    }
    if (seed_opt->count() > 0) cfg.seed = seed;
    if (slots_opt->count() > 0) cfg.slots_override = slots;

    const unsigned cap = thread_cap_from_env();
    if (cap != 0 && (cfg.threads == 0 || cfg.threads > cap)) cfg.threads = cap;

    const wptsim::RunStatus status =
        wptsim::run_experiment(experiment, cfg, out_dir, check, std::cout);
    return static_cast<int>(status);
}
