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

#include "wptsim/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wptsim/analytic.hpp"
#include "wptsim/sim.hpp"
#include "wptsim/version.hpp"

namespace wptsim {

namespace {

using nlohmann::json;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoFailure("write to " + path.string() + " failed");
}

} // namespace

// --- CSV ---------------------------------------------------------------------

std::string csv_header() {
    return "experiment,scheduler,scenario,n_ues,p_dbm,d_m,sim_value_w,analytic_value_w,rel_err,"
           "seed";
}

std::string to_csv_row(const ExperimentRecord& r) {
    std::ostringstream out;
    out << r.experiment << ',' << r.scheduler << ',' << r.scenario << ',' << r.n_ues << ','
        << fmt9(r.p_dbm) << ',';
    if (r.d_m) out << fmt9(*r.d_m);
    out << ',' << fmt9(r.sim_value_w) << ',';
    if (r.analytic_value_w) out << fmt9(*r.analytic_value_w);
    out << ',';
    if (r.rel_err) out << fmt9(*r.rel_err);
    out << ',' << r.seed;
    return out.str();
}

ExperimentRecord parse_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 10)
        throw std::invalid_argument("csv row: expected 10 fields, got " +
                                    std::to_string(fields.size()));
    ExperimentRecord r;
    r.experiment = fields[0];
    r.scheduler = fields[1];
    r.scenario = fields[2];
    r.n_ues = std::stoull(fields[3]);
    r.p_dbm = std::stod(fields[4]);
    if (!fields[5].empty()) r.d_m = std::stod(fields[5]);
    r.sim_value_w = std::stod(fields[6]);
    if (!fields[7].empty()) r.analytic_value_w = std::stod(fields[7]);
    if (!fields[8].empty()) r.rel_err = std::stod(fields[8]);
    r.seed = std::stoull(fields[9]);
    return r;
}

// --- configuration -------------------------------------------------------------

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error([&violations] {
          std::string msg = "configuration rejected:";
          for (const auto& v : violations) msg += "\n  - " + v;
          return msg;
      }()),
      violations_(std::move(violations)) {}

ExperimentConfig default_config() {
    ExperimentConfig cfg;
    cfg.params.p_erp = dbm_to_watts(50.0);
    for (std::uint64_t n = 1; n <= 50; ++n) cfg.n_grid.push_back(n);
    for (int p = 43; p <= 53; ++p) cfg.p_dbm_grid.push_back(static_cast<double>(p));
    cfg.d_grid_m = {2.0, 10.0, 30.0};
    return cfg;
}

namespace {

void reject_unknown_keys(const json& obj, const std::string& section,
                         std::initializer_list<const char*> known,
                         std::vector<std::string>& violations) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find_if(known.begin(), known.end(),
                         [&key](const char* k) { return key == k; }) == known.end())
            violations.push_back(section + ": unknown key '" + key + "'");
    }
}

std::optional<double> read_number(const json& obj, const std::string& section, const char* key,
                                  std::vector<std::string>& violations) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj[key].is_number()) {
        violations.push_back(section + "." + key + ": expected a number");
        return std::nullopt;
    }
    return obj[key].get<double>();
}

} // namespace

ExperimentConfig validate_config_json(const std::string& json_text) {
    std::vector<std::string> violations;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("config: not valid JSON: ") + e.what()});
    }
    if (!doc.is_object()) throw ConfigError({"config: top level must be a JSON object"});

    ExperimentConfig cfg = default_config();
    reject_unknown_keys(doc, "config", {"params", "grid", "run"}, violations);

    if (doc.contains("params")) {
        const json& pj = doc["params"];
        if (!pj.is_object()) {
            violations.emplace_back("params: must be an object");
        } else {
            reject_unknown_keys(
                pj, "params",
                {"r_ex", "r_net", "alpha", "beta", "sigma_h2", "xi", "i_s", "rho", "v_t"},
                violations);
            auto set = [&](const char* key, double& target) {
                if (auto v = read_number(pj, "params", key, violations)) target = *v;
            };
            set("r_ex", cfg.params.r_ex);
            set("r_net", cfg.params.r_net);
            set("alpha", cfg.params.alpha);
            set("beta", cfg.params.beta);
            set("sigma_h2", cfg.params.sigma_h2);
            set("xi", cfg.params.xi);
            set("i_s", cfg.params.i_s);
            set("rho", cfg.params.rho);
            set("v_t", cfg.params.v_t);
        }
    }

    if (doc.contains("grid")) {
        const json& gj = doc["grid"];
        if (!gj.is_object()) {
            violations.emplace_back("grid: must be an object");
        } else {
            reject_unknown_keys(gj, "grid", {"n_ues", "p_dbm", "d_m"}, violations);
            if (gj.contains("n_ues")) {
                if (!gj["n_ues"].is_array() || gj["n_ues"].empty()) {
                    violations.emplace_back("grid.n_ues: expected a nonempty array of counts");
                } else {
                    cfg.n_grid.clear();
                    for (const auto& v : gj["n_ues"]) {
                        if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
                            violations.emplace_back("grid.n_ues: entries must be integers >= 1");
                        else
                            cfg.n_grid.push_back(v.get<std::uint64_t>());
                    }
                }
            }
            if (gj.contains("p_dbm")) {
                if (!gj["p_dbm"].is_array() || gj["p_dbm"].empty()) {
                    violations.emplace_back("grid.p_dbm: expected a nonempty array of numbers");
                } else {
                    cfg.p_dbm_grid.clear();
                    for (const auto& v : gj["p_dbm"]) {
                        if (!v.is_number())
                            violations.emplace_back("grid.p_dbm: entries must be numbers");
                        else
                            cfg.p_dbm_grid.push_back(v.get<double>());
                    }
                }
            }
            if (gj.contains("d_m")) {
                if (!gj["d_m"].is_array() || gj["d_m"].empty()) {
                    violations.emplace_back("grid.d_m: expected a nonempty array of numbers");
                } else {
                    cfg.d_grid_m.clear();
                    for (const auto& v : gj["d_m"]) {
                        if (!v.is_number())
                            violations.emplace_back("grid.d_m: entries must be numbers");
                        else
                            cfg.d_grid_m.push_back(v.get<double>());
                    }
                }
            }
        }
    }

    if (doc.contains("run")) {
        const json& rj = doc["run"];
        if (!rj.is_object()) {
            violations.emplace_back("run: must be an object");
        } else {
            reject_unknown_keys(rj, "run", {"seed", "slots", "threads"}, violations);
            auto set_uint = [&](const char* key, auto& target) {
                if (!rj.contains(key)) return;
                if (!rj[key].is_number_unsigned() && !rj[key].is_number_integer()) {
                    violations.push_back(std::string("run.") + key +
                                         ": expected a nonnegative integer");
                    return;
                }
                if (rj[key].is_number_integer() && rj[key].get<std::int64_t>() < 0) {
                    violations.push_back(std::string("run.") + key +
                                         ": expected a nonnegative integer");
                    return;
                }
                target = rj[key].get<std::remove_reference_t<decltype(target)>>();
            };
            set_uint("seed", cfg.seed);
            set_uint("slots", cfg.slots_override);
            set_uint("threads", cfg.threads);
        }
    }

    // Zero-filled p_erp placeholder: the grid supplies it per point, but the
    // invariant check needs a positive value.
    cfg.params.p_erp = dbm_to_watts(cfg.p_dbm_grid.empty() ? 50.0 : cfg.p_dbm_grid.front());
    for (const auto& msg : cfg.params.validate()) violations.push_back(msg);
    for (double d : cfg.d_grid_m) {
        if (!(d >= cfg.params.r_ex && d <= cfg.params.r_net))
            violations.push_back("grid.d_m: probe distance " + fmt9(d) +
                                 " outside the annulus [r_ex, r_net]");
    }
    for (double p : cfg.p_dbm_grid) {
        if (!std::isfinite(p)) violations.emplace_back("grid.p_dbm: entries must be finite");
    }

    if (!violations.empty()) throw ConfigError(std::move(violations));
    return cfg;
}

ExperimentConfig validate_config(const std::filesystem::path& config_path) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw ConfigError({"config: cannot read file " + config_path.string()});
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) text = "{}";
    return validate_config_json(text);
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
    json j;
    j["params"] = {{"r_ex", cfg.params.r_ex},     {"r_net", cfg.params.r_net},
                   {"alpha", cfg.params.alpha},   {"beta", cfg.params.beta},
                   {"sigma_h2", cfg.params.sigma_h2}, {"xi", cfg.params.xi},
                   {"i_s", cfg.params.i_s},       {"rho", cfg.params.rho},
                   {"v_t", cfg.params.v_t}};
    j["grid"] = {{"n_ues", cfg.n_grid}, {"p_dbm", cfg.p_dbm_grid}, {"d_m", cfg.d_grid_m}};
    j["run"] = {{"seed", cfg.seed}, {"slots", cfg.slots_override}, {"threads", cfg.threads}};
    const std::string canonical = j.dump();
    std::uint64_t h = 0xCBF29CE484222325ULL; // FNV-1a 64
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

// --- experiment plumbing --------------------------------------------------------

namespace {

using Curve = std::vector<std::array<double, 2>>;

struct ExperimentOutput {
    std::vector<ExperimentRecord> records;
    std::vector<std::pair<std::string, Curve>> curves;
    json manifest_extra = json::object();
    std::map<std::string, std::uint64_t> slot_counts;
    std::vector<std::string> check_failures;
};

ExperimentRecord make_record(std::string experiment, std::string scheduler, std::string scenario,
                             std::uint64_t n, double p_dbm, std::optional<double> d_m, double sim,
                             std::optional<double> analytic, std::uint64_t seed) {
    ExperimentRecord r;
    r.experiment = std::move(experiment);
    r.scheduler = std::move(scheduler);
    r.scenario = std::move(scenario);
    r.n_ues = n;
    r.p_dbm = p_dbm;
    r.d_m = d_m;
    r.sim_value_w = sim;
    r.analytic_value_w = analytic;
    if (analytic && *analytic != 0.0) r.rel_err = std::abs(sim - *analytic) / *analytic;
    r.seed = seed;
    return r;
}

struct Runner {
    const ExperimentConfig& cfg;
    bool check;

    [[nodiscard]] std::uint64_t slots_or(std::uint64_t fallback) const {
        return cfg.slots_override != 0 ? cfg.slots_override : fallback;
    }

    [[nodiscard]] SimStats simulate(const SystemParams& params, Scenario scenario,
                                    Scheduler scheduler, std::uint64_t n_ues,
                                    std::uint64_t n_slots, bool collect = false) const {
        SimConfig sim_cfg;
        sim_cfg.params = params;
        sim_cfg.scenario = scenario;
        sim_cfg.scheduler = scheduler;
        sim_cfg.n_ues = static_cast<std::uint32_t>(n_ues);
        sim_cfg.n_slots = n_slots;
        sim_cfg.seed = cfg.seed;
        sim_cfg.collect_samples = collect;
        return run_simulation(sim_cfg, cfg.threads);
    }

    [[nodiscard]] SystemParams params_at(double p_dbm) const {
        SystemParams p = cfg.params;
        p.p_erp = dbm_to_watts(p_dbm);
        return p;
    }

    void expect(ExperimentOutput& out, bool ok, const std::string& what) const {
        if (check && !ok) out.check_failures.push_back(what);
    }
};

// Slot budgets giving roughly constant compute per grid point for max-of-n
// sampling.
std::uint64_t per_point_slots(std::uint64_t budget, std::uint64_t n, std::uint64_t floor_slots) {
    return std::max<std::uint64_t>(budget / std::max<std::uint64_t>(n, 1), floor_slots);
}

ExperimentOutput run_fig5(const Runner& run) {
    ExperimentOutput out;
    const auto& cfg = run.cfg;
    const std::uint64_t hom_slots = run.slots_or(1'000'000);
    const std::uint64_t het_slots = run.slots_or(4'000'000);
    out.slot_counts["hom_per_point"] = hom_slots;
    out.slot_counts["het_per_point"] = het_slots;

    auto hom_curve_pair = [&](double d, const std::string& stem) {
        Curve sim_curve, ana_curve;
        for (double p_dbm : cfg.p_dbm_grid) {
            const SystemParams params = run.params_at(p_dbm);
            const SimStats stats = run.simulate(params, Scenario::homogeneous(d),
                                                Scheduler::round_robin, 1, hom_slots);
            const double analytic = avg_rr_hom(params, d);
            out.records.push_back(make_record("fig5", "rr", "hom", 1, p_dbm, d,
                                              stats.avg_delivered_power, analytic, cfg.seed));
            sim_curve.push_back({p_dbm, watts_to_dbm(stats.avg_delivered_power)});
            ana_curve.push_back({p_dbm, watts_to_dbm(analytic)});
            run.expect(out, *out.records.back().rel_err < 0.01,
                       "fig5 " + stem + " P=" + fmt9(p_dbm) +
                           " dBm: sim vs closed form rel_err=" + fmt9(*out.records.back().rel_err) +
                           " exceeds 0.01");
        }
        out.curves.emplace_back(stem + "_sim", std::move(sim_curve));
        out.curves.emplace_back(stem + "_analytic", std::move(ana_curve));
    };

    for (double d : cfg.d_grid_m) hom_curve_pair(d, "fig5_hom_d" + fmt9(d));

    // Homogeneous run at the equivalent distance; its reference value is the
    // wide-annulus heterogeneous approximation it was built to match.
    const double dbar = equivalent_distance(cfg.params);
    {
        Curve sim_curve, ana_curve;
        for (double p_dbm : cfg.p_dbm_grid) {
            const SystemParams params = run.params_at(p_dbm);
            const SimStats stats = run.simulate(params, Scenario::homogeneous(dbar),
                                                Scheduler::round_robin, 1, hom_slots);
            const double analytic = avg_rr_het_approx(params);
            out.records.push_back(make_record("fig5", "rr", "hom", 1, p_dbm, dbar,
                                              stats.avg_delivered_power, analytic, cfg.seed));
            sim_curve.push_back({p_dbm, watts_to_dbm(stats.avg_delivered_power)});
            ana_curve.push_back({p_dbm, watts_to_dbm(analytic)});
            run.expect(out, *out.records.back().rel_err < 0.01,
                       "fig5 equivalent-distance P=" + fmt9(p_dbm) +
                           " dBm: rel_err=" + fmt9(*out.records.back().rel_err) + " exceeds 0.01");
        }
        out.curves.emplace_back("fig5_hom_dbar_sim", std::move(sim_curve));
        out.curves.emplace_back("fig5_hom_dbar_analytic", std::move(ana_curve));
    }

    {
        Curve sim_curve, ana_curve;
        for (double p_dbm : cfg.p_dbm_grid) {
            const SystemParams params = run.params_at(p_dbm);
            const SimStats stats = run.simulate(params, Scenario::heterogeneous(),
                                                Scheduler::round_robin, 1, het_slots);
            const double analytic = avg_rr_het(params);
            out.records.push_back(make_record("fig5", "rr", "het", 1, p_dbm, std::nullopt,
                                              stats.avg_delivered_power, analytic, cfg.seed));
            sim_curve.push_back({p_dbm, watts_to_dbm(stats.avg_delivered_power)});
            ana_curve.push_back({p_dbm, watts_to_dbm(analytic)});
            run.expect(out, *out.records.back().rel_err < 0.03,
                       "fig5 het P=" + fmt9(p_dbm) +
                           " dBm: rel_err=" + fmt9(*out.records.back().rel_err) + " exceeds 0.03");
        }
        out.curves.emplace_back("fig5_het_sim", std::move(sim_curve));
        out.curves.emplace_back("fig5_het_analytic", std::move(ana_curve));
    }

    out.manifest_extra["equivalent_distance_m"] = dbar;
    return out;
}

ExperimentOutput run_fig6(const Runner& run) {
    ExperimentOutput out;
    const auto& cfg = run.cfg;
    const double d_ref = 10.0;
    const double p_dbm = 50.0;
    const SystemParams params = run.params_at(p_dbm);
    Scenario scenario = Scenario::homogeneous(d_ref);
    scenario.require_valid(params);

    Curve sim_curve, exact_curve, asym_curve, scaling_curve;
    for (std::uint64_t n : cfg.n_grid) {
        const std::uint64_t slots =
            cfg.slots_override != 0 ? cfg.slots_override : per_point_slots(2'000'000, n, 50'000);
        out.slot_counts["n" + std::to_string(n)] = slots;
        const SimStats stats = run.simulate(params, scenario, Scheduler::opportunistic, n, slots);
        const double exact = avg_os_hom_exact(params, d_ref, n);
        const double asym = avg_os_hom_asymptotic(params, d_ref, n);
        // The pure ln(n) scaling value degenerates to zero at n = 1; the
        // single-user point falls back to the full asymptotic mean.
        const double scaling =
            n == 1 ? asym : gumbel_constants(params, d_ref, n).b1 * std::log(static_cast<double>(n));
        out.records.push_back(make_record("fig6", "os", "hom", n, p_dbm, d_ref,
                                          stats.avg_delivered_power, exact, cfg.seed));
        out.records.push_back(make_record("fig6_asymptote", "os", "hom", n, p_dbm, d_ref,
                                          stats.avg_delivered_power, asym, cfg.seed));
        sim_curve.push_back({static_cast<double>(n), stats.avg_delivered_power * 1e3});
        exact_curve.push_back({static_cast<double>(n), exact * 1e3});
        asym_curve.push_back({static_cast<double>(n), asym * 1e3});
        scaling_curve.push_back({static_cast<double>(n), scaling * 1e3});
        if (n == 2 || n == 10 || n == 50) {
            const double rel = std::abs(stats.avg_delivered_power - exact) / exact;
            run.expect(out, rel < 0.01,
                       "fig6 N=" + std::to_string(n) + ": sim vs harmonic-number mean rel_err=" +
                           fmt9(rel) + " exceeds 0.01");
        }
        if (n >= 50) {
            const double gap = std::abs(asym - exact) / exact;
            run.expect(out, gap < 0.003,
                       "fig6 N=" + std::to_string(n) +
                           ": asymptotic vs exact mean gap=" + fmt9(gap) + " exceeds 0.003");
        }
    }
    out.curves.emplace_back("fig6_sim", std::move(sim_curve));
    out.curves.emplace_back("fig6_exact", std::move(exact_curve));
    out.curves.emplace_back("fig6_asymptote", std::move(asym_curve));
    out.curves.emplace_back("fig6_scaling_law", std::move(scaling_curve));
    out.manifest_extra["d_m"] = d_ref;
    out.manifest_extra["p_dbm"] = p_dbm;
    return out;
}

ExperimentOutput run_fig7(const Runner& run) {
    ExperimentOutput out;
    const auto& cfg = run.cfg;
    const std::array<double, 2> levels = {43.0, 50.0};
    std::map<std::uint64_t, std::array<double, 2>> sim_by_n;

    for (std::size_t li = 0; li < levels.size(); ++li) {
        const double p_dbm = levels[li];
        const SystemParams params = run.params_at(p_dbm);
        Curve sim_curve, oracle_curve, scaling_curve;
        for (std::uint64_t n : cfg.n_grid) {
            const std::uint64_t slots = cfg.slots_override != 0
                                            ? cfg.slots_override
                                            : per_point_slots(5'000'000, n, 100'000);
            out.slot_counts["p" + fmt9(p_dbm) + "_n" + std::to_string(n)] = slots;
            const SimStats stats =
                run.simulate(params, Scenario::heterogeneous(), Scheduler::opportunistic, n, slots);
            const double oracle = mean_os_het_numeric(params, n, 1e-8);
            const double b2 = frechet_scale(params, n).b2;
            out.records.push_back(make_record("fig7", "os", "het", n, p_dbm, std::nullopt,
                                              stats.avg_delivered_power, oracle, cfg.seed));
            out.records.push_back(make_record("fig7_scaling", "os", "het", n, p_dbm, std::nullopt,
                                              stats.avg_delivered_power, b2, cfg.seed));
            sim_curve.push_back({static_cast<double>(n), stats.avg_delivered_power * 1e3});
            oracle_curve.push_back({static_cast<double>(n), oracle * 1e3});
            scaling_curve.push_back({static_cast<double>(n), b2 * 1e3});
            sim_by_n[n][li] = stats.avg_delivered_power;
            if (n == 2 || n == 5 || n == 10) {
                const double rel = std::abs(stats.avg_delivered_power - oracle) / oracle;
                run.expect(out, rel < 0.03,
                           "fig7 P=" + fmt9(p_dbm) + " N=" + std::to_string(n) +
                               ": sim vs order-statistic mean rel_err=" + fmt9(rel) +
                               " exceeds 0.03");
            }
        }
        const std::string suffix = "_p" + fmt9(p_dbm);
        out.curves.emplace_back("fig7_sim" + suffix, std::move(sim_curve));
        out.curves.emplace_back("fig7_oracle" + suffix, std::move(oracle_curve));
        out.curves.emplace_back("fig7_scaling" + suffix, std::move(scaling_curve));
    }

    // Transmit-power linearity: raising the beacon by 7 dB must raise every
    // delivered power by exactly 10^0.7 on shared seeds.
    const double expected_ratio = std::pow(10.0, 0.7);
    double worst = 0.0;
    for (const auto& [n, values] : sim_by_n) {
        const double ratio = values[1] / values[0];
        worst = std::max(worst, std::abs(ratio / expected_ratio - 1.0));
    }
    out.manifest_extra["offset_7db_max_rel_dev"] = worst;
    run.expect(out, worst < 0.02,
               "fig7: 50 dBm vs 43 dBm ratio deviates from 10^0.7 by " + fmt9(worst) +
                   " (tolerance 0.02)");
    return out;
}

ExperimentOutput run_fig8(const Runner& run) {
    ExperimentOutput out;
    const auto& cfg = run.cfg;
    const double p_dbm = 50.0;
    const double d_ref = 10.0;
    const SystemParams params = run.params_at(p_dbm);
    Scenario hom = Scenario::homogeneous(d_ref);
    hom.require_valid(params);

    const double rr_hom = avg_rr_hom(params, d_ref);
    const double rr_het = avg_rr_het(params);
    {
        const std::uint64_t slots = run.slots_or(1'000'000);
        out.slot_counts["rr_hom"] = slots;
        out.slot_counts["rr_het"] = slots;
        const SimStats hom_stats = run.simulate(params, hom, Scheduler::round_robin, 1, slots);
        const SimStats het_stats =
            run.simulate(params, Scenario::heterogeneous(), Scheduler::round_robin, 1, slots);
        out.records.push_back(make_record("fig8", "rr", "hom", 1, p_dbm, d_ref,
                                          hom_stats.avg_delivered_power, rr_hom, cfg.seed));
        out.records.push_back(make_record("fig8", "rr", "het", 1, p_dbm, std::nullopt,
                                          het_stats.avg_delivered_power, rr_het, cfg.seed));
    }

    Curve hom_eff, het_eff;
    std::optional<std::uint64_t> crossing;
    for (std::uint64_t n : cfg.n_grid) {
        const std::uint64_t slots =
            cfg.slots_override != 0 ? cfg.slots_override : per_point_slots(2'000'000, n, 50'000);
        out.slot_counts["os_n" + std::to_string(n)] = slots;
        const SimStats hom_stats = run.simulate(params, hom, Scheduler::opportunistic, n, slots);
        const SimStats het_stats =
            run.simulate(params, Scenario::heterogeneous(), Scheduler::opportunistic, n, slots);
        const double hom_oracle = avg_os_hom_exact(params, d_ref, n);
        const double het_oracle = mean_os_het_numeric(params, n, 1e-8);
        out.records.push_back(make_record("fig8", "os", "hom", n, p_dbm, d_ref,
                                          hom_stats.avg_delivered_power, hom_oracle, cfg.seed));
        out.records.push_back(make_record("fig8", "os", "het", n, p_dbm, std::nullopt,
                                          het_stats.avg_delivered_power, het_oracle, cfg.seed));
        const double e_hom = transfer_efficiency(hom_stats.avg_delivered_power, params.p_erp);
        const double e_het = transfer_efficiency(het_stats.avg_delivered_power, params.p_erp);
        hom_eff.push_back({static_cast<double>(n), e_hom * 100.0});
        het_eff.push_back({static_cast<double>(n), e_het * 100.0});
        if (!crossing && e_het > 0.01) crossing = n;
    }
    out.curves.emplace_back("fig8_os_hom_efficiency", std::move(hom_eff));
    out.curves.emplace_back("fig8_os_het_efficiency", std::move(het_eff));
    const double e_rr_hom = transfer_efficiency(rr_hom, params.p_erp);
    const double e_rr_het = transfer_efficiency(rr_het, params.p_erp);
    const double n_lo = static_cast<double>(cfg.n_grid.front());
    const double n_hi = static_cast<double>(cfg.n_grid.back());
    out.curves.emplace_back("fig8_rr_hom_efficiency",
                            Curve{{n_lo, e_rr_hom * 100.0}, {n_hi, e_rr_hom * 100.0}});
    out.curves.emplace_back("fig8_rr_het_efficiency",
                            Curve{{n_lo, e_rr_het * 100.0}, {n_hi, e_rr_het * 100.0}});

    // Efficiency does not depend on the beacon power (the rectifier constant
    // is linear in it); verified on a small paired run.
    {
        const std::uint64_t slots = 100'000;
        const SimStats lo = run.simulate(run.params_at(43.0), Scenario::heterogeneous(),
                                         Scheduler::opportunistic, 5, slots);
        const SimStats hi = run.simulate(run.params_at(50.0), Scenario::heterogeneous(),
                                         Scheduler::opportunistic, 5, slots);
        const double eff_lo = transfer_efficiency(lo.avg_delivered_power, dbm_to_watts(43.0));
        const double eff_hi = transfer_efficiency(hi.avg_delivered_power, dbm_to_watts(50.0));
        const double dev = std::abs(eff_lo / eff_hi - 1.0);
        out.manifest_extra["efficiency_invariance_rel_dev"] = dev;
        run.expect(out, dev < 1e-12,
                   "fig8: efficiency changed with beacon power (rel dev " + fmt9(dev) + ")");
    }

    if (crossing)
        out.manifest_extra["efficiency_crossing_1pct_n"] = *crossing;
    else
        out.manifest_extra["efficiency_crossing_1pct_n"] = nullptr;
    out.manifest_extra["note_efficiency"] =
        "efficiency = time-average delivered DC power / P_erp; CSV rows carry watts, .dat "
        "curves carry percent";
    out.manifest_extra["note_reference_figure"] =
        "published round-robin efficiency levels for this setting are not reproducible from "
        "the stated parameters; only sim-vs-formula consistency is asserted";
    return out;
}

ExperimentOutput run_gof(const Runner& run, bool gumbel) {
    ExperimentOutput out;
    const auto& cfg = run.cfg;
    const double p_dbm = 50.0;
    const double d_ref = 10.0;
    const SystemParams params = run.params_at(p_dbm);
    const std::uint64_t n_samples = run.slots_or(5'000);
    out.slot_counts["maxima_per_n"] = n_samples;

    for (std::uint64_t n : {std::uint64_t{10}, std::uint64_t{50}, std::uint64_t{100}}) {
        const Scenario scenario =
            gumbel ? Scenario::homogeneous(d_ref) : Scenario::heterogeneous();
        if (gumbel) scenario.require_valid(params);
        const SimStats stats =
            run.simulate(params, scenario, Scheduler::opportunistic, n, n_samples, true);
        std::vector<double> samples = stats.scheduled_samples;
        std::sort(samples.begin(), samples.end());
        const EvtParams evt =
            gumbel ? gumbel_constants(params, d_ref, n) : frechet_scale(params, n);
        const double ks =
            ks_statistic(samples, [&](double x) { return limiting_cdf(evt, x); });
        const std::string name = gumbel ? "gof_gumbel" : "gof_frechet";
        out.records.push_back(make_record(name, "os", gumbel ? "hom" : "het", n, p_dbm,
                                          gumbel ? std::optional<double>(d_ref) : std::nullopt,
                                          ks, std::nullopt, cfg.seed));
        // Thinned empirical CDF curve, normalized to the limit's scale.
        Curve ecdf, limit;
        const std::size_t step = std::max<std::size_t>(samples.size() / 256, 1);
        for (std::size_t i = 0; i < samples.size(); i += step) {
            const double x = samples[i];
            const double z = gumbel ? (x - evt.a1) / evt.b1 : x / evt.b2;
            ecdf.push_back({z, (static_cast<double>(i) + 1.0) / static_cast<double>(samples.size())});
            limit.push_back({z, limiting_cdf(evt, x)});
        }
        out.curves.emplace_back(name + "_ecdf_n" + std::to_string(n), std::move(ecdf));
        out.curves.emplace_back(name + "_limit_n" + std::to_string(n), std::move(limit));
        if (gumbel && n == 100)
            run.expect(out, ks < 0.03,
                       "gof_gumbel N=100: KS distance " + fmt9(ks) + " exceeds 0.03");
    }
    return out;
}

ExperimentOutput run_vonmises(const Runner& run) {
    ExperimentOutput out;
    const auto& cfg = run.cfg;
    const double p_dbm = 50.0;
    const double d_ref = 10.0;
    const SystemParams params = run.params_at(p_dbm);
    const Scenario hom = Scenario::homogeneous(d_ref);
    hom.require_valid(params);
    const double hom_rate = 1.0 / avg_rr_hom(params, d_ref);
    const auto [r1, r2] = het_tail_constants(params);

    constexpr int n_points = 64;
    Curve hom_curve, het_curve, het_ref;
    std::uint64_t index = 1;
    for (int i = 0; i < n_points; ++i) {
        const double t = static_cast<double>(i) / (n_points - 1);
        // Homogeneous sweep spans two decades around the mean power.
        const double x_hom = std::pow(10.0, -1.0 + 2.0 * t) / hom_rate;
        const double diag_hom = von_mises_diagnostic(params, hom, x_hom);
        hom_curve.push_back({x_hom, diag_hom});
        out.records.push_back(make_record("vonmises", "none", "hom", index, p_dbm, d_ref,
                                          diag_hom, hom_rate, cfg.seed));
        run.expect(out, std::abs(diag_hom / hom_rate - 1.0) < 1e-12,
                   "vonmises hom point " + std::to_string(index) +
                       ": hazard deviates from the constant rate");
        // Heterogeneous sweep spans r1*x in [1e-5, 30].
        const double x_het = std::pow(10.0, -5.0 + t * (std::log10(30.0) + 5.0)) / r1;
        const double diag_het = von_mises_diagnostic(params, Scenario::heterogeneous(), x_het);
        het_curve.push_back({x_het, diag_het});
        het_ref.push_back({x_het, 2.0 / params.alpha});
        out.records.push_back(make_record("vonmises", "none", "het", index, p_dbm, std::nullopt,
                                          diag_het, 2.0 / params.alpha, cfg.seed));
        ++index;
    }
    out.curves.emplace_back("vonmises_hom", std::move(hom_curve));
    out.curves.emplace_back("vonmises_het", std::move(het_curve));
    out.curves.emplace_back("vonmises_het_reference", std::move(het_ref));
    out.manifest_extra["note"] =
        "heterogeneous rows compare x*f/(1-F) against 2/alpha; the diagnostic plateaus near "
        "that value at moderate x and grows in the exponential tail, so no convergence is "
        "asserted (n_ues carries the sweep index, x is in the .dat files)";
    return out;
}

} // namespace

RunStatus run_experiment(const std::string& name, const ExperimentConfig& cfg,
                         const std::filesystem::path& out_dir, bool check, std::ostream& log) {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        log << "unknown experiment '" << name << "'; expected one of:";
        for (const auto& n : names) log << ' ' << n;
        log << '\n';
        return RunStatus::usage_error;
    }

    try {
        Runner runner{cfg, check};
        ExperimentOutput out;
        if (name == "fig5") out = run_fig5(runner);
        else if (name == "fig6") out = run_fig6(runner);
        else if (name == "fig7") out = run_fig7(runner);
        else if (name == "fig8") out = run_fig8(runner);
        else if (name == "gof_gumbel") out = run_gof(runner, true);
        else if (name == "gof_frechet") out = run_gof(runner, false);
        else out = run_vonmises(runner);

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            log << "cannot create output directory " << out_dir << ": " << ec.message() << '\n';
            return RunStatus::io_error;
        }

        std::ostringstream csv;
        csv << csv_header() << '\n';
        for (const auto& r : out.records) csv << to_csv_row(r) << '\n';
        write_file(out_dir / (name + ".csv"), csv.str());

        for (const auto& [stem, curve] : out.curves) {
            std::ostringstream dat;
            for (const auto& pt : curve) dat << fmt9(pt[0]) << ' ' << fmt9(pt[1]) << '\n';
            write_file(out_dir / (stem + ".dat"), dat.str());
        }

        json manifest;
        manifest["tool_version"] = tool_version;
        manifest["experiment"] = name;
        manifest["seed"] = cfg.seed;
        char hash_buf[20];
        std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                      static_cast<unsigned long long>(config_hash(cfg)));
        manifest["config_hash"] = hash_buf;
        manifest["equivalent_distance_m"] = equivalent_distance(cfg.params);
        manifest["slot_counts"] = out.slot_counts;
        manifest["records"] = out.records.size();
        for (const auto& [key, value] : out.manifest_extra.items()) manifest[key] = value;
        write_file(out_dir / (name + "_manifest.json"), manifest.dump(2) + "\n");

        log << name << ": " << out.records.size() << " records, " << out.curves.size()
            << " curves -> " << out_dir.string() << '\n';

        if (check) {
            for (const auto& failure : out.check_failures) log << "check FAILED: " << failure
                                                               << '\n';
            if (!out.check_failures.empty()) return RunStatus::check_failed;
            log << "check: all thresholds met\n";
        }
        return RunStatus::ok;
    } catch (const IoFailure& e) {
        log << "I/O error: " << e.what() << '\n';
        return RunStatus::io_error;
    } catch (const std::exception& e) {
        log << "configuration error: " << e.what() << '\n';
        return RunStatus::config_error;
    }
}

} // namespace wptsim
