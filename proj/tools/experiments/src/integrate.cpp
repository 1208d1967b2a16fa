// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <map>

#include "detail.hpp"
#include "srlab/algorithms.hpp"
#include "srlab/errors.hpp"
#include "srlab/experiments/csv.hpp"
#include "srlab/stats.hpp"

namespace srlab::experiments {

Output run_bias_table(const ExperimentConfig& cfg) {
    validate(cfg);
    if (cfg.n < 2) {
        throw ConfigError("bias-table needs --n >= 2");
    }
    RngStream rng(cfg.seed, derive_stream_id({detail::kTagBiasTable, static_cast<std::uint64_t>(cfg.n)}));
    const auto rows = bias_table(cfg.n, cfg.format, 2, cfg.trajectory, &rng);

    std::string prov = detail::provenance(cfg) + " n=" + std::to_string(cfg.n) +
                       " trajectory=" + std::string(to_string(cfg.trajectory));
    CsvWriter csv(prov);
    csv.header({"k", "s_k", "theta", "predicted_bias", "epsilon", "exponent", "s_k_hex", "predicted_bias_hex"});

    Plot plot{"Up-or-down bias per step, N = " + std::to_string(cfg.n), "k", "|predicted bias|", false, true, {}};
    Series bias{"|bias|", {}, false};
    for (const BiasTableRow& r : rows) {
        // s_k is a sum of two format values; hi carries it unless the
        // operands are 53+ bits apart.
        const double s = r.s_k.hi + r.s_k.lo;
        csv.row({std::to_string(r.k), format_real(s), format_real(r.theta), format_real(r.predicted_bias),
                 format_real(r.epsilon), std::to_string(r.exponent), format_hex(s), format_hex(r.predicted_bias)});
        bias.points.emplace_back(r.k, std::fabs(r.predicted_bias));
    }
    plot.series.push_back(std::move(bias));
    return {csv.str(), std::move(plot), {}};
}

namespace {

struct Task {
    int n = 0;
    SRMode mode = SRMode::Nearest;
    int sample = 0;
};

struct Sample {
    double result = 0;
    double error = 0;
    double accumulated = 0;
};

}  // namespace

Output run_integrate(const ExperimentConfig& cfg) {
    validate(cfg);
    const std::vector<int> n_list = cfg.n_list.empty() ? std::vector<int>{cfg.n} : cfg.n_list;
    for (const int n : n_list) {
        if (n < 1) {
            throw ConfigError("integrate needs every N >= 1");
        }
    }
    const auto modes = detail::modes_or(cfg, {SRMode::Nearest, SRMode::Nearness, SRMode::UpOrDown});
    const int samples = cfg.samples.value_or(1000);
    const StepRounding step = cfg.step_in_mode ? StepRounding::RunMode : StepRounding::Nearest;

    std::vector<Task> tasks;
    for (const int n : n_list) {
        for (const SRMode m : modes) {
            const int count = m == SRMode::Nearest ? 1 : samples;
            for (int i = 0; i < count; ++i) {
                tasks.push_back({n, m, i});
            }
        }
    }

    std::vector<Sample> out(tasks.size());
    std::vector<std::string> failures(tasks.size());
    detail::parallel_for(tasks.size(), cfg.workers, [&](std::size_t i) {
        const Task& t = tasks[i];
        const std::string where = "N=" + std::to_string(t.n) + " mode=" + std::string(to_string(t.mode)) +
                                  " sample=" + std::to_string(t.sample);
        Sample& s = out[i];
        s.result = detail::guarded(cfg, where, failures[i], [&] {
            RngStream rng(cfg.seed, derive_stream_id({detail::kTagIntegrate, static_cast<std::uint64_t>(t.n),
                                                      detail::mode_id(t.mode), static_cast<std::uint64_t>(t.sample)}));
            const IntegrationRun run = integrate_constant(t.n, cfg.format, t.mode, rng, step);
            s.error = run.final_step_error();
            s.accumulated = run.accumulated_error();
            return run.result;
        });
        if (std::isnan(s.result)) {
            s.error = s.accumulated = s.result;
        }
    });
    std::vector<std::string> errors;
    for (const std::string& f : failures) {
        if (!f.empty()) {
            errors.push_back(f);
        }
    }

    // Deterministic final-step error of the RN run, per N.
    std::map<int, double> rn_error;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].mode == SRMode::Nearest) {
            rn_error[tasks[i].n] = out[i].error;
        }
    }
    auto predicted = [&](int n, SRMode m) -> double {
        switch (m) {
            case SRMode::Nearness:
                return 0.0;
            case SRMode::UpOrDown:
                return n >= 2 ? predicted_total_bias(n, cfg.format) : 0.0;
            case SRMode::Nearest:
                break;
        }
        if (auto it = rn_error.find(n); it != rn_error.end()) {
            return it->second;
        }
        RngStream unused(0, 0);
        return integrate_constant(n, cfg.format, SRMode::Nearest, unused, step).final_step_error();
    };

    std::string prov = detail::provenance(cfg) + " n-list=" + detail::join_ints(n_list) +
                       " modes=" + detail::join_modes(modes) + " samples=" + std::to_string(samples) +
                       " step=" + (cfg.step_in_mode ? "mode" : "nearest");
    CsvWriter csv(prov);
    csv.header({"N", "mode", "sample_id", "result", "result_hex", "error", "accumulated_error", "error_vs_one",
                "predicted_bias"});

    std::map<std::pair<SRMode, int>, std::string> predicted_cell;
    for (const int n : n_list) {
        for (const SRMode m : modes) {
            predicted_cell[{m, n}] = format_real(predicted(n, m));
        }
    }
    std::map<std::pair<SRMode, int>, std::vector<double>> results;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        const Sample& s = out[i];
        csv.row({std::to_string(t.n), std::string(to_string(t.mode)), std::to_string(t.sample), format_real(s.result),
                 format_hex(s.result), format_real(s.error), format_real(s.accumulated), format_real(s.result - 1.0),
                 predicted_cell[{t.mode, t.n}]});
        if (!std::isnan(s.result)) {
            results[{t.mode, t.n}].push_back(s.result);
        }
    }

    Plot plot{"Rectangle rule for f = 1: mean computed integral", "N", "mean result", true, false, {}};
    for (const SRMode m : modes) {
        Series series{std::string(to_string(m)), {}, true};
        for (const int n : n_list) {
            SampleSet set{results[{m, n}], 1.0, cfg.seed, m};
            if (!set.values.empty()) {
                series.points.emplace_back(n, summarize(set).mean);
            }
        }
        plot.series.push_back(std::move(series));
    }
    return {csv.str(), std::move(plot), std::move(errors)};
}

}  // namespace srlab::experiments
