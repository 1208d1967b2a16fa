// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srlab/exact.hpp"
#include "srlab/format.hpp"
#include "srlab/polynomial.hpp"
#include "srlab/sr.hpp"
#include "srlab/experiments/svg.hpp"

namespace srlab::experiments {

std::string_view tool_version();

enum class Command { BiasTable, Integrate, HornerXSweep, HornerNSweep, Verify };

std::string_view to_string(Command c);

/// start:end:count, endpoints included.
struct Grid {
    Rational start{8, 64};
    Rational end{1};
    int count = 64;
};

struct ExperimentConfig {
    Command command = Command::Integrate;
    std::string format_name = "binary32";
    FloatFormat format = FloatFormat::binary32();
    /// Empty means the command's default set.
    std::vector<SRMode> modes;
    /// Unset means the command's default count.
    std::optional<int> samples;
    std::uint64_t seed = 0;
    double lambda = 0.5;
    /// 0 picks std::thread::hardware_concurrency(). Never affects output.
    unsigned workers = 1;

    int n = 20;
    std::vector<int> n_list;
    std::string poly = "chebyshev:20";
    Grid x_grid;
    Rational x{24, 26};

    /// bias-table: how the partial-sum trajectory is rounded.
    SRMode trajectory = SRMode::Nearest;
    /// integrate: round h under the run's mode instead of to nearest.
    bool step_in_mode = false;
    /// Horner bounds: count the x*x squaring as an extra step.
    bool count_squaring = false;

    /// Range failures in individual samples become NaN rows plus an entry
    /// in Output::errors instead of aborting the run.
    bool permissive = false;

    /// verify: suites to run, empty for all.
    std::vector<std::string> suites;
    std::optional<int> trials;
    /// verify: flip the SR-nearness threshold in the unbiasedness suite.
    bool inject_bug = false;
};

/// Throws ConfigError (or InvalidLambda) on inconsistent settings.
void validate(const ExperimentConfig& cfg);

// Flag value parsers; all throw ConfigError on malformed input.

/// binary32 or p<k> (k significand bits, binary32 exponent range).
FloatFormat parse_format(std::string_view name);
/// Comma list of integers and a:b:step ranges, e.g. "20,100" or "2:36:2".
std::vector<int> parse_n_list(std::string_view text);
/// start:end:count with rational endpoints, e.g. "8/64:1:64".
Grid parse_grid(std::string_view text);
/// chebyshev:N (even N, Horner in x^2) or coeffs:a0,a1,...,an (Horner in x).
Polynomial parse_poly(std::string_view text);
/// Comma-separated mode names.
std::vector<SRMode> parse_modes(std::string_view text);

struct Output {
    std::string csv;
    std::optional<Plot> plot;
    /// Permissive mode only: one line per failed sample, in row order.
    std::vector<std::string> errors;
};

Output run_bias_table(const ExperimentConfig& cfg);
Output run_integrate(const ExperimentConfig& cfg);
Output run_horner_x_sweep(const ExperimentConfig& cfg);
Output run_horner_n_sweep(const ExperimentConfig& cfg);

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool passed() const;
    std::string text() const;
};

/// Suites: lemma1 (floor scaling), toy-expectation, theta-constancy,
/// sqrt-asymptotics, unbiasedness, mean-independence. Failures are
/// reported, not thrown.
VerifyReport run_verify(const ExperimentConfig& cfg);

/// Names accepted by --suite.
const std::vector<std::string>& suite_names();

/// Individual suites, reused by the acceptance run.
SuiteResult suite_floor_scaling(const FloatFormat& fmt, std::uint64_t seed, int trials);
SuiteResult suite_toy_expectation(int precision);
SuiteResult suite_theta_constancy(const FloatFormat& fmt, std::uint64_t seed, int random_n);
SuiteResult suite_sqrt_asymptotics(const FloatFormat& fmt);
SuiteResult suite_unbiasedness(const FloatFormat& fmt, std::uint64_t seed, int samples, bool inject_bug);
SuiteResult suite_mean_independence(const FloatFormat& fmt, std::uint64_t seed, int samples);

/// Runs the configured command's CSV experiment.
Output run(const ExperimentConfig& cfg);

}  // namespace srlab::experiments
