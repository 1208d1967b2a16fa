// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
//
// srlab: stochastic rounding experiments.
//
//   srlab bias-table --n 20
//   srlab integrate --n-list 20,100,1000 --samples 10000 --seed 7
//   srlab horner-x-sweep --poly chebyshev:20 --x-grid 8/64:1:64 --lambda 1/2
//   srlab horner-n-sweep --x 24/26 --n-list 2:36:2
//   srlab verify --suite lemma1 --trials 100000
//
// Exit codes: 0 success, 1 configuration error, 2 verify suite failure,
// 3 range or overflow error.

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "srlab/errors.hpp"
#include "srlab/experiments/experiments.hpp"

namespace {

namespace ex = srlab::experiments;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSuite = 2;
constexpr int kExitRange = 3;

std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw srlab::ConfigError("seed must be a decimal 64-bit integer, got '" + text + "'");
    }
    return v;
}

double parse_real(const std::string& text) { return srlab::to_double(srlab::parse_rational(text)); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw srlab::ConfigError("cannot open '" + path + "' for writing");
    }
    out << content;
}

struct RawFlags {
    std::string format = "binary32";
    std::string modes;
    std::string seed;
    std::string lambda = "1/2";
    std::string n_list;
    std::string x_grid = "8/64:1:64";
    std::string x = "24/26";
    std::string trajectory = "rn";
    std::string output;
    std::string svg;
    std::vector<std::string> suites;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic rounding emulation and error-bound experiments"};
    app.set_version_flag("--version", std::string(ex::tool_version()));
    app.require_subcommand(1);

    ex::ExperimentConfig cfg;
    RawFlags raw;
    int samples = 0;
    int trials = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", raw.format, "binary32 or p<k>")->capture_default_str();
        sub->add_option("--seed", raw.seed, "Master seed (default: $SR_SEED, else 0)");
        sub->add_option("--workers", cfg.workers, "Worker threads, 0 for all cores; never changes output")
            ->capture_default_str();
        sub->add_flag("--permissive", cfg.permissive, "Report out-of-range samples instead of aborting");
    };
    auto csv_output = [&](CLI::App* sub) {
        sub->add_option("--output,-o", raw.output, "CSV path (default: stdout)");
        sub->add_option("--svg", raw.svg, "Also write a static SVG plot");
    };
    auto sampling = [&](CLI::App* sub) {
        sub->add_option("--modes", raw.modes, "Comma list of rn, sr-nearness, sr-up-or-down");
        sub->add_option("--samples", samples, "Samples per SR mode")->check(CLI::PositiveNumber);
    };

    auto* bias = app.add_subcommand("bias-table", "Per-step theta, up-or-down bias and ulp for s += 1/N");
    common(bias);
    csv_output(bias);
    bias->add_option("--n", cfg.n, "Number of steps N")->required();
    bias->add_option("--trajectory", raw.trajectory, "Rounding of the tabulated partial sums")
        ->capture_default_str();

    auto* integ = app.add_subcommand("integrate", "Rectangle rule for f = 1 on [0, 1] under each mode");
    common(integ);
    csv_output(integ);
    sampling(integ);
    integ->add_option("--n-list", raw.n_list, "Step counts, e.g. 20,100 or 16:1024:16")->required();
    integ->add_flag("--step-in-mode", cfg.step_in_mode, "Round h = 1/N under the run's mode instead of to nearest");

    auto* xs = app.add_subcommand("horner-x-sweep", "Horner errors and bounds across an x grid");
    common(xs);
    csv_output(xs);
    sampling(xs);
    xs->add_option("--poly", cfg.poly, "chebyshev:N or coeffs:a0,...,an")->capture_default_str();
    xs->add_option("--x-grid", raw.x_grid, "start:end:count with rational endpoints")->capture_default_str();
    xs->add_option("--lambda", raw.lambda, "Failure probability of the probabilistic bound")->capture_default_str();
    xs->add_flag("--count-squaring", cfg.count_squaring, "Count the x*x step in the bound degree");

    auto* ns = app.add_subcommand("horner-n-sweep", "Horner errors / cond1 for T_N across N");
    common(ns);
    csv_output(ns);
    sampling(ns);
    ns->add_option("--x", raw.x, "Evaluation point, rounded to the format")->capture_default_str();
    ns->add_option("--n-list", raw.n_list, "Even degrees (default 2:36:2)");
    ns->add_option("--lambda", raw.lambda, "Failure probability of the probabilistic bound")->capture_default_str();
    ns->add_flag("--count-squaring", cfg.count_squaring, "Count the x*x step in the bound degree");

    auto* ver = app.add_subcommand("verify", "Run the invariant suites");
    common(ver);
    ver->add_option("--suite", raw.suites, "Suite name (repeatable); default all");
    ver->add_option("--trials", trials, "Trials for the lemma1 suite")->check(CLI::PositiveNumber);
    ver->add_option("--samples", samples, "Samples for the statistical suites")->check(CLI::PositiveNumber);
    ver->add_flag("--inject-bug", cfg.inject_bug, "Flip the SR-nearness threshold in the unbiasedness suite")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "bias-table") {
            cfg.command = ex::Command::BiasTable;
        } else if (name == "integrate") {
            cfg.command = ex::Command::Integrate;
        } else if (name == "horner-x-sweep") {
            cfg.command = ex::Command::HornerXSweep;
        } else if (name == "horner-n-sweep") {
            cfg.command = ex::Command::HornerNSweep;
        } else {
            cfg.command = ex::Command::Verify;
        }

        cfg.format_name = raw.format;
        cfg.format = ex::parse_format(raw.format);
        if (!raw.seed.empty()) {
            cfg.seed = parse_seed(raw.seed);
        } else if (const char* env = std::getenv("SR_SEED"); env != nullptr && *env != '\0') {
            cfg.seed = parse_seed(env);
        }
        if (!raw.modes.empty()) {
            cfg.modes = ex::parse_modes(raw.modes);
        }
        if (samples > 0) {
            cfg.samples = samples;
        }
        if (trials > 0) {
            cfg.trials = trials;
        }
        cfg.lambda = parse_real(raw.lambda);
        if (!raw.n_list.empty()) {
            cfg.n_list = ex::parse_n_list(raw.n_list);
        }
        cfg.x_grid = ex::parse_grid(raw.x_grid);
        cfg.x = srlab::parse_rational(raw.x);
        cfg.trajectory = srlab::parse_mode(raw.trajectory);
        cfg.suites = raw.suites;
        ex::validate(cfg);

        if (cfg.command == ex::Command::Verify) {
            const ex::VerifyReport report = ex::run_verify(cfg);
            std::cout << report.text();
            return report.passed() ? kExitOk : kExitSuite;
        }

        const ex::Output out = ex::run(cfg);
        if (raw.output.empty()) {
            std::cout << out.csv;
        } else {
            write_file(raw.output, out.csv);
        }
        for (const std::string& e : out.errors) {
            std::cerr << "srlab: " << e << '\n';
        }
        if (!raw.svg.empty() && out.plot) {
            write_file(raw.svg, ex::render_svg(*out.plot));
        }
        return kExitOk;
    } catch (const srlab::RangeError& e) {
        std::cerr << "srlab: range error: " << e.what() << '\n';
        return kExitRange;
    } catch (const srlab::SubnormalOrSpecial& e) {
        std::cerr << "srlab: range error: " << e.what() << '\n';
        return kExitRange;
    } catch (const srlab::Error& e) {
        std::cerr << "srlab: " << e.what() << '\n';
        return kExitConfig;
    }
}
