// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <sstream>

#include "detail.hpp"
#include "srlab/chebyshev.hpp"
#include "srlab/errors.hpp"

#ifndef SRLAB_VERSION
#define SRLAB_VERSION "0.0.0"
#endif

namespace srlab::experiments {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

int parse_int(std::string_view text, std::string_view what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

std::string_view tool_version() { return SRLAB_VERSION; }

std::string_view to_string(Command c) {
    switch (c) {
        case Command::BiasTable:
            return "bias-table";
        case Command::Integrate:
            return "integrate";
        case Command::HornerXSweep:
            return "horner-x-sweep";
        case Command::HornerNSweep:
            return "horner-n-sweep";
        case Command::Verify:
            return "verify";
    }
    return "?";
}

FloatFormat parse_format(std::string_view name) {
    if (name == "binary32") {
        return FloatFormat::binary32();
    }
    if (name.size() > 1 && name[0] == 'p') {
        return FloatFormat::toy(parse_int(name.substr(1), "precision"));
    }
    throw ConfigError("unknown format '" + std::string(name) + "'");
}

std::vector<int> parse_n_list(std::string_view text) {
    std::vector<int> out;
    for (const std::string_view item : split(text, ',')) {
        const auto range = split(item, ':');
        if (range.size() == 1) {
            out.push_back(parse_int(item, "N"));
        } else if (range.size() == 3) {
            const int a = parse_int(range[0], "range start");
            const int b = parse_int(range[1], "range end");
            const int step = parse_int(range[2], "range step");
            if (step <= 0 || b < a) {
                throw ConfigError("invalid N range '" + std::string(item) + "'");
            }
            for (int v = a; v <= b; v += step) {
                out.push_back(v);
            }
        } else {
            throw ConfigError("invalid N list entry '" + std::string(item) + "'");
        }
    }
    return out;
}

Grid parse_grid(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw ConfigError("grid must be start:end:count, got '" + std::string(text) + "'");
    }
    Grid g{parse_rational(parts[0]), parse_rational(parts[1]), parse_int(parts[2], "grid count")};
    if (g.count < 1 || g.end < g.start || (g.count == 1 && g.end != g.start)) {
        throw ConfigError("invalid grid '" + std::string(text) + "'");
    }
    return g;
}

Polynomial parse_poly(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("polynomial must be chebyshev:N or coeffs:a0,...,an");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    if (kind == "chebyshev") {
        return chebyshev_z_coeffs(parse_int(rest, "Chebyshev degree"));
    }
    if (kind == "coeffs") {
        std::vector<Rational> c;
        for (const std::string_view item : split(rest, ',')) {
            c.push_back(parse_rational(item));
        }
        return Polynomial(std::move(c), Variable::X);
    }
    throw ConfigError("unknown polynomial kind '" + std::string(kind) + "'");
}

std::vector<SRMode> parse_modes(std::string_view text) {
    std::vector<SRMode> out;
    for (const std::string_view item : split(text, ',')) {
        const SRMode m = parse_mode(item);
        if (std::find(out.begin(), out.end(), m) == out.end()) {
            out.push_back(m);
        }
    }
    return out;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.samples && *cfg.samples < 1) {
        throw ConfigError("--samples must be >= 1");
    }
    if (cfg.trials && *cfg.trials < 1) {
        throw ConfigError("--trials must be >= 1");
    }
    if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0)) {
        throw InvalidLambda("--lambda must lie in (0, 1)");
    }
    if (cfg.x_grid.count < 1) {
        throw ConfigError("grid count must be >= 1");
    }
    for (const std::string& s : cfg.suites) {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
            throw ConfigError("unknown suite '" + s + "'");
        }
    }
}

Output run(const ExperimentConfig& cfg) {
    switch (cfg.command) {
        case Command::BiasTable:
            return run_bias_table(cfg);
        case Command::Integrate:
            return run_integrate(cfg);
        case Command::HornerXSweep:
            return run_horner_x_sweep(cfg);
        case Command::HornerNSweep:
            return run_horner_n_sweep(cfg);
        case Command::Verify:
            break;
    }
    throw ConfigError("verify does not produce CSV");
}

namespace detail {

std::string describe_failure(const std::string& where, const std::exception& e) { return where + ": " + e.what(); }

std::string join_modes(const std::vector<SRMode>& modes) {
    std::string out;
    for (const SRMode m : modes) {
        if (!out.empty()) {
            out += ';';
        }
        out += to_string(m);
    }
    return out;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (const int v : values) {
        if (!out.empty()) {
            out += ';';
        }
        out += std::to_string(v);
    }
    return out;
}

std::vector<SRMode> modes_or(const ExperimentConfig& cfg, std::vector<SRMode> fallback) {
    return cfg.modes.empty() ? fallback : cfg.modes;
}

std::string provenance(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "srlab " << tool_version() << " command=" << to_string(cfg.command) << " format=" << cfg.format.name()
       << " seed=" << cfg.seed;
    if (cfg.permissive) {
        os << " permissive=1";
    }
    return os.str();
}

}  // namespace detail

}  // namespace srlab::experiments
