// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/sr.hpp"

#include <cmath>

#include "srlab/eft.hpp"
#include "srlab/errors.hpp"

namespace srlab {

std::string_view to_string(SRMode mode) {
    switch (mode) {
        case SRMode::Nearness:
            return "sr-nearness";
        case SRMode::UpOrDown:
            return "sr-up-or-down";
        case SRMode::Nearest:
            return "rn";
    }
    return "?";
}

SRMode parse_mode(std::string_view name) {
    if (name == "sr-nearness" || name == "nearness") {
        return SRMode::Nearness;
    }
    if (name == "sr-up-or-down" || name == "up-or-down") {
        return SRMode::UpOrDown;
    }
    if (name == "rn" || name == "nearest") {
        return SRMode::Nearest;
    }
    throw ConfigError("unknown rounding mode '" + std::string(name) + "'");
}

double sr_round(const ExactValue& x, const FloatFormat& fmt, SRMode mode, RngStream& rng) {
    const RoundingNeighborhood nb = neighborhood(x, fmt);
    if (nb.representable()) {
        return nb.down;
    }
    switch (mode) {
        case SRMode::Nearness:
            return rng.draw_unit() < nb.theta ? nb.up : nb.down;
        case SRMode::UpOrDown:
            return rng.draw_unit() < 0.5 ? nb.up : nb.down;
        case SRMode::Nearest:
            break;
    }
    return round_nearest(x, fmt);
}

double sr_add(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng) {
    require_format_value(a, fmt);
    require_format_value(b, fmt);
    return sr_round(ExactValue::sum(a, b), fmt, mode, rng);
}

double sr_sub(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng) {
    require_format_value(a, fmt);
    require_format_value(b, fmt);
    return sr_round(ExactValue::difference(a, b), fmt, mode, rng);
}

double sr_mul(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng) {
    require_format_value(a, fmt);
    require_format_value(b, fmt);
    return sr_round(ExactValue::product(a, b), fmt, mode, rng);
}

double sr_div(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng) {
    require_format_value(a, fmt);
    require_format_value(b, fmt);
    return sr_round(ExactValue::quotient(a, b), fmt, mode, rng);
}

ExactValue expected_round(const ExactValue& x, const FloatFormat& fmt, SRMode mode) {
    const RoundingNeighborhood nb = neighborhood(x, fmt);
    if (nb.representable()) {
        return x;
    }
    switch (mode) {
        case SRMode::Nearness:
            return x;
        case SRMode::UpOrDown:
            // Both neighbors share an exponent range where ulp/2 is exact.
            return ExactValue::of(nb.down + 0.5 * nb.ulp);
        case SRMode::Nearest:
            break;
    }
    return ExactValue::of(round_nearest(x, fmt));
}

double probability_up(const ExactValue& x, const FloatFormat& fmt, SRMode mode) {
    const RoundingNeighborhood nb = neighborhood(x, fmt);
    if (nb.representable()) {
        return 0.0;
    }
    switch (mode) {
        case SRMode::Nearness:
            // draw = k 2^-53 < theta for k = 0 .. ceil(theta 2^53) - 1.
            return std::ldexp(std::ceil(std::ldexp(nb.theta, 53)), -53);
        case SRMode::UpOrDown:
            return 0.5;
        case SRMode::Nearest:
            break;
    }
    return round_nearest(x, fmt) == nb.up ? 1.0 : 0.0;
}

double bias_up_or_down(const ExactValue& x, const FloatFormat& fmt) {
    const RoundingNeighborhood nb = neighborhood(x, fmt);
    if (nb.representable()) {
        return 0.0;
    }
    const double mid = nb.down + 0.5 * nb.ulp;
    const auto [d, err] = eft::two_sum(mid, -x.hi);
    return d + (err - x.lo);
}

}  // namespace srlab
