// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "srlab/format.hpp"
#include "srlab/rng.hpp"

namespace srlab {

enum class SRMode {
    Nearness,   // up with probability theta(x); unbiased
    UpOrDown,   // up or down with probability 1/2 each
    Nearest,    // deterministic round-to-nearest-even
};

/// "sr-nearness", "sr-up-or-down", "rn".
std::string_view to_string(SRMode mode);
/// Throws ConfigError on an unknown name.
SRMode parse_mode(std::string_view name);

/// Rounds an exact value to one of its two neighbors.
///
/// Representable values are returned unchanged without consuming a draw.
/// Otherwise Nearness rounds up iff draw < theta(x), UpOrDown rounds up iff
/// draw < 1/2, and Nearest never draws. This is the threshold form of
/// round(x + ulp * xi) for the corresponding noise xi.
double sr_round(const ExactValue& x, const FloatFormat& fmt, SRMode mode, RngStream& rng);

// Operands must be zero or normal values of fmt. Each computes the exact
// result and hands it to sr_round.
double sr_add(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng);
double sr_sub(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng);
double sr_mul(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng);
/// Throws DivisionByZero for b == 0.
double sr_div(double a, double b, const FloatFormat& fmt, SRMode mode, RngStream& rng);

/// E[round(x)] under `mode`: x itself for Nearness, the midpoint of the
/// neighbors for UpOrDown, the deterministic result for Nearest.
ExactValue expected_round(const ExactValue& x, const FloatFormat& fmt, SRMode mode);

/// Probability that sr_round(x) returns the upper neighbor, counted exactly
/// over the 2^53 equally likely draws. Zero for representable x.
double probability_up(const ExactValue& x, const FloatFormat& fmt, SRMode mode);

/// E[round(x) - x] under UpOrDown, i.e. ulp * (1/2 - theta); zero for
/// representable x.
double bias_up_or_down(const ExactValue& x, const FloatFormat& fmt);

/// Bundles a format, a mode and a stream for algorithm code.
class Rounder {
  public:
    Rounder(const FloatFormat& fmt, SRMode mode, RngStream& rng)
        : fmt_(fmt), mode_(mode), rng_(&rng) {}

    double round(const ExactValue& x) { return sr_round(x, fmt_, mode_, *rng_); }
    double add(double a, double b) { return sr_add(a, b, fmt_, mode_, *rng_); }
    double sub(double a, double b) { return sr_sub(a, b, fmt_, mode_, *rng_); }
    double mul(double a, double b) { return sr_mul(a, b, fmt_, mode_, *rng_); }
    double div(double a, double b) { return sr_div(a, b, fmt_, mode_, *rng_); }

    const FloatFormat& format() const { return fmt_; }
    SRMode mode() const { return mode_; }
    RngStream& rng() { return *rng_; }

  private:
    FloatFormat fmt_;
    SRMode mode_;
    RngStream* rng_;
};

}  // namespace srlab
