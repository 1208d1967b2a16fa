// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "srlab/sr.hpp"

namespace srlab {

/// An ensemble of repeated results with its provenance.
struct SampleSet {
    std::vector<double> values;
    double exact_reference = 0.0;
    std::uint64_t master_seed = 0;
    SRMode mode = SRMode::Nearness;
};

struct SummaryStats {
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation (n - 1)
    double standard_error = 0.0;
    double min = 0.0;
    double max = 0.0;
    double empirical_bias = 0.0;  // mean - exact_reference
};

/// Two-pass mean and standard deviation, summed in index order.
/// Throws EmptySampleSet.
SummaryStats summarize(const SampleSet& s);

/// Fraction of |errors| <= bound; 0 for an empty sequence.
/// Throws ConfigError unless bound > 0.
double coverage_fraction(std::span<const double> errors, double bound);

struct UnbiasednessReport {
    bool passed = false;
    double sigma_multiplier = 4.0;
    SummaryStats summary;
    double exact_reference = 0.0;
    std::uint64_t master_seed = 0;
    SRMode mode = SRMode::Nearness;

    /// One-line audit record with every input of the decision.
    std::string describe() const;
};

/// Passes iff |mean - reference| <= sigma_multiplier * standard_error.
/// With zero spread this reduces to an exact comparison.
/// Throws EmptySampleSet for an empty set, ConfigError below 30 samples.
UnbiasednessReport unbiasedness_test(const SampleSet& s, double sigma_multiplier = 4.0);

}  // namespace srlab
