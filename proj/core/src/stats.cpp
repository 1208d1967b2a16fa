// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "srlab/errors.hpp"

namespace srlab {

SummaryStats summarize(const SampleSet& s) {
    if (s.values.empty()) {
        throw EmptySampleSet("cannot summarize an empty sample set");
    }
    SummaryStats out;
    out.count = s.values.size();
    const double n = static_cast<double>(out.count);

    double sum = 0.0;
    for (const double v : s.values) {
        sum += v;
    }
    out.mean = sum / n;

    double ss = 0.0;
    for (const double v : s.values) {
        const double d = v - out.mean;
        ss += d * d;
    }
    out.std = out.count > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    out.standard_error = out.std / std::sqrt(n);

    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    out.min = *lo;
    out.max = *hi;
    // Rounding can push the mean a hair outside [min, max] for
    // near-constant data.
    out.mean = std::clamp(out.mean, out.min, out.max);
    out.empirical_bias = out.mean - s.exact_reference;
    return out;
}

double coverage_fraction(std::span<const double> errors, double bound) {
    if (!(bound > 0.0)) {
        throw ConfigError("coverage bound must be positive");
    }
    if (errors.empty()) {
        return 0.0;
    }
    const auto below = std::count_if(errors.begin(), errors.end(),
                                     [bound](double e) { return std::fabs(e) <= bound; });
    return static_cast<double>(below) / static_cast<double>(errors.size());
}

std::string UnbiasednessReport::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << (passed ? "PASS" : "FAIL") << " mode=" << to_string(mode) << " seed=" << master_seed
       << " count=" << summary.count << " mean=" << summary.mean << " reference=" << exact_reference
       << " bias=" << summary.empirical_bias << " se=" << summary.standard_error
       << " k=" << sigma_multiplier;
    return os.str();
}

UnbiasednessReport unbiasedness_test(const SampleSet& s, double sigma_multiplier) {
    if (s.values.empty()) {
        throw EmptySampleSet("cannot test an empty sample set");
    }
    if (s.values.size() < 30) {
        throw ConfigError("unbiasedness test needs at least 30 samples");
    }
    UnbiasednessReport r;
    r.summary = summarize(s);
    r.sigma_multiplier = sigma_multiplier;
    r.exact_reference = s.exact_reference;
    r.master_seed = s.master_seed;
    r.mode = s.mode;
    r.passed = std::fabs(r.summary.empirical_bias) <= sigma_multiplier * r.summary.standard_error;
    return r;
}

}  // namespace srlab
