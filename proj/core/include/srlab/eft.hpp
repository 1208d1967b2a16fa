// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace srlab::eft {

// Error-free transformations on binary64. Each returns (s, t) with
// s = fl(op) and s + t equal to the exact result.

struct Pair {
    double hi;
    double lo;
};

// Knuth's branch-free TwoSum.
inline Pair two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Requires |a| >= |b| (or a == 0).
inline Pair fast_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline Pair two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

// Quotient with a correction term: hi = fl(a/b), lo ~= (a - hi*b)/b.
// The remainder a - hi*b is exact; only the final division rounds, so
// |hi + lo - a/b| <= 2^-53 |lo|.
inline Pair div_rem(double a, double b) {
    const double q = a / b;
    const double r = std::fma(-q, b, a);
    return fast_two_sum(q, r / b);
}

}  // namespace srlab::eft
