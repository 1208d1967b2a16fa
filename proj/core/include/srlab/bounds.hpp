// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "srlab/exact.hpp"
#include "srlab/format.hpp"
#include "srlab/polynomial.hpp"

namespace srlab {

/// gamma_n = (1 + u)^n - 1. Requires n >= 0 and 0 < u < 1.
Wide gamma(int n, const Wide& u);

/// sum |a_i t^i| / |P(x)| in exact arithmetic, at the Horner point t.
/// Throws ZeroDenominator when P(x) == 0.
Rational cond1(const Polynomial& p, const Rational& x);

/// Options shared by the Horner bounds.
struct BoundOptions {
    /// For Variable::XSquared, count the squaring x*x as one more Horner
    /// step (n + 1 in the gamma arguments). Off by default: the bounds then
    /// use n = degree in z.
    bool count_squaring = false;
};

/// Degree used inside the gamma terms.
int bound_degree(const Polynomial& p, const BoundOptions& opts = {});

/// cond1(P, x) * gamma_{2n}: worst-case relative forward error of Horner's
/// rule under any mode with |delta| <= u.
Wide deterministic_bound(const Polynomial& p, const Rational& x, const Wide& u,
                         const BoundOptions& opts = {});

/// cond1(P, x) * sqrt(u gamma_{4n}) * sqrt(ln(2/lambda)): holds with
/// probability at least 1 - lambda under SR-nearness.
/// Throws InvalidLambda unless 0 < lambda < 1.
Wide probabilistic_bound(const Polynomial& p, const Rational& x, const Wide& u, double lambda,
                         const BoundOptions& opts = {});

/// C_1..C_{2n} with |Y_i - Y_{i-1}| <= C_i u for the normalized Horner
/// errors Y_i = Z_i / t^floor((i+1)/2), t the Horner point:
///   C_{2k-1} = |a_n|(1+u)^{2k-2} + sum_{j=1}^{k-1} |a_{n-j}| |t|^-j (1+u)^{2(k-j)-1}
///   C_{2k}   = |a_n|(1+u)^{2k-1} + sum_{j=1}^{k}   |a_{n-j}| |t|^-j (1+u)^{2(k-j)}
/// Element i-1 of the result holds C_i. Throws ZeroX when t == 0.
std::vector<Wide> martingale_constants(const Polynomial& p, const Rational& x, const Wide& u);

/// sqrt(sum b_k^2) * sqrt(2 ln(2/lambda)): the deviation A with
/// P(|M_n - M_0| >= A) <= lambda for increments bounded by |b_k|.
/// Throws InvalidLambda, and ConfigError unless every b_k > 0.
Wide azuma_threshold(std::span<const Wide> b, double lambda);

struct BoundReport {
    int n = 0;
    Wide u;
    Rational exact_value;  // P(x)
    Rational cond1;
    Wide gamma_2n;
    Wide gamma_4n;
    double lambda = 0.5;
    Wide deterministic_bound;
    Wide probabilistic_bound;
    /// C_1..C_{2n}; empty when the Horner point is zero.
    std::vector<Wide> constants;
    /// Absolute Azuma bound on |Z_{2n}| = |t|^n |Y_{2n}| from the actual
    /// constants: u * sqrt(sum (|t|^n C_i)^2) * sqrt(2 ln(2/lambda)).
    /// Zero when the Horner point is zero.
    Wide martingale_bound;
};

/// Everything above for one (P, x, format, lambda).
BoundReport bound_report(const Polynomial& p, const Rational& x, const FloatFormat& fmt,
                         double lambda = 0.5, const BoundOptions& opts = {});

}  // namespace srlab
