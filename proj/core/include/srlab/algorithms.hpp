// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "srlab/exact.hpp"
#include "srlab/format.hpp"
#include "srlab/polynomial.hpp"
#include "srlab/sr.hpp"

namespace srlab {

// ---------------------------------------------------------------------------
// Rectangle-rule integration of f(t) = 1 on [0, 1]
// ---------------------------------------------------------------------------

/// How the step h = fl(1/N) is produced.
enum class StepRounding {
    Nearest,  // h = RN(1/N) for every mode (default)
    RunMode,  // h rounded under the run's own mode
};

struct IntegrationRun {
    int n_steps = 0;
    double h = 0.0;
    /// s^_0 .. s^_{N-1}; s^_0 = h.
    std::vector<double> partial_sums;
    double result = 0.0;
    /// The exact operand of the final rounding, s_{N-1} = s^_{N-2} + h
    /// (for N == 1, the exact quotient 1/N).
    ExactValue last_exact;

    /// s^_{N-1} - s_{N-1}: the rounding error of the final step.
    double final_step_error() const;
    /// s^_{N-1} - N*h: deviation from the exact sum of the N steps taken.
    double accumulated_error() const;
};

/// s += h, N times, one rounding per addition (multiplying by the constant
/// integrand is exact and omitted). Throws ConfigError for N < 1.
IntegrationRun integrate_constant(int n_steps, const FloatFormat& fmt, SRMode mode, RngStream& rng,
                                  StepRounding step = StepRounding::Nearest);

/// RN(1/N) in fmt.
double integration_step(int n_steps, const FloatFormat& fmt);

struct BiasTableRow {
    int k = 0;
    /// Exact partial sum s_k = RN(s_{k-1}) + h along the round-to-nearest
    /// trajectory.
    ExactValue s_k;
    double theta = 0.0;
    /// Up-or-down bias of rounding s_k: epsilon * (1/2 - theta).
    double predicted_bias = 0.0;
    /// ceil(s_k) - floor(s_k); zero when s_k is representable.
    double epsilon = 0.0;
    /// IEEE exponent e with s_k in [2^e, 2^(e+1)).
    int exponent = 0;
};

/// Rows for k = first_k..N-1 of a partial-sum trajectory s_k = fl(s_{k-1}) + h,
/// h = RN(1/N). The trajectory is rounded to nearest by default; passing
/// a stochastic mode (with a stream) tabulates one random realization
/// instead. Rows start at k = 2 unless first_k says otherwise.
/// Throws ConfigError for N < 2 or a stochastic mode without a stream.
std::vector<BiasTableRow> bias_table(int n_steps, const FloatFormat& fmt, int first_k = 2,
                                     SRMode trajectory = SRMode::Nearest, RngStream* rng = nullptr);

/// frac(h * 2^(p-1-e)): the theta shared by every partial sum in
/// [2^e, 2^(e+1)) whose predecessor was already in that interval.
double theta_of_interval(double h, int exponent, const FloatFormat& fmt);

/// Up-or-down bias of the last step, epsilon(s_{N-1}) * (1/2 - theta(s_{N-1})),
/// with theta taken as the interval constant theta_of_interval(h, e).
///
/// e is the exponent of s^_{N-2} on the round-to-nearest trajectory: the
/// interval the sums occupy before the final addition, where theta is
/// constant. A final step that crosses into the next interval is not
/// modelled. Zero when h is a power of two. Throws ConfigError for N < 2.
double predicted_total_bias(int n_steps, const FloatFormat& fmt);

// ---------------------------------------------------------------------------
// Horner evaluation
// ---------------------------------------------------------------------------

/// Per-step record of one Horner evaluation at Horner point t:
///   r_0 = a_n, r_{2k-1} = r_{2k-2} t, r_{2k} = r_{2k-1} + a_{n-k}.
/// computed[i] is r^_i, exact[i] is r_i, errors[i] = Z_i = r^_i - r_i and
/// normalized[i] = Y_i = Z_i / t^floor((i+1)/2) (empty when t == 0).
///
/// For Variable::XSquared, t is the rounded square actually used by the
/// loop, so the recurrences hold exactly; the squaring's own error is not
/// part of Z.
struct HornerTrace {
    double point = 0.0;
    std::vector<double> computed;
    std::vector<Rational> exact;
    std::vector<Rational> errors;
    std::vector<Rational> normalized;
};

struct HornerResult {
    double value = 0.0;
    std::optional<HornerTrace> trace;
};

/// Evaluates P at x with every product and sum rounded by `rounder`. For
/// Variable::XSquared the loop runs at t = round(x * x).
HornerResult horner_eval(std::span<const double> coefficients, Variable variable, double x,
                         Rounder& rounder, bool with_trace = false);

/// Convenience overload; converts coefficients (NotRepresentable if any
/// needs rounding) and checks x.
HornerResult horner_eval(const Polynomial& p, double x, const FloatFormat& fmt, SRMode mode,
                         RngStream& rng, bool with_trace = false);

}  // namespace srlab
