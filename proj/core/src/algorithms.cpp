// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/algorithms.hpp"

#include <cmath>
#include <string>

#include "srlab/eft.hpp"
#include "srlab/errors.hpp"

namespace srlab {

namespace {

double minus_exact(double a, const ExactValue& b) {
    const auto [d, err] = eft::two_sum(a, -b.hi);
    return d + (err - b.lo);
}

}  // namespace

double IntegrationRun::final_step_error() const { return minus_exact(result, last_exact); }

double IntegrationRun::accumulated_error() const {
    const auto [p, e] = eft::two_prod(static_cast<double>(n_steps), h);
    return minus_exact(result, ExactValue{p, e});
}

double integration_step(int n_steps, const FloatFormat& fmt) {
    if (n_steps < 1) {
        throw ConfigError("N must be >= 1, got " + std::to_string(n_steps));
    }
    return round_nearest(ExactValue::quotient(1.0, n_steps), fmt);
}

IntegrationRun integrate_constant(int n_steps, const FloatFormat& fmt, SRMode mode, RngStream& rng,
                                  StepRounding step) {
    if (n_steps < 1) {
        throw ConfigError("N must be >= 1, got " + std::to_string(n_steps));
    }
    IntegrationRun run;
    run.n_steps = n_steps;
    const ExactValue inverse = ExactValue::quotient(1.0, n_steps);
    run.h = step == StepRounding::Nearest ? round_nearest(inverse, fmt) : sr_round(inverse, fmt, mode, rng);
    run.partial_sums.reserve(static_cast<std::size_t>(n_steps));
    run.partial_sums.push_back(run.h);
    run.last_exact = inverse;
    double s = run.h;
    for (int k = 1; k < n_steps; ++k) {
        run.last_exact = ExactValue::sum(s, run.h);
        s = sr_round(run.last_exact, fmt, mode, rng);
        run.partial_sums.push_back(s);
    }
    run.result = s;
    return run;
}

std::vector<BiasTableRow> bias_table(int n_steps, const FloatFormat& fmt, int first_k,
                                     SRMode trajectory, RngStream* rng) {
    if (n_steps < 2) {
        throw ConfigError("bias table needs N >= 2, got " + std::to_string(n_steps));
    }
    if (trajectory != SRMode::Nearest && rng == nullptr) {
        throw ConfigError("a stochastic trajectory needs a random stream");
    }
    const double h = integration_step(n_steps, fmt);
    std::vector<BiasTableRow> rows;
    double s = h;
    for (int k = 1; k < n_steps; ++k) {
        const ExactValue exact = ExactValue::sum(s, h);
        const RoundingNeighborhood nb = neighborhood(exact, fmt);
        if (k >= first_k) {
            BiasTableRow row;
            row.k = k;
            row.s_k = exact;
            row.theta = nb.theta;
            row.epsilon = nb.epsilon();
            row.predicted_bias = bias_up_or_down(exact, fmt);
            row.exponent = nb.exponent;
            rows.push_back(row);
        }
        s = trajectory == SRMode::Nearest ? round_nearest(exact, fmt)
                                          : sr_round(exact, fmt, trajectory, *rng);
    }
    return rows;
}

double theta_of_interval(double h, int exponent, const FloatFormat& fmt) {
    const double scaled = std::ldexp(std::fabs(h), fmt.precision() - 1 - exponent);
    return scaled - std::floor(scaled);
}

double predicted_total_bias(int n_steps, const FloatFormat& fmt) {
    if (n_steps < 2) {
        throw ConfigError("predicted bias needs N >= 2, got " + std::to_string(n_steps));
    }
    const double h = integration_step(n_steps, fmt);
    double s = h;
    for (int k = 1; k < n_steps - 1; ++k) {
        s = round_nearest(ExactValue::sum(s, h), fmt);
    }
    const int e = decompose(s, fmt).exponent;
    const double theta = theta_of_interval(h, e, fmt);
    if (theta == 0.0) {
        return 0.0;
    }
    // ulp_e (1/2 - theta) with theta a multiple of 2^-(p-1+e_h-e): exact.
    return fmt.ulp_at(e) * (0.5 - theta);
}

HornerResult horner_eval(std::span<const double> coefficients, Variable variable, double x,
                         Rounder& rounder, bool with_trace) {
    if (coefficients.empty()) {
        throw EmptyPolynomial("polynomial has no coefficients");
    }
    const int n = static_cast<int>(coefficients.size()) - 1;
    const double t = variable == Variable::XSquared ? rounder.mul(x, x) : x;

    HornerResult out;
    double r = coefficients[static_cast<std::size_t>(n)];
    std::vector<double> computed;
    if (with_trace) {
        computed.reserve(static_cast<std::size_t>(2 * n + 1));
        computed.push_back(r);
    }
    for (int k = 1; k <= n; ++k) {
        r = rounder.mul(r, t);
        if (with_trace) {
            computed.push_back(r);
        }
        r = rounder.add(r, coefficients[static_cast<std::size_t>(n - k)]);
        if (with_trace) {
            computed.push_back(r);
        }
    }
    out.value = r;
    if (!with_trace) {
        return out;
    }

    HornerTrace trace;
    trace.point = t;
    trace.computed = std::move(computed);
    const Rational tr = to_rational(t);
    trace.exact.reserve(trace.computed.size());
    trace.exact.push_back(to_rational(coefficients[static_cast<std::size_t>(n)]));
    for (int k = 1; k <= n; ++k) {
        trace.exact.push_back(trace.exact.back() * tr);
        trace.exact.push_back(trace.exact.back() + to_rational(coefficients[static_cast<std::size_t>(n - k)]));
    }
    trace.errors.reserve(trace.exact.size());
    for (std::size_t i = 0; i < trace.exact.size(); ++i) {
        trace.errors.push_back(to_rational(trace.computed[i]) - trace.exact[i]);
    }
    if (t != 0.0) {
        Rational power = 1;
        for (std::size_t i = 0; i < trace.errors.size(); ++i) {
            // t^floor((i+1)/2) steps up on every odd index.
            if (i % 2 == 1) {
                power *= tr;
            }
            trace.normalized.push_back(trace.errors[i] / power);
        }
    }
    out.trace = std::move(trace);
    return out;
}

HornerResult horner_eval(const Polynomial& p, double x, const FloatFormat& fmt, SRMode mode,
                         RngStream& rng, bool with_trace) {
    require_format_value(x, fmt);
    const std::vector<double> coeffs = p.format_coefficients(fmt);
    Rounder rounder(fmt, mode, rng);
    return horner_eval(coeffs, p.variable(), x, rounder, with_trace);
}

}  // namespace srlab
