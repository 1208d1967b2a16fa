// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/bounds.hpp"

#include <string>

#include "srlab/errors.hpp"

namespace srlab {

namespace mp = boost::multiprecision;

namespace {

void check_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw InvalidLambda("lambda must lie in (0, 1), got " + std::to_string(lambda));
    }
}

Wide ipow(Wide base, int n) {
    Wide acc = 1;
    while (n > 0) {
        if (n & 1) {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    return acc;
}

Wide log_term(double lambda) { return mp::log(Wide(2) / Wide(lambda)); }

}  // namespace

Wide gamma(int n, const Wide& u) {
    if (n < 0) {
        throw ConfigError("gamma needs n >= 0");
    }
    if (!(u > 0 && u < 1)) {
        throw ConfigError("gamma needs 0 < u < 1");
    }
    return ipow(1 + u, n) - 1;
}

Rational cond1(const Polynomial& p, const Rational& x) {
    const Rational value = exact_eval(p, x);
    if (value == 0) {
        throw ZeroDenominator("P(x) == 0: the condition number is undefined");
    }
    return abs_term_sum(p, x) / mp::abs(value);
}

int bound_degree(const Polynomial& p, const BoundOptions& opts) {
    const bool extra = opts.count_squaring && p.variable() == Variable::XSquared && p.degree() > 0;
    return p.degree() + (extra ? 1 : 0);
}

Wide deterministic_bound(const Polynomial& p, const Rational& x, const Wide& u,
                         const BoundOptions& opts) {
    return to_wide(cond1(p, x)) * gamma(2 * bound_degree(p, opts), u);
}

Wide probabilistic_bound(const Polynomial& p, const Rational& x, const Wide& u, double lambda,
                         const BoundOptions& opts) {
    check_lambda(lambda);
    const Wide c = to_wide(cond1(p, x));
    return c * mp::sqrt(u * gamma(4 * bound_degree(p, opts), u)) * mp::sqrt(log_term(lambda));
}

std::vector<Wide> martingale_constants(const Polynomial& p, const Rational& x, const Wide& u) {
    const Rational t = p.horner_point(x);
    if (t == 0) {
        throw ZeroX("martingale constants are undefined at a zero Horner point");
    }
    const int n = p.degree();
    const Wide inv_t = 1 / mp::abs(to_wide(t));
    const Wide one_u = 1 + u;

    // weights[j] = |a_{n-j}| |t|^-j
    std::vector<Wide> weights(static_cast<std::size_t>(n) + 1);
    Wide inv_pow = 1;
    for (int j = 0; j <= n; ++j) {
        weights[static_cast<std::size_t>(j)] = to_wide(mp::abs(p[n - j])) * inv_pow;
        inv_pow *= inv_t;
    }

    std::vector<Wide> c;
    c.reserve(static_cast<std::size_t>(2 * n));
    for (int k = 1; k <= n; ++k) {
        Wide odd = weights[0] * ipow(one_u, 2 * k - 2);
        for (int j = 1; j <= k - 1; ++j) {
            odd += weights[static_cast<std::size_t>(j)] * ipow(one_u, 2 * (k - j) - 1);
        }
        Wide even = weights[0] * ipow(one_u, 2 * k - 1);
        for (int j = 1; j <= k; ++j) {
            even += weights[static_cast<std::size_t>(j)] * ipow(one_u, 2 * (k - j));
        }
        c.push_back(odd);
        c.push_back(even);
    }
    return c;
}

Wide azuma_threshold(std::span<const Wide> b, double lambda) {
    check_lambda(lambda);
    Wide sum_sq = 0;
    for (const Wide& v : b) {
        if (!(v > 0)) {
            throw ConfigError("Azuma increments must be positive");
        }
        sum_sq += v * v;
    }
    return mp::sqrt(sum_sq) * mp::sqrt(2 * log_term(lambda));
}

BoundReport bound_report(const Polynomial& p, const Rational& x, const FloatFormat& fmt,
                         double lambda, const BoundOptions& opts) {
    check_lambda(lambda);
    BoundReport r;
    r.n = bound_degree(p, opts);
    r.u = Wide(fmt.unit_roundoff());
    r.lambda = lambda;
    r.exact_value = exact_eval(p, x);
    r.cond1 = cond1(p, x);
    r.gamma_2n = gamma(2 * r.n, r.u);
    r.gamma_4n = gamma(4 * r.n, r.u);
    const Wide c = to_wide(r.cond1);
    r.deterministic_bound = c * r.gamma_2n;
    r.probabilistic_bound = c * mp::sqrt(r.u * r.gamma_4n) * mp::sqrt(log_term(lambda));

    const Rational t = p.horner_point(x);
    if (t != 0 && p.degree() > 0) {
        r.constants = martingale_constants(p, x, r.u);
        const Wide scale = r.u * mp::pow(mp::abs(to_wide(t)), p.degree());
        std::vector<Wide> b;
        b.reserve(r.constants.size());
        for (const Wide& ci : r.constants) {
            b.push_back(scale * ci);
        }
        r.martingale_bound = azuma_threshold(b, lambda);
    } else if (t != 0) {
        r.martingale_bound = 0;
    }
    return r;
}

}  // namespace srlab
