// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/chebyshev.hpp"

#include <string>

#include "srlab/errors.hpp"

namespace srlab {

std::vector<BigInt> chebyshev_coeffs(int n) {
    if (n < 0) {
        throw ConfigError("Chebyshev degree must be non-negative");
    }
    std::vector<BigInt> prev{1};   // T_0
    if (n == 0) {
        return prev;
    }
    std::vector<BigInt> cur{0, 1};  // T_1
    for (int m = 1; m < n; ++m) {
        std::vector<BigInt> next(cur.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += 2 * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] -= prev[i];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial chebyshev_polynomial(int n) {
    std::vector<Rational> coeffs;
    for (const BigInt& c : chebyshev_coeffs(n)) {
        coeffs.emplace_back(c);
    }
    return Polynomial(std::move(coeffs), Variable::X);
}

Polynomial chebyshev_z_coeffs(int n) {
    if (n < 0 || n > 40) {
        throw ConfigError("Chebyshev degree must be in [0, 40], got " + std::to_string(n));
    }
    if (n % 2 != 0) {
        throw OddDegree("Chebyshev z-form requires an even degree, got " + std::to_string(n));
    }
    const std::vector<BigInt> x_coeffs = chebyshev_coeffs(n);
    std::vector<Rational> z_coeffs;
    for (std::size_t i = 0; i < x_coeffs.size(); i += 2) {
        z_coeffs.emplace_back(x_coeffs[i]);
    }
    return Polynomial(std::move(z_coeffs), Variable::XSquared);
}

Rational chebyshev_value(int n, const Rational& x) {
    Rational prev = 1;
    if (n == 0) {
        return prev;
    }
    Rational cur = x;
    for (int m = 1; m < n; ++m) {
        Rational next = 2 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace srlab
