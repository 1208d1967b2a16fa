// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "srlab/exact.hpp"
#include "srlab/polynomial.hpp"

namespace srlab {

/// Integer coefficients of T_N in x, ascending, from
/// T_{m+1} = 2x T_m - T_{m-1} in exact integer arithmetic. N >= 0.
std::vector<BigInt> chebyshev_coeffs(int n);

/// T_N as a Polynomial in x.
Polynomial chebyshev_polynomial(int n);

/// T_N for even N written in z = x^2: T_N(x) = sum_i a_i z^i.
/// Throws OddDegree for odd N, ConfigError outside 0 <= N <= 40.
Polynomial chebyshev_z_coeffs(int n);

/// T_N(x) by running the three-term recurrence on values. Shares no code
/// with the coefficient route.
Rational chebyshev_value(int n, const Rational& x);

}  // namespace srlab
