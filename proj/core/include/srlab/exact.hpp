// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "srlab/format.hpp"

namespace srlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits; used for every bound so that referee
/// values are not themselves polluted by format rounding.
using Wide = boost::multiprecision::cpp_bin_float_50;

Rational to_rational(double v);
Rational to_rational(const ExactValue& v);
Wide to_wide(const Rational& r);
/// Nearest binary64 (ties to even); for reporting exact quantities.
double to_double(const Rational& r);
double to_double(const Wide& w);

/// Accepts "p/q", integers and plain decimals ("0.125"), exactly.
/// Throws ConfigError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// floor(log2 |r|) for r != 0.
int floor_log2(const Rational& r);

/// Rounding neighborhood computed entirely in big-integer arithmetic.
/// Serves as an independent route to check the double-double path and to
/// round user-supplied rationals into a format.
struct ExactNeighborhood {
    Rational down;
    Rational up;
    Rational theta;
    int exponent = 0;

    bool representable() const { return theta == 0; }
};

/// Same range contract as neighborhood(): throws RangeError outside the
/// normal range of fmt.
ExactNeighborhood exact_neighborhood(const Rational& x, const FloatFormat& fmt);

/// Round-to-nearest-even of an arbitrary rational into fmt.
double round_nearest_exact(const Rational& x, const FloatFormat& fmt);

}  // namespace srlab
