// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace srlab {

/// A binary floating-point format with p significand digits and normal
/// exponents in [emin, emax].
///
/// A normal value is x = s * m * 2^(e - p + 1) with 2^(p-1) <= m < 2^p, so
/// e is the usual IEEE exponent (x in [2^e, 2^(e+1))). The unit roundoff
/// is u = 2^(1 - p), the per-operation relative error bound shared by
/// round-to-nearest and stochastic rounding.
///
/// Every value of a supported format is exactly representable as a double
/// (p <= 24 and the exponent range sits well inside binary64's), so format
/// values are carried as plain `double`s.
class FloatFormat {
  public:
    /// Throws ConfigError unless 2 <= precision <= 24 and
    /// -1000 <= emin < emax <= 1000.
    FloatFormat(int precision, int emin, int emax);

    static FloatFormat binary32() { return {24, -126, 127}; }
    /// Reduced precision with the binary32 exponent range.
    static FloatFormat toy(int precision) { return {precision, -126, 127}; }

    int base() const { return 2; }
    int precision() const { return precision_; }
    int emin() const { return emin_; }
    int emax() const { return emax_; }

    double unit_roundoff() const;
    double min_normal() const;
    double max_finite() const;
    /// Spacing of format values in [2^e, 2^(e+1)).
    double ulp_at(int exponent) const;

    /// "binary32" or "p<precision>[e<emin>:<emax>]".
    std::string name() const;

    friend bool operator==(const FloatFormat&, const FloatFormat&) = default;

  private:
    int precision_;
    int emin_;
    int emax_;
};

/// An exact real carried as an unevaluated sum hi + lo of two doubles with
/// |lo| <= ulp(hi)/2.
///
/// Sums, differences and products of two format values are held exactly.
/// Quotients carry the correctly computed remainder, so the represented
/// value differs from the true quotient by at most 2^-106 relative.
struct ExactValue {
    double hi = 0.0;
    double lo = 0.0;

    static ExactValue of(double v) { return {v, 0.0}; }
    static ExactValue sum(double a, double b);
    static ExactValue difference(double a, double b);
    static ExactValue product(double a, double b);
    static ExactValue quotient(double a, double b);

    bool is_zero() const { return hi == 0.0; }

    friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

struct FloatDecomposition {
    int sign = 1;                   // +1 or -1
    std::int64_t significand = 0;   // 2^(p-1) <= m < 2^p, or 0 for zero
    int exponent = 0;               // x in [2^e, 2^(e+1))
};

/// Neighbors of an exact real in a format.
///
/// For non-representable x: down < x < up, up - down == ulp and theta is the
/// fraction (x - down)/ulp in (0, 1). For representable x: down == up == x
/// and theta == 0. `ulp` is the spacing at x's exponent in both cases.
struct RoundingNeighborhood {
    double down = 0.0;
    double up = 0.0;
    double ulp = 0.0;
    double theta = 0.0;
    int exponent = 0;

    bool representable() const { return theta == 0.0; }
    /// ceil(x) - floor(x): zero when x is representable, ulp otherwise.
    double epsilon() const { return up - down; }
};

/// True for zero and for finite normal values of `fmt`.
bool is_representable(double x, const FloatFormat& fmt);

/// Throws SubnormalOrSpecial / RangeError / NotRepresentable unless x is a
/// zero or a normal value of `fmt`.
void require_format_value(double x, const FloatFormat& fmt);

/// Zero decomposes to (sign, 0, 0).
FloatDecomposition decompose(double x, const FloatFormat& fmt);
double recompose(const FloatDecomposition& d, const FloatFormat& fmt);

/// IEEE exponent of a non-zero exact value (floor(log2|x|)).
int exponent_of(const ExactValue& x);

/// Throws RangeError when x is non-zero and outside [min_normal, max_finite]
/// in magnitude, or when its upper neighbor would overflow.
///
/// theta is exact whenever it fits in a double (always for products, and
/// for sums whose operands are within ~29 binades of each other);
/// otherwise it is correctly rounded and clamped into (0, 1).
RoundingNeighborhood neighborhood(const ExactValue& x, const FloatFormat& fmt);

/// Round to nearest, ties to even.
double round_nearest(const ExactValue& x, const FloatFormat& fmt);

}  // namespace srlab
