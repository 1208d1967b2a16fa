// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "srlab/errors.hpp"
#include "srlab/exact.hpp"
#include "srlab/format.hpp"
#include "srlab/rng.hpp"

namespace srlab {
namespace {

const FloatFormat kB32 = FloatFormat::binary32();

TEST(FloatFormat, Binary32Parameters) {
    EXPECT_EQ(kB32.base(), 2);
    EXPECT_EQ(kB32.precision(), 24);
    EXPECT_EQ(kB32.unit_roundoff(), 0x1p-23);
    EXPECT_EQ(kB32.min_normal(), static_cast<double>(std::numeric_limits<float>::min()));
    EXPECT_EQ(kB32.max_finite(), static_cast<double>(std::numeric_limits<float>::max()));
    EXPECT_EQ(kB32.ulp_at(0), 0x1p-23);
    EXPECT_EQ(kB32.ulp_at(-1), 0x1p-24);
    EXPECT_EQ(kB32.name(), "binary32");
    EXPECT_EQ(FloatFormat::toy(4).name(), "p4");
}

TEST(FloatFormat, RejectsBadParameters) {
    EXPECT_THROW(FloatFormat(1, -10, 10), ConfigError);
    EXPECT_THROW(FloatFormat(25, -10, 10), ConfigError);
    EXPECT_THROW(FloatFormat(8, 10, 10), ConfigError);
    EXPECT_THROW(FloatFormat(8, -2000, 10), ConfigError);
    EXPECT_NO_THROW(FloatFormat(2, -1, 0));
}

TEST(Decompose, PowersOfTwo) {
    const FloatDecomposition one = decompose(1.0, kB32);
    EXPECT_EQ(one.sign, 1);
    EXPECT_EQ(one.significand, 1 << 23);
    EXPECT_EQ(one.exponent, 0);

    const FloatDecomposition half = decompose(0.5, kB32);
    EXPECT_EQ(half.significand, 1 << 23);
    EXPECT_EQ(half.exponent, -1);

    const FloatDecomposition neg = decompose(-6.0, kB32);
    EXPECT_EQ(neg.sign, -1);
    EXPECT_EQ(neg.significand, 3 << 22);
    EXPECT_EQ(neg.exponent, 2);
}

TEST(Decompose, NearestBinary32ToPointFifteen) {
    const double x = static_cast<float>(0.15);
    const FloatDecomposition d = decompose(x, kB32);
    EXPECT_EQ(d.exponent, -3);
    EXPECT_GE(d.significand, 1 << 23);
    EXPECT_LT(d.significand, 1 << 24);
    EXPECT_EQ(recompose(d, kB32), x);
}

TEST(Decompose, ZeroAndSpecials) {
    const FloatDecomposition z = decompose(0.0, kB32);
    EXPECT_EQ(z.significand, 0);
    EXPECT_EQ(recompose(z, kB32), 0.0);
    EXPECT_THROW(decompose(std::numeric_limits<double>::infinity(), kB32), SubnormalOrSpecial);
    EXPECT_THROW(decompose(std::nan(""), kB32), SubnormalOrSpecial);
    EXPECT_THROW(decompose(0x1p-130, kB32), SubnormalOrSpecial);
}

// Every normal value of a toy format over a slice of exponents.
TEST(Decompose, ExhaustiveRoundTripAtToyPrecision) {
    for (int p = 2; p <= 8; ++p) {
        const FloatFormat fmt(p, -6, 6);
        int count = 0;
        for (int e = fmt.emin(); e <= fmt.emax(); ++e) {
            for (std::int64_t m = std::int64_t{1} << (p - 1); m < (std::int64_t{1} << p); ++m) {
                for (const int s : {1, -1}) {
                    const double x = s * std::ldexp(static_cast<double>(m), e - p + 1);
                    const FloatDecomposition d = decompose(x, fmt);
                    ASSERT_EQ(d.sign, s);
                    ASSERT_EQ(d.significand, m);
                    ASSERT_EQ(d.exponent, e);
                    ASSERT_EQ(recompose(d, fmt), x);
                    ASSERT_TRUE(is_representable(x, fmt));
                    ++count;
                }
            }
        }
        EXPECT_EQ(count, 2 * 13 * (1 << (p - 1)));
    }
}

TEST(Representable, RejectsExtraBitsAndRange) {
    EXPECT_TRUE(is_representable(0.0, kB32));
    EXPECT_FALSE(is_representable(0.1, kB32));
    EXPECT_FALSE(is_representable(1e300, kB32));
    EXPECT_THROW(require_format_value(0.1, kB32), NotRepresentable);
    EXPECT_THROW(require_format_value(1e300, kB32), RangeError);
    EXPECT_NO_THROW(require_format_value(static_cast<float>(0.1), kB32));
}

TEST(ExactValueOps, SumAndProductAreExact) {
    const double a = static_cast<float>(0.1);
    const double b = static_cast<float>(1e-12);
    EXPECT_EQ(to_rational(ExactValue::sum(a, b)), to_rational(a) + to_rational(b));
    EXPECT_EQ(to_rational(ExactValue::difference(a, b)), to_rational(a) - to_rational(b));
    EXPECT_EQ(to_rational(ExactValue::product(a, b)), to_rational(a) * to_rational(b));
    // Operands 80 binades apart do not fit one double.
    const double big = 0x1.fffffep+40;
    const double tiny = 0x1.000002p-40;
    EXPECT_EQ(to_rational(ExactValue::sum(big, tiny)), to_rational(big) + to_rational(tiny));
}

TEST(ExactValueOps, QuotientIsWithinDoubleDoubleAccuracy) {
    const double a = 1.0;
    const double b = 3.0;
    const Rational q = to_rational(ExactValue::quotient(a, b));
    const Rational err = boost::multiprecision::abs(q - Rational(1, 3));
    EXPECT_LT(err, Rational(1, 3) * to_rational(0x1p-104));
    EXPECT_THROW(ExactValue::quotient(1.0, 0.0), DivisionByZero);
}

TEST(Neighborhood, PointFifteenExact) {
    // 0.15 = 3/20 is not a double; carry it as a double-double.
    const double hi = 0.15;
    const double lo = to_double(Rational(3, 20) - to_rational(hi));
    const RoundingNeighborhood nb = neighborhood(ExactValue{hi, lo}, kB32);
    EXPECT_EQ(nb.epsilon(), 0x1p-26);
    EXPECT_EQ(nb.exponent, -3);
    EXPECT_NEAR(nb.theta, 0.6, 1e-15);
    const ExactNeighborhood ref = exact_neighborhood(Rational(3, 20), kB32);
    EXPECT_EQ(ref.theta, Rational(3, 5));
    EXPECT_EQ(to_rational(nb.down), ref.down);
    EXPECT_EQ(to_rational(nb.up), ref.up);
    EXPECT_EQ(round_nearest(ExactValue{hi, lo}, kB32), nb.up);
}

TEST(Neighborhood, RepresentableValue) {
    const RoundingNeighborhood nb = neighborhood(ExactValue::of(0.25), kB32);
    EXPECT_TRUE(nb.representable());
    EXPECT_EQ(nb.down, 0.25);
    EXPECT_EQ(nb.up, 0.25);
    EXPECT_EQ(nb.theta, 0.0);
    EXPECT_EQ(nb.epsilon(), 0.0);
    EXPECT_EQ(round_nearest(ExactValue::of(0.25), kB32), 0.25);
}

TEST(Neighborhood, ZeroByConvention) {
    const RoundingNeighborhood nb = neighborhood(ExactValue::of(0.0), kB32);
    EXPECT_EQ(nb.theta, 0.0);
    EXPECT_EQ(nb.down, 0.0);
    EXPECT_EQ(nb.up, 0.0);
}

TEST(Neighborhood, NegativeValuesMirror) {
    const double x = -(1.0 + 0x1p-25);
    const RoundingNeighborhood nb = neighborhood(ExactValue::of(x), kB32);
    EXPECT_EQ(nb.down, -(1.0 + 0x1p-23));
    EXPECT_EQ(nb.up, -1.0);
    EXPECT_EQ(nb.theta, 0.75);
}

TEST(Neighborhood, StepIncrementInUpperHalfInterval) {
    // A partial sum s + h with s on the [1/2, 1) grid has the fractional
    // part of h measured in ulps of that interval.
    const double h = static_cast<float>(0.05);
    const double s = 0.5;
    const RoundingNeighborhood nb = neighborhood(ExactValue::sum(s, h), kB32);
    EXPECT_EQ(nb.theta, 0.8125);
    EXPECT_EQ(nb.epsilon(), 0x1p-24);
}

TEST(Neighborhood, RangeErrors) {
    EXPECT_THROW(neighborhood(ExactValue::of(0x1p-127), kB32), RangeError);
    EXPECT_THROW(neighborhood(ExactValue::of(0x1p+128), kB32), RangeError);
    // Between max_finite and the next (overflowing) binade step.
    EXPECT_THROW(neighborhood(ExactValue::sum(kB32.max_finite(), 0x1p+100), kB32), RangeError);
}

TEST(RoundNearest, TiesToEven) {
    // 1 + 2^-24 is halfway between 1 (even) and 1 + 2^-23 (odd).
    EXPECT_EQ(round_nearest(ExactValue::of(1.0 + 0x1p-24), kB32), 1.0);
    // 1 + 3*2^-24 is halfway between an odd and an even significand.
    EXPECT_EQ(round_nearest(ExactValue::of(1.0 + 3 * 0x1p-24), kB32), 1.0 + 0x1p-22);
    EXPECT_EQ(round_nearest(ExactValue::of(-(1.0 + 0x1p-24)), kB32), -1.0);
}

TEST(RoundNearest, MatchesHardwareFloatConversion) {
    RngStream rng(11, 0);
    for (int i = 0; i < 100000; ++i) {
        const double x = std::ldexp(1.0 + rng.draw_unit(), static_cast<int>(rng.next_u64() % 200) - 100);
        ASSERT_EQ(round_nearest(ExactValue::of(x), kB32), static_cast<double>(static_cast<float>(x))) << x;
    }
}

// Double-double path against the big-integer path on random sums and
// products of format values, several precisions.
TEST(Neighborhood, AgreesWithRationalOracle) {
    RngStream rng(7, 1);
    for (const int p : {3, 8, 17, 24}) {
        const FloatFormat fmt = FloatFormat::toy(p);
        for (int i = 0; i < 20000; ++i) {
            auto draw = [&] {
                const double v = std::ldexp(1.0 + rng.draw_unit(), static_cast<int>(rng.next_u64() % 60) - 30);
                return round_nearest(ExactValue::of(rng.next_u64() & 1 ? v : -v), fmt);
            };
            const double a = draw();
            const double b = draw();
            const ExactValue x = (i & 1) ? ExactValue::sum(a, b) : ExactValue::product(a, b);
            if (x.is_zero()) {
                continue;
            }
            const RoundingNeighborhood nb = neighborhood(x, fmt);
            const ExactNeighborhood ref = exact_neighborhood(to_rational(x), fmt);
            ASSERT_EQ(to_rational(nb.down), ref.down);
            ASSERT_EQ(to_rational(nb.up), ref.up);
            ASSERT_EQ(nb.exponent, ref.exponent);
            // theta is exact when it fits a double. Otherwise it is correctly
            // rounded, except that values rounding to 1 are clamped just below.
            if (to_rational(to_double(ref.theta)) == ref.theta) {
                ASSERT_EQ(to_rational(nb.theta), ref.theta);
            } else {
                ASSERT_LE(boost::multiprecision::abs(to_rational(nb.theta) - ref.theta), to_rational(0x1p-53));
            }
            ASSERT_EQ(nb.epsilon() == 0.0, ref.representable());
        }
    }
}

TEST(Neighborhood, DivisionThetaAgreesWithRationalOracle) {
    RngStream rng(9, 2);
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        const double a = round_nearest(ExactValue::of(1.0 + rng.draw_unit()), kB32);
        const double b = round_nearest(ExactValue::of(1.0 + rng.draw_unit()), kB32);
        const RoundingNeighborhood nb = neighborhood(ExactValue::quotient(a, b), kB32);
        const ExactNeighborhood ref = exact_neighborhood(to_rational(a) / to_rational(b), kB32);
        ASSERT_EQ(to_rational(nb.down), ref.down);
        ASSERT_LE(std::fabs(nb.theta - to_double(ref.theta)), 0x1p-28);
        ++checked;
    }
    EXPECT_EQ(checked, 20000);
}

TEST(Neighborhood, Invariants) {
    RngStream rng(3, 3);
    for (int i = 0; i < 50000; ++i) {
        const double x = std::ldexp(1.0 + rng.draw_unit(), static_cast<int>(rng.next_u64() % 40) - 20);
        const RoundingNeighborhood nb = neighborhood(ExactValue::of(x), kB32);
        ASSERT_LE(nb.down, x);
        ASSERT_GE(nb.up, x);
        ASSERT_GE(nb.theta, 0.0);
        ASSERT_LT(nb.theta, 1.0);
        ASSERT_EQ(nb.theta == 0.0, is_representable(x, kB32));
        ASSERT_TRUE(nb.epsilon() == 0.0 || nb.epsilon() == kB32.ulp_at(nb.exponent));
    }
}

// The floor in the format, scaled to integer significands, is the integer
// floor of the scaled value.
TEST(Neighborhood, DownwardRoundingCommutesWithScaling) {
    RngStream rng(5, 4);
    const int p = kB32.precision();
    for (int i = 0; i < 100000; ++i) {
        const int e = static_cast<int>(rng.next_u64() % 200) - 100;
        const double x = std::ldexp(1.0 + rng.draw_unit(), e);
        const RoundingNeighborhood nb = neighborhood(ExactValue::of(x), kB32);
        ASSERT_EQ(std::ldexp(nb.down, p - 1 - e), std::floor(std::ldexp(x, p - 1 - e)));
    }
}

TEST(ExactHelpers, ParseAndPrintRationals) {
    EXPECT_EQ(parse_rational("24/26"), Rational(12, 13));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("8/64"), Rational(1, 8));
    EXPECT_THROW(parse_rational("1/0"), ConfigError);
    EXPECT_THROW(parse_rational("abc"), ConfigError);
    EXPECT_THROW(parse_rational(""), ConfigError);
    EXPECT_EQ(to_string(Rational(12, 13)), "12/13");
    EXPECT_EQ(floor_log2(Rational(1, 3)), -2);
    EXPECT_EQ(floor_log2(Rational(8)), 3);
    EXPECT_EQ(to_double(Rational(1, 10)), 0.1);
}

TEST(ExactHelpers, RoundNearestExactOfTwentyFourOverTwentySix) {
    const double x = round_nearest_exact(Rational(24, 26), kB32);
    EXPECT_EQ(x, static_cast<double>(static_cast<float>(24.0 / 26.0)));
}

}  // namespace
}  // namespace srlab
