// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

#include "srlab/errors.hpp"
#include "srlab/exact.hpp"
#include "srlab/sr.hpp"

namespace srlab {
namespace {

const FloatFormat kB32 = FloatFormat::binary32();

// 3/20 carried as a double-double: theta = 0.6 in binary32.
ExactValue point_fifteen() {
    const double hi = 0.15;
    return ExactValue{hi, to_double(Rational(3, 20) - to_rational(hi))};
}

double up_fraction(const ExactValue& x, SRMode mode, int n, std::uint64_t seed) {
    const RoundingNeighborhood nb = neighborhood(x, kB32);
    RngStream rng(seed, 0);
    int up = 0;
    for (int i = 0; i < n; ++i) {
        up += sr_round(x, kB32, mode, rng) == nb.up;
    }
    return static_cast<double>(up) / n;
}

TEST(Modes, NamesRoundTrip) {
    for (const SRMode m : {SRMode::Nearness, SRMode::UpOrDown, SRMode::Nearest}) {
        EXPECT_EQ(parse_mode(to_string(m)), m);
    }
    EXPECT_EQ(to_string(SRMode::Nearness), "sr-nearness");
    EXPECT_EQ(to_string(SRMode::UpOrDown), "sr-up-or-down");
    EXPECT_EQ(to_string(SRMode::Nearest), "rn");
    EXPECT_THROW(parse_mode("sr"), ConfigError);
}

TEST(SrRound, RepresentableValuesConsumeNoDraw) {
    RngStream rng(1, 1);
    for (const SRMode m : {SRMode::Nearness, SRMode::UpOrDown, SRMode::Nearest}) {
        EXPECT_EQ(sr_round(ExactValue::of(0.375), kB32, m, rng), 0.375);
        EXPECT_EQ(sr_add(1.0, 0.5, kB32, m, rng), 1.5);
        EXPECT_EQ(sr_mul(3.0, 0.25, kB32, m, rng), 0.75);
        EXPECT_EQ(sr_round(ExactValue::of(0.0), kB32, m, rng), 0.0);
    }
    EXPECT_EQ(rng.draws_consumed(), 0u);
}

TEST(SrRound, NearestNeverDraws) {
    RngStream rng(1, 1);
    EXPECT_EQ(sr_round(point_fifteen(), kB32, SRMode::Nearest, rng), static_cast<double>(0.15f));
    EXPECT_EQ(rng.draws_consumed(), 0u);
}

TEST(SrRound, ResultIsAlwaysANeighbor) {
    const ExactValue x = point_fifteen();
    const RoundingNeighborhood nb = neighborhood(x, kB32);
    RngStream rng(2, 2);
    for (int i = 0; i < 10000; ++i) {
        const double r = sr_round(x, kB32, (i & 1) ? SRMode::Nearness : SRMode::UpOrDown, rng);
        ASSERT_TRUE(r == nb.down || r == nb.up);
    }
}

TEST(SrRound, NearnessUpFrequencyIsTheta) {
    EXPECT_NEAR(up_fraction(point_fifteen(), SRMode::Nearness, 1000000, 3), 0.6, 0.002);
}

TEST(SrRound, UpOrDownIsFair) {
    EXPECT_NEAR(up_fraction(point_fifteen(), SRMode::UpOrDown, 1000000, 4), 0.5, 0.0015);
}

TEST(SrRound, MidpointProductUnderBothModes) {
    // (1 + 2^-23) * 1.5 = 1.5 + 2^-23 + 2^-24 sits exactly halfway.
    const ExactValue x = ExactValue::product(1.0 + 0x1p-23, 1.5);
    const RoundingNeighborhood nb = neighborhood(x, kB32);
    EXPECT_EQ(nb.theta, 0.5);
    EXPECT_EQ(nb.down, 1.5 + 0x1p-23);
    EXPECT_EQ(nb.up, 1.5 + 0x1p-22);
    EXPECT_EQ(probability_up(x, kB32, SRMode::Nearness), 0.5);
    EXPECT_EQ(probability_up(x, kB32, SRMode::UpOrDown), 0.5);
    // Ties go to the even significand, here the upper neighbor.
    EXPECT_EQ(probability_up(x, kB32, SRMode::Nearest), 1.0);
    EXPECT_NEAR(up_fraction(x, SRMode::Nearness, 400000, 5), 0.5, 0.0032);
    EXPECT_NEAR(up_fraction(x, SRMode::UpOrDown, 400000, 6), 0.5, 0.0032);
}

TEST(SrRound, ThresholdFormAgainstExplicitDraws) {
    // The k-th draw of a stream decides the k-th rounding.
    const ExactValue x = point_fifteen();
    const RoundingNeighborhood nb = neighborhood(x, kB32);
    RngStream draws(8, 8);
    RngStream rng(8, 8);
    for (int i = 0; i < 1000; ++i) {
        const double u = draws.draw_unit();
        ASSERT_EQ(sr_round(x, kB32, SRMode::Nearness, rng), u < nb.theta ? nb.up : nb.down);
    }
}

TEST(ProbabilityUp, Values) {
    EXPECT_EQ(probability_up(ExactValue::of(0.5), kB32, SRMode::Nearness), 0.0);
    EXPECT_EQ(probability_up(ExactValue::of(0.5), kB32, SRMode::UpOrDown), 0.0);
    // theta = 0.75 is on the 2^-53 draw grid.
    const ExactValue x = ExactValue::of(1.0 + 3 * 0x1p-25);
    EXPECT_EQ(probability_up(x, kB32, SRMode::Nearness), 0.75);
    EXPECT_EQ(probability_up(x, kB32, SRMode::UpOrDown), 0.5);
    EXPECT_EQ(probability_up(x, kB32, SRMode::Nearest), 1.0);
    const double p = probability_up(point_fifteen(), kB32, SRMode::Nearness);
    EXPECT_NEAR(p, 0.6, 0x1p-52);
}

TEST(ExpectedRound, NearnessIsExactUpOrDownIsMidpoint) {
    const ExactValue x = point_fifteen();
    const RoundingNeighborhood nb = neighborhood(x, kB32);
    EXPECT_EQ(to_rational(expected_round(x, kB32, SRMode::Nearness)), to_rational(x));
    EXPECT_EQ(to_rational(expected_round(x, kB32, SRMode::UpOrDown)),
              (to_rational(nb.down) + to_rational(nb.up)) / 2);
    EXPECT_EQ(expected_round(x, kB32, SRMode::Nearest).hi, nb.up);
    EXPECT_EQ(expected_round(ExactValue::of(2.0), kB32, SRMode::UpOrDown).hi, 2.0);
}

TEST(BiasUpOrDown, Values) {
    // ulp * (1/2 - theta) at a few hand-placed points.
    EXPECT_EQ(bias_up_or_down(ExactValue::of(1.0 + 3 * 0x1p-25), kB32), -0x1p-25);
    EXPECT_EQ(bias_up_or_down(ExactValue::of(1.0 + 0x1p-25), kB32), 0x1p-25);
    EXPECT_EQ(bias_up_or_down(ExactValue::of(0.5 + 0x1p-27), kB32), 0x1p-25 - 0x1p-27);
    EXPECT_EQ(bias_up_or_down(ExactValue::of(-(1.0 + 0x1p-25)), kB32), -0x1p-25);
    EXPECT_EQ(bias_up_or_down(ExactValue::of(0.75), kB32), 0.0);
    EXPECT_EQ(bias_up_or_down(ExactValue::product(1.0 + 0x1p-23, 1.5), kB32), 0.0);
    // theta = 0.6 at 0.15: ulp 2^-26 times -0.1.
    EXPECT_NEAR(bias_up_or_down(point_fifteen(), kB32), -0.1 * 0x1p-26, 1e-24);
}

TEST(SrOps, RejectNonFormatOperands) {
    RngStream rng(1, 1);
    EXPECT_THROW(sr_add(0.1, 1.0, kB32, SRMode::Nearness, rng), NotRepresentable);
    EXPECT_THROW(sr_mul(1.0, 1e300, kB32, SRMode::Nearness, rng), RangeError);
    EXPECT_THROW(sr_div(1.0, 0.0, kB32, SRMode::Nearness, rng), DivisionByZero);
    EXPECT_THROW(sr_mul(0x1p100, 0x1p100, kB32, SRMode::Nearness, rng), RangeError);
}

TEST(SrOps, DivisionExpectation) {
    // 1/3 in binary32 under SR-nearness averages to 1/3.
    RngStream rng(12, 0);
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += sr_div(1.0, 3.0, kB32, SRMode::Nearness, rng);
    }
    const double ulp = 0x1p-25;
    // Per-sample spread is at most ulp/2.
    EXPECT_NEAR(sum / n, 1.0 / 3.0, 4.0 * 0.5 * ulp / std::sqrt(n));
}

// Random binary32 value with exponent in [-20, 20].
double random_value(RngStream& rng) {
    const std::int64_t m = (std::int64_t{1} << 23) | static_cast<std::int64_t>(rng.next_u64() & 0x7fffff);
    const int e = static_cast<int>(rng.next_u64() % 41) - 20;
    const double v = std::ldexp(static_cast<double>(m), e - 23);
    return (rng.next_u64() & 1) ? -v : v;
}

__extension__ using i128 = __int128;

i128 scaled(double v) { return static_cast<i128>(std::ldexp(v, 43)); }
i128 abs128(i128 v) { return v < 0 ? -v : v; }

// |fl(a op b) - (a op b)| <= u |a op b| checked in exact integer and
// error-free arithmetic, independent of the library's neighbor code.
TEST(SrOps, PerOperationRelativeErrorBound) {
    const double u = kB32.unit_roundoff();
    for (const SRMode mode : {SRMode::Nearness, SRMode::UpOrDown, SRMode::Nearest}) {
        RngStream ops(21, static_cast<std::uint64_t>(mode));
        RngStream rng(22, static_cast<std::uint64_t>(mode));
        for (int i = 0; i < 100000; ++i) {
            const double a = random_value(ops);
            const double b = random_value(ops);

            for (const bool subtract : {false, true}) {
                const double r = subtract ? sr_sub(a, b, kB32, mode, rng) : sr_add(a, b, kB32, mode, rng);
                const i128 s = subtract ? scaled(a) - scaled(b) : scaled(a) + scaled(b);
                // The result is a multiple of 2^-43 whenever the sum is.
                ASSERT_LE(abs128(scaled(r) - s) << 23, abs128(s)) << a << (subtract ? " - " : " + ") << b;
            }

            const double p = sr_mul(a, b, kB32, mode, rng);
            ASSERT_LE(std::fabs(std::fma(a, b, -p)), u * std::fabs(a * b)) << a << " * " << b;

            const double q = sr_div(a, b, kB32, mode, rng);
            ASSERT_LE(std::fabs(std::fma(q, b, -a)), u * std::fabs(a)) << a << " / " << b;
        }
    }
}

// Under SR-nearness the relative error of a rounding has zero mean
// given the sign of the previous one. A 64-step multiplicative chain
// with a fixed factor, error conditioned on the previous step's sign.
TEST(SrOps, NearnessErrorsAreMeanIndependent) {
    const double c = static_cast<float>(1.0 / 3.0) * 2.0;  // ~0.667, not a power of two
    const int runs = 4000;
    double sum[2] = {0, 0};
    double sq[2] = {0, 0};
    int cnt[2] = {0, 0};
    for (int r = 0; r < runs; ++r) {
        RngStream rng(31, static_cast<std::uint64_t>(r));
        double x = 1.0 + 0x1p-20 * (r % 97);
        double prev = 0.0;
        for (int k = 0; k < 64; ++k) {
            const ExactValue exact = ExactValue::product(x, c);
            const double y = sr_round(exact, kB32, SRMode::Nearness, rng);
            const double rel = to_double((to_rational(y) - to_rational(exact)) / to_rational(exact)) / 0x1p-23;
            if (k > 0 && prev != 0.0) {
                const int g = prev > 0.0 ? 1 : 0;
                sum[g] += rel;
                sq[g] += rel * rel;
                ++cnt[g];
            }
            prev = rel;
            x = y < 0.25 ? y * 4.0 : y;  // keep the chain away from underflow
        }
    }
    for (int g = 0; g < 2; ++g) {
        ASSERT_GT(cnt[g], 1000);
        const double mean = sum[g] / cnt[g];
        const double var = sq[g] / cnt[g] - mean * mean;
        EXPECT_LE(std::fabs(mean), 4.0 * std::sqrt(var / cnt[g])) << "group " << g;
    }
}

}  // namespace
}  // namespace srlab
