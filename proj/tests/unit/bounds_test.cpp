// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "srlab/algorithms.hpp"
#include "srlab/bounds.hpp"
#include "srlab/chebyshev.hpp"
#include "srlab/errors.hpp"

namespace srlab {
namespace {

const FloatFormat kB32 = FloatFormat::binary32();
const Wide kU = Wide(1) / Wide(8388608);  // 2^-23

double d(const Wide& w) { return to_double(w); }

// Reference values from a 50-digit mpmath model.

TEST(Gamma, Values) {
    EXPECT_EQ(gamma(0, kU), 0);
    EXPECT_EQ(gamma(1, kU), kU);
    EXPECT_NEAR(d(gamma(40, kU)), 4.7683826665146652471e-6, 1e-21);
    EXPECT_GT(gamma(40, kU), 40 * kU);
    EXPECT_THROW(gamma(-1, kU), ConfigError);
    EXPECT_THROW(gamma(2, Wide(0)), ConfigError);
}

TEST(Cond1, ChebyshevTwenty) {
    const Polynomial t20 = chebyshev_z_coeffs(20);
    EXPECT_NEAR(to_double(cond1(t20, Rational(1, 8))), 7.56884661742049, 1e-12);
    EXPECT_EQ(cond1(t20, Rational(1)), Rational(22619537));
    const Rational x = to_rational(round_nearest_exact(Rational(24, 26), kB32));
    EXPECT_NEAR(to_double(cond1(t20, x)), 178387701.39188853, 1e-5);
}

TEST(Cond1, AtLeastOneAndExactForPositiveTerms) {
    const Polynomial p({Rational(1), Rational(2), Rational(3)});
    EXPECT_EQ(cond1(p, Rational(1, 2)), Rational(1));
    const Polynomial q({Rational(1), Rational(-1)});
    EXPECT_EQ(cond1(q, Rational(1, 2)), Rational(3));
    EXPECT_THROW(cond1(q, Rational(1)), ZeroDenominator);
}

TEST(Bounds, DeterministicAndProbabilisticAtTwentyFourOverTwentySix) {
    const Polynomial t20 = chebyshev_z_coeffs(20);
    const Rational x = to_rational(round_nearest_exact(Rational(24, 26), kB32));
    EXPECT_EQ(bound_degree(t20), 10);
    EXPECT_EQ(bound_degree(t20, {true}), 11);
    EXPECT_NEAR(d(deterministic_bound(t20, x, kU)), 425.3099046087478, 1e-9);
    EXPECT_NEAR(d(probabilistic_bound(t20, x, kU, 0.5)), 158.35553139215135, 1e-9);
    EXPECT_NEAR(d(deterministic_bound(t20, Rational(1), kU)), 53.929239788957147, 1e-11);
    EXPECT_NEAR(d(probabilistic_bound(t20, Rational(1), kU, 0.5)), 20.079460487079872, 1e-11);
    EXPECT_GT(deterministic_bound(t20, x, kU, {true}), deterministic_bound(t20, x, kU));
}

TEST(Bounds, ProbabilisticShrinksWithLambdaAndBeatsDeterministic) {
    const Polynomial t20 = chebyshev_z_coeffs(20);
    const Rational x(3, 4);
    EXPECT_LT(probabilistic_bound(t20, x, kU, 0.9), probabilistic_bound(t20, x, kU, 0.1));
    EXPECT_LT(probabilistic_bound(t20, x, kU, 0.5), deterministic_bound(t20, x, kU));
    EXPECT_THROW(probabilistic_bound(t20, x, kU, 0.0), InvalidLambda);
    EXPECT_THROW(probabilistic_bound(t20, x, kU, 1.0), InvalidLambda);
    EXPECT_THROW(probabilistic_bound(t20, x, kU, std::nan("")), InvalidLambda);
}

TEST(Bounds, SquareRootAsymptotics) {
    for (const int n : {10, 100, 1000}) {
        const Wide ratio = boost::multiprecision::sqrt(kU * gamma(4 * n, kU)) / (2 * boost::multiprecision::sqrt(Wide(n)) * kU);
        EXPECT_LE(d(boost::multiprecision::abs(ratio - 1)), 10.0 * n * d(kU)) << n;
    }
}

TEST(Martingale, ConstantsMatchClosedForm) {
    // P = a0 + a1 t + a2 t^2 at t = 1/2.
    const Polynomial p({Rational(5), Rational(-3), Rational(2)});
    const Rational t(1, 2);
    const std::vector<Wide> c = martingale_constants(p, t, kU);
    ASSERT_EQ(c.size(), 4u);
    const Wide one_u = 1 + kU;
    const Wide inv_t = 2;
    EXPECT_EQ(c[0], Wide(2));
    EXPECT_EQ(c[1], 2 * one_u + 3 * inv_t);
    EXPECT_EQ(c[2], 2 * one_u * one_u + 3 * inv_t * one_u);
    EXPECT_EQ(c[3], 2 * one_u * one_u * one_u + 3 * inv_t * one_u * one_u + 5 * inv_t * inv_t);
    EXPECT_THROW(martingale_constants(p, Rational(0), kU), ZeroX);
}

// |Y_i - Y_{i-1}| <= C_i u on actual SR-nearness traces.
TEST(Martingale, IncrementsRespectConstants) {
    const Polynomial t20 = chebyshev_z_coeffs(20);
    const double x = round_nearest_exact(Rational(24, 26), kB32);
    for (std::uint64_t s = 0; s < 200; ++s) {
        RngStream rng(s, 9);
        const HornerResult r = horner_eval(t20, x, kB32, SRMode::Nearness, rng, true);
        const HornerTrace& tr = *r.trace;
        const std::vector<Wide> c = martingale_constants(t20, to_rational(tr.point), kU);
        ASSERT_EQ(tr.normalized.size(), c.size() + 1);
        for (std::size_t i = 1; i < tr.normalized.size(); ++i) {
            const Wide step = to_wide(tr.normalized[i] - tr.normalized[i - 1]);
            ASSERT_LE(boost::multiprecision::abs(step), c[i - 1] * kU) << "seed " << s << " i " << i;
        }
    }
}

TEST(Azuma, Threshold) {
    const std::vector<Wide> b(4, Wide(1));
    EXPECT_NEAR(d(azuma_threshold(b, 0.5)), 2.0 * std::sqrt(2.0 * std::log(4.0)), 1e-14);
    EXPECT_THROW(azuma_threshold(b, 1.5), InvalidLambda);
    const std::vector<Wide> bad = {Wide(1), Wide(0)};
    EXPECT_THROW(azuma_threshold(bad, 0.5), ConfigError);
}

TEST(BoundReport, ConsistentFields) {
    const Polynomial t20 = chebyshev_z_coeffs(20);
    const Rational x(3, 4);
    const BoundReport r = bound_report(t20, x, kB32, 0.25);
    EXPECT_EQ(r.n, 10);
    EXPECT_EQ(r.u, kU);
    EXPECT_EQ(r.exact_value, chebyshev_value(20, x));
    EXPECT_EQ(r.cond1, cond1(t20, x));
    EXPECT_EQ(r.deterministic_bound, deterministic_bound(t20, x, kU));
    EXPECT_EQ(r.probabilistic_bound, probabilistic_bound(t20, x, kU, 0.25));
    EXPECT_EQ(r.constants.size(), 20u);
    EXPECT_GT(r.martingale_bound, 0);
}

}  // namespace
}  // namespace srlab
