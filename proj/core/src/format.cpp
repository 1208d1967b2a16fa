// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/format.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "srlab/eft.hpp"
#include "srlab/errors.hpp"

namespace srlab {

FloatFormat::FloatFormat(int precision, int emin, int emax)
    : precision_(precision), emin_(emin), emax_(emax) {
    if (precision < 2 || precision > 24) {
        throw ConfigError("precision must be in [2, 24], got " + std::to_string(precision));
    }
    if (emin >= emax || emin < -1000 || emax > 1000) {
        throw ConfigError("invalid exponent range [" + std::to_string(emin) + ", " +
                          std::to_string(emax) + "]");
    }
}

double FloatFormat::unit_roundoff() const { return std::ldexp(1.0, 1 - precision_); }

double FloatFormat::min_normal() const { return std::ldexp(1.0, emin_); }

double FloatFormat::max_finite() const {
    return std::ldexp(2.0 - std::ldexp(1.0, 1 - precision_), emax_);
}

double FloatFormat::ulp_at(int exponent) const { return std::ldexp(1.0, exponent - precision_ + 1); }

std::string FloatFormat::name() const {
    if (*this == binary32()) {
        return "binary32";
    }
    std::ostringstream os;
    os << 'p' << precision_;
    if (emin_ != -126 || emax_ != 127) {
        os << 'e' << emin_ << ':' << emax_;
    }
    return os.str();
}

ExactValue ExactValue::sum(double a, double b) {
    const auto [s, t] = eft::two_sum(a, b);
    return {s, t};
}

ExactValue ExactValue::difference(double a, double b) { return sum(a, -b); }

ExactValue ExactValue::product(double a, double b) {
    const auto [p, e] = eft::two_prod(a, b);
    return {p, e};
}

ExactValue ExactValue::quotient(double a, double b) {
    if (b == 0.0) {
        throw DivisionByZero("division by zero");
    }
    const auto [q, r] = eft::div_rem(a, b);
    return {q, r};
}

bool is_representable(double x, const FloatFormat& fmt) {
    if (x == 0.0) {
        return true;
    }
    if (!std::isfinite(x)) {
        return false;
    }
    const double ax = std::fabs(x);
    if (ax < fmt.min_normal() || ax > fmt.max_finite()) {
        return false;
    }
    const double scaled = std::ldexp(ax, fmt.precision() - 1 - std::ilogb(ax));
    return scaled == std::floor(scaled);
}

void require_format_value(double x, const FloatFormat& fmt) {
    if (x == 0.0) {
        return;
    }
    if (!std::isfinite(x)) {
        throw SubnormalOrSpecial("non-finite value");
    }
    const double ax = std::fabs(x);
    if (ax < fmt.min_normal()) {
        throw SubnormalOrSpecial("subnormal value for " + fmt.name());
    }
    if (ax > fmt.max_finite()) {
        throw RangeError("value exceeds the range of " + fmt.name());
    }
    if (!is_representable(x, fmt)) {
        throw NotRepresentable("value has more than " + std::to_string(fmt.precision()) +
                               " significand bits");
    }
}

FloatDecomposition decompose(double x, const FloatFormat& fmt) {
    require_format_value(x, fmt);
    FloatDecomposition d;
    d.sign = std::signbit(x) ? -1 : 1;
    if (x == 0.0) {
        return d;
    }
    const double ax = std::fabs(x);
    d.exponent = std::ilogb(ax);
    d.significand = static_cast<std::int64_t>(std::ldexp(ax, fmt.precision() - 1 - d.exponent));
    return d;
}

double recompose(const FloatDecomposition& d, const FloatFormat& fmt) {
    const double mag =
        std::ldexp(static_cast<double>(d.significand), d.exponent - fmt.precision() + 1);
    return d.sign < 0 ? -mag : mag;
}

int exponent_of(const ExactValue& x) {
    const double ahi = std::fabs(x.hi);
    int e = std::ilogb(ahi);
    // hi is a power of two and lo pulls the value below it.
    const bool lo_opposes = (x.lo < 0.0) != (x.hi < 0.0);
    if (x.lo != 0.0 && lo_opposes && ahi == std::ldexp(1.0, e)) {
        --e;
    }
    return e;
}

RoundingNeighborhood neighborhood(const ExactValue& x, const FloatFormat& fmt) {
    if (!std::isfinite(x.hi) || !std::isfinite(x.lo)) {
        throw RangeError("non-finite exact value");
    }
    if (x.hi == 0.0) {
        return {0.0, 0.0, 0.0, 0.0, fmt.emin()};
    }
    const bool negative = x.hi < 0.0;
    const double hi = std::fabs(x.hi);
    const double lo = negative ? -x.lo : x.lo;
    const int e = exponent_of(x);
    if (e < fmt.emin()) {
        throw RangeError("underflow: value below the normal range of " + fmt.name());
    }
    if (e > fmt.emax()) {
        throw RangeError("overflow: value above the range of " + fmt.name());
    }

    // Scale |x| into [2^(p-1), 2^p); both scalings are exact.
    const int shift = fmt.precision() - 1 - e;
    const double shi = std::ldexp(hi, shift);
    const double slo = std::ldexp(lo, shift);
    double m = std::floor(shi);
    // frac = |x| scaled minus m, cofrac = 1 - frac. Each is formed with a
    // single rounding so that theta stays accurate near 0 for either sign.
    double frac;
    double cofrac;
    if (m == shi) {
        if (slo < 0.0) {
            m -= 1.0;
            frac = 1.0 + slo;
            cofrac = -slo;
        } else {
            frac = slo;
            cofrac = 1.0 - slo;
        }
    } else {
        frac = (shi - m) + slo;
        cofrac = ((m + 1.0) - shi) - slo;
    }
    const double below_one = std::nextafter(1.0, 0.0);
    frac = std::min(frac, below_one);
    cofrac = std::min(cofrac, below_one);

    RoundingNeighborhood nb;
    nb.exponent = e;
    nb.ulp = fmt.ulp_at(e);
    const double down = std::ldexp(m, -shift);
    if (frac == 0.0) {
        nb.down = nb.up = negative ? -down : down;
        return nb;
    }
    const double up = down + nb.ulp;
    if (up > fmt.max_finite()) {
        throw RangeError("overflow: upper neighbor above the range of " + fmt.name());
    }
    if (negative) {
        nb.down = -up;
        nb.up = -down;
        nb.theta = cofrac;
    } else {
        nb.down = down;
        nb.up = up;
        nb.theta = frac;
    }
    return nb;
}

double round_nearest(const ExactValue& x, const FloatFormat& fmt) {
    const RoundingNeighborhood nb = neighborhood(x, fmt);
    if (nb.representable()) {
        return nb.down;
    }
    if (nb.theta < 0.5) {
        return nb.down;
    }
    if (nb.theta > 0.5) {
        return nb.up;
    }
    const double q = std::fabs(nb.down) / nb.ulp;
    return std::fmod(q, 2.0) == 0.0 ? nb.down : nb.up;
}

}  // namespace srlab
