// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

#include "srlab/errors.hpp"

namespace srlab {

namespace mp = boost::multiprecision;

namespace {

Rational pow2(int k) {
    if (k >= 0) {
        return Rational(BigInt(1) << k);
    }
    return Rational(BigInt(1), BigInt(1) << -k);
}

// floor(|r| * 2^shift) and the remainder fraction numerator/denominator.
struct Scaled {
    BigInt quotient;
    BigInt remainder;
    BigInt denominator;
};

Scaled scale_floor(const Rational& a, int shift) {
    BigInt n = mp::numerator(a);
    BigInt d = mp::denominator(a);
    if (shift >= 0) {
        n <<= shift;
    } else {
        d <<= -shift;
    }
    Scaled s;
    s.denominator = d;
    mp::divide_qr(n, d, s.quotient, s.remainder);
    return s;
}

// Nearest-even rounding to `precision` bits with no exponent range.
double round_to_precision(const Rational& r, int precision) {
    if (r == 0) {
        return 0.0;
    }
    const Rational a = mp::abs(r);
    const int shift = precision - 1 - floor_log2(a);
    Scaled s = scale_floor(a, shift);
    const BigInt twice = 2 * s.remainder;
    const int c = twice.compare(s.denominator);
    if (c > 0 || (c == 0 && mp::bit_test(s.quotient, 0))) {
        s.quotient += 1;
    }
    const double mag = std::ldexp(s.quotient.convert_to<double>(), -shift);
    return r < 0 ? -mag : mag;
}

bool is_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational to_rational(double v) {
    if (v == 0.0) {
        return Rational(0);
    }
    if (!std::isfinite(v)) {
        throw SubnormalOrSpecial("cannot convert a non-finite value to a rational");
    }
    int e = 0;
    const double m = std::frexp(v, &e);
    const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    return Rational(mant) * pow2(e - 53);
}

Rational to_rational(const ExactValue& v) { return to_rational(v.hi) + to_rational(v.lo); }

Wide to_wide(const Rational& r) {
    return Wide(mp::numerator(r)) / Wide(mp::denominator(r));
}

double to_double(const Rational& r) { return round_to_precision(r, 53); }

double to_double(const Wide& w) { return w.convert_to<double>(); }

int floor_log2(const Rational& r) {
    const Rational a = mp::abs(r);
    const BigInt& n = mp::numerator(a);
    const BigInt& d = mp::denominator(a);
    int e = static_cast<int>(mp::msb(n)) - static_cast<int>(mp::msb(d));
    if (e >= 0) {
        if (n < (d << e)) {
            --e;
        }
    } else if ((n << -e) < d) {
        --e;
    }
    return e;
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) {
            throw ConfigError("malformed rational '" + original + "'");
        }
        const BigInt d(std::string{den});
        if (d == 0) {
            throw ConfigError("zero denominator in '" + original + "'");
        }
        value = Rational(BigInt(std::string{num}), d);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            throw ConfigError("malformed decimal '" + original + "'");
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        const BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string{whole});
        const BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string{frac});
        value = Rational(w * scale + f, scale);
    } else {
        if (!is_digits(text)) {
            throw ConfigError("malformed number '" + original + "'");
        }
        value = Rational(BigInt(std::string{text}));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.str(); }

ExactNeighborhood exact_neighborhood(const Rational& x, const FloatFormat& fmt) {
    ExactNeighborhood nb;
    if (x == 0) {
        nb.exponent = fmt.emin();
        return nb;
    }
    const Rational a = mp::abs(x);
    const int e = floor_log2(a);
    if (e < fmt.emin()) {
        throw RangeError("underflow: value below the normal range of " + fmt.name());
    }
    if (e > fmt.emax()) {
        throw RangeError("overflow: value above the range of " + fmt.name());
    }
    nb.exponent = e;
    const int shift = fmt.precision() - 1 - e;
    const Scaled s = scale_floor(a, shift);
    const Rational unit = pow2(-shift);
    const Rational down = Rational(s.quotient) * unit;
    if (s.remainder == 0) {
        nb.down = nb.up = x;
        return nb;
    }
    const Rational up = down + unit;
    if (up > to_rational(fmt.max_finite())) {
        throw RangeError("overflow: upper neighbor above the range of " + fmt.name());
    }
    const Rational theta(s.remainder, s.denominator);
    if (x < 0) {
        nb.down = -up;
        nb.up = -down;
        nb.theta = 1 - theta;
    } else {
        nb.down = down;
        nb.up = up;
        nb.theta = theta;
    }
    return nb;
}

double round_nearest_exact(const Rational& x, const FloatFormat& fmt) {
    const ExactNeighborhood nb = exact_neighborhood(x, fmt);
    if (nb.representable()) {
        return to_double(nb.down);
    }
    const Rational half(1, 2);
    if (nb.theta < half) {
        return to_double(nb.down);
    }
    if (nb.theta > half) {
        return to_double(nb.up);
    }
    const Rational q = mp::abs(nb.down) / pow2(nb.exponent - fmt.precision() + 1);
    return mp::bit_test(mp::numerator(q), 0) ? to_double(nb.up) : to_double(nb.down);
}

}  // namespace srlab
