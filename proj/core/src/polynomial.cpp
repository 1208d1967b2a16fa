// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/polynomial.hpp"

#include "srlab/errors.hpp"

namespace srlab {

namespace mp = boost::multiprecision;

Polynomial::Polynomial(std::vector<Rational> coefficients, Variable variable)
    : coeffs_(std::move(coefficients)), variable_(variable) {
    if (coeffs_.empty()) {
        throw EmptyPolynomial("polynomial has no coefficients");
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::horner_point(const Rational& x) const {
    return variable_ == Variable::XSquared ? Rational(x * x) : x;
}

std::vector<double> Polynomial::format_coefficients(const FloatFormat& fmt) const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) {
        const ExactNeighborhood nb = exact_neighborhood(c, fmt);
        if (!nb.representable()) {
            throw NotRepresentable("coefficient " + to_string(c) + " is not exactly representable in " +
                                   fmt.name());
        }
        out.push_back(to_double(c));
    }
    return out;
}

Rational exact_eval(const Polynomial& p, const Rational& x) {
    const Rational t = p.horner_point(x);
    Rational acc = p[p.degree()];
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = acc * t + p[i];
    }
    return acc;
}

Rational abs_term_sum(const Polynomial& p, const Rational& x) {
    const Rational t = mp::abs(p.horner_point(x));
    Rational power = 1;
    Rational sum = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        sum += mp::abs(p[i]) * power;
        power *= t;
    }
    return sum;
}

}  // namespace srlab
