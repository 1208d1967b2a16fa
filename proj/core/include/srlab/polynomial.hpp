// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "srlab/exact.hpp"
#include "srlab/format.hpp"

namespace srlab {

/// How the evaluation point maps onto the Horner variable.
enum class Variable {
    X,         // P(x) = sum a_i x^i
    XSquared,  // P(x) = sum a_i (x^2)^i; Horner runs in z = x^2
};

/// Polynomial with exact rational coefficients a_0..a_n (ascending).
/// Trailing zero coefficients are dropped so that a_n != 0 for n >= 1.
class Polynomial {
  public:
    /// Throws EmptyPolynomial for an empty coefficient list.
    explicit Polynomial(std::vector<Rational> coefficients, Variable variable = Variable::X);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Variable variable() const { return variable_; }

    /// The point Horner's loop runs at: x, or x^2 for Variable::XSquared.
    Rational horner_point(const Rational& x) const;

    /// Coefficients as format values. Throws NotRepresentable (or
    /// RangeError) if any coefficient would have to be rounded.
    std::vector<double> format_coefficients(const FloatFormat& fmt) const;

  private:
    std::vector<Rational> coeffs_;
    Variable variable_;
};

/// Exact value of P at x (the variable convention is applied).
Rational exact_eval(const Polynomial& p, const Rational& x);

/// sum |a_i t^i| at the Horner point t.
Rational abs_term_sum(const Polynomial& p, const Rational& x);

}  // namespace srlab
