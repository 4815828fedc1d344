#pragma once

#include "polyrec/laurent.hpp"

namespace polyrec {

// Greatest common divisor of two univariate Laurent polynomials, as an
// ordinary primitive integer polynomial with nonzero constant term and
// positive leading coefficient (monomial factors are units and drop out).
LaurentPoly lp_gcd_univariate(const LaurentPoly& a, const LaurentPoly& b);

// Quotient num/den of Laurent polynomials.
//
// Canonical form: a denominator that is a unit (monomial or scalar) is
// folded into the numerator, leaving den = 1. Otherwise den is shifted to
// have zero minimum exponents, num and den have coprime integer
// coefficients jointly, and den's lexicographically least term is positive.
// With one variable the pair is also reduced by its gcd, so the form is
// unique; with two or more it is unique only up to common polynomial
// factors, and equality is tested by cross-multiplication.
class RatFn {
public:
    explicit RatFn(std::size_t vars = 0) : num_(vars), den_(LaurentPoly::constant(vars, 1)) {}
    RatFn(LaurentPoly num);  // NOLINT: polynomials embed implicitly
    RatFn(LaurentPoly num, LaurentPoly den);

    static RatFn constant(std::size_t vars, const Rational& c) { return RatFn(LaurentPoly::constant(vars, c)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    std::size_t var_count() const { return num_.var_count(); }
    bool is_zero() const { return num_.is_zero(); }
    // Denominator is 1, i.e. the value lies in the Laurent ring.
    bool is_polynomial() const { return den_.is_constant(); }

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }

    // Value equality (cross-multiplied).
    bool operator==(const RatFn& other) const;

    Rational evaluate(std::span<const Rational> point) const;
    std::string str() const;

private:
    struct Raw {};
    RatFn(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace polyrec
