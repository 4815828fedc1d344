#pragma once

#include <gmpxx.h>

#include <string>

namespace polyrec {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// once canonicalize() has run; every constructor below does that.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

}  // namespace polyrec
