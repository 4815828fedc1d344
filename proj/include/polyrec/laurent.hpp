#pragma once

#include "polyrec/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyrec {

using Exponent = std::int64_t;

// Laurent exponent vector; its length is the ambient variable count.
using ExpVec = std::vector<Exponent>;

// Sparse Laurent polynomial over Q in a fixed number of variables.
//
// Terms are kept sorted by lexicographic order on exponents with no zero
// coefficients, so two polynomials are equal iff their term lists are.
class LaurentPoly {
public:
    struct Term {
        ExpVec exp;
        Rational coeff;
        bool operator==(const Term&) const = default;
    };

    explicit LaurentPoly(std::size_t vars = 0) : vars_(vars) {}

    static LaurentPoly constant(std::size_t vars, const Rational& c);
    static LaurentPoly monomial(ExpVec exp, const Rational& c = 1);
    static LaurentPoly variable(std::size_t vars, std::size_t index, Exponent power = 1);
    // Sums coefficients of repeated exponents and drops zeros.
    static LaurentPoly from_terms(std::size_t vars, std::vector<Term> terms);

    std::size_t var_count() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // A single term: the units of the Laurent ring.
    bool is_monomial() const { return terms_.size() == 1; }

    Rational coeff(const ExpVec& exp) const;
    const Term& lex_least() const { return terms_.front(); }
    const Term& lex_greatest() const { return terms_.back(); }

    Exponent max_degree(std::size_t var) const;
    Exponent min_degree(std::size_t var) const;
    ExpVec min_exponents() const;
    ExpVec max_exponents() const;

    // Values must be nonzero wherever a negative exponent occurs.
    Rational evaluate(std::span<const Rational> point) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& other) const = default;

    // Multiply by the monomial x^shift.
    LaurentPoly shifted(const ExpVec& shift) const;

    std::string str(std::span<const std::string> names = {}) const;

private:
    LaurentPoly(std::size_t vars, std::vector<Term> sorted_terms)
        : vars_(vars), terms_(std::move(sorted_terms)) {}
    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract);

    std::size_t vars_;
    std::vector<Term> terms_;
};

struct Valuations {
    Exponent vstar;  // minimum exponent
    Exponent v;      // maximum exponent
    bool operator==(const Valuations&) const = default;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

// Substitutes x_i -> t^{omega_i}; the result is univariate in t.
LaurentPoly lp_specialize(const LaurentPoly& p, std::span<const Exponent> omega);

// Replaces every exponent e of variable `var` by n*e.
LaurentPoly lp_power_subst(const LaurentPoly& p, std::size_t var, Exponent n);

Valuations lp_valuations(const LaurentPoly& p);

// Quotient a/b when b divides a exactly in the Laurent ring.
std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly lp_pow(const LaurentPoly& p, unsigned n);

// Removes variable `var`; it must not occur in p.
LaurentPoly lp_drop_variable(const LaurentPoly& p, std::size_t var);

// Inserts a new variable (exponent 0 everywhere) at position `var`.
LaurentPoly lp_insert_variable(const LaurentPoly& p, std::size_t var);

// Collects p as sum_e C_e * x_var^e; the C_e keep all variables, with
// exponent 0 in position `var`. Ordered by increasing e.
std::vector<std::pair<Exponent, LaurentPoly>> lp_coefficients_in(const LaurentPoly& p,
                                                                   std::size_t var);

// Integer-coefficient multiple with coprime coefficients: returns the
// scalar s with s*p primitive over Z.
Rational lp_primitive_scale(const LaurentPoly& p);

}  // namespace polyrec
