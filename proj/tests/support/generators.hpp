#pragma once

#include "polyrec/laurent.hpp"
#include "polyrec/polytope.hpp"
#include "polyrec/ratfn.hpp"
#include "polyrec/recurrence.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace polyrec {

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.str(); }
inline std::ostream& operator<<(std::ostream& os, const Polytope& p) {
    os << "[";
    for (const auto& v : p.vertices) {
        os << "(";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ")";
    }
    return os << "]";
}
inline std::ostream& operator<<(std::ostream& os, const std::vector<LaurentPoly>& ps) {
    os << "{";
    for (const auto& p : ps) os << p << "; ";
    return os << "}";
}

}  // namespace polyrec

namespace polyrec::testing {

inline LaurentPoly poly(std::size_t vars, std::initializer_list<std::pair<long, ExpVec>> terms) {
    std::vector<LaurentPoly::Term> ts;
    for (const auto& [c, e] : terms) ts.push_back({e, Rational(c)});
    return LaurentPoly::from_terms(vars, std::move(ts));
}

inline LaurentPoly x1(Exponent k = 1) { return LaurentPoly::variable(1, 0, k); }
inline LaurentPoly one(std::size_t vars = 1) { return LaurentPoly::constant(vars, 1); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    long nonzero(long bound) {
        long c = 0;
        while (c == 0) c = integer(-bound, bound);
        return c;
    }

    ExpVec exps(std::size_t vars, Exponent lo, Exponent hi) {
        ExpVec e(vars);
        for (auto& x : e) x = integer(lo, hi);
        return e;
    }

    // Nonzero polynomial with up to max_terms terms.
    LaurentPoly laurent(std::size_t vars, std::size_t max_terms, Exponent lo, Exponent hi, long coeff_bound = 3) {
        for (;;) {
            const auto count = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
            std::vector<LaurentPoly::Term> ts;
            for (std::size_t i = 0; i < count; ++i) ts.push_back({exps(vars, lo, hi), Rational(nonzero(coeff_bound))});
            auto p = LaurentPoly::from_terms(vars, std::move(ts));
            if (!p.is_zero()) return p;
        }
    }

    // c_d is a signed monomial; the other coefficients, c_0 included, are nonzero.
    Recurrence unit_leading(std::size_t vars, std::size_t order, Exponent lo, Exponent hi, std::size_t max_terms = 3) {
        std::vector<LaurentPoly> c;
        for (std::size_t j = 0; j < order; ++j) c.push_back(laurent(vars, max_terms, lo, hi));
        c.push_back(LaurentPoly::monomial(exps(vars, lo, hi), Rational(integer(0, 1) ? 1 : -1)));
        return Recurrence(std::move(c));
    }

    // Univariate polynomial of degree at most deg with integer coefficients.
    LaurentPoly univariate(std::size_t deg, long coeff_bound = 3) {
        std::vector<LaurentPoly::Term> ts;
        for (std::size_t k = 0; k <= deg; ++k) ts.push_back({{static_cast<Exponent>(k)}, Rational(integer(-coeff_bound, coeff_bound))});
        return LaurentPoly::from_terms(1, std::move(ts));
    }

    RatFn ratfn(std::size_t deg) {
        LaurentPoly den;
        do den = integer(0, 1) ? univariate(deg) : one(); while (den.is_zero());
        return RatFn(univariate(deg), den);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace polyrec::testing
