#include "polyrec/ratfn.hpp"

#include "polyrec/errors.hpp"

#include <algorithm>

namespace polyrec {

namespace {

using Dense = std::vector<Integer>;  // index = degree

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const Dense& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(Dense& p) {
    trim(p);
    if (p.empty()) return;
    Integer g = content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Ordinary integer polynomial proportional to p / x^{min exponent}.
Dense to_dense(const LaurentPoly& p) {
    const Exponent lo = p.lex_least().exp[0];
    const Exponent hi = p.lex_greatest().exp[0];
    const Rational scale = lp_primitive_scale(p);
    Dense d(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& t : p.terms()) {
        Rational c = t.coeff * scale;
        d[static_cast<std::size_t>(t.exp[0] - lo)] = c.get_num();
    }
    return d;
}

// Pseudo-remainder of a by b, both nonzero.
Dense prem(Dense a, const Dense& b) {
    const Integer& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

LaurentPoly lp_gcd_univariate(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.var_count() == 1 && b.var_count() == 1, "univariate gcd needs one variable");
    if (a.is_zero() && b.is_zero()) return LaurentPoly(1);
    if (a.is_zero() || b.is_zero()) {
        Dense d = to_dense(a.is_zero() ? b : a);
        make_primitive(d);
        std::vector<LaurentPoly::Term> terms;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] != 0) terms.push_back({ExpVec{static_cast<Exponent>(i)}, Rational(d[i])});
        return LaurentPoly::from_terms(1, std::move(terms));
    }
    Dense x = to_dense(a), y = to_dense(b);
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Dense r = prem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    make_primitive(x);
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) terms.push_back({ExpVec{static_cast<Exponent>(i)}, Rational(x[i])});
    return LaurentPoly::from_terms(1, std::move(terms));
}

RatFn::RatFn(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.var_count(), 1)) {}

RatFn::RatFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require(num_.var_count() == den_.var_count(), "variable-count mismatch");
    require(!den_.is_zero(), "rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    const std::size_t r = num_.var_count();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(r, 1);
        return;
    }
    if (den_.is_monomial()) {
        num_ = *lp_divide_exact(num_, den_);
        den_ = LaurentPoly::constant(r, 1);
        return;
    }
    if (r == 1) {
        const LaurentPoly g = lp_gcd_univariate(num_, den_);
        if (!g.is_constant()) {
            num_ = *lp_divide_exact(num_, g);
            den_ = *lp_divide_exact(den_, g);
        }
    } else if (auto q = lp_divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::constant(r, 1);
        return;
    }
    if (den_.is_monomial()) {
        num_ = *lp_divide_exact(num_, den_);
        den_ = LaurentPoly::constant(r, 1);
        return;
    }
    ExpVec shift = den_.min_exponents();
    for (auto& e : shift) e = -e;
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);

    Integer den_lcm = 1, num_gcd = 0;
    for (const auto* p : {&num_, &den_}) {
        for (const auto& t : p->terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        }
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (den_.lex_least().coeff < 0) scale = -scale;
    num_ *= scale;
    den_ *= scale;
}

RatFn RatFn::operator-() const { return RatFn(Raw{}, -num_, den_); }

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    require(!b.is_zero(), "division by the zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFn::operator==(const RatFn& other) const {
    if (var_count() != other.var_count()) return false;
    if (den_ == other.den_) return num_ == other.num_;
    return num_ * other.den_ == other.num_ * den_;
}

Rational RatFn::evaluate(std::span<const Rational> point) const {
    const Rational d = den_.evaluate(point);
    require(d != 0, "denominator vanishes at evaluation point");
    return num_.evaluate(point) / d;
}

std::string RatFn::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace polyrec
