#include "polyrec/laurent.hpp"

#include "polyrec/errors.hpp"

#include <algorithm>
#include <sstream>

namespace polyrec {

namespace {

void check_vars(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.var_count() == b.var_count(), "variable-count mismatch");
}

Rational pow_rational(const Rational& base, Exponent e) {
    Rational result = 1;
    Rational b = e < 0 ? Rational(1) / base : base;
    auto k = static_cast<unsigned long>(e < 0 ? -e : e);
    while (k) {
        if (k & 1) result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t vars, const Rational& c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.push_back({ExpVec(vars, 0), c});
    return p;
}

LaurentPoly LaurentPoly::monomial(ExpVec exp, const Rational& c) {
    LaurentPoly p(exp.size());
    if (c != 0) p.terms_.push_back({std::move(exp), c});
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t vars, std::size_t index, Exponent power) {
    require(index < vars, "variable index out of range");
    ExpVec e(vars, 0);
    e[index] = power;
    return monomial(std::move(e));
}

LaurentPoly LaurentPoly::from_terms(std::size_t vars, std::vector<Term> terms) {
    for (const auto& t : terms) require(t.exp.size() == vars, "exponent length differs from variable count");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return LaurentPoly(vars, std::move(out));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](Exponent e) { return e == 0; });
}

Rational LaurentPoly::coeff(const ExpVec& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const ExpVec& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return 0;
}

Exponent LaurentPoly::max_degree(std::size_t var) const {
    require(var < vars_, "variable index out of range");
    require(!is_zero(), "degree of the zero polynomial");
    Exponent m = terms_[0].exp[var];
    for (const auto& t : terms_) m = std::max(m, t.exp[var]);
    return m;
}

Exponent LaurentPoly::min_degree(std::size_t var) const {
    require(var < vars_, "variable index out of range");
    require(!is_zero(), "degree of the zero polynomial");
    Exponent m = terms_[0].exp[var];
    for (const auto& t : terms_) m = std::min(m, t.exp[var]);
    return m;
}

ExpVec LaurentPoly::min_exponents() const {
    require(!is_zero(), "exponents of the zero polynomial");
    ExpVec m = terms_[0].exp;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < vars_; ++i) m[i] = std::min(m[i], t.exp[i]);
    return m;
}

ExpVec LaurentPoly::max_exponents() const {
    require(!is_zero(), "exponents of the zero polynomial");
    ExpVec m = terms_[0].exp;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < vars_; ++i) m[i] = std::max(m[i], t.exp[i]);
    return m;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
    require(point.size() == vars_, "evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < vars_; ++i) {
            if (t.exp[i] == 0) continue;
            require(point[i] != 0 || t.exp[i] > 0, "negative power of zero");
            v *= pow_rational(point[i], t.exp[i]);
        }
        sum += v;
    }
    return sum;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly LaurentPoly::merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    check_vars(a, b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
            out.push_back(*i++);
        } else if (i == a.terms_.end() || j->exp < i->exp) {
            out.push_back({j->exp, subtract ? Rational(-j->coeff) : j->coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
            if (c != 0) out.push_back({i->exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return LaurentPoly(a.vars_, std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    *this = merge(*this, other, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    *this = merge(*this, other, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = lp_mul(*this, other);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return lp_mul(a, b); }

LaurentPoly LaurentPoly::shifted(const ExpVec& shift) const {
    require(shift.size() == vars_, "shift has wrong dimension");
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        for (std::size_t i = 0; i < vars_; ++i) t.exp[i] += shift[i];
    return r;  // translation preserves lexicographic order
}

std::string LaurentPoly::str(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    auto name = [&](std::size_t i) {
        if (i < names.size()) return names[i];
        if (vars_ == 1) return std::string("x");
        return "x" + std::to_string(i + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->coeff;
        const bool unit_monomial = std::any_of(it->exp.begin(), it->exp.end(), [](Exponent e) { return e != 0; });
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational ac = abs(c);
        if (ac != 1 || !unit_monomial) os << ac.get_str();
        bool need_star = ac != 1;
        for (std::size_t i = 0; i < vars_; ++i) {
            if (it->exp[i] == 0) continue;
            if (need_star) os << "*";
            os << name(i);
            if (it->exp[i] != 1) os << "^" << it->exp[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a, b);
    const std::size_t r = a.var_count();
    if (a.is_zero() || b.is_zero()) return LaurentPoly(r);

    // Work over Z: scale each factor by the lcm of its denominators.
    auto integral = [](const LaurentPoly& p, Integer& scale) {
        scale = 1;
        for (const auto& t : p.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coeff.get_den_mpz_t());
        std::vector<Integer> c;
        c.reserve(p.size());
        for (const auto& t : p.terms()) c.push_back(t.coeff.get_num() * (scale / t.coeff.get_den()));
        return c;
    };
    Integer sa, sb;
    const auto ca = integral(a, sa), cb = integral(b, sb);
    const Integer scale = sa * sb;

    const ExpVec lo_a = a.min_exponents(), lo_b = b.min_exponents();
    const ExpVec hi_a = a.max_exponents(), hi_b = b.max_exponents();
    ExpVec lo(r), extent(r);
    double volume = 1;
    for (std::size_t i = 0; i < r; ++i) {
        lo[i] = lo_a[i] + lo_b[i];
        extent[i] = hi_a[i] + hi_b[i] - lo[i] + 1;
        volume *= static_cast<double>(extent[i]);
    }
    const double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());

    std::vector<LaurentPoly::Term> out;
    auto emit = [&](ExpVec e, const Integer& v) {
        if (v != 0) out.push_back({std::move(e), make_rational(v, scale)});
    };
    if (volume <= std::max(64.0, 4 * pairs)) {
        // Dense accumulation; index order is lexicographic order.
        auto index = [&](const ExpVec& x, const ExpVec& y) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < r; ++i)
                k = k * static_cast<std::size_t>(extent[i]) + static_cast<std::size_t>(x[i] + y[i] - lo[i]);
            return k;
        };
        std::vector<Integer> acc(static_cast<std::size_t>(volume));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_addmul(acc[index(a.terms()[i].exp, b.terms()[j].exp)].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (acc[k] == 0) continue;
            ExpVec e(r);
            std::size_t rest = k;
            for (std::size_t i = r; i-- > 0;) {
                e[i] = lo[i] + static_cast<Exponent>(rest % static_cast<std::size_t>(extent[i]));
                rest /= static_cast<std::size_t>(extent[i]);
            }
            emit(std::move(e), acc[k]);
        }
        return LaurentPoly::from_terms(r, std::move(out));
    }

    std::vector<std::pair<ExpVec, Integer>> prod;
    prod.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            ExpVec e(r);
            for (std::size_t k = 0; k < r; ++k) e[k] = a.terms()[i].exp[k] + b.terms()[j].exp[k];
            prod.emplace_back(std::move(e), ca[i] * cb[j]);
        }
    std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < prod.size();) {
        std::size_t j = i + 1;
        Integer sum = prod[i].second;
        while (j < prod.size() && prod[j].first == prod[i].first) sum += prod[j++].second;
        emit(std::move(prod[i].first), sum);
        i = j;
    }
    return LaurentPoly::from_terms(r, std::move(out));
}

LaurentPoly lp_specialize(const LaurentPoly& p, std::span<const Exponent> omega) {
    require(omega.size() == p.var_count(), "direction vector has wrong dimension");
    require(std::any_of(omega.begin(), omega.end(), [](Exponent w) { return w != 0; }),
            "zero direction vector");
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Exponent w = 0;
        for (std::size_t i = 0; i < omega.size(); ++i) w += omega[i] * t.exp[i];
        out.push_back({ExpVec{w}, t.coeff});
    }
    return LaurentPoly::from_terms(1, std::move(out));
}

LaurentPoly lp_power_subst(const LaurentPoly& p, std::size_t var, Exponent n) {
    require(var < p.var_count(), "variable index out of range");
    require(n >= 1, "power substitution needs n >= 1");
    std::vector<LaurentPoly::Term> out(p.terms().begin(), p.terms().end());
    for (auto& t : out) t.exp[var] *= n;
    return LaurentPoly::from_terms(p.var_count(), std::move(out));
}

Valuations lp_valuations(const LaurentPoly& p) {
    require(p.var_count() == 1, "valuations need a univariate polynomial");
    require(!p.is_zero(), "valuations of the zero polynomial");
    return {p.lex_least().exp[0], p.lex_greatest().exp[0]};
}

std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a, b);
    require(!b.is_zero(), "division by the zero polynomial");
    const std::size_t r = a.var_count();
    if (a.is_zero()) return LaurentPoly(r);
    if (b.is_monomial()) {
        ExpVec neg = b.lex_least().exp;
        for (auto& e : neg) e = -e;
        LaurentPoly q = a.shifted(neg);
        q *= Rational(1) / b.lex_least().coeff;
        return q;
    }
    // Newton polytopes add under multiplication, which bounds the quotient's exponents.
    const ExpVec amin = a.min_exponents(), amax = a.max_exponents();
    const ExpVec bmin = b.min_exponents(), bmax = b.max_exponents();
    ExpVec lo(r), hi(r);
    for (std::size_t i = 0; i < r; ++i) {
        lo[i] = amin[i] - bmin[i];
        hi[i] = amax[i] - bmax[i];
        if (lo[i] > hi[i]) return std::nullopt;
    }
    const auto& lead_b = b.lex_greatest();
    std::vector<LaurentPoly::Term> quotient;
    LaurentPoly rem = a;
    while (!rem.is_zero()) {
        const auto& lead = rem.lex_greatest();
        ExpVec e(r);
        for (std::size_t i = 0; i < r; ++i) {
            e[i] = lead.exp[i] - lead_b.exp[i];
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        }
        Rational c = lead.coeff / lead_b.coeff;
        quotient.push_back({e, c});
        rem -= b.shifted(e) * c;
    }
    return LaurentPoly::from_terms(r, std::move(quotient));
}

LaurentPoly lp_pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly result = LaurentPoly::constant(p.var_count(), 1);
    LaurentPoly base = p;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

LaurentPoly lp_drop_variable(const LaurentPoly& p, std::size_t var) {
    require(var < p.var_count(), "variable index out of range");
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        require(t.exp[var] == 0, "dropped variable still occurs");
        ExpVec e = t.exp;
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(var));
        out.push_back({std::move(e), t.coeff});
    }
    return LaurentPoly::from_terms(p.var_count() - 1, std::move(out));
}

LaurentPoly lp_insert_variable(const LaurentPoly& p, std::size_t var) {
    require(var <= p.var_count(), "variable index out of range");
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        ExpVec e = t.exp;
        e.insert(e.begin() + static_cast<std::ptrdiff_t>(var), 0);
        out.push_back({std::move(e), t.coeff});
    }
    return LaurentPoly::from_terms(p.var_count() + 1, std::move(out));
}

std::vector<std::pair<Exponent, LaurentPoly>> lp_coefficients_in(const LaurentPoly& p, std::size_t var) {
    require(var < p.var_count(), "variable index out of range");
    std::vector<std::pair<Exponent, std::vector<LaurentPoly::Term>>> buckets;
    for (const auto& t : p.terms()) {
        const Exponent e = t.exp[var];
        auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == e; });
        if (it == buckets.end()) {
            buckets.push_back({e, {}});
            it = std::prev(buckets.end());
        }
        ExpVec rest = t.exp;
        rest[var] = 0;
        it->second.push_back({std::move(rest), t.coeff});
    }
    std::sort(buckets.begin(), buckets.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Exponent, LaurentPoly>> out;
    out.reserve(buckets.size());
    for (auto& [e, terms] : buckets) out.emplace_back(e, LaurentPoly::from_terms(p.var_count(), std::move(terms)));
    return out;
}

Rational lp_primitive_scale(const LaurentPoly& p) {
    require(!p.is_zero(), "content of the zero polynomial");
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    return make_rational(den_lcm, num_gcd);
}

}  // namespace polyrec
