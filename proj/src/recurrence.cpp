#include "polyrec/recurrence.hpp"

#include "polyrec/errors.hpp"
#include "polyrec/linalg.hpp"

#include <algorithm>
#include <map>

namespace polyrec {

Recurrence::Recurrence(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
    require(coeffs_.size() >= 2, "recurrence order must be at least 1");
    require(!coeffs_.back().is_zero(), "leading recurrence coefficient is zero");
    for (const auto& c : coeffs_)
        require(c.var_count() == coeffs_.front().var_count(), "recurrence coefficients differ in variable count");
}

LaurentPoly Recurrence::characteristic_poly() const {
    LaurentPoly p(var_count() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        p += lp_insert_variable(coeffs_[k], 0) * LaurentPoly::variable(var_count() + 1, 0, static_cast<Exponent>(k));
    return p;
}

bool Recurrence::annihilates(std::span<const LaurentPoly> terms) const {
    const std::size_t d = order();
    for (std::size_t n = 0; n + d < terms.size(); ++n) {
        LaurentPoly sum(var_count());
        for (std::size_t k = 0; k <= d; ++k) sum += coeffs_[k] * terms[n + k];
        if (!sum.is_zero()) return false;
    }
    return true;
}

bool Recurrence::annihilates(std::span<const RatFn> terms) const {
    const std::size_t d = order();
    for (std::size_t n = 0; n + d < terms.size(); ++n) {
        // Common denominator keeps the check in polynomial arithmetic.
        LaurentPoly sum(var_count());
        for (std::size_t k = 0; k <= d; ++k) {
            LaurentPoly t = coeffs_[k] * terms[n + k].num();
            for (std::size_t j = 0; j <= d; ++j)
                if (j != k) t *= terms[n + j].den();
            sum += t;
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

Recurrence normalized(const Recurrence& rec) {
    const Rational scale = Rational(1) / rec.leading().lex_least().coeff;
    std::vector<LaurentPoly> c = rec.coeffs();
    for (auto& p : c) p *= scale;
    return Recurrence(std::move(c));
}

GeneratedTerms rec_generate(const Recurrence& rec, std::span<const LaurentPoly> init, std::size_t n_max) {
    const std::size_t d = rec.order();
    const std::size_t r = rec.var_count();
    require(init.size() == d, "initial terms must number the recurrence order");
    require(n_max + 1 >= d, "N must be at least d - 1");
    for (const auto& p : init) require(p.var_count() == r, "initial term has wrong variable count");
    const auto& cd = rec.leading();
    GeneratedTerms out;
    if (cd.is_monomial()) {
        ExpVec inv_shift = cd.lex_least().exp;
        for (auto& e : inv_shift) e = -e;
        const Rational inv_coeff = Rational(-1) / cd.lex_least().coeff;
        out.terms.assign(init.begin(), init.end());
        out.terms.reserve(n_max + 1);
        for (std::size_t n = 0; n + d <= n_max; ++n) {
            LaurentPoly sum(r);
            for (std::size_t k = 0; k < d; ++k)
                if (!rec.coeffs()[k].is_zero()) sum += rec.coeffs()[k] * out.terms[n + k];
            out.terms.push_back(sum.shifted(inv_shift) * inv_coeff);
        }
        out.terms.resize(n_max + 1);
        out.fractions.assign(out.terms.begin(), out.terms.end());
        return out;
    }
    require(r == 1, "non-monomial leading coefficient needs r = 1 (fraction mode)");
    std::vector<RatFn> vals(init.begin(), init.end());
    const RatFn neg_lead_inv = RatFn(LaurentPoly::constant(r, -1), cd);
    for (std::size_t n = 0; n + d <= n_max; ++n) {
        RatFn sum(r);
        for (std::size_t k = 0; k < d; ++k) sum += RatFn(rec.coeffs()[k]) * vals[n + k];
        vals.push_back(sum * neg_lead_inv);
    }
    vals.resize(n_max + 1);
    for (const auto& v : vals) {
        out.terms.push_back(v.num());
        if (!v.is_polynomial()) out.non_unit_denominators = true;
    }
    out.fractions = std::move(vals);
    return out;
}

std::vector<LaurentPoly> rec_generate_backward(const Recurrence& rec, std::span<const LaurentPoly> init,
                                               std::size_t count) {
    const std::size_t d = rec.order();
    require(init.size() == d, "initial terms must number the recurrence order");
    const auto& c0 = rec.trailing();
    require(c0.is_monomial(), "backward stepping needs a monomial c_0");
    ExpVec inv_shift = c0.lex_least().exp;
    for (auto& e : inv_shift) e = -e;
    const Rational inv_coeff = Rational(-1) / c0.lex_least().coeff;
    // window holds R_{m}, ..., R_{m+d-1} for the current lowest index m
    std::vector<LaurentPoly> window(init.begin(), init.end());
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < count; ++i) {
        LaurentPoly sum(rec.var_count());
        for (std::size_t k = 1; k <= d; ++k) sum += rec.coeffs()[k] * window[k - 1];
        LaurentPoly next = sum.shifted(inv_shift) * inv_coeff;
        window.insert(window.begin(), next);
        window.pop_back();
        out.push_back(std::move(next));
    }
    return out;
}

std::size_t SupportBox::volume() const {
    std::size_t v = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        require(hi[i] >= lo[i], "empty support box");
        v *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    }
    return v;
}

SupportBox default_support_box(std::span<const LaurentPoly> terms) {
    require(!terms.empty(), "no terms");
    const std::size_t r = terms.front().var_count();
    SupportBox box{ExpVec(r, 0), ExpVec(r, 0)};
    bool any = false;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        const ExpVec lo = t.min_exponents(), hi = t.max_exponents();
        for (std::size_t i = 0; i < r; ++i) {
            box.lo[i] = any ? std::min(box.lo[i], lo[i]) : lo[i];
            box.hi[i] = any ? std::max(box.hi[i], hi[i]) : hi[i];
        }
        any = true;
    }
    for (std::size_t i = 0; i < r; ++i) {
        box.lo[i] -= 1;
        box.hi[i] += 1;
    }
    return box;
}

namespace {

constexpr std::size_t kMaxGuessUnknowns = 20000;

std::vector<ExpVec> box_monomials(const SupportBox& box) {
    const std::size_t r = box.lo.size();
    std::vector<ExpVec> out;
    out.reserve(box.volume());
    ExpVec cur = box.lo;
    while (true) {
        out.push_back(cur);
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (cur[i] < box.hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = box.lo[i];
            if (i == 0) return out;
        }
        if (r == 0) return out;
    }
}

std::vector<LaurentPoly> unpack(const std::vector<Rational>& v, const std::vector<ExpVec>& monos, std::size_t d,
                                std::size_t r) {
    std::vector<LaurentPoly> c;
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<LaurentPoly::Term> terms;
        for (std::size_t m = 0; m < monos.size(); ++m) {
            const Rational& x = v[k * monos.size() + m];
            if (x != 0) terms.push_back({monos[m], x});
        }
        c.push_back(LaurentPoly::from_terms(r, std::move(terms)));
    }
    return c;
}

bool inside(const LaurentPoly& p, const SupportBox& box) {
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            if (t.exp[i] < box.lo[i] || t.exp[i] > box.hi[i]) return false;
    return true;
}

// Divides out the gcd (r = 1) or the common monomial factor (r >= 2).
std::vector<LaurentPoly> remove_content(std::vector<LaurentPoly> c, const SupportBox& box) {
    const std::size_t r = c.front().var_count();
    if (r == 0) return c;
    if (r == 1) {
        LaurentPoly g(1);
        for (const auto& p : c) g = lp_gcd_univariate(g, p);
        for (auto& p : c) p = *lp_divide_exact(p, g);
    }
    // then the monomial content, as long as the result stays in the box
    ExpVec lo;
    for (const auto& p : c) {
        if (p.is_zero()) continue;
        const ExpVec m = p.min_exponents();
        if (lo.empty()) lo = m;
        else
            for (std::size_t i = 0; i < r; ++i) lo[i] = std::min(lo[i], m[i]);
    }
    for (auto& e : lo) e = -e;
    std::vector<LaurentPoly> shifted;
    for (const auto& p : c) shifted.push_back(p.shifted(lo));
    if (std::all_of(shifted.begin(), shifted.end(), [&](const LaurentPoly& p) { return inside(p, box); }))
        return shifted;
    return c;
}

}  // namespace

std::optional<Recurrence> guess_recurrence(std::span<const LaurentPoly> terms, std::size_t d_max,
                                           const std::optional<SupportBox>& box_opt) {
    require(d_max >= 1, "d_max must be at least 1");
    require(terms.size() >= 2 * d_max + 2, "too few terms to guess a recurrence");
    const std::size_t r = terms.front().var_count();
    for (const auto& t : terms) require(t.var_count() == r, "terms differ in variable count");
    const SupportBox box = box_opt ? *box_opt : default_support_box(terms);
    require(box.lo.size() == r && box.hi.size() == r, "support box has wrong dimension");
    const std::vector<ExpVec> monos = box_monomials(box);

    for (std::size_t d = 1; d <= d_max; ++d) {
        const std::size_t unknowns = (d + 1) * monos.size();
        require(unknowns <= kMaxGuessUnknowns, "support box too large for guessing");
        SparseEchelon ech(unknowns);
        for (std::size_t n = 0; n + d < terms.size() && ech.rank() < unknowns; ++n) {
            std::map<ExpVec, SparseRow> eqs;
            for (std::size_t k = 0; k <= d; ++k) {
                for (const auto& t : terms[n + k].terms()) {
                    for (std::size_t m = 0; m < monos.size(); ++m) {
                        ExpVec target(r);
                        for (std::size_t i = 0; i < r; ++i) target[i] = monos[m][i] + t.exp[i];
                        eqs[std::move(target)][k * monos.size() + m] += t.coeff;
                    }
                }
            }
            for (auto& [e, row] : eqs) {
                ech.add_row(std::move(row));
                if (ech.rank() == unknowns) break;
            }
        }
        if (ech.rank() == unknowns) continue;

        const auto basis = ech.nullspace();
        const std::vector<Rational>* best = nullptr;
        std::size_t best_nonzeros = 0;
        for (const auto& v : basis) {
            bool lead_nonzero = false;
            for (std::size_t m = 0; m < monos.size(); ++m)
                if (v[d * monos.size() + m] != 0) lead_nonzero = true;
            if (!lead_nonzero) continue;
            const auto nz = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; }));
            if (!best || nz < best_nonzeros) {
                best = &v;
                best_nonzeros = nz;
            }
        }
        if (!best) continue;
        auto coeffs = remove_content(unpack(*best, monos, d, r), box);
        Recurrence rec = normalized(Recurrence(std::move(coeffs)));
        if (rec.annihilates(terms)) return rec;
    }
    return std::nullopt;
}

void GeneralizedPowerSum::validate() const {
    require(!roots.empty(), "generalized power sum without roots");
    require(roots.size() == coeff_polys.size(), "one coefficient polynomial per root");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        require(roots[i] != 0, "roots must be nonzero");
        for (std::size_t j = 0; j < i; ++j) require(roots[i] != roots[j], "roots must be distinct");
        require(!coeff_polys[i].empty() && coeff_polys[i].back() != 0,
                "coefficient polynomials must be nonzero with nonzero leading coefficient");
    }
}

std::size_t GeneralizedPowerSum::order() const {
    std::size_t d = 0;
    for (const auto& a : coeff_polys) d += a.size();
    return d;
}

Recurrence gps_to_recurrence(const GeneralizedPowerSum& g) {
    g.validate();
    std::vector<Rational> s{1};  // s(x), constant term first
    for (std::size_t i = 0; i < g.roots.size(); ++i) {
        for (std::size_t m = 0; m < g.coeff_polys[i].size(); ++m) {
            std::vector<Rational> next(s.size() + 1, 0);
            for (std::size_t j = 0; j < s.size(); ++j) {
                next[j] += s[j];
                next[j + 1] -= g.roots[i] * s[j];
            }
            s = std::move(next);
        }
    }
    const std::size_t d = s.size() - 1;
    std::vector<LaurentPoly> c;
    for (std::size_t j = 0; j <= d; ++j) c.push_back(LaurentPoly::constant(0, s[d - j]));
    return Recurrence(std::move(c));
}

Rational gps_eval(const GeneralizedPowerSum& g, std::int64_t n) {
    require(n >= 0, "gps_eval needs n >= 0");
    g.validate();
    Rational sum = 0;
    const Rational nq = Rational(Integer(static_cast<long>(n)));
    for (std::size_t i = 0; i < g.roots.size(); ++i) {
        Rational a = 0;
        for (auto it = g.coeff_polys[i].rbegin(); it != g.coeff_polys[i].rend(); ++it) a = a * nq + *it;
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), g.roots[i].get_num_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(p.get_den_mpz_t(), g.roots[i].get_den_mpz_t(), static_cast<unsigned long>(n));
        p.canonicalize();
        sum += a * p;
    }
    return sum;
}

namespace {

void check_square(const MatrixRF& m, const char* what) {
    require(!m.empty(), what);
    for (const auto& row : m) {
        require(row.size() == m.size(), what);
        for (const auto& e : row) require(e.var_count() == 1, "matrix entries must lie in Q(q)");
    }
}

LaurentPoly denominator_lcm(const MatrixRF& m) {
    LaurentPoly l = LaurentPoly::constant(1, 1);
    for (const auto& row : m)
        for (const auto& e : row) {
            const LaurentPoly g = lp_gcd_univariate(l, e.den());
            l = *lp_divide_exact(l * e.den(), g);
        }
    return l;
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix clear_denominators(const MatrixRF& m, const LaurentPoly& l) {
    PolyMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i]) out[i].push_back(*lp_divide_exact(l * e.num(), e.den()));
    return out;
}

// Univariate integer polynomial sum_k c[k] q^(lo + k); empty c is zero.
struct Dense {
    Exponent lo = 0;
    std::vector<Integer> c;
};

using DenseMatrix = std::vector<std::vector<Dense>>;

// Integer matrix s * m with s the lcm of all coefficient denominators.
DenseMatrix to_dense(const PolyMatrix& m, Integer& s) {
    s = 1;
    for (const auto& row : m)
        for (const auto& p : row)
            for (const auto& t : p.terms()) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), t.coeff.get_den_mpz_t());
    DenseMatrix out(m.size(), std::vector<Dense>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const auto& p = m[i][j];
            if (p.is_zero()) continue;
            Dense& d = out[i][j];
            d.lo = p.min_degree(0);
            d.c.resize(static_cast<std::size_t>(p.max_degree(0) - d.lo + 1));
            for (const auto& t : p.terms())
                d.c[static_cast<std::size_t>(t.exp[0] - d.lo)] = t.coeff.get_num() * (s / t.coeff.get_den());
        }
    return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.size();
    DenseMatrix out(n, std::vector<Dense>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Exponent lo = 0, hi = 0;
            bool any = false;
            for (std::size_t k = 0; k < n; ++k) {
                const Dense &x = a[i][k], &y = b[k][j];
                if (x.c.empty() || y.c.empty()) continue;
                const Exponent l = x.lo + y.lo, h = l + static_cast<Exponent>(x.c.size() + y.c.size()) - 2;
                lo = any ? std::min(lo, l) : l;
                hi = any ? std::max(hi, h) : h;
                any = true;
            }
            if (!any) continue;
            Dense& d = out[i][j];
            d.lo = lo;
            d.c.resize(static_cast<std::size_t>(hi - lo + 1));
            for (std::size_t k = 0; k < n; ++k) {
                const Dense &x = a[i][k], &y = b[k][j];
                if (x.c.empty() || y.c.empty()) continue;
                const auto base = static_cast<std::size_t>(x.lo + y.lo - lo);
                for (std::size_t u = 0; u < x.c.size(); ++u) {
                    if (x.c[u] == 0) continue;
                    for (std::size_t v = 0; v < y.c.size(); ++v)
                        mpz_addmul(d.c[base + u + v].get_mpz_t(), x.c[u].get_mpz_t(), y.c[v].get_mpz_t());
                }
            }
        }
    return out;
}

LaurentPoly trace_over(const DenseMatrix& m, const Integer& divisor) {
    Exponent lo = 0, hi = 0;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Dense& d = m[i][i];
        if (d.c.empty()) continue;
        lo = any ? std::min(lo, d.lo) : d.lo;
        hi = any ? std::max(hi, d.lo + static_cast<Exponent>(d.c.size()) - 1) : d.lo + static_cast<Exponent>(d.c.size()) - 1;
        any = true;
    }
    if (!any) return LaurentPoly(1);
    std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Dense& d = m[i][i];
        for (std::size_t k = 0; k < d.c.size(); ++k) acc[static_cast<std::size_t>(d.lo - lo) + k] += d.c[k];
    }
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0) terms.push_back({{lo + static_cast<Exponent>(k)}, make_rational(acc[k], divisor)});
    return LaurentPoly::from_terms(1, std::move(terms));
}

}  // namespace

ClearedTraces trace_numerators(const MatrixRF& a, const MatrixRF& b, std::size_t n_max) {
    check_square(a, "A must be square");
    check_square(b, "B must be square");
    require(a.size() == b.size(), "A and B differ in size");
    ClearedTraces out{denominator_lcm(a), denominator_lcm(b), {}};
    // Integer images: cur = sa A' B'^n, bp = sb B'.
    Integer sa, sb;
    DenseMatrix cur = to_dense(clear_denominators(a, out.la), sa);
    const DenseMatrix bp = to_dense(clear_denominators(b, out.lb), sb);
    Integer divisor = sa;
    for (std::size_t n = 0;; ++n) {
        out.numerators.push_back(trace_over(cur, divisor));
        if (n == n_max) break;
        cur = multiply(cur, bp);
        divisor *= sb;
    }
    return out;
}

bool ClearedTraces::annihilated_by(const Recurrence& rec) const {
    require(rec.var_count() == 1, "trace recurrences are univariate");
    const std::size_t d = rec.order();
    std::vector<LaurentPoly> lb_pow{LaurentPoly::constant(1, 1)};
    while (lb_pow.size() <= d) lb_pow.push_back(lb_pow.back() * lb);
    for (std::size_t n = 0; n + d < numerators.size(); ++n) {
        LaurentPoly sum(1);
        for (std::size_t k = 0; k <= d; ++k) sum += rec.coeffs()[k] * lb_pow[d - k] * numerators[n + k];
        if (!sum.is_zero()) return false;
    }
    return true;
}

std::vector<RatFn> trace_sequence(const MatrixRF& a, const MatrixRF& b, std::size_t n_max) {
    const ClearedTraces t = trace_numerators(a, b, n_max);
    LaurentPoly den = t.la;
    std::vector<RatFn> out;
    for (const auto& num : t.numerators) {
        out.emplace_back(num, den);
        den *= t.lb;
    }
    return out;
}

Recurrence char_poly_recurrence(const MatrixRF& b) {
    check_square(b, "B must be square");
    const std::size_t s = b.size();
    const LaurentPoly lb = denominator_lcm(b);
    const PolyMatrix bp = clear_denominators(b, lb);
    // det(z lb I - B') = lb^s det(z I - B), over variables (z, q).
    std::vector<std::vector<LaurentPoly>> m(s, std::vector<LaurentPoly>(s, LaurentPoly(2)));
    const LaurentPoly z_lb = LaurentPoly::variable(2, 0) * lp_insert_variable(lb, 0);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            m[i][j] = -lp_insert_variable(bp[i][j], 0);
            if (i == j) m[i][j] += z_lb;
        }
    const LaurentPoly det = det_bareiss(std::move(m), 2);
    std::vector<LaurentPoly> c(s + 1, LaurentPoly(1));
    for (auto& [e, coeff] : lp_coefficients_in(det, 0)) c[static_cast<std::size_t>(e)] = lp_drop_variable(coeff, 0);
    LaurentPoly g(1);
    for (const auto& p : c) g = lp_gcd_univariate(g, p);
    for (auto& p : c) p = *lp_divide_exact(p, g);
    return normalized(Recurrence(std::move(c)));
}

}  // namespace polyrec
