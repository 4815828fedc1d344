#include "polyrec/valuation_fan.hpp"

#include "polyrec/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polyrec {

const char* to_string(Side side) { return side == Side::VStar ? "vstar" : "v"; }

bool SlopeSpectrum::contains(const Rational& s) const {
    return std::find(slopes.begin(), slopes.end(), s) != slopes.end();
}

std::size_t SlopeSpectrum::degree() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
}

namespace {

struct HullPoint {
    Exponent beta;
    Rational weight;
    ExpVec alpha;  // the monomial realizing the weight (valuation_type only)
};

// Lower hull for VStar, upper hull for V; strict turns only.
std::vector<HullPoint> half_hull(std::vector<HullPoint> pts, Side side) {
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) { return a.beta < b.beta; });
    std::vector<HullPoint> h;
    for (auto& p : pts) {
        while (h.size() >= 2) {
            const auto& o = h[h.size() - 2];
            const auto& a = h.back();
            const Rational c = Rational(static_cast<long>(a.beta - o.beta)) * (p.weight - o.weight) -
                               (a.weight - o.weight) * Rational(static_cast<long>(p.beta - o.beta));
            const bool drop = side == Side::VStar ? c <= 0 : c >= 0;
            if (!drop) break;
            h.pop_back();
        }
        h.push_back(std::move(p));
    }
    return h;
}

Rational valuation_of(const LaurentPoly& univariate, Side side) {
    const auto v = lp_valuations(univariate);
    return Rational(static_cast<long>(side == Side::VStar ? v.vstar : v.v));
}

Exponent dot(std::span<const Exponent> a, std::span<const Exponent> b) {
    Exponent s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Monomials of char_poly grouped by z-degree, x-exponents only.
std::map<Exponent, std::vector<ExpVec>> monomials_by_beta(const LaurentPoly& cp) {
    std::map<Exponent, std::vector<ExpVec>> out;
    for (const auto& t : cp.terms()) out[t.exp[0]].emplace_back(t.exp.begin() + 1, t.exp.end());
    return out;
}

int half_of(const ExpVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

__int128 cross2(const ExpVec& a, const ExpVec& b) {
    return static_cast<__int128>(a[0]) * b[1] - static_cast<__int128>(a[1]) * b[0];
}

bool angle_less(const ExpVec& a, const ExpVec& b) {
    const int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
}

ExpVec primitive(ExpVec v) {
    const Exponent g = std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]);
    for (auto& x : v) x /= g;
    return v;
}

}  // namespace

SlopeSpectrum root_valuations(const LaurentPoly& char_poly, std::span<const Exponent> omega, Side side) {
    require(char_poly.var_count() >= 1, "characteristic polynomial needs the variable z");
    const std::size_t r = char_poly.var_count() - 1;
    require(omega.size() == r, "direction has wrong dimension");
    require(!char_poly.is_zero(), "zero characteristic polynomial");
    const auto coeffs = lp_coefficients_in(char_poly, 0);
    require(coeffs.back().first > coeffs.front().first, "characteristic polynomial has no z-dependence");

    std::vector<HullPoint> pts;
    for (const auto& [beta, c] : coeffs) {
        const LaurentPoly cx = lp_drop_variable(c, 0);
        if (r == 0) {
            pts.push_back({beta, 0, {}});
            continue;
        }
        const LaurentPoly spec = lp_specialize(cx, omega);
        if (spec.is_zero()) {
            require(beta != coeffs.front().first && beta != coeffs.back().first,
                    "leading or trailing z-coefficient vanishes along this direction");
            continue;
        }
        pts.push_back({beta, valuation_of(spec, side), {}});
    }
    const auto hull = half_hull(std::move(pts), side);
    std::vector<std::pair<Rational, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const Exponent width = hull[i + 1].beta - hull[i].beta;
        edges.emplace_back(-(hull[i + 1].weight - hull[i].weight) / Rational(static_cast<long>(width)),
                           static_cast<std::size_t>(width));
    }
    std::sort(edges.begin(), edges.end());
    SlopeSpectrum out;
    for (auto& [s, m] : edges) {
        out.slopes.push_back(s);
        out.multiplicities.push_back(m);
    }
    return out;
}

ValuationType valuation_type(const LaurentPoly& char_poly, std::span<const Exponent> omega) {
    require(char_poly.var_count() >= 2, "valuation types need at least one x variable");
    const std::size_t r = char_poly.var_count() - 1;
    require(omega.size() == r, "direction has wrong dimension");
    ValuationType type;
    for (Side side : {Side::VStar, Side::V}) {
        std::vector<HullPoint> pts;
        for (const auto& [beta, alphas] : monomials_by_beta(char_poly)) {
            const ExpVec* best = nullptr;
            Exponent best_w = 0;
            for (const auto& a : alphas) {
                const Exponent w = dot(a, omega);
                if (!best || (side == Side::VStar ? w < best_w : w > best_w)) {
                    best = &a;
                    best_w = w;
                }
            }
            pts.push_back({beta, Rational(static_cast<long>(best_w)), *best});
        }
        const auto hull = half_hull(std::move(pts), side);
        auto& forms = side == Side::VStar ? type.vstar : type.v;
        for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
            const Exponent width = hull[i + 1].beta - hull[i].beta;
            std::vector<Rational> form(r);
            for (std::size_t j = 0; j < r; ++j)
                form[j] = -Rational(static_cast<long>(hull[i + 1].alpha[j] - hull[i].alpha[j])) /
                          Rational(static_cast<long>(width));
            forms.emplace_back(std::move(form), static_cast<std::size_t>(width));
        }
    }
    return type;
}

std::optional<std::size_t> Fan2D::cone_of(std::span<const Exponent> omega) const {
    require(omega.size() == 2, "fan directions are planar");
    require(omega[0] != 0 || omega[1] != 0, "zero direction");
    if (rays.empty()) return 0;
    const ExpVec w(omega.begin(), omega.end());
    for (const auto& ray : rays)
        if (cross2(ray, w) == 0 && half_of(ray) == half_of(w)) return std::nullopt;
    const auto it = std::upper_bound(rays.begin(), rays.end(), w, angle_less);
    const auto j = static_cast<std::size_t>(it - rays.begin());
    return (j + rays.size() - 1) % rays.size();
}

Fan2D slope_fan(const LaurentPoly& char_poly) {
    require(char_poly.var_count() == 3, "slope fans need a polynomial in (z, x1, x2)");
    const auto groups = monomials_by_beta(char_poly);
    require(groups.size() >= 2, "characteristic polynomial has no z-dependence");

    std::set<ExpVec> normals;
    auto add_normal = [&](Exponent a, Exponent b) {
        if (a != 0 || b != 0) normals.insert(primitive({a, b}));
    };
    for (const auto& [beta, alphas] : groups)
        for (std::size_t i = 0; i < alphas.size(); ++i)
            for (std::size_t j = i + 1; j < alphas.size(); ++j)
                add_normal(alphas[i][0] - alphas[j][0], alphas[i][1] - alphas[j][1]);
    std::vector<std::pair<Exponent, const std::vector<ExpVec>*>> levels;
    for (const auto& [beta, alphas] : groups) levels.emplace_back(beta, &alphas);
    // Three hull points become collinear on the line where this normal is orthogonal to omega.
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = i + 1; j < levels.size(); ++j)
            for (std::size_t k = j + 1; k < levels.size(); ++k) {
                const Exponent b21 = levels[j].first - levels[i].first;
                const Exponent b31 = levels[k].first - levels[i].first;
                for (const auto& a1 : *levels[i].second)
                    for (const auto& a2 : *levels[j].second)
                        for (const auto& a3 : *levels[k].second)
                            add_normal(b21 * (a3[0] - a1[0]) - b31 * (a2[0] - a1[0]),
                                       b21 * (a3[1] - a1[1]) - b31 * (a2[1] - a1[1]));
            }

    std::set<ExpVec> ray_set;
    for (const auto& n : normals) {
        ray_set.insert({-n[1], n[0]});
        ray_set.insert({n[1], -n[0]});
    }
    std::vector<ExpVec> candidates(ray_set.begin(), ray_set.end());
    std::sort(candidates.begin(), candidates.end(), angle_less);
    if (candidates.size() < 2) return {};

    const std::size_t k = candidates.size();
    std::vector<ValuationType> cone_types;
    for (std::size_t i = 0; i < k; ++i) {
        const ExpVec& a = candidates[i];
        const ExpVec& b = candidates[(i + 1) % k];
        const __int128 c = cross2(a, b);
        ExpVec inside = c > 0 ? ExpVec{a[0] + b[0], a[1] + b[1]}
                        : c == 0 ? ExpVec{-a[1], a[0]}
                                 : ExpVec{-(a[0] + b[0]), -(a[1] + b[1])};
        cone_types.push_back(valuation_type(char_poly, inside));
    }
    Fan2D fan;
    for (std::size_t i = 0; i < k; ++i)
        if (!(cone_types[(i + k - 1) % k] == cone_types[i])) fan.rays.push_back(candidates[i]);
    return fan;
}

bool SlopeReport::consistent() const {
    if (!vstar_fit || !v_fit) return false;
    return std::all_of(entries.begin(), entries.end(), [](const SlopeWitness& w) { return w.witness.has_value(); });
}

SlopeReport predicted_vs_empirical(const Recurrence& rec, std::span<const LaurentPoly> init,
                                   std::span<const Exponent> omega, std::size_t n_max, std::size_t m_max,
                                   std::size_t prefix_budget) {
    require(rec.var_count() >= 1, "valuations need at least one variable");
    require(omega.size() == rec.var_count(), "direction has wrong dimension");
    const auto generated = rec_generate(rec, init, n_max);
    SlopeReport report;
    for (const auto& value : generated.fractions) {
        const LaurentPoly num = lp_specialize(value.num(), omega);
        const LaurentPoly den = lp_specialize(value.den(), omega);
        if (num.is_zero() || den.is_zero()) {
            report.vstar_seq.emplace_back();
            report.v_seq.emplace_back();
            continue;
        }
        const auto vn = lp_valuations(num), vd = lp_valuations(den);
        report.vstar_seq.emplace_back(Rational(static_cast<long>(vn.vstar - vd.vstar)));
        report.v_seq.emplace_back(Rational(static_cast<long>(vn.v - vd.v)));
    }
    const LaurentPoly cp = rec.characteristic_poly();
    report.vstar_spectrum = root_valuations(cp, omega, Side::VStar);
    report.v_spectrum = root_valuations(cp, omega, Side::V);
    report.vstar_fit = fit_quasipoly(std::span<const std::optional<Rational>>(report.vstar_seq), 1, m_max, prefix_budget);
    report.v_fit = fit_quasipoly(std::span<const std::optional<Rational>>(report.v_seq), 1, m_max, prefix_budget);

    auto collect = [&](const std::optional<QuasiPolynomial>& fit, const SlopeSpectrum& spectrum, Side side) {
        if (!fit) return;
        for (std::size_t r = 0; r < fit->period; ++r) {
            const auto& p = fit->per_residue[r];
            if (!p) continue;
            SlopeWitness w{side, r, p->size() > 1 ? (*p)[1] : Rational(0), p->empty() ? Rational(0) : (*p)[0], {}};
            if (spectrum.contains(w.slope)) w.witness = w.slope;
            report.entries.push_back(std::move(w));
        }
    };
    collect(report.vstar_fit, report.vstar_spectrum, Side::VStar);
    collect(report.v_fit, report.v_spectrum, Side::V);
    return report;
}

}  // namespace polyrec
