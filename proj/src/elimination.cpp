#include "polyrec/elimination.hpp"

#include "polyrec/errors.hpp"
#include "polyrec/linalg.hpp"
#include "polyrec/parallel.hpp"
#include "polyrec/polytope.hpp"

#include <algorithm>

namespace polyrec {

namespace {

std::int64_t degree_in(const LaurentPoly& p, std::size_t var) { return p.max_degree(var) - p.min_degree(var); }

LaurentPoly leading_in(const LaurentPoly& p, std::size_t var) {
    return lp_drop_variable(lp_coefficients_in(p, var).back().second, var);
}

}  // namespace

void EliminationInstance::validate() const {
    require(P.var_count() == 3 && Q.var_count() == 3, "P and Q must be polynomials in three variables");
    require(!P.is_zero() && !Q.is_zero(), "P and Q must be nonzero");
    require(degree_in(P, kEliminated) >= 1, "P needs positive degree in m2");
    require(degree_in(Q, kEliminated) >= 1, "Q needs positive degree in l2");
}

std::int64_t EliminationInstance::degree_p() const { return degree_in(P, kEliminated); }
std::int64_t EliminationInstance::degree_q() const { return degree_in(Q, kEliminated); }
LaurentPoly EliminationInstance::leading_p() const { return leading_in(P, kEliminated); }
LaurentPoly EliminationInstance::leading_q() const { return leading_in(Q, kEliminated); }

ClearedPoly clear_negative_powers(const LaurentPoly& p, std::size_t var) {
    require(!p.is_zero(), "cannot clear the zero polynomial");
    const Exponent lo = p.min_degree(var);
    ExpVec shift(p.var_count(), 0);
    shift[var] = -lo;
    return {p.shifted(shift), lo};
}

LaurentPoly sylvester_resultant(const LaurentPoly& a, const LaurentPoly& b, std::size_t var) {
    require(a.var_count() == b.var_count(), "variable-count mismatch");
    require(!a.is_zero() && !b.is_zero(), "resultant of a zero polynomial");
    require(var < a.var_count(), "variable index out of range");
    const std::size_t r = a.var_count();
    const LaurentPoly ac = clear_negative_powers(a, var).poly;
    const LaurentPoly bc = clear_negative_powers(b, var).poly;
    const auto da = static_cast<std::size_t>(ac.max_degree(var));
    const auto db = static_cast<std::size_t>(bc.max_degree(var));
    require(da + db >= 1, "eliminated variable absent from both inputs");

    auto dense = [&](const LaurentPoly& p, std::size_t deg) {
        std::vector<LaurentPoly> c(deg + 1, LaurentPoly(r));
        for (auto& [e, coeff] : lp_coefficients_in(p, var)) c[static_cast<std::size_t>(e)] = std::move(coeff);
        return c;
    };
    const auto ca = dense(ac, da), cb = dense(bc, db);
    const std::size_t size = da + db;
    std::vector<std::vector<LaurentPoly>> m(size, std::vector<LaurentPoly>(size, LaurentPoly(r)));
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t k = 0; k <= da; ++k) m[i][i + k] = ca[da - k];
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k <= db; ++k) m[db + i][i + k] = cb[db - k];
    return lp_drop_variable(det_bareiss(std::move(m), r), var);
}

RatFn dehn_resultant(const EliminationInstance& inst, std::int64_t n) {
    inst.validate();
    require(n >= 1, "filling parameter n must be at least 1");
    const LaurentPoly pn = lp_power_subst(inst.P, kEliminated, n);
    return RatFn(sylvester_resultant(pn, inst.Q, kEliminated));
}

Theorem1Report theorem1_report(const EliminationInstance& inst, std::size_t n_max, std::size_t d_max,
                               std::size_t prefix_budget) {
    inst.validate();
    require(d_max >= 1, "d_max must be at least 1");
    require(n_max >= 2 * d_max + 4, "nMax must be at least 2*dMax + 4");
    Theorem1Report report;
    report.terms.resize(n_max, RatFn(2));
    parallel_for(n_max, [&](std::size_t i) { report.terms[i] = dehn_resultant(inst, static_cast<std::int64_t>(i + 1)); });

    std::vector<LaurentPoly> nums;
    for (const auto& t : report.terms) nums.push_back(t.num());
    report.recurrence = guess_recurrence(nums, d_max);

    std::vector<std::optional<Polytope>> polys(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n)
        if (!nums[n - 1].is_zero()) polys[n] = newton_polytope(nums[n - 1]);
    constexpr std::size_t kDeg = 2;
    const std::size_t m_max = std::clamp<std::size_t>(n_max / (2 * (kDeg + 2)), 1, 6);
    if (std::any_of(polys.begin(), polys.end(), [](const auto& p) { return p.has_value(); }))
        report.model = fit_polygon_model(std::span<const std::optional<Polytope>>(polys), kDeg, m_max, prefix_budget);
    return report;
}

}  // namespace polyrec
