#include "polyrec/quasifit.hpp"

#include "polyrec/errors.hpp"

#include <algorithm>

namespace polyrec {

Rational eval_poly(const PolyN& p, const Rational& n) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * n + *it;
    return acc;
}

std::size_t poly_degree(const PolyN& p) { return p.empty() ? 0 : p.size() - 1; }

namespace {

using Point = std::pair<std::int64_t, Rational>;

Rational as_rational(std::int64_t n) { return Rational(Integer(static_cast<long>(n))); }

PolyN interpolate(std::span<const Point> pts) {
    PolyN out(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        PolyN basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            PolyN next(basis.size() + 1, 0);
            const Rational nj = as_rational(pts[j].first);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= nj * basis[k];
            }
            basis = std::move(next);
            denom *= as_rational(pts[i].first) - nj;
        }
        const Rational scale = pts[i].second / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += scale * basis[k];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// nullopt: the class refutes every polynomial of degree <= deg.
// Inner nullopt: no points at all.
std::optional<std::optional<PolyN>> fit_class(const std::vector<Point>& pts, std::size_t deg) {
    if (pts.empty()) return std::optional<PolyN>{};
    if (pts.size() < deg + 2) return std::nullopt;
    PolyN p = interpolate(std::span<const Point>(pts.data(), deg + 1));
    for (std::size_t i = deg + 1; i < pts.size(); ++i)
        if (eval_poly(p, as_rational(pts[i].first)) != pts[i].second) return std::nullopt;
    return std::optional<PolyN>(std::move(p));
}

std::optional<QuasiPolynomial> try_fit(std::span<const std::optional<Rational>> seq, std::size_t deg,
                                       std::size_t period, std::size_t prefix) {
    QuasiPolynomial q{period, prefix, deg, {}};
    for (std::size_t r = 0; r < period; ++r) {
        std::vector<Point> pts;
        for (std::size_t n = prefix; n < seq.size(); ++n)
            if (n % period == r && seq[n]) pts.emplace_back(static_cast<std::int64_t>(n), *seq[n]);
        auto fit = fit_class(pts, deg);
        if (!fit) return std::nullopt;
        q.per_residue.push_back(std::move(*fit));
    }
    return q;
}

void check_fit_args(std::size_t size, std::size_t deg_max, std::size_t m_max) {
    require(deg_max <= 2, "degree bound must be 0, 1 or 2");
    require(m_max >= 1, "period bound must be at least 1");
    require(size >= 1 && size - 1 >= 2 * m_max * (deg_max + 2), "insufficient data for the requested period and degree");
}

}  // namespace

std::optional<Rational> QuasiPolynomial::evaluate(std::int64_t n) const {
    if (n < static_cast<std::int64_t>(prefix)) return std::nullopt;
    const auto& p = per_residue[static_cast<std::size_t>(n % static_cast<std::int64_t>(period))];
    if (!p) return std::nullopt;
    return eval_poly(*p, as_rational(n));
}

std::optional<QuasiPolynomial> fit_quasipoly(std::span<const std::optional<Rational>> seq, std::size_t deg_max,
                                             std::size_t m_max, std::size_t prefix_budget) {
    check_fit_args(seq.size(), deg_max, m_max);
    for (std::size_t m = 1; m <= m_max; ++m)
        for (std::size_t p = 0; p <= prefix_budget; ++p)
            if (auto q = try_fit(seq, deg_max, m, p)) return q;
    return std::nullopt;
}

std::optional<QuasiPolynomial> fit_quasipoly(std::span<const Rational> seq, std::size_t deg_max, std::size_t m_max,
                                             std::size_t prefix_budget) {
    MaskedSequence masked(seq.begin(), seq.end());
    return fit_quasipoly(std::span<const std::optional<Rational>>(masked), deg_max, m_max, prefix_budget);
}

std::optional<QuasiPolynomial> fit_quasipoly_with_period(std::span<const std::optional<Rational>> seq,
                                                         std::size_t deg_max, std::size_t period,
                                                         std::size_t prefix_budget) {
    check_fit_args(seq.size(), deg_max, period);
    for (std::size_t p = 0; p <= prefix_budget; ++p)
        if (auto q = try_fit(seq, deg_max, period, p)) return q;
    return std::nullopt;
}

std::optional<Polytope> PolygonModel::evaluate(std::int64_t n) const {
    if (n < 0) return std::nullopt;
    if (n < static_cast<std::int64_t>(prefix)) return exceptions[static_cast<std::size_t>(n)];
    const auto& res = residues[static_cast<std::size_t>(n % static_cast<std::int64_t>(period))];
    if (!res) return std::nullopt;
    Polytope out{dim, {}};
    for (const auto& vertex : res->vertices) {
        ExpVec v;
        for (const auto& coord : vertex) {
            const Rational x = eval_poly(coord, as_rational(n));
            require(x.get_den() == 1, "model produced a non-integral vertex");
            v.push_back(x.get_num().get_si());
        }
        out.vertices.push_back(std::move(v));
    }
    return out;
}

std::size_t PolygonModel::max_degree() const {
    std::size_t d = 0;
    for (const auto& r : residues)
        if (r)
            for (const auto& v : r->vertices)
                for (const auto& c : v) d = std::max(d, poly_degree(c));
    return d;
}

namespace {

std::optional<PolygonModel> try_fit_polygons(std::span<const std::optional<Polytope>> polys, std::size_t dim,
                                             std::size_t deg, std::size_t period, std::size_t prefix) {
    PolygonModel model{period, prefix, dim, deg, {}, {}};
    for (std::size_t r = 0; r < period; ++r) {
        std::vector<std::size_t> idx;
        for (std::size_t n = prefix; n < polys.size(); ++n)
            if (n % period == r && polys[n]) idx.push_back(n);
        if (idx.empty()) {
            model.residues.emplace_back();
            continue;
        }
        const std::size_t k = polys[idx.front()]->vertices.size();
        for (auto n : idx)
            if (polys[n]->vertices.size() != k) return std::nullopt;
        ResidueModel rm;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<PolyN> coords;
            for (std::size_t j = 0; j < dim; ++j) {
                std::vector<Point> pts;
                for (auto n : idx)
                    pts.emplace_back(static_cast<std::int64_t>(n),
                                     Rational(Integer(static_cast<long>(polys[n]->vertices[i][j]))));
                auto fit = fit_class(pts, deg);
                if (!fit || !*fit) return std::nullopt;
                coords.push_back(std::move(**fit));
            }
            rm.vertices.push_back(std::move(coords));
        }
        model.residues.emplace_back(std::move(rm));
    }
    model.exceptions.assign(polys.begin(), polys.begin() + static_cast<std::ptrdiff_t>(std::min(prefix, polys.size())));
    return model;
}

}  // namespace

std::optional<PolygonModel> fit_polygon_model(std::span<const std::optional<Polytope>> polys, std::size_t deg_max,
                                              std::size_t m_max, std::size_t prefix_budget) {
    require(deg_max == 1 || deg_max == 2, "polygon models are quasi-linear or quasi-quadratic");
    check_fit_args(polys.size(), deg_max, m_max);
    std::optional<std::size_t> dim;
    for (const auto& p : polys) {
        if (!p) continue;
        if (!dim) dim = p->dim;
        require(*dim == p->dim, "polytopes of inconsistent dimension");
    }
    require(dim.has_value(), "no polytopes to fit");
    for (std::size_t m = 1; m <= m_max; ++m)
        for (std::size_t p = 0; p <= prefix_budget; ++p)
            if (auto model = try_fit_polygons(polys, *dim, deg_max, m, p)) return model;
    return std::nullopt;
}

std::optional<PolygonModel> fit_polygon_model(std::span<const Polytope> polys, std::size_t deg_max, std::size_t m_max,
                                              std::size_t prefix_budget) {
    std::vector<std::optional<Polytope>> wrapped(polys.begin(), polys.end());
    return fit_polygon_model(std::span<const std::optional<Polytope>>(wrapped), deg_max, m_max, prefix_budget);
}

Polytope shear_polygon(const Polytope& p, std::int64_t f, std::int64_t n) {
    require(p.dim == 2, "shear acts on planar polygons");
    std::vector<ExpVec> pts = p.vertices;
    for (auto& v : pts) v[0] -= f * f * v[1] * n;
    return Polytope::hull(2, std::move(pts));
}

std::vector<Polytope> shear_polygons(std::span<const Polytope> polys, std::int64_t f, std::int64_t first_index) {
    std::vector<Polytope> out;
    out.reserve(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        out.push_back(shear_polygon(polys[i], f, first_index + static_cast<std::int64_t>(i)));
    return out;
}

ZeroPattern zero_pattern(std::span<const Rational> seq, std::size_t m_max, std::size_t prefix_budget) {
    require(m_max >= 1, "period bound must be at least 1");
    require(!seq.empty() && seq.size() - 1 >= 4 * m_max, "insufficient data for zero-pattern detection");
    constexpr std::size_t kMinClassEntries = 3;
    std::optional<ZeroPattern> best;
    for (std::size_t m = 1; m <= m_max; ++m) {
        std::optional<ZeroPattern> best_for_m;
        for (std::size_t p = 0; p <= prefix_budget && p < seq.size(); ++p) {
            ZeroPattern z{m, 0, {}, {}};
            for (std::size_t r = 0; r < m; ++r) {
                std::size_t entries = 0;
                bool all_zero = true;
                for (std::size_t n = p; n < seq.size(); ++n) {
                    if (n % m != r) continue;
                    ++entries;
                    if (seq[n] != 0) all_zero = false;
                }
                if (all_zero && entries >= kMinClassEntries) z.full_residues.insert(r);
            }
            if (!z.full_residues.empty()) z.prefix = p;
            for (std::size_t n = 0; n < seq.size(); ++n) {
                if (seq[n] != 0) continue;
                if (n >= z.prefix && z.full_residues.count(n % m)) continue;
                z.sporadic.insert(n);
            }
            if (!best_for_m || z.sporadic.size() < best_for_m->sporadic.size()) best_for_m = std::move(z);
        }
        if (best_for_m->sporadic.size() <= prefix_budget) return *best_for_m;
        if (!best || best_for_m->sporadic.size() < best->sporadic.size()) best = std::move(best_for_m);
    }
    return *best;
}

}  // namespace polyrec
