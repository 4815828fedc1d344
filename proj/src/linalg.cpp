#include "polyrec/linalg.hpp"

#include "polyrec/errors.hpp"

#include <stdexcept>

namespace polyrec {

namespace {

// row -= factor * pivot
void axpy(SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    for (const auto& [col, value] : pivot) {
        auto [it, inserted] = row.try_emplace(col, 0);
        it->second -= factor * value;
        if (it->second == 0) row.erase(it);
    }
}

}  // namespace

bool SparseEchelon::add_row(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second == 0) it = row.erase(it);
        else ++it;
    }
    while (!row.empty()) {
        const auto [lead, value] = *row.begin();
        auto p = pivots_.find(lead);
        if (p == pivots_.end()) {
            const Rational inv = Rational(1) / value;
            for (auto& [c, v] : row) v *= inv;
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        axpy(row, Rational(value), p->second);
    }
    return false;
}

std::vector<std::vector<Rational>> SparseEchelon::nullspace() const {
    // Back-substitute to reduced row echelon form, highest pivot first.
    std::map<std::size_t, SparseRow> reduced;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseRow row = it->second;
        for (auto c = std::next(row.begin()); c != row.end();) {
            auto q = reduced.find(c->first);
            if (q == reduced.end()) {
                ++c;
                continue;
            }
            const std::size_t col = c->first;
            axpy(row, Rational(c->second), q->second);
            c = row.upper_bound(col);
        }
        reduced.emplace(it->first, std::move(row));
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (reduced.count(free)) continue;
        std::vector<Rational> v(cols_, 0);
        v[free] = 1;
        for (const auto& [pc, row] : reduced) {
            auto f = row.find(free);
            if (f != row.end()) v[pc] = -f->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LaurentPoly det_bareiss(std::vector<std::vector<LaurentPoly>> m, std::size_t vars) {
    const std::size_t n = m.size();
    for (const auto& row : m) require(row.size() == n, "determinant of a non-square matrix");
    if (n == 0) return LaurentPoly::constant(vars, 1);
    bool negate = false;
    LaurentPoly prev = LaurentPoly::constant(vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return LaurentPoly(vars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = lp_divide_exact(t, prev);
                if (!q) throw std::logic_error("Bareiss step: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = LaurentPoly(vars);
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

}  // namespace polyrec
