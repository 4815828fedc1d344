#pragma once

#include "polyrec/laurent.hpp"

#include <map>
#include <vector>

namespace polyrec {

using SparseRow = std::map<std::size_t, Rational>;

// Incremental row echelon form over Q for sparse systems with many more
// equations than unknowns.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

    // Reduces the row against the current pivots; keeps it if independent.
    bool add_row(SparseRow row);
    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

    // Basis of the right nullspace, one dense vector per free column, ordered
    // by free column index.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    std::size_t cols_;
    std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with leading 1
};

// Determinant by fraction-free (Bareiss) elimination over the Laurent ring.
// The intermediate divisions are exact.
LaurentPoly det_bareiss(std::vector<std::vector<LaurentPoly>> m, std::size_t vars);

}  // namespace polyrec
