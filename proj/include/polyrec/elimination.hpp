#pragma once

#include "polyrec/laurent.hpp"
#include "polyrec/quasifit.hpp"
#include "polyrec/ratfn.hpp"
#include "polyrec/recurrence.hpp"

#include <optional>
#include <vector>

namespace polyrec {

// Variable slots shared by P and Q; slot 2 is m2 in P and l2 in Q.
inline constexpr std::size_t kM1 = 0;
inline constexpr std::size_t kL1 = 1;
inline constexpr std::size_t kEliminated = 2;

// P(m1, l1, m2) = 0 and Q(m1, l1, l2) = 0, both with positive degree in slot 2.
struct EliminationInstance {
    LaurentPoly P{3};
    LaurentPoly Q{3};

    void validate() const;
    std::int64_t degree_p() const;  // d_P, after clearing negative powers of m2
    std::int64_t degree_q() const;  // d_Q
    LaurentPoly leading_p() const;  // p(m1, l1)
    LaurentPoly leading_q() const;  // q(m1, l1)
};

// p / x_var^shift is an ordinary polynomial in x_var with nonzero constant term.
struct ClearedPoly {
    LaurentPoly poly;
    Exponent shift;
};
ClearedPoly clear_negative_powers(const LaurentPoly& p, std::size_t var);

// Determinant of the Sylvester matrix in variable `var`, a's rows first with
// coefficients in descending degree. Negative powers of `var` are cleared
// first (see clear_negative_powers); the result drops `var`.
LaurentPoly sylvester_resultant(const LaurentPoly& a, const LaurentPoly& b, std::size_t var);

// Res_{l2}(P(m1, l1, l2^n), Q(m1, l1, l2)) in (m1, l1). For monic Q this is
// (-1)^{n d_P d_Q} prod_{Q(l2)=0} P(m1, l1, l2^n).
RatFn dehn_resultant(const EliminationInstance& inst, std::int64_t n);

struct Theorem1Report {
    std::vector<RatFn> terms;                // R_1..R_nMax
    std::optional<Recurrence> recurrence;    // guessed on the numerators
    std::optional<PolygonModel> model;       // Newton polygons of numerators, index = n
};

Theorem1Report theorem1_report(const EliminationInstance& inst, std::size_t n_max, std::size_t d_max,
                               std::size_t prefix_budget = 8);

}  // namespace polyrec
