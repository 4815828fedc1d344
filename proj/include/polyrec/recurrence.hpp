#pragma once

#include "polyrec/laurent.hpp"
#include "polyrec/ratfn.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polyrec {

// sum_{k=0}^{d} c_k R_{n+k} = 0 with coefficients independent of n.
class Recurrence {
public:
    // Requires d >= 1, c_d != 0 and a shared variable count.
    explicit Recurrence(std::vector<LaurentPoly> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::size_t var_count() const { return coeffs_.front().var_count(); }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
    const LaurentPoly& leading() const { return coeffs_.back(); }
    const LaurentPoly& trailing() const { return coeffs_.front(); }

    // p(z, x) = sum_k c_k z^k, with z inserted as variable 0.
    LaurentPoly characteristic_poly() const;

    bool annihilates(std::span<const LaurentPoly> terms) const;
    bool annihilates(std::span<const RatFn> terms) const;

    bool operator==(const Recurrence&) const = default;

private:
    std::vector<LaurentPoly> coeffs_;
};

// Scales the coefficients so the lexicographically least term of c_d is 1.
Recurrence normalized(const Recurrence& rec);

struct GeneratedTerms {
    std::vector<LaurentPoly> terms;    // R_0..R_N (numerators in fraction mode)
    std::vector<RatFn> fractions;      // the exact values R_0..R_N
    bool non_unit_denominators = false;  // some R_n left the Laurent ring
};

// Steps the recursion forward from R_0..R_{d-1}. A monomial c_d keeps every
// term in the Laurent ring (any r); otherwise only r = 1 is accepted and the
// terms are carried as reduced rational functions.
GeneratedTerms rec_generate(const Recurrence& rec, std::span<const LaurentPoly> init, std::size_t n_max);

// R_{-1}, ..., R_{-count} from R_0..R_{d-1}; requires a monomial c_0.
std::vector<LaurentPoly> rec_generate_backward(const Recurrence& rec, std::span<const LaurentPoly> init,
                                               std::size_t count);

// Per-variable inclusive exponent bounds for guessed coefficients.
struct SupportBox {
    ExpVec lo;
    ExpVec hi;
    std::size_t volume() const;
};

// Bounding box of all term supports, widened by one in every direction.
SupportBox default_support_box(std::span<const LaurentPoly> terms);

// Least-order recurrence (d <= d_max) with coefficients supported in the box
// that annihilates every window of the terms. Needs at least 2*d_max + 2 terms.
std::optional<Recurrence> guess_recurrence(std::span<const LaurentPoly> terms, std::size_t d_max,
                                           const std::optional<SupportBox>& box = std::nullopt);

// a_n = sum_i A_i(n) alpha_i^n; coeff_polys[i] lists A_i's coefficients,
// constant term first.
struct GeneralizedPowerSum {
    std::vector<Rational> roots;
    std::vector<std::vector<Rational>> coeff_polys;

    void validate() const;
    std::size_t order() const;
};

// Coefficients read off s(x) = prod (1 - alpha_i x)^{m_i}; scalar (0 variables).
Recurrence gps_to_recurrence(const GeneralizedPowerSum& g);
Rational gps_eval(const GeneralizedPowerSum& g, std::int64_t n);

// Square matrix over the univariate fraction field Q(q).
using MatrixRF = std::vector<std::vector<RatFn>>;

// tr(A B^n) = numerators[n] / (la * lb^n), before any cancellation.
struct ClearedTraces {
    LaurentPoly la;
    LaurentPoly lb;
    std::vector<LaurentPoly> numerators;

    // sum_k c_k tr(A B^(n+k)) = 0 for every window, checked as
    // sum_k c_k lb^(d-k) numerators[n+k] = 0.
    bool annihilated_by(const Recurrence& rec) const;
};

ClearedTraces trace_numerators(const MatrixRF& a, const MatrixRF& b, std::size_t n_max);

// tr(A B^n) for n = 0..n_max, reduced.
std::vector<RatFn> trace_sequence(const MatrixRF& a, const MatrixRF& b, std::size_t n_max);

// Recurrence with the coefficients of det(z I - B), denominators cleared.
// When B is singular c_0 vanishes; the z-factor is kept so the recurrence
// still annihilates tr(A B^n) from n = 0.
Recurrence char_poly_recurrence(const MatrixRF& b);

}  // namespace polyrec
