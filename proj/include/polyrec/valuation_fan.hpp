#pragma once

#include "polyrec/laurent.hpp"
#include "polyrec/quasifit.hpp"
#include "polyrec/recurrence.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polyrec {

enum class Side { VStar, V };

const char* to_string(Side side);

// Valuations of the Puiseux roots of a characteristic polynomial, ascending,
// with multiplicities summing to the z-degree.
struct SlopeSpectrum {
    std::vector<Rational> slopes;
    std::vector<std::size_t> multiplicities;

    bool contains(const Rational& s) const;
    std::size_t degree() const;
    bool operator==(const SlopeSpectrum&) const = default;
};

// char_poly lives in (z, x_1..x_r) with z as variable 0. The coefficient of
// each power of z is specialized along omega; the roots' valuations are the
// negated slopes of the lower (VStar) or upper (V) hull of the points
// (beta, valuation of the beta-th coefficient).
SlopeSpectrum root_valuations(const LaurentPoly& char_poly, std::span<const Exponent> omega, Side side);

// Rays in the plane of directions, sorted by angle from the positive first
// axis. Inside each open cone between consecutive rays the root valuations
// (both sides) are linear in omega.
struct Fan2D {
    std::vector<ExpVec> rays;

    // Index i of the open cone running counter-clockwise from rays[i] to
    // rays[i+1 mod size]; nullopt when omega lies on a ray. With no rays,
    // every nonzero omega is in cone 0.
    std::optional<std::size_t> cone_of(std::span<const Exponent> omega) const;
    bool operator==(const Fan2D&) const = default;
};

// One cone's combinatorial data: the valuation of each root group as a
// linear form in omega, with multiplicity, for each side.
struct ValuationType {
    std::vector<std::pair<std::vector<Rational>, std::size_t>> vstar;
    std::vector<std::pair<std::vector<Rational>, std::size_t>> v;
    bool operator==(const ValuationType&) const = default;
};

// Linear forms valid on the open cone containing a generic omega.
ValuationType valuation_type(const LaurentPoly& char_poly, std::span<const Exponent> omega);

Fan2D slope_fan(const LaurentPoly& char_poly);

struct SlopeWitness {
    Side side;
    std::size_t residue;
    Rational slope;
    Rational intercept;
    std::optional<Rational> witness;  // the spectrum element equal to slope
};

struct SlopeReport {
    std::vector<std::optional<Rational>> vstar_seq;
    std::vector<std::optional<Rational>> v_seq;
    std::optional<QuasiPolynomial> vstar_fit;
    std::optional<QuasiPolynomial> v_fit;
    SlopeSpectrum vstar_spectrum;
    SlopeSpectrum v_spectrum;
    std::vector<SlopeWitness> entries;

    // Both fits exist and every fitted slope lies in its spectrum.
    bool consistent() const;
};

// Valuation sequences of the generated terms along omega, their quasi-linear
// fits, and membership of each fitted slope in the predicted spectrum.
SlopeReport predicted_vs_empirical(const Recurrence& rec, std::span<const LaurentPoly> init,
                                   std::span<const Exponent> omega, std::size_t n_max, std::size_t m_max = 6,
                                   std::size_t prefix_budget = 8);

}  // namespace polyrec
