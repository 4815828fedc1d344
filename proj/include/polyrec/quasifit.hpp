#pragma once

#include "polyrec/polytope.hpp"
#include "polyrec/rational.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace polyrec {

// Polynomial in n with rational coefficients, constant term first, no
// trailing zeros (the zero polynomial is empty).
using PolyN = std::vector<Rational>;

Rational eval_poly(const PolyN& p, const Rational& n);
std::size_t poly_degree(const PolyN& p);  // 0 for constants and for zero

// n -> per_residue[n mod period](n) for n >= prefix. A residue may carry no
// polynomial when its class had no data (every entry masked).
struct QuasiPolynomial {
    std::size_t period = 1;
    std::size_t prefix = 0;
    std::size_t degree_bound = 0;
    std::vector<std::optional<PolyN>> per_residue;

    std::optional<Rational> evaluate(std::int64_t n) const;
    bool operator==(const QuasiPolynomial&) const = default;
};

// Missing entries (nullopt) are skipped: they neither fit nor refute a model.
using MaskedSequence = std::vector<std::optional<Rational>>;

// Smallest (period, prefix) in lexicographic order such that every residue
// class past the prefix is one polynomial of degree <= deg_max, interpolated
// on its first deg_max+1 points and verified on all the others.
std::optional<QuasiPolynomial> fit_quasipoly(std::span<const std::optional<Rational>> seq, std::size_t deg_max,
                                             std::size_t m_max, std::size_t prefix_budget);
std::optional<QuasiPolynomial> fit_quasipoly(std::span<const Rational> seq, std::size_t deg_max,
                                             std::size_t m_max, std::size_t prefix_budget);
// Same search with the period pinned.
std::optional<QuasiPolynomial> fit_quasipoly_with_period(std::span<const std::optional<Rational>> seq,
                                                         std::size_t deg_max, std::size_t period,
                                                         std::size_t prefix_budget);

struct ResidueModel {
    // vertices[i][j] = j-th coordinate of vertex i as a polynomial in n
    std::vector<std::vector<PolyN>> vertices;
    bool operator==(const ResidueModel&) const = default;
};

struct PolygonModel {
    std::size_t period = 1;
    std::size_t prefix = 0;
    std::size_t dim = 1;
    std::size_t degree_bound = 1;
    std::vector<std::optional<ResidueModel>> residues;
    // Input polytopes with n < prefix, kept verbatim.
    std::vector<std::optional<Polytope>> exceptions;

    std::optional<Polytope> evaluate(std::int64_t n) const;
    // Largest coordinate degree that occurs.
    std::size_t max_degree() const;
    bool operator==(const PolygonModel&) const = default;
};

std::optional<PolygonModel> fit_polygon_model(std::span<const std::optional<Polytope>> polys, std::size_t deg_max,
                                              std::size_t m_max, std::size_t prefix_budget);
std::optional<PolygonModel> fit_polygon_model(std::span<const Polytope> polys, std::size_t deg_max,
                                              std::size_t m_max, std::size_t prefix_budget);

// (a, b) -> (a - f^2 b n, b) applied to the polygon with index n.
Polytope shear_polygon(const Polytope& p, std::int64_t f, std::int64_t n);
std::vector<Polytope> shear_polygons(std::span<const Polytope> polys, std::int64_t f, std::int64_t first_index = 0);

struct ZeroPattern {
    std::size_t period = 1;
    std::size_t prefix = 0;
    std::set<std::size_t> full_residues;  // classes identically zero from the prefix on
    std::set<std::size_t> sporadic;       // every other zero index
    bool operator==(const ZeroPattern&) const = default;
};

ZeroPattern zero_pattern(std::span<const Rational> seq, std::size_t m_max, std::size_t prefix_budget);

}  // namespace polyrec
