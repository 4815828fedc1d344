#pragma once

#include "polyrec/laurent.hpp"

#include <span>
#include <string>
#include <vector>

namespace polyrec {

// Lattice polytope of dimension 1 or 2 held by its vertex list.
//
// Canonical order: for dim 1 the list is [min, max] (one entry for a point);
// for dim 2 the vertices run counter-clockwise from the lexicographically
// smallest one. Collinear boundary points are never stored, so a degenerate
// planar hull is a two-vertex segment [lexmin, lexmax].
struct Polytope {
    std::size_t dim = 1;
    std::vector<ExpVec> vertices;

    // Convex hull of arbitrary points (at least one).
    static Polytope hull(std::size_t dim, std::vector<ExpVec> points);

    bool operator==(const Polytope&) const = default;
};

struct Segment {
    Rational lo;
    Rational hi;
    bool operator==(const Segment&) const = default;
};

Polytope newton_polytope(const LaurentPoly& p);

// h_P(u) = max over vertices of u.v
Rational support(const Polytope& p, std::span<const Exponent> u);

// Projection onto the line R*omega in units of omega: [-h_P(-omega), h_P(omega)].
Segment project(const Polytope& p, std::span<const Exponent> omega);

// Integer points of P, boundary included.
Integer lattice_count(const Polytope& p);
// Planar area (0 for points and segments).
Rational area(const Polytope& p);
// Lattice points on the relative boundary (the two endpoints of a segment).
Integer boundary_count(const Polytope& p);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

// Primitive outward normals of the edges of a planar polytope.
std::vector<ExpVec> edge_normals(const Polytope& p);

// Compares support values on both edge-normal sets plus a fixed ring of 16
// directions. Two lattice polytopes pass iff they are equal.
bool support_equal(const Polytope& a, const Polytope& b);

// One frame per polytope on a shared integer grid, labelled by `labels`.
std::string render_svg(std::span<const Polytope> frames, std::span<const std::int64_t> labels);

}  // namespace polyrec
