#include "polyrec/errors.hpp"
#include "polyrec/polytope.hpp"
#include "polyrec/serialize.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace polyrec;
using testing::Gen;
using testing::poly;

namespace {

Polytope unit_square() { return newton_polytope(poly(2, {{1, {0, 0}}, {1, {1, 0}}, {1, {0, 1}}, {1, {1, 1}}})); }

Polytope seg27() { return newton_polytope(poly(1, {{1, {2}}, {1, {7}}})); }

// Lattice points of a convex polygon, by testing every point of the bounding box.
std::size_t brute_count(const Polytope& p) {
    const auto& vs = p.vertices;
    Exponent x0 = vs[0][0], x1 = x0, y0 = vs[0][1], y1 = y0;
    for (const auto& v : vs) {
        x0 = std::min(x0, v[0]), x1 = std::max(x1, v[0]);
        y0 = std::min(y0, v[1]), y1 = std::max(y1, v[1]);
    }
    std::size_t count = 0;
    for (Exponent x = x0; x <= x1; ++x)
        for (Exponent y = y0; y <= y1; ++y) {
            bool inside = true;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const auto& a = vs[i];
                const auto& b = vs[(i + 1) % vs.size()];
                if ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) < 0) inside = false;
            }
            count += inside;
        }
    return count;
}

}  // namespace

TEST_CASE("newton_polytope examples") {
    CHECK(seg27().vertices == std::vector<ExpVec>{{2}, {7}});
    CHECK(newton_polytope(LaurentPoly::constant(1, 5)).vertices == std::vector<ExpVec>{{0}});
    CHECK(unit_square().vertices == std::vector<ExpVec>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK_THROWS_AS(newton_polytope(LaurentPoly(1)), PreconditionError);
    CHECK_THROWS_AS(newton_polytope(poly(3, {{1, {1, 1, 1}}})), PreconditionError);
}

TEST_CASE("hulls drop interior and collinear points") {
    const auto p = Polytope::hull(2, {{0, 0}, {1, 0}, {2, 0}, {2, 2}, {1, 1}, {0, 2}, {1, 2}});
    CHECK(p.vertices == std::vector<ExpVec>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    const auto line = Polytope::hull(2, {{3, 3}, {0, 0}, {1, 1}, {2, 2}});
    CHECK(line.vertices == std::vector<ExpVec>{{0, 0}, {3, 3}});
    // counter-clockwise from the lexicographically smallest vertex
    const auto tri = Polytope::hull(2, {{0, 2}, {2, 0}, {0, 0}});
    CHECK(tri.vertices == std::vector<ExpVec>{{0, 0}, {2, 0}, {0, 2}});
}

TEST_CASE("support examples") {
    const std::array<Exponent, 2> u11{1, 1};
    CHECK(support(unit_square(), u11) == 2);
    const std::array<Exponent, 1> up{1}, down{-1};
    CHECK(support(seg27(), up) == 7);
    CHECK(support(seg27(), down) == -2);
    const auto point = newton_polytope(LaurentPoly::constant(1, 5));
    CHECK(support(point, up) == 0);
    const std::array<Exponent, 2> zero{0, 0};
    CHECK_THROWS_AS(support(unit_square(), zero), PreconditionError);
}

TEST_CASE("project examples") {
    const std::array<Exponent, 2> w12{1, 2}, w1m1{1, -1};
    CHECK(project(unit_square(), w12) == Segment{0, 3});
    CHECK(project(unit_square(), w1m1) == Segment{-1, 1});
    const std::array<Exponent, 1> w{1};
    CHECK(project(seg27(), w) == Segment{2, 7});
}

TEST_CASE("lattice counts and areas") {
    CHECK(lattice_count(unit_square()) == 4);
    CHECK(area(unit_square()) == 1);
    CHECK(lattice_count(seg27()) == 6);
    CHECK(area(seg27()) == 0);
    const auto tri = Polytope::hull(2, {{0, 0}, {2, 0}, {0, 2}});
    CHECK(lattice_count(tri) == 6);
    CHECK(area(tri) == 2);
    // Pick: interior 0, boundary 6
    CHECK(area(tri) == Rational(lattice_count(tri) - boundary_count(tri)) + make_rational(boundary_count(tri), 2) - 1);
    const auto diag = Polytope::hull(2, {{0, 0}, {4, 6}});
    CHECK(lattice_count(diag) == 3);
}

TEST_CASE("property: Newton polytope of a product is the Minkowski sum") {
    Gen g(31);
    for (int i = 0; i < 100; ++i) {
        const std::size_t r = static_cast<std::size_t>(g.integer(1, 2));
        const auto a = g.laurent(r, 6, -4, 4), b = g.laurent(r, 6, -4, 4);
        CHECK(newton_polytope(a * b) == minkowski_sum(newton_polytope(a), newton_polytope(b)));
    }
}

TEST_CASE("property: Pick's theorem and brute-force counts") {
    Gen g(32);
    std::size_t checked = 0;
    for (int i = 0; i < 150; ++i) {
        const auto p = newton_polytope(g.laurent(2, 8, -5, 5));
        if (p.vertices.size() < 3) continue;
        ++checked;
        const Integer total = lattice_count(p), b = boundary_count(p);
        CHECK(area(p) == Rational(total - b) + make_rational(b, 2) - 1);
        CHECK(total == brute_count(p));
    }
    CHECK(checked > 100);
}

TEST_CASE("property: projection matches the Newton segment of the specialization") {
    Gen g(33);
    std::size_t checked = 0;
    for (int i = 0; i < 200; ++i) {
        const auto p = g.laurent(2, 6, -4, 4);
        const std::array<Exponent, 2> w{g.integer(-6, 6), g.nonzero(6)};
        const auto np = newton_polytope(p);
        // skip directions where two vertices tie in weight
        std::set<Exponent> weights;
        for (const auto& v : np.vertices) weights.insert(w[0] * v[0] + w[1] * v[1]);
        if (weights.size() != np.vertices.size()) continue;
        ++checked;
        const auto val = lp_valuations(lp_specialize(p, w));
        const auto seg = project(np, w);
        CHECK(seg == Segment{val.vstar, val.v});
    }
    CHECK(checked > 100);
}

TEST_CASE("property: support values on the reconstruction grid decide equality") {
    Gen g(34);
    for (int i = 0; i < 100; ++i) {
        const auto a = newton_polytope(g.laurent(2, 5, -3, 3));
        const auto b = g.integer(0, 1) ? a : newton_polytope(g.laurent(2, 5, -3, 3));
        CHECK(support_equal(a, b) == (a == b));
        for (const auto& n : edge_normals(a)) {
            CHECK(n.size() == 2);
            CHECK(std::gcd(n[0], n[1]) == 1);
        }
    }
}

TEST_CASE("polytope JSON round-trips and SVG is deterministic") {
    const auto j = io::to_json(unit_square());
    CHECK(j.dump() == R"({"dim":2,"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
    CHECK(io::polytope_from_json(j) == unit_square());
    const std::vector<Polytope> frames{unit_square(), Polytope::hull(2, {{0, 0}, {2, 0}, {0, 2}})};
    const std::vector<std::int64_t> labels{1, 2};
    const auto svg = render_svg(frames, labels);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg == render_svg(frames, labels));
    CHECK_THROWS_AS(io::polytope_from_json(nlohmann::json::parse(R"({"dim":3,"vertices":[[0,0,0]]})")), SchemaError);
}
