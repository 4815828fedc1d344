#include "polyrec/errors.hpp"
#include "polyrec/laurent.hpp"
#include "polyrec/ratfn.hpp"
#include "polyrec/rational.hpp"
#include "polyrec/serialize.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace polyrec;
using testing::Gen;
using testing::poly;

namespace {

Rational eval_at(const LaurentPoly& p, std::initializer_list<long> pt) {
    std::vector<Rational> xs;
    for (long v : pt) xs.emplace_back(v);
    return p.evaluate(xs);
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(make_rational(4, -6) == Rational(-2, 3));
    CHECK(make_rational(4, -6).get_den() == 3);
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK(parse_rational("0/7").get_den() == 1);
    CHECK(to_string(make_rational(3, 1)) == "3");
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_rational("x"), SchemaError);
    CHECK(floor_of(make_rational(-7, 2)) == -4);
    CHECK(ceil_of(make_rational(-7, 2)) == -3);
}

TEST_CASE("lp_mul examples") {
    const auto x = testing::x1();
    CHECK(lp_mul(x + testing::one(), x - testing::one()) == poly(1, {{1, {2}}, {-1, {0}}}));
    CHECK(lp_mul(testing::x1(-1), x) == testing::one());
    const auto s = poly(2, {{1, {1, 0}}, {1, {0, 1}}});
    CHECK(lp_mul(s, s) == poly(2, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}}));
    CHECK_THROWS_AS(lp_mul(s, x), PreconditionError);
}

TEST_CASE("canonical form stores no zeros and sorts terms") {
    const auto p = poly(2, {{3, {1, 0}}, {-3, {1, 0}}, {2, {0, 5}}, {1, {-1, 2}}});
    REQUIRE(p.size() == 2);
    CHECK(p.terms()[0].exp == ExpVec{-1, 2});
    CHECK(p.terms()[1].exp == ExpVec{0, 5});
    CHECK((p - p).is_zero());
}

TEST_CASE("lp_specialize examples") {
    const std::array<Exponent, 2> w12{1, 2}, w11{1, 1}, w21{2, 1};
    CHECK(lp_specialize(poly(2, {{1, {1, 0}}, {1, {0, 1}}}), w12) == poly(1, {{1, {1}}, {1, {2}}}));
    CHECK(lp_specialize(poly(2, {{1, {1, -1}}}), w11) == testing::one());
    const auto p = poly(2, {{1, {2, 0}}, {3, {1, 1}}});
    const auto t = lp_specialize(p, w21);
    CHECK(t == poly(1, {{1, {4}}, {3, {3}}}));
    CHECK(eval_at(t, {2}) == eval_at(p, {4, 2}));
    const std::array<Exponent, 2> zero{0, 0};
    CHECK_THROWS_AS(lp_specialize(p, zero), PreconditionError);
}

TEST_CASE("lp_power_subst examples") {
    // variables (m1, l2)
    const auto p = poly(2, {{1, {0, 2}}, {1, {1, 0}}});
    CHECK(lp_power_subst(p, 1, 3) == poly(2, {{1, {0, 6}}, {1, {1, 0}}}));
    CHECK(lp_power_subst(p, 1, 1) == p);
    CHECK(lp_power_subst(poly(1, {{1, {1}}, {1, {-1}}}), 0, 2) == poly(1, {{1, {2}}, {1, {-2}}}));
    CHECK_THROWS_AS(lp_power_subst(p, 2, 2), PreconditionError);
}

TEST_CASE("lp_valuations examples") {
    const auto v = lp_valuations(poly(1, {{1, {2}}, {1, {7}}}));
    CHECK(v.vstar == 2);
    CHECK(v.v == 7);
    CHECK(lp_valuations(LaurentPoly::constant(1, 5)).vstar == 0);
    CHECK(lp_valuations(LaurentPoly::constant(1, 5)).v == 0);
    const auto w = lp_valuations(poly(1, {{1, {-3}}, {1, {1}}}));
    CHECK(w.vstar == -3);
    CHECK(w.v == 1);
    CHECK_THROWS_AS(lp_valuations(LaurentPoly(1)), PreconditionError);
    CHECK_THROWS_AS(lp_valuations(poly(2, {{1, {1, 1}}})), PreconditionError);
}

TEST_CASE("exact division") {
    const auto x = testing::x1();
    const auto a = (x - testing::one()) * (x * x + testing::x1(-1));
    CHECK(lp_divide_exact(a, x - testing::one()) == std::optional(x * x + testing::x1(-1)));
    CHECK_FALSE(lp_divide_exact(x * x + testing::one(), x - testing::one()).has_value());
}

TEST_CASE("property: ring axioms on random inputs") {
    Gen g(11);
    for (int i = 0; i < 60; ++i) {
        const std::size_t r = static_cast<std::size_t>(g.integer(1, 3));
        const auto a = g.laurent(r, 5, -3, 3), b = g.laurent(r, 5, -3, 3), c = g.laurent(r, 5, -3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("property: specialization is a ring homomorphism") {
    Gen g(12);
    for (int i = 0; i < 60; ++i) {
        const auto a = g.laurent(2, 5, -3, 3), b = g.laurent(2, 5, -3, 3);
        const std::array<Exponent, 2> w{g.integer(-4, 4), g.nonzero(4)};
        CHECK(lp_specialize(a * b, w) == lp_specialize(a, w) * lp_specialize(b, w));
        CHECK(lp_specialize(a + b, w) == lp_specialize(a, w) + lp_specialize(b, w));
    }
}

TEST_CASE("property: valuations are additive") {
    Gen g(13);
    for (int i = 0; i < 100; ++i) {
        const auto a = g.laurent(1, 5, -5, 5), b = g.laurent(1, 5, -5, 5);
        const auto va = lp_valuations(a), vb = lp_valuations(b), vab = lp_valuations(a * b);
        CHECK(vab.vstar == va.vstar + vb.vstar);
        CHECK(vab.v == va.v + vb.v);
    }
}

TEST_CASE("property: evaluation commutes with the ring operations") {
    Gen g(14);
    for (int i = 0; i < 60; ++i) {
        const auto a = g.laurent(2, 4, -2, 2), b = g.laurent(2, 4, -2, 2);
        std::vector<Rational> pt{make_rational(g.nonzero(5), g.integer(1, 4)), make_rational(g.nonzero(5), g.integer(1, 4))};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
        const RatFn f(a, b);
        CHECK(f.evaluate(pt) * b.evaluate(pt) == a.evaluate(pt));
    }
}

TEST_CASE("univariate rational functions are fully reduced") {
    const auto x = testing::x1();
    const RatFn f((x - testing::one()) * (x + testing::one()), (x - testing::one()) * testing::x1(2));
    // the monomial part of the denominator folds into the numerator
    CHECK(f.num() == (x + testing::one()) * testing::x1(-2));
    CHECK(f.den() == testing::one());
    CHECK(f.is_polynomial());
    const RatFn g2(2 * x, 4 * x * x + testing::one());
    CHECK(g2.den().lex_least().coeff > 0);
    CHECK(RatFn(x, x + testing::one()) + RatFn(testing::one(), x + testing::one()) == RatFn(testing::one()));
    CHECK(RatFn(x) / RatFn(x) == RatFn(testing::one()));
}

TEST_CASE("gcd of univariate polynomials") {
    const auto x = testing::x1();
    const auto g = lp_gcd_univariate((x - testing::one()) * (x + 2 * testing::one()), (x - testing::one()) * (x * x + testing::one()));
    CHECK(g == x - testing::one());
}

TEST_CASE("multivariate rational functions normalize content and sign") {
    const auto a = poly(2, {{2, {1, 0}}, {4, {0, 1}}});
    const auto b = poly(2, {{-6, {0, 0}}, {2, {1, 1}}});
    const RatFn f(a, b);
    CHECK(f.den().lex_least().coeff > 0);
    CHECK(f == RatFn(a * make_rational(1, 2), b * make_rational(1, 2)));
}

TEST_CASE("property: polynomial JSON round-trips bit-exactly") {
    Gen g(15);
    for (int i = 0; i < 50; ++i) {
        auto p = g.laurent(static_cast<std::size_t>(g.integer(1, 3)), 6, -4, 4);
        p *= make_rational(g.nonzero(9), g.integer(1, 7));
        const auto j = io::to_json(p);
        const auto back = io::poly_from_json(j);
        CHECK(back == p);
        CHECK(io::to_json(back).dump() == j.dump());
    }
    CHECK(io::to_json(poly(1, {{1, {2}}, {1, {7}}})).dump() == R"({"terms":[["1","1",[2]],["1","1",[7]]],"vars":1})");
}

TEST_CASE("malformed polynomial JSON is a schema error") {
    using nlohmann::json;
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"vars":1})")), SchemaError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"vars":1,"terms":[["1","1",[1,2]]]})")), SchemaError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"vars":1,"terms":[["a","1",[1]]]})")), SchemaError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"vars":1,"terms":[["1","0",[1]]]})")), SchemaError);
}
