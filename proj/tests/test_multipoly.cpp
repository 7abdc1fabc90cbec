#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/multipoly.hpp"
#include "testutil.hpp"

using namespace qmf;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
MultiPoly P(const std::string& s) { return MultiPoly::parse(s, xyz); }
}  // namespace

TEST_CASE("parse / print round-trip") {
    for (const char* text : {"x^2*y - 3*z + 1/2", "x - y", "2*x*y*z", "0", "-x^3 + x", "7"}) {
        MultiPoly p = P(text);
        CHECK(MultiPoly::parse(p.str(xyz), xyz) == p);
    }
    CHECK(P("x + x") == P("2*x"));
    CHECK(P("x - x").is_zero());
    CHECK(P("x^2*y - 3*z + 1/2").str(xyz) == "x^2*y - 3*z + 1/2");
}

TEST_CASE("arithmetic") {
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK(P("x + y").pow(2) == P("x^2 + 2*x*y + y^2"));
    CHECK((P("x") - P("x")).is_zero());
    CHECK(P("x*y").scaled(Rational(3, 2)) == P("3/2*x*y"));
}

TEST_CASE("derivative") {
    CHECK(P("x^3*y").derivative(0) == P("3*x^2*y"));
    CHECK(P("x^3*y").derivative(2).is_zero());
    CHECK(P("5").derivative(0).is_zero());
}

TEST_CASE("compose substitutes simultaneously") {
    // x -> y, y -> x swap on x^2*y
    std::vector<MultiPoly> swap_images{MultiPoly::variable(3, 1), MultiPoly::variable(3, 0),
                                       MultiPoly::variable(3, 2)};
    CHECK(P("x^2*y").compose(swap_images) == P("y^2*x"));
    // x -> x + y
    std::vector<MultiPoly> shear{P("x + y"), MultiPoly::variable(3, 1),
                                 MultiPoly::variable(3, 2)};
    CHECK(P("x^2").compose(shear) == P("x^2 + 2*x*y + y^2"));
}

TEST_CASE("evaluate agrees with compose-to-constants") {
    std::mt19937_64 rng(404);
    MultiPoly p = P("x^2*y - 3*z + 1/2*x*z^2");
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> pt{testutil::random_rational(rng), testutil::random_rational(rng),
                                 testutil::random_rational(rng)};
        std::vector<MultiPoly> consts;
        for (const auto& v : pt) consts.push_back(MultiPoly::constant(0, v));
        MultiPoly val = p.compose(consts);
        Rational direct = p.evaluate(pt);
        if (direct.is_zero())
            CHECK(val.is_zero());
        else
            CHECK(val == MultiPoly::constant(0, direct));
    }
}

TEST_CASE("homogeneity and weight queries") {
    CHECK(P("x^2*y + y^3").homogeneous_degree({0, 1}) == 3);
    CHECK_FALSE(P("x^2 + x").homogeneous_degree({0, 1}).has_value());
    CHECK(P("x^2*y").uniform_weight({1, 2, 0}) == 4);
    CHECK(P("x^2*y + z").degree_in(0) == 2);
    CHECK(MultiPoly(3).degree_in(0) == -1);
}

TEST_CASE("display order is graded lex") {
    CHECK(P("y + x^2 + 1").str(xyz) == "x^2 + y + 1");
    CHECK(P("x*y^2 + x^2*y").str(xyz) == "x^2*y + x*y^2");
}

TEST_CASE("content") {
    CHECK(P("2*x + 4*y").content() == Rational(2));
    CHECK(P("-2*x - 4*y").content() == Rational(-2));
    CHECK(P("1/2*x + 1/3*y").content() == Rational(1, 6));
}
