#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/coeffk.hpp"
#include "qmf/errors.hpp"
#include "testutil.hpp"

using namespace qmf;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 2).den() == 2);
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(7L, 0) == 1);
    CHECK(binomial(6L, 2) == 15);
    CHECK(binomial(-2L, 3) == -4);  // falling factorial route handles negatives
    CHECK(falling_factorial(Integer(6), 3) == 120);
}

TEST_CASE("gaussian arithmetic, i^2 = -1") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(Rational(-1)));
    CHECK(i.pow(4) == GaussianRational(Rational(1)));
    GaussianRational z(Rational(1), Rational(2));
    CHECK(z * z.conj() == GaussianRational(z.norm()));
    CHECK(z / z == GaussianRational(Rational(1)));
    CHECK(z.str() == "1+2*i");
    CHECK((-z).str() == "-1-2*i");
    CHECK_THROWS_AS(z / GaussianRational(Rational(0)), std::domain_error);
}

TEST_CASE("k_add collects like terms") {
    CHECK((CoeffK(Rational(3, 2)) + CoeffK(Rational(-3, 2))).is_zero());
    // 2i*pi^3 + 5*pi^3 = (5+2i)*pi^3
    CoeffK a = CoeffK::monomial(GaussianRational(Rational(0), Rational(2)), 3);
    CoeffK b = CoeffK::monomial(GaussianRational(Rational(5)), 3);
    CHECK(a + b == CoeffK::monomial(GaussianRational(Rational(5), Rational(2)), 3));
    CoeffK c = CoeffK::monomial(GaussianRational(Rational(-64)), 6);
    CoeffK d = CoeffK::monomial(GaussianRational(Rational(64)), 6);
    CHECK((c + d).is_zero());
}

TEST_CASE("k_mul: pi exponents add, i arithmetic exact") {
    CoeffK tpi = CoeffK::two_pi_i_pow(1);
    CHECK(tpi * tpi == CoeffK::monomial(GaussianRational(Rational(-4)), 2));
    CHECK(CoeffK::two_pi_i_pow(6) == CoeffK::monomial(GaussianRational(Rational(-64)), 6));
    CHECK(tpi.pow(6) == CoeffK::two_pi_i_pow(6));
    std::mt19937_64 rng(7);
    CoeffK x = testutil::random_coeffk(rng);
    CHECK(CoeffK(Rational(1)) * x == x);
}

TEST_CASE("k_div_monomial") {
    CoeffK a = CoeffK::monomial(GaussianRational(Rational(-64)), 6);
    CHECK(a.div_monomial(GaussianRational(Rational(-64)), 6) == CoeffK(Rational(1)));
    CoeffK b = CoeffK::monomial(GaussianRational(Rational(-53084160000L)), 6);
    CHECK(b.div_monomial(GaussianRational(Rational(-64)), 6) == CoeffK(Rational(829440000L)));
    // cross-check the long division
    CHECK(Rational(-64) * Rational(829440000L) == Rational(-53084160000L));
    CoeffK pi3 = CoeffK::monomial(GaussianRational(Rational(1)), 3);
    CHECK_THROWS_AS(pi3.div_monomial(GaussianRational(Rational(1)), 6), division_not_exact);
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 60; ++t) {
        CoeffK a = testutil::random_coeffk(rng);
        CoeffK b = testutil::random_coeffk(rng);
        CoeffK c = testutil::random_coeffk(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("div_monomial then mul round-trips") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        CoeffK m = testutil::random_coeffk(rng);
        GaussianRational c = testutil::random_gaussian(rng);
        if (c.is_zero()) continue;
        unsigned e = t % 4;
        CoeffK a = m * CoeffK::monomial(c, e);
        CHECK(a.div_monomial(c, e) == m);
    }
}

TEST_CASE("coeffk rendering") {
    CHECK(CoeffK(Rational(0)).str() == "0");
    CHECK(CoeffK(Rational(3, 2)).str() == "3/2");
    CHECK(CoeffK::monomial(GaussianRational(Rational(-64)), 6).str() == "-64*pi^6");
    CHECK(CoeffK::monomial(GaussianRational(Rational(0), Rational(1)), 1).str() == "i*pi");
    CHECK(CoeffK::monomial(GaussianRational(Rational(5), Rational(2)), 3).str() ==
          "(5+2*i)*pi^3");
}
