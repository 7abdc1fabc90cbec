#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/binforms.hpp"
#include "qmf/coeffk.hpp"
#include "qmf/modforms.hpp"
#include "testutil.hpp"

using namespace qmf;

TEST_CASE("coeffk text round-trips through the reader") {
    std::mt19937_64 rng(1001);
    for (int t = 0; t < 200; ++t) {
        CoeffK c = testutil::random_coeffk(rng, 5);
        CAPTURE(c.str());
        CHECK(CoeffK::parse(c.str()) == c);
    }
}

TEST_CASE("coeffk parser accepts the documented shapes") {
    CHECK(CoeffK::parse("pi") == CoeffK::monomial(GaussianRational(Rational(1)), 1));
    CHECK(CoeffK::parse("-pi^6") == CoeffK::monomial(GaussianRational(Rational(-1)), 6));
    CHECK(CoeffK::parse("0").is_zero());
    CHECK(CoeffK::parse("3/2") == CoeffK(Rational(3, 2)));
    CHECK(CoeffK::parse("-64*pi^6") == CoeffK::monomial(GaussianRational(Rational(-64)), 6));
    CHECK(CoeffK::parse("i*pi") == CoeffK::monomial(GaussianRational::i(), 1));
    CHECK(CoeffK::parse("(5+2*i)*pi^3") ==
          CoeffK::monomial(GaussianRational(Rational(5), Rational(2)), 3));
    CHECK(CoeffK::parse("2*i*pi^3 + 5/3") ==
          CoeffK::monomial(GaussianRational(Rational(0), Rational(2)), 3) +
              CoeffK(Rational(5, 3)));
}

TEST_CASE("polynomial text round-trips on random sparse polynomials") {
    std::mt19937_64 rng(77);
    BinaryFormSpec spec({3, 2}, {Convention::Plain, Convention::Plain});
    auto names = spec.names();
    std::uniform_int_distribution<unsigned> expd(0, 3);
    for (int t = 0; t < 100; ++t) {
        MultiPoly p(spec.nvars());
        for (int term = 0; term < 4; ++term) {
            ExpVec e(spec.nvars(), 0);
            for (auto& x : e) x = expd(rng) == 0 ? 1 : 0;
            p.add_term(e, testutil::random_rational(rng));
        }
        CAPTURE(p.str(names));
        CHECK(MultiPoly::parse(p.str(names), names) == p);
    }
}

TEST_CASE("series coefficients round-trip as strings") {
    std::mt19937_64 rng(303);
    QSeries s = testutil::random_series(rng, 10);
    for (unsigned n = 0; n <= s.prec(); ++n)
        CHECK(CoeffK::parse(s.coeff(n).str()) == s.coeff(n));
}

TEST_CASE("plain identification strings re-parse over the generator names") {
    QSeries d = delta_form(14).series;
    auto cert = membership(d, 12, false);
    std::vector<std::string> gens{"e2", "e4", "e6"};
    MultiPoly p = MultiPoly::parse(identification_string(cert, false), gens);
    CHECK(p == MultiPoly::parse("1/1728*e4^3 - 1/1728*e6^2", gens));
}
