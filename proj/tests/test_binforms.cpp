#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/binforms.hpp"
#include "qmf/errors.hpp"
#include "testutil.hpp"

using namespace qmf;

TEST_CASE("form_poly under both conventions") {
    BinaryFormSpec plain1({1}, {Convention::Plain});
    CHECK(form_poly(plain1, 0) == MultiPoly::parse("a0*x1 + a1*x2", plain1.names()));

    BinaryFormSpec bin3({3}, {Convention::Binomial});
    CHECK(form_poly(bin3, 0) ==
          MultiPoly::parse("a0*x1^3 + 3*a1*x1^2*x2 + 3*a2*x1*x2^2 + a3*x2^3", bin3.names()));

    BinaryFormSpec bin2({2}, {Convention::Binomial});
    CHECK(form_poly(bin2, 0) == MultiPoly::parse("a0*x1^2 + 2*a1*x1*x2 + a2*x2^2", bin2.names()));
}

TEST_CASE("transvectant: (F,G)_0 is the product") {
    BinaryFormSpec spec({2, 2}, {Convention::Binomial, Convention::Binomial});
    MultiPoly f = form_poly(spec, 0), g = form_poly(spec, 1);
    CHECK(transvectant(spec, f, g, 0, 2, 2) == f * g);
}

TEST_CASE("transvectant: (F,F)_2 of the binomial quadratic") {
    BinaryFormSpec spec({2}, {Convention::Binomial});
    MultiPoly f = form_poly(spec, 0);
    CHECK(transvectant(spec, f, f, 2, 2, 2) ==
          MultiPoly::parse("2*a0*a2 - 2*a1^2", spec.names()));
}

TEST_CASE("transvectant: (F, G^3)_3 for the cubic and a linear form") {
    BinaryFormSpec spec({3, 1}, {Convention::Binomial, Convention::Plain});
    MultiPoly f = form_poly(spec, 0);
    MultiPoly g = form_poly(spec, 1);
    MultiPoly t = transvectant(spec, f, g.pow(3), 3, 3, 3);
    CHECK(t == MultiPoly::parse("a0*b1^3 - 3*a1*b0*b1^2 + 3*a2*b0^2*b1 - a3*b0^3", spec.names()));
}

TEST_CASE("transvectant degree preconditions") {
    BinaryFormSpec spec({2, 2}, {Convention::Binomial, Convention::Binomial});
    MultiPoly f = form_poly(spec, 0), g = form_poly(spec, 1);
    CHECK_THROWS_AS(transvectant(spec, f, g, 1, 3, 2), degree_mismatch);
    CHECK_THROWS_AS(transvectant(spec, f + MultiPoly::constant(spec.nvars(), Rational(1)), g, 1,
                                 2, 2),
                    degree_mismatch);
    CHECK_THROWS_AS(transvectant(spec, f, g, 3, 2, 2), degree_mismatch);
}

TEST_CASE("transvectant is bilinear and (-1)^r symmetric on random forms") {
    std::mt19937_64 rng(8128);
    for (unsigned r = 0; r <= 3; ++r) {
        BinaryFormSpec spec({3, 3}, {Convention::Plain, Convention::Plain});
        size_t nv = spec.nvars();
        auto random_form = [&]() {
            MultiPoly out(nv);
            for (unsigned i = 0; i <= 3; ++i) {
                ExpVec e(nv, 0);
                e[spec.x1_index()] = 3 - i;
                e[spec.x2_index()] = i;
                out.add_term(e, testutil::random_rational(rng));
            }
            return out;
        };
        MultiPoly f = random_form(), f2 = random_form(), g = random_form();
        Rational lam = testutil::random_rational(rng);
        // bilinearity in the first argument
        CHECK(transvectant(spec, f + f2.scaled(lam), g, r, 3, 3) ==
              transvectant(spec, f, g, r, 3, 3) + transvectant(spec, f2, g, r, 3, 3).scaled(lam));
        // (F,G)_r = (-1)^r (G,F)_r
        MultiPoly sym = transvectant(spec, g, f, r, 3, 3);
        if (r % 2 == 1) sym = -sym;
        CHECK(transvectant(spec, f, g, r, 3, 3) == sym);
    }
}

TEST_CASE("act: identity fixes polynomials, diag(2,1) scales disc2 by det^2") {
    InvariantSpec d2 = catalog_disc2();
    Matrix2 id{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    CHECK(act(d2.spec, id, d2.poly) == d2.poly);

    Matrix2 diag{{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}}};
    CHECK(act(d2.spec, diag, d2.poly) == d2.poly.scaled(Rational(4)));

    Matrix2 sing{{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}};
    CHECK_THROWS_AS(act(d2.spec, sing, d2.poly), singular_matrix);
}

TEST_CASE("act on a linear form's coefficients is the substitution") {
    BinaryFormSpec spec({1}, {Convention::Plain});
    // F = a0 x1 + a1 x2; under x -> g x the new coefficients are
    // a0' = g11 a0 + g21 a1, a1' = g12 a0 + g22 a1.
    Matrix2 g{{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}};
    MultiPoly a0 = MultiPoly::variable(spec.nvars(), spec.var_index(0, 0));
    CHECK(act(spec, g, a0) == MultiPoly::parse("a0 + 3*a1", spec.names()));
    MultiPoly a1 = MultiPoly::variable(spec.nvars(), spec.var_index(0, 1));
    CHECK(act(spec, g, a1) == MultiPoly::parse("2*a0 + 4*a1", spec.names()));
}

TEST_CASE("act composes as a left action: act(g, act(h, P)) = act(g*h, P)") {
    std::mt19937_64 rng(606);
    InvariantSpec i3 = catalog_i3();
    for (int t = 0; t < 5; ++t) {
        Matrix2 g = testutil::random_invertible(rng);
        Matrix2 h = testutil::random_invertible(rng);
        CHECK(act(i3.spec, g, act(i3.spec, h, i3.poly)) ==
              act(i3.spec, testutil::mat_mul(g, h), i3.poly));
    }
}

TEST_CASE("catalog entries validate and pass equivariance") {
    for (const auto& name : catalog_names()) {
        auto inv = catalog_by_name(name);
        REQUIRE(inv.has_value());
        CAPTURE(name);
        // construction already asserts multihomogeneity, isobarity, 2n = sum d_j r_j
        auto rep = verify_invariance(*inv, 5, /*seed=*/1234);
        CHECK(rep.passed);
    }
    CHECK_FALSE(catalog_by_name("nope").has_value());
}

TEST_CASE("tri321 convention is pinned: plain middle slot is not equivariant") {
    BinaryFormSpec wrong({3, 2, 1},
                         {Convention::Binomial, Convention::Plain, Convention::Binomial});
    MultiPoly p = MultiPoly::parse(
        "a0*b2*c1 - 2*a1*b1*c1 - a1*b2*c0 + a2*b0*c1 + 2*a2*b1*c0 - a3*b0*c0", wrong.names());
    InvariantSpec inv(p, wrong, {1, 1, 1}, 3, "tri321-wrong-convention");
    CHECK_FALSE(verify_invariance(inv, 5, 1234).passed);
}

TEST_CASE("a0^2 is not an invariant") {
    BinaryFormSpec spec({2}, {Convention::Plain});
    // scales wrongly under diag(t,1): caught statically by the isobaric check
    MultiPoly p = MultiPoly::parse("a0^2", spec.names());
    CHECK_THROWS_AS(InvariantSpec(p, spec, {2}, 2, "a0sq"), std::invalid_argument);
    // a1^2 passes the static shape checks but fails under shears
    MultiPoly q = MultiPoly::parse("a1^2", spec.names());
    InvariantSpec inv(q, spec, {2}, 2, "a1sq");
    auto rep = verify_invariance(inv, 5, 42);
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.counterexample.empty());
}

TEST_CASE("invariant construction rejects malformed data") {
    BinaryFormSpec spec({3}, {Convention::Binomial});
    MultiPoly not_isobaric = MultiPoly::parse("a0*a3 + a1*a2 + a0*a2", spec.names());
    CHECK_THROWS_AS(InvariantSpec(not_isobaric, spec, {2}, 3, "bad"), std::invalid_argument);
    MultiPoly not_homog = MultiPoly::parse("a0*a3 + a1", spec.names());
    CHECK_THROWS_AS(InvariantSpec(not_homog, spec, {2}, 3, "bad"), std::invalid_argument);
    MultiPoly with_x = MultiPoly::parse("a0*x1", spec.names());
    CHECK_THROWS_AS(InvariantSpec(with_x, spec, {1}, 0, "bad"), std::invalid_argument);
    // 2n != sum d_j r_j
    MultiPoly ok = MultiPoly::parse("a0*a3 - a1*a2", spec.names());
    CHECK_THROWS_AS(InvariantSpec(ok, spec, {2}, 2, "bad"), std::invalid_argument);
}

TEST_CASE("covariant <-> invariant substitution") {
    // invariant a0*l2 - a1*l1 of V1 + V1 maps to the covariant a0*x1 + a1*x2 = F
    BinaryFormSpec spec({1, 1}, {Convention::Plain, Convention::Plain});
    MultiPoly p = MultiPoly::parse("a0*b1 - a1*b0", spec.names());
    InvariantSpec inv(p, spec, {1, 1}, 1, "pairing");
    CovariantSpec cov = invariant_to_covariant(inv);
    BinaryFormSpec single({1}, {Convention::Plain});
    CHECK(cov.poly == MultiPoly::parse("a0*x1 + a1*x2", single.names()));
    CHECK(cov.x_degree == 1);

    // a constant maps to itself
    MultiPoly c = MultiPoly::constant(spec.nvars(), Rational(5));
    InvariantSpec cinv(c, spec, {0, 0}, 0, "const");
    CHECK(invariant_to_covariant(cinv).poly ==
          MultiPoly::constant(single.nvars(), Rational(5)));
}

TEST_CASE("covariant round-trip on the cubic Hessian") {
    BinaryFormSpec cubic({3}, {Convention::Binomial});
    MultiPoly f = form_poly(cubic, 0);
    MultiPoly hess = transvectant(cubic, f, f, 2, 3, 3);
    CovariantSpec h(hess, cubic, {2}, 2, "hessian");
    CHECK(h.index == 2);  // 2*lambda + b = 2*3 => lambda = 2
    InvariantSpec as_inv = covariant_to_invariant(h);
    CHECK(as_inv.order == 4);  // lambda + b
    CovariantSpec back = invariant_to_covariant(as_inv);
    CHECK(back.poly == h.poly);
    CHECK(back.x_degree == h.x_degree);
    CHECK(back.index == h.index);
}

TEST_CASE("invariant_to_covariant requires a linear last slot") {
    InvariantSpec i3 = catalog_i3();
    CHECK_THROWS_AS(invariant_to_covariant(i3), slot_shape_error);
}

TEST_CASE("product_invariant multiplies degrees and orders") {
    InvariantSpec d2 = catalog_disc2();
    InvariantSpec sq = product_invariant(d2, d2);
    CHECK(sq.degrees == std::vector<unsigned>{4});
    CHECK(sq.order == 4);
    CHECK(sq.poly == d2.poly * d2.poly);
    CHECK(verify_invariance(sq, 3, 9).passed);
}

TEST_CASE("polynomial text round-trip through the catalog") {
    for (const auto& name : catalog_names()) {
        InvariantSpec inv = *catalog_by_name(name);
        auto names = inv.spec.names();
        CHECK(MultiPoly::parse(inv.poly.str(names), names) == inv.poly);
    }
}