#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmf/concomitants.hpp"
#include "qmf/psi.hpp"
#include "qmf/errors.hpp"
#include "testutil.hpp"

using namespace qmf;

TEST_CASE("siegel2 invariant weight") {
    // disc2 on weight (2,k): d = 2 -> (0, 2k+2)
    CHECK(siegel2_invariant_weight({{2, 9, "trivial", 2}}).weight ==
          std::vector<long>{0, 20});
    // J12 on ((4,k1,1),(2,k2,2)) -> (0, k1 + 2k2 + 4)
    CHECK(siegel2_invariant_weight({{4, 7, "trivial", 1}, {2, 3, "trivial", 2}}).weight ==
          std::vector<long>{0, 7 + 6 + 4});
    // empty slot list -> (0,0)
    CHECK(siegel2_invariant_weight({}).weight == std::vector<long>{0, 0});
    // non-integral rejected: single slot with odd j*d
    CHECK_THROWS_AS(siegel2_invariant_weight({{3, 4, "trivial", 1}}), non_integral_weight);
}

TEST_CASE("siegel2 covariant weight") {
    // identity covariant (a=1, b=j) keeps (j,k)
    CHECK(siegel2_covariant_weight(6, 8, 1, 6).weight == std::vector<long>{6, 8});
    // Hessian-type: (6,8), a=2, b=8 -> (8, 18)
    CHECK(siegel2_covariant_weight(6, 8, 2, 8).weight == std::vector<long>{8, 18});
    // b = 0 reduces to the invariant rule with d = a
    auto inv = siegel2_invariant_weight({{6, 8, "trivial", 2}});
    CHECK(siegel2_covariant_weight(6, 8, 2, 0).weight == inv.weight);
    CHECK_THROWS_AS(siegel2_covariant_weight(5, 4, 1, 2), non_integral_weight);
}

TEST_CASE("siegel2 multicovariant weight and characters") {
    // single trivial slot reduces to the covariant rule
    CHECK(siegel2_multicovariant_weight({{6, 8, "trivial", 2}}, 8).weight ==
          siegel2_covariant_weight(6, 8, 2, 8).weight);
    auto w = siegel2_multicovariant_weight({{6, 8, "trivial", 1}, {2, 4, "chi", 2}}, 2);
    CHECK(w.weight == std::vector<long>{2, 20});
    CHECK(w.character == "chi^2");
    auto triv = siegel2_multicovariant_weight({{6, 0, "trivial", 0}, {2, 0, "trivial", 0}}, 0);
    CHECK(triv.weight == std::vector<long>{0, 0});
    CHECK(triv.character == "trivial");
}

TEST_CASE("embedding exponent and the covariant rule agree") {
    CHECK(embedding_exponent(6, 8, 1, 6) == 8);  // identity embedding: l = k
    CHECK(embedding_exponent(6, 8, 2, 8) == 18);
    CHECK_THROWS_AS(embedding_exponent(1, 0, 1, 3), non_integral_weight);

    std::mt19937_64 rng(2025);
    std::uniform_int_distribution<long> jd(0, 8), kd(0, 12);
    std::uniform_int_distribution<unsigned> ad(1, 4);
    for (int t = 0; t < 200; ++t) {
        long j = 2 * jd(rng), k = kd(rng);
        unsigned a = ad(rng);
        unsigned max_b = static_cast<unsigned>(a * j + 2 * a * k);
        std::uniform_int_distribution<unsigned> bd(0, max_b / 2);
        unsigned b = 2 * bd(rng);  // keep parity even so both formulas apply
        auto w = siegel2_covariant_weight(j, k, a, b);
        CHECK(w.weight[1] == embedding_exponent(j, k, a, b));
    }
}

TEST_CASE("elliptic character weights carry both readings") {
    auto w = elliptic_character_weight(4, 4, 6);
    CHECK(w.stated == 22);
    CHECK(w.validated == 28);
    CHECK(w.character == "chi^4");
    auto id = elliptic_character_weight(4, 1, 0);
    CHECK(id.stated == 4);
    CHECK(id.validated == 4);
    auto w2 = elliptic_character_weight(6, 2, 2);
    CHECK(w2.stated == 14);
    CHECK(w2.validated == 16);
}

TEST_CASE("picard weight rule") {
    CHECK(picard_weight(1, 2, 1, 2).weight == std::vector<long>{0, 6});
    CHECK(picard_weight(5, 1, 0, 0).weight == std::vector<long>{0, 5});
    CHECK(picard_weight(3, 2, 1, 2).weight == std::vector<long>{0, 12});
}

TEST_CASE("symmetric discriminant weights") {
    CHECK(symmetric_discriminant_weight(4, 8) == 34);
    CHECK(symmetric_discriminant_weight(3, 4) == 14);
    CHECK(symmetric_discriminant_weight(2, 0) == 2);  // consistent with disc2's order
}

TEST_CASE("certified psi weights match the validated elliptic weight rule") {
    // single-slot catalog entries: membership-certified weight = k*d + 2n
    constexpr unsigned kPrec = 25;
    struct Case {
        InvariantSpec inv;
        unsigned k;
    };
    std::vector<Case> cases{{catalog_i3(), 4}, {catalog_i3(), 6}, {catalog_disc2(), 4},
                            {catalog_disc2(), 6}};
    for (auto& c : cases) {
        PsiResult res = psi_apply(c.inv, {eisenstein(c.k, kPrec)}, kPrec);
        auto w = elliptic_character_weight(c.k, c.inv.degrees[0], c.inv.order);
        CHECK(res.identification.weight == w.validated);
    }
}

TEST_CASE("formal application of disc2") {
    std::vector<std::string> syms{"f0", "f1", "f2"};
    std::vector<std::vector<MultiPoly>> comps{
        {MultiPoly::variable(3, 0), MultiPoly::variable(3, 1), MultiPoly::variable(3, 2)}};
    auto out = apply_covariant_formal(catalog_disc2(), comps);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == MultiPoly::parse("f1^2 - 4*f0*f2", syms));
}

TEST_CASE("formal application shape checks") {
    std::vector<std::vector<MultiPoly>> bad{{MultiPoly::variable(3, 0), MultiPoly::variable(3, 1)}};
    CHECK_THROWS_AS(apply_covariant_formal(catalog_disc2(), bad), shape_mismatch);
}

TEST_CASE("formal application of the picard bi-invariant to a derivative vector") {
    // slots: linear (f0, f1); quadratic (f0u, (f1u + f0v)/2, f1v)
    std::vector<std::string> syms{"f0", "f1", "f0u", "f1u", "f0v", "f1v"};
    auto v = [&](size_t i) { return MultiPoly::variable(6, i); };
    std::vector<std::vector<MultiPoly>> comps{
        {v(0), v(1)},
        {v(2), (v(3) + v(4)).scaled(Rational(1, 2)), v(5)}};
    auto out = apply_covariant_formal(catalog_picard_bi(), comps);
    REQUIRE(out.size() == 1);
    CHECK(out[0] ==
          MultiPoly::parse("f0^2*f1v - f0*f1*f1u - f0*f1*f0v + f1^2*f0u", syms));
}

TEST_CASE("identity covariant reproduces the component vector") {
    BinaryFormSpec spec({2}, {Convention::Plain});
    CovariantSpec id(form_poly(spec, 0), spec, {1}, 2, "identity");
    std::vector<std::string> syms{"f0", "f1", "f2"};
    std::vector<std::vector<MultiPoly>> comps{
        {MultiPoly::variable(3, 0), MultiPoly::variable(3, 1), MultiPoly::variable(3, 2)}};
    auto out = apply_covariant_formal(id, comps);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == MultiPoly::parse("f0", syms));
    CHECK(out[1] == MultiPoly::parse("f1", syms));
    CHECK(out[2] == MultiPoly::parse("f2", syms));
}

TEST_CASE("formal application agrees with direct evaluation on random points") {
    std::mt19937_64 rng(515);
    InvariantSpec d2 = catalog_disc2();
    std::vector<std::vector<MultiPoly>> comps{
        {MultiPoly::variable(3, 0), MultiPoly::variable(3, 1), MultiPoly::variable(3, 2)}};
    MultiPoly formal = apply_covariant_formal(d2, comps).at(0);
    for (int t = 0; t < 30; ++t) {
        std::vector<Rational> pt{testutil::random_rational(rng), testutil::random_rational(rng),
                                 testutil::random_rational(rng)};
        // direct evaluation of the invariant polynomial (x variables unused)
        std::vector<Rational> full{pt[0], pt[1], pt[2], Rational(0), Rational(0)};
        CHECK(formal.evaluate(pt) == d2.poly.evaluate(full));
    }
}
