#include "qmf/verification.hpp"

#include <algorithm>

#include "qmf/concomitants.hpp"
#include "qmf/errors.hpp"
#include "qmf/psi.hpp"

namespace qmf {

unsigned verification_min_precision() { return 22; }

namespace {

struct Suite {
    unsigned prec;
    uint64_t seed;
    std::vector<CheckResult> out;

    EllipticForm e2, e4, e6, delta;

    explicit Suite(unsigned prec_, uint64_t seed_)
        : prec(prec_), seed(seed_), e2(eisenstein(2, prec_)), e4(eisenstein(4, prec_)),
          e6(eisenstein(6, prec_)), delta(delta_form(prec_)) {}

    void add(CheckResult r) { out.push_back(std::move(r)); }

    EllipticForm form(const std::string& n) const {
        if (n == "e2") return e2;
        if (n == "e4") return e4;
        if (n == "e6") return e6;
        return delta;
    }

    // --- criterion 1 & 2: the I3 identities -------------------------------
    void psi_identity(const std::string& id, int criterion, const InvariantSpec& inv,
                      const std::vector<EllipticForm>& forms, const QSeries& rhs_body,
                      const CoeffK& rhs_unit, int expected_weight, bool expect_quasi,
                      const std::string& desc) {
        CheckResult r{id, desc, criterion, true, false, "", "", ""};
        try {
            PsiResult psi = psi_apply(inv, forms, prec);
            QSeries rhs = rhs_body.scaled(rhs_unit);
            bool series_equal = psi.series == rhs;
            bool weight_ok = psi.claimed_weight == expected_weight &&
                             psi.identification.weight == expected_weight &&
                             psi.identification.quasimodular == expect_quasi &&
                             psi.identification.surplus_verified >= 10;
            r.passed = series_equal && weight_ok;
            r.lhs = psi.unit.unit_str() + " * (" +
                    identification_string(psi.identification, true) + ")";
            r.rhs = rhs.str();
            r.details = "weight " + std::to_string(psi.identification.weight) + ", surplus " +
                        std::to_string(psi.identification.surplus_verified) +
                        (series_equal ? ", series equal through q^" + std::to_string(prec)
                                      : ", series mismatch");
        } catch (const std::exception& e) {
            r.passed = false;
            r.details = e.what();
        }
        add(std::move(r));
    }

    void criterion_1_2_3_5() {
        // Psi_{I3}(e4) = -53084160000 pi^6 e4 Delta^2, weight 28
        QSeries e4d2 = e4.series * delta.series.pow(2);
        psi_identity("psi-i3-e4", 1, catalog_i3(), {e4},
                     e4d2, CoeffK::monomial(GaussianRational(Rational(-53084160000L)), 6), 28,
                     false, "I3 on e4 gives -53084160000*pi^6*e4*Delta^2");

        // Psi_{I3}(e6) = -203928109056 pi^6 (8 e4^3 + e6^2) Delta^2, weight 36
        QSeries mix = (e4.series.pow(3).scaled(CoeffK(Rational(8))) + e6.series.pow(2)) *
                      delta.series.pow(2);
        psi_identity("psi-i3-e6", 2, catalog_i3(), {e6},
                     mix, CoeffK::monomial(GaussianRational(Rational(-203928109056L)), 6), 36,
                     false, "I3 on e6 gives -203928109056*pi^6*(8*e4^3+e6^2)*Delta^2");

        // Psi_{cubic_linear}(e6, e4) = i 86016 pi^3 Delta (e4^3 + 2 e6^2), weight 24
        QSeries cl = delta.series *
                     (e4.series.pow(3) + e6.series.pow(2).scaled(CoeffK(Rational(2))));
        psi_identity("psi-cubic-linear-e6-e4", 3, catalog_cubic_linear(), {e6, e4}, cl,
                     CoeffK::monomial(GaussianRational(Rational(0), Rational(86016)), 3), 24,
                     false, "cubic_linear on (e6, e4) gives i*86016*pi^3*Delta*(e4^3+2*e6^2)");

        // Psi_{tri321}(e4, e2, e6): quasimodular weight 18.  The series equals
        // -(20/3)*i*pi^3*(e2^3+3*e2*e4+2*e6)*(e4^3-e6^2); against the normalized
        // Delta = (e4^3-e6^2)/1728 the constant is -11520 = -(20/3)*1728.
        QSeries tri_poly = e2.series.pow(3) + (e2.series * e4.series).scaled(CoeffK(Rational(3))) +
                           e6.series.scaled(CoeffK(Rational(2)));
        QSeries tri_rhs_body = tri_poly * delta.series;
        psi_identity("psi-tri321", 5, catalog_tri321(), {e4, e2, e6}, tri_rhs_body,
                     CoeffK::monomial(GaussianRational(Rational(0), Rational(-11520)), 3), 18,
                     true, "tri321 on (e4, e2, e6) gives -11520*i*pi^3*(e2^3+3*e2*e4+2*e6)*Delta");

        // report-only: the constant is usually quoted as -(20/3) relative to
        // the unnormalized discriminant e4^3-e6^2; against the normalized Delta
        // it is -11520, a ratio of exactly 1728.
        CheckResult c{"tri321-constant", "tri321 constant vs the stated -(20/3)", 5, false, true,
                      "-11520 (measured, normalized Delta)", "-20/3 (stated)",
                      "ratio 1728 = the Delta normalization factor"};
        add(std::move(c));
    }

    // --- criterion 4: transvectant expansion ------------------------------
    void criterion_4() {
        InvariantSpec cl = catalog_cubic_linear();
        const BinaryFormSpec& spec = cl.spec;
        MultiPoly f = form_poly(spec, 0);
        MultiPoly g = form_poly(spec, 1);
        MultiPoly t = transvectant(spec, f, g.pow(3), 3, 3, 3);
        CheckResult r{"transvectant-cubic-linear",
                      "(F, G^3)_3 expands to a0*b1^3 - 3*a1*b0*b1^2 + 3*a2*b0^2*b1 - a3*b0^3", 4,
                      true, t == cl.poly, t.str(spec.names()), cl.poly.str(spec.names()), ""};
        add(std::move(r));
        CheckResult m{"transvectant-prefactor",
                      "measured prefactor of the catalog polynomial relative to (F, G^3)_3", 4,
                      false, true, "1 (measured)", "20 (alternative normalization label)",
                      "the labeled normalization differs from the displayed transvectant formula"};
        add(std::move(m));
    }

    // --- criterion 6 & 7: Rankin-Cohen sweep -------------------------------
    void criterion_6_7() {
        for (unsigned r = 0; r <= 3; ++r) {
            for (std::string fn : {"e4", "e6"}) {
                for (std::string gn : {"e4", "e6"}) {
                    EllipticForm f = form(fn), g = form(gn);
                    auto rel = verify_rc_relation(f, g, r, prec);
                    std::string tag = "r" + std::to_string(r) + "-" + fn + "-" + gn;
                    std::string note = rel.both_zero
                                           ? "both sides zero"
                                           : "certified weight " +
                                                 std::to_string(rel.certified_weight);
                    if (rel.ratio) note += ", discrepancy ratio " + rel.ratio->str();
                    add(CheckResult{"rc-relation-" + tag,
                                    "Psi_{(F,G)_r} = (-1)^r r! (2*pi*i)^r [f,g]_r for " + tag, 6,
                                    true, rel.equal, rel.lhs, rel.rhs, note});

                    EllipticForm rc = rankin_cohen(f, g, r, prec);
                    CheckResult w{"rc-weight-" + tag,
                                  "[f,g]_r certified at weight k1+k2+2r, cusp for r>0", 7, true,
                                  false, "", "", ""};
                    try {
                        auto cert = membership(rc.series, rc.weight, false);
                        bool cusp_ok = r == 0 || rc.series.coeff(0).is_zero();
                        w.passed = cusp_ok && cert.surplus_verified >= 10;
                        w.lhs = identification_string(cert, true);
                        w.details = "weight " + std::to_string(rc.weight) + ", surplus " +
                                    std::to_string(cert.surplus_verified) +
                                    (r > 0 ? ", constant term zero" : "");
                    } catch (const std::exception& e) {
                        w.details = e.what();
                    }
                    add(std::move(w));
                }
            }
        }
    }

    // --- criterion 8: equivariance of the catalog ---------------------------
    void criterion_8() {
        for (const auto& name : catalog_names()) {
            InvariantSpec inv = *catalog_by_name(name);
            auto rep = verify_invariance(inv, 5, seed);
            add(CheckResult{"equivariance-" + name,
                            "I(g.F) = det(g)^" + std::to_string(inv.order) + " I(F) for " + name,
                            8, true, rep.passed, "", "",
                            rep.passed ? "5 random rational matrices"
                                       : "counterexample " + rep.counterexample});
        }
    }

    // --- criterion 9: weight bookkeeping ------------------------------------
    void criterion_9() {
        struct Case {
            std::string id;
            InvariantSpec inv;
            std::vector<EllipticForm> forms;
        };
        std::vector<Case> cases;
        cases.push_back({"i3-e4", catalog_i3(), {e4}});
        cases.push_back({"i3-e6", catalog_i3(), {e6}});
        cases.push_back({"cubic-linear", catalog_cubic_linear(), {e6, e4}});
        cases.push_back({"tri321", catalog_tri321(), {e4, e2, e6}});
        for (unsigned r = 1; r <= 3; ++r) {
            BinaryFormSpec spec({r, r}, {Convention::Binomial, Convention::Binomial});
            MultiPoly tv =
                transvectant(spec, form_poly(spec, 0), form_poly(spec, 1), r, r, r);
            InvariantSpec inv(tv, spec, {1, 1}, r, "(F,G)_" + std::to_string(r));
            cases.push_back({"transvectant-r" + std::to_string(r), std::move(inv), {e4, e6}});
        }

        bool all_certified = true;
        std::string cert_detail;
        for (auto& c : cases) {
            PsiResult psi = psi_apply(c.inv, c.forms, prec);
            long expected = 0;
            for (size_t j = 0; j < c.inv.degrees.size(); ++j)
                expected += static_cast<long>(c.inv.degrees[j]) *
                            (c.forms[j].weight + static_cast<long>(c.inv.spec.degrees[j]));
            bool ok = psi.claimed_weight == expected && psi.identification.weight == expected &&
                      psi.identification.surplus_verified >= 10;
            all_certified = all_certified && ok;
            cert_detail += c.id + ": weight " + std::to_string(psi.identification.weight) +
                           ", surplus " + std::to_string(psi.identification.surplus_verified) +
                           "; ";
        }
        add(CheckResult{"weight-certificates",
                        "every derivative-substitution output certifies at sum d_j(k_j+r_j) "
                        "with >= 10 surplus coefficients",
                        9, true, all_certified, "", "", cert_detail});

        // report-only: the literal d*k + n reading measured against the same bodies
        bool all_reject = true;
        std::string detail;
        for (size_t t = 0; t < 2; ++t) {
            auto& c = cases[t];
            PsiResult psi = psi_apply(c.inv, c.forms, prec);
            long stated = 0;
            for (size_t j = 0; j < c.inv.degrees.size(); ++j)
                stated += static_cast<long>(c.inv.degrees[j]) * c.forms[j].weight;
            stated += c.inv.order;
            bool rejected = false;
            try {
                membership_rational(psi.unit.body, static_cast<int>(stated), psi.quasimodular);
            } catch (const not_in_space&) {
                rejected = true;
            } catch (const insufficient_precision&) {
                rejected = true;  // no certificate at the stated weight either way
            }
            all_reject = all_reject && rejected;
            detail += c.id + ": d*k+n = " + std::to_string(stated) +
                      (rejected ? " rejected" : " unexpectedly certified") + ", certified " +
                      std::to_string(psi.claimed_weight) + "; ";
        }
        add(CheckResult{"stated-weight-label",
                        "the d*k+n weight label does not certify; sum d_j(k_j+r_j) does", 9,
                        false, all_reject, "", "", detail});
    }

    // --- criterion 10: self bracket -----------------------------------------
    void criterion_10() {
        auto rep = verify_self_bracket(e4, 1, prec);
        add(CheckResult{"self-bracket-proportional",
                        "Psi_{(F,F)_2}(e4) is exactly proportional to [e4,e4]_2", 10, true,
                        rep.proportional, "", "", rep.details});
        bool constants_match = rep.measured_constant == rep.reference_constant;
        add(CheckResult{"self-bracket-constant",
                        "measured constant vs (2r)! and certified weight vs the stated 2k+2r", 10,
                        false, constants_match && !rep.stated_weight_certifies,
                        "constant " + rep.measured_constant.str() + ", weight " +
                            std::to_string(rep.certified_weight),
                        "constant " + rep.reference_constant.str() + ", weight " +
                            std::to_string(rep.stated_weight),
                        std::string("stated weight ") +
                            (rep.stated_weight_certifies ? "certifies" : "does not certify")});
    }

    // --- criterion 11: multiplicativity -------------------------------------
    void criterion_11() {
        InvariantSpec d2 = catalog_disc2();
        for (std::string fn : {"e4", "e6"}) {
            auto rep = psi_product_property(d2, d2, form(fn), prec);
            add(CheckResult{"multiplicativity-disc2-" + fn,
                            "Psi_{disc2^2}(" + fn + ") = Psi_{disc2}(" + fn + ")^2", 11, true,
                            rep.equal, rep.lhs, rep.rhs, ""});
        }
    }

    // --- criterion 12: weight calculators -----------------------------------
    void criterion_12() {
        bool ok = true;
        std::string detail;
        auto expect = [&](bool cond, const std::string& what) {
            if (!cond) {
                ok = false;
                detail += "FAILED " + what + "; ";
            }
        };
        for (long k : {4L, 8L, 11L}) {
            GLWeight w = siegel2_invariant_weight({{2, k, "trivial", 2}});
            expect(w.weight == std::vector<long>{0, 2 * k + 2}, "disc2 weight (0,2k+2), k=" +
                                                                    std::to_string(k));
        }
        for (long k1 : {4L, 6L})
            for (long k2 : {8L, 5L}) {
                GLWeight w = siegel2_invariant_weight({{4, k1, "trivial", 1}, {2, k2, "trivial", 2}});
                expect(w.weight == std::vector<long>{0, k1 + 2 * k2 + 4}, "J12 weight (0,k1+2k2+4)");
            }
        GLWeight cov = siegel2_covariant_weight(6, 8, 2, 8);
        expect(cov.weight == std::vector<long>{8, 18}, "covariant (6,8,2,8) -> (8,18)");
        expect(embedding_exponent(6, 8, 2, 8) == 18, "embedding exponent (6,8,2,8) -> 18");
        GLWeight idc = siegel2_covariant_weight(6, 8, 1, 6);
        expect(idc.weight == std::vector<long>{6, 8}, "identity covariant keeps (j,k)");
        GLWeight mc = siegel2_multicovariant_weight({{6, 8, "trivial", 1}, {2, 4, "chi", 2}}, 2);
        expect(mc.weight == std::vector<long>{2, 20} && mc.character == "chi^2",
               "multicovariant example -> (2,20,chi^2)");
        GLWeight pic = picard_weight(1, 2, 1, 2);
        expect(pic.weight == std::vector<long>{0, 6}, "picard (k=1,d1=2,d2=1,n=2) -> (0,6)");
        GLWeight pic2 = picard_weight(3, 2, 1, 2);
        expect(pic2.weight == std::vector<long>{0, 12}, "picard (k=3) -> (0,12)");
        expect(symmetric_discriminant_weight(4, 8) == 34, "symmetric discriminant g=4,k=8 -> 34");
        expect(symmetric_discriminant_weight(3, 4) == 14, "symmetric discriminant g=3,k=4 -> 14");
        expect(symmetric_discriminant_weight(2, 0) == 2, "symmetric discriminant g=2,k=0 -> 2");
        auto ec = elliptic_character_weight(4, 4, 6);
        expect(ec.stated == 22 && ec.validated == 28, "elliptic weights (4,4,6) -> 22/28");
        auto ec2 = elliptic_character_weight(6, 2, 2);
        expect(ec2.stated == 14 && ec2.validated == 16, "elliptic weights (6,2,2) -> 14/16");
        add(CheckResult{"weight-calculators", "all displayed weight-rule instances", 12, true, ok,
                        "", "", ok ? "all instances reproduced" : detail});
    }

    // --- criterion 13: formal application & covariant round-trip ------------
    void criterion_13() {
        // disc2 on component symbols (f0, f1, f2) -> f1^2 - 4*f0*f2
        InvariantSpec d2 = catalog_disc2();
        std::vector<std::string> syms{"f0", "f1", "f2"};
        std::vector<std::vector<MultiPoly>> comps{{MultiPoly::variable(3, 0),
                                                   MultiPoly::variable(3, 1),
                                                   MultiPoly::variable(3, 2)}};
        MultiPoly applied = apply_covariant_formal(d2, comps).at(0);
        MultiPoly expected = MultiPoly::parse("f1^2 - 4*f0*f2", syms);
        add(CheckResult{"formal-disc2", "disc2 applied to (f0,f1,f2) gives f1^2 - 4*f0*f2", 13,
                        true, applied == expected, applied.str(syms), expected.str(syms), ""});

        // Hessian of the cubic: covariant -> invariant -> covariant round-trip
        BinaryFormSpec cubic({3}, {Convention::Binomial});
        MultiPoly f = form_poly(cubic, 0);
        MultiPoly hess = transvectant(cubic, f, f, 2, 3, 3);
        CovariantSpec hcov(hess, cubic, {2}, 2, "hessian");
        CovariantSpec back = invariant_to_covariant(covariant_to_invariant(hcov));
        add(CheckResult{"covariant-roundtrip",
                        "cubic Hessian survives covariant -> invariant -> covariant", 13, true,
                        back.poly == hcov.poly && back.x_degree == hcov.x_degree, "", "",
                        "x-degree " + std::to_string(back.x_degree) + ", index " +
                            std::to_string(back.index)});
    }

    void run() {
        criterion_1_2_3_5();
        criterion_4();
        criterion_6_7();
        criterion_8();
        criterion_9();
        criterion_10();
        criterion_11();
        criterion_12();
        criterion_13();
        std::stable_sort(out.begin(), out.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             return a.criterion < b.criterion;
                         });
    }
};

}  // namespace

std::vector<CheckResult> run_verification_suite(unsigned prec, uint64_t seed) {
    if (prec < verification_min_precision())
        throw insufficient_precision("verification suite needs precision >= " +
                                     std::to_string(verification_min_precision()) + ", got " +
                                     std::to_string(prec));
    Suite suite(prec, seed);
    suite.run();
    return suite.out;
}

bool all_hard_checks_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return !r.hard || r.passed; });
}

}  // namespace qmf
