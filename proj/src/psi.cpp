#include "qmf/psi.hpp"

#include <stdexcept>

#include "qmf/errors.hpp"

namespace qmf {

std::vector<Rational> substitution_multipliers(int k, unsigned r) {
    std::vector<Rational> out;
    out.reserve(r + 1);
    for (unsigned i = 0; i <= r; ++i)
        out.emplace_back(falling_factorial(Integer(k + static_cast<long>(r) - 1), i));
    return out;
}

PsiResult psi_apply(const InvariantSpec& inv, const std::vector<EllipticForm>& forms,
                    unsigned prec) {
    const BinaryFormSpec& spec = inv.spec;
    if (forms.size() != spec.slots())
        throw std::invalid_argument("psi_apply: expected " + std::to_string(spec.slots()) +
                                    " forms, got " + std::to_string(forms.size()));
    for (const auto& f : forms)
        if (f.series.prec() < prec)
            throw insufficient_precision("psi_apply: form " + f.name + " has precision " +
                                         std::to_string(f.series.prec()) + " < " +
                                         std::to_string(prec));

    PsiResult out;
    out.quasimodular = false;
    long weight = 0;
    long derivative_budget = 0;  // sum d_j r_j - n
    std::string character;
    for (size_t j = 0; j < spec.slots(); ++j) {
        weight += static_cast<long>(inv.degrees[j]) * (forms[j].weight + static_cast<long>(spec.degrees[j]));
        derivative_budget += static_cast<long>(inv.degrees[j]) * static_cast<long>(spec.degrees[j]);
        out.quasimodular = out.quasimodular || forms[j].quasimodular;
        for (unsigned c = 0; c < inv.degrees[j]; ++c) {
            if (forms[j].character == "trivial") continue;
            if (!character.empty()) character += "*";
            character += forms[j].character;
        }
    }
    derivative_budget -= static_cast<long>(inv.order);
    out.claimed_weight = static_cast<int>(weight);
    out.character = character.empty() ? "trivial" : character;

    // Substituted series per coefficient variable (and inert placeholders for
    // x1, x2, which cannot occur in an invariant).
    std::vector<QSeries> sub(spec.nvars(), QSeries::constant(CoeffK(Rational(0)), prec));
    for (size_t j = 0; j < spec.slots(); ++j) {
        unsigned r = spec.degrees[j];
        auto mult = substitution_multipliers(forms[j].weight, r);
        QSeries base = forms[j].series.truncated(prec);
        // f, f', f'', ... computed once per slot
        std::vector<QSeries> derivs{base};
        for (unsigned t = 1; t <= r; ++t) derivs.push_back(derivs.back().dtau());
        for (unsigned i = 0; i <= r; ++i) {
            // a PLAIN-convention variable stands for binom(r,i) times the
            // binomial-normalized coefficient the substitution is stated for
            Rational m = mult[i];
            if (spec.conventions[j] == Convention::Plain)
                m *= Rational(binomial(static_cast<long>(r), i));
            sub[spec.var_index(j, i)] = derivs[r - i].scaled(CoeffK(m));
        }
    }

    QSeries value = QSeries::constant(CoeffK(Rational(0)), prec);
    for (const auto& [exps, coeff] : inv.poly.terms()) {
        QSeries term = QSeries::constant(CoeffK(coeff), prec);
        for (size_t v = 0; v < spec.nvars(); ++v)
            if (exps[v] > 0) term = term * sub[v].pow(exps[v]);
        value = value + term;
    }
    out.series = value;

    if (value.is_zero()) {
        out.unit = UnitScaledSeries{0, 0, std::vector<Rational>(prec + 1, Rational(0))};
        out.identification =
            MembershipCertificate{out.claimed_weight, out.quasimodular, {}, prec + 1};
        return out;
    }

    out.unit = value.extract_unit();
    if (out.unit.pi_exp != static_cast<unsigned>(derivative_budget))
        throw std::logic_error("psi_apply: pi-exponent " + std::to_string(out.unit.pi_exp) +
                               " does not match derivative count " +
                               std::to_string(derivative_budget));
    try {
        out.identification =
            membership_rational(out.unit.body, out.claimed_weight, out.quasimodular);
    } catch (const not_in_space& e) {
        throw verification_failed("psi_apply: weight certificate failed for " + inv.name + ": " +
                                  e.what());
    }
    return out;
}

EllipticForm rankin_cohen(const EllipticForm& f, const EllipticForm& g, unsigned r,
                          unsigned prec) {
    for (const auto* h : {&f, &g})
        if (h->series.prec() < prec)
            throw insufficient_precision("rankin_cohen: form " + h->name + " has precision " +
                                         std::to_string(h->series.prec()) + " < " +
                                         std::to_string(prec));
    QSeries fs = f.series.truncated(prec);
    QSeries gs = g.series.truncated(prec);
    std::vector<QSeries> df{fs}, dg{gs};
    for (unsigned t = 1; t <= r; ++t) {
        df.push_back(df.back().dtau());
        dg.push_back(dg.back().dtau());
    }
    QSeries sum = QSeries::constant(CoeffK(Rational(0)), prec);
    for (unsigned n = 0; n <= r; ++n) {
        unsigned m = r - n;
        Rational c = Rational(Integer(binomial(f.weight + static_cast<long>(r) - 1, m) *
                              binomial(g.weight + static_cast<long>(r) - 1, n)));
        if (n % 2 == 1) c = -c;
        sum = sum + (df[n] * dg[m]).scaled(CoeffK(c));
    }
    // strip the exact (2 pi i)^r prefactor
    GaussianRational unit = GaussianRational(Rational(2)).pow(r) * GaussianRational::i().pow(r);
    QSeries bracket(prec);
    for (unsigned n = 0; n <= prec; ++n)
        bracket.set_coeff(n, sum.coeff(n).div_monomial(unit, r));
    std::string nm = "[" + f.name + "," + g.name + "]_" + std::to_string(r);
    return EllipticForm{nm, f.weight + g.weight + static_cast<int>(2 * r),
                        f.quasimodular || g.quasimodular, "trivial", bracket};
}

RcRelationReport verify_rc_relation(const EllipticForm& f, const EllipticForm& g, unsigned r,
                                    unsigned prec) {
    BinaryFormSpec spec({r, r}, {Convention::Binomial, Convention::Binomial});
    MultiPoly tv = transvectant(spec, form_poly(spec, 0), form_poly(spec, 1), r, r, r);
    InvariantSpec inv(tv, spec, {1, 1}, r, "(F,G)_" + std::to_string(r));

    RcRelationReport report;
    report.r = r;
    report.certified_weight = f.weight + g.weight + static_cast<int>(2 * r);

    QSeries lhs(prec);
    if (!inv.poly.is_zero()) {
        PsiResult psi = psi_apply(inv, {f, g}, prec);
        lhs = psi.series;
        report.certified_weight = psi.identification.weight;
    }

    QSeries rc = rankin_cohen(f, g, r, prec).series;
    CoeffK scale = CoeffK::two_pi_i_pow(r) * CoeffK(Rational(factorial(r)));
    if (r % 2 == 1) scale = -scale;
    QSeries rhs = rc.scaled(scale);

    report.equal = lhs == rhs;
    report.both_zero = lhs.is_zero() && rhs.is_zero();
    if (!report.equal && !lhs.is_zero() && !rhs.is_zero()) {
        UnitScaledSeries ul = lhs.extract_unit();
        UnitScaledSeries ur = rhs.extract_unit();
        if (ul.pi_exp == ur.pi_exp && ul.i_exp == ur.i_exp) {
            Rational q(0);
            bool found = false;
            for (size_t n = 0; n < ur.body.size() && n < ul.body.size(); ++n)
                if (!ur.body[n].is_zero()) {
                    q = ul.body[n] / ur.body[n];
                    found = true;
                    break;
                }
            bool proportional = found;
            for (size_t n = 0; proportional && n < ur.body.size() && n < ul.body.size(); ++n)
                if (ul.body[n] != q * ur.body[n]) proportional = false;
            if (proportional) report.ratio = q;
        }
    }
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    return report;
}

SelfBracketReport verify_self_bracket(const EllipticForm& f, unsigned r, unsigned prec) {
    if (r < 1) throw std::invalid_argument("verify_self_bracket: r must be >= 1");
    BinaryFormSpec spec({2 * r}, {Convention::Binomial});
    MultiPoly fp = form_poly(spec, 0);
    MultiPoly tv = transvectant(spec, fp, fp, 2 * r, 2 * r, 2 * r);
    InvariantSpec inv(tv, spec, {2}, 2 * r, "(F,F)_" + std::to_string(2 * r));

    PsiResult psi = psi_apply(inv, {f}, prec);
    QSeries rc = rankin_cohen(f, f, 2 * r, prec).series;

    SelfBracketReport report;
    report.r = r;
    report.reference_constant = Rational(factorial(2 * r));
    report.stated_weight = 2 * f.weight + static_cast<int>(2 * r);
    report.certified_weight = psi.claimed_weight;

    // Psi = c * (2 pi i)^{2r} [f,f]_{2r}; the extracted unit of Psi is pi^{2r},
    // so the body satisfies body = c * (-1)^r * 2^{2r} * rc.
    Rational unit_factor = Rational(2).pow(2 * r);
    if (r % 2 == 1) unit_factor = -unit_factor;
    std::vector<Rational> rc_body = rc.rational_coeffs();
    const std::vector<Rational>& body = psi.unit.body;
    Rational ratio(0);
    bool found = false, proportional = true;
    for (size_t n = 0; n < rc_body.size() && n < body.size(); ++n) {
        if (!rc_body[n].is_zero()) {
            ratio = body[n] / (unit_factor * rc_body[n]);
            found = true;
            break;
        }
    }
    if (found) {
        for (size_t n = 0; n < rc_body.size() && n < body.size(); ++n)
            if (body[n] != ratio * unit_factor * rc_body[n]) proportional = false;
    } else {
        proportional = rc.is_zero() && psi.is_zero();
    }
    report.proportional = proportional;
    report.measured_constant = ratio;
    try {
        membership_rational(rc_body, report.stated_weight, f.quasimodular);
        report.stated_weight_certifies = true;
    } catch (const std::exception&) {
        report.stated_weight_certifies = false;
    }
    report.details = "psi pi-exponent " + std::to_string(psi.unit.pi_exp) + ", certified weight " +
                     std::to_string(report.certified_weight);
    return report;
}

ProductPropertyReport psi_product_property(const InvariantSpec& i, const InvariantSpec& j,
                                           const EllipticForm& f, unsigned prec) {
    InvariantSpec prod = product_invariant(i, j);
    QSeries lhs = psi_apply(prod, {f}, prec).series;
    QSeries rhs = psi_apply(i, {f}, prec).series * psi_apply(j, {f}, prec).series;
    ProductPropertyReport report;
    report.equal = lhs == rhs;
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    return report;
}

}  // namespace qmf
