#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmf/binforms.hpp"
#include "qmf/modforms.hpp"

namespace qmf {

// Multipliers m_0..m_r with a_i -> m_i * f^{(r-i)} for a weight-k form in a
// degree-r slot: m_i = i! * binom(k+r-1, i), computed via falling factorials
// so nonpositive k is meaningful.
std::vector<Rational> substitution_multipliers(int k, unsigned r);

// Result of applying an invariant to a tuple of forms via the derivative
// substitution.
struct PsiResult {
    QSeries series{0};                 // exact value in K[[q]]
    UnitScaledSeries unit;             // i^s * pi^t * rational body (zero body for Psi = 0)
    int claimed_weight = 0;            // sum d_j (k_j + r_j)
    bool quasimodular = false;         // OR of input flags
    std::string character;             // product of input character labels
    MembershipCertificate identification;  // body in the weight-w generator basis
    bool is_zero() const { return series.is_zero(); }
};

// Substitutes a^{(j)}_i -> m_i * f_j^{(r_j - i)} (tau-derivatives) into
// I.poly, evaluates exactly, extracts the unit and certifies membership at
// the claimed weight.  Throws verification_failed when the membership
// certificate cannot be established.
PsiResult psi_apply(const InvariantSpec& inv, const std::vector<EllipticForm>& forms,
                    unsigned prec);

// r-th Rankin-Cohen bracket; weight k1+k2+2r, rational coefficients (the
// (2 pi i)^r prefactors cancel exactly), cusp form for r > 0.
EllipticForm rankin_cohen(const EllipticForm& f, const EllipticForm& g, unsigned r, unsigned prec);

// Compares Psi_{(F,G)_r}(f,g) against (-1)^r r! (2 pi i)^r [f,g]_r exactly.
struct RcRelationReport {
    unsigned r = 0;
    bool equal = false;
    bool both_zero = false;
    std::optional<Rational> ratio;  // lhs/rhs when unequal but proportional
    int certified_weight = 0;       // membership-certified weight of the Psi side
    std::string lhs, rhs;           // rendered series
};
RcRelationReport verify_rc_relation(const EllipticForm& f, const EllipticForm& g, unsigned r,
                                    unsigned prec);

// Measures Psi_{(F,F)_{2r}}(f) against (2 pi i)^{2r} [f,f]_{2r}: the exact
// proportionality constant and the membership-certified weight of each side.
struct SelfBracketReport {
    unsigned r = 0;
    bool proportional = false;
    Rational measured_constant;      // Psi = measured * (2 pi i)^{2r} [f,f]_{2r}
    Rational reference_constant;     // (2r)!
    int certified_weight = 0;        // membership-certified weight of Psi
    int stated_weight = 0;           // the commonly quoted 2k + 2r label
    bool stated_weight_certifies = false;
    std::string details;
};
SelfBracketReport verify_self_bracket(const EllipticForm& f, unsigned r, unsigned prec);

// Checks Psi_{I*J}(f) = Psi_I(f) * Psi_J(f) exactly (same-spec invariants).
struct ProductPropertyReport {
    bool equal = false;
    std::string lhs, rhs;
};
ProductPropertyReport psi_product_property(const InvariantSpec& i, const InvariantSpec& j,
                                           const EllipticForm& f, unsigned prec);

}  // namespace qmf
