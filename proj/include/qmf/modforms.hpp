#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

// Exact Bernoulli number B_k (even k >= 2) from the defining recurrence.
Rational bernoulli(unsigned k);

// Divisor power sum sum_{d|n} d^k.
Integer sigma(unsigned k, unsigned long n);

// A named level-1 (quasi-)modular form given by its exact q-expansion.
struct EllipticForm {
    std::string name;
    int weight = 0;
    bool quasimodular = false;
    std::string character = "trivial";
    QSeries series{0};
};

// Normalized Eisenstein series e_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n;
// quasimodular exactly for k = 2.
EllipticForm eisenstein(unsigned k, unsigned prec);

// The normalized weight-12 cusp form (e4^3 - e6^2)/1728 = q - 24q^2 + ...
EllipticForm delta_form(unsigned prec);

// "e2", "e4", ..., "e<2m>" or "delta"; nullopt for anything else.
std::optional<EllipticForm> form_by_name(const std::string& name, unsigned prec);

// Monomial e2^a2 * e4^a4 * e6^a6 in the (quasi)modular generator ring.
struct BasisMonomial {
    unsigned a2 = 0, a4 = 0, a6 = 0;
    unsigned weight() const { return 2 * a2 + 4 * a4 + 6 * a6; }
    std::string str() const;
    friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

// All generator monomials of the given even weight, with exact expansions.
// Modular: e4^a*e6^b with 4a+6b = w; quasimodular adds e2 powers.
std::vector<std::pair<BasisMonomial, QSeries>> basis(unsigned w, bool quasimodular, unsigned prec);

// dim M_w(SL(2,Z)) by the classical formula (even w >= 0).
unsigned modular_dimension(unsigned w);

// Exact coordinates of a series in the weight-w generator monomial basis.
struct MembershipCertificate {
    int weight = 0;
    bool quasimodular = false;
    std::vector<std::pair<BasisMonomial, Rational>> coords;  // nonzero entries only
    unsigned surplus_verified = 0;                           // rows beyond the solve
    bool is_zero() const { return coords.empty(); }
};

// Solves the exact linear system expressing s in basis(w); every coefficient
// through s.prec must match.  Throws insufficient_precision when
// s.prec < #basis + 10, not_in_space when no exact solution exists.
MembershipCertificate membership(const QSeries& s, int w, bool quasimodular);
MembershipCertificate membership_rational(const std::vector<Rational>& coeffs, int w,
                                          bool quasimodular);

// Renders certificate coordinates as a polynomial in e2, e4, e6; when
// factor_delta is set, the largest power of Delta = (e4^3-e6^2)/1728 is
// factored out and the rational content pulled in front, e.g.
// "-53084160000 * e4 * Delta^2" or "86016 * Delta * (e4^3 + 2*e6^2)".
std::string identification_string(const MembershipCertificate& cert, bool factor_delta);

// Same, with the unit i^i_exp * pi^pi_exp slotted in after the content:
// "-53084160000 * pi^6 * e4 * Delta^2".
std::string identification_string_with_unit(const MembershipCertificate& cert, int i_exp,
                                            unsigned pi_exp);

}  // namespace qmf
