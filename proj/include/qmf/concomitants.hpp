#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmf/binforms.hpp"

namespace qmf {

// Highest-weight data of a GL(g) factor of automorphy.  For g = 2 the pair
// (j, k) denotes Sym^j tensor det^k.
struct GLWeight {
    unsigned rank = 2;
    std::vector<long> weight;  // for g=2 stored as {j, k}
    std::string character = "trivial";

    static GLWeight sym_det(long j, long k, std::string chi = "trivial") {
        return GLWeight{2, {j, k}, std::move(chi)};
    }
    std::string str() const;
};

struct Siegel2Slot {
    long j = 0;
    long k = 0;
    std::string character = "trivial";
    unsigned degree = 1;  // degree of the invariant/covariant in this slot
};

// Invariant of multidegree (d_i) on forms of weights (j_i, k_i):
// scalar target (0, sum d_i (k_i + j_i/2)).  Throws non_integral_weight.
GLWeight siegel2_invariant_weight(const std::vector<Siegel2Slot>& slots);

// Covariant of degree a, x-degree b on weight (j, k): target
// (b, a(k + j/2) - b/2).
GLWeight siegel2_covariant_weight(long j, long k, unsigned a, unsigned b);

// Multi-covariant version with characters: weight (b, sum a_i(k_i+j_i/2) - b/2),
// character prod chi_i^{a_i}.
GLWeight siegel2_multicovariant_weight(const std::vector<Siegel2Slot>& slots, unsigned b);

// det-twist l of the target U[b+l, l] of the covariant embedding:
// 2l = a*j + 2*a*k - b.  Throws non_integral_weight on parity/negativity.
long embedding_exponent(long j, long k, unsigned a, unsigned b);

// Weight bookkeeping for the map M_k(chi) -> M_?(chi^d) induced by a
// degree-d order-n invariant: both the stated k*d + n and the
// series-validated k*d + 2n.
struct EllipticWeightInfo {
    long stated = 0;     // the commonly quoted k*d + n label
    long validated = 0;  // k*d + 2n, the weight the certificates confirm
    std::string character;
};
EllipticWeightInfo elliptic_character_weight(long k, unsigned d, unsigned n);

// Weight of a bi-invariant of degree (d1, d2) and order n applied to a
// weight-(1,k) form and its derivative vector: (0, d1*k + d2*(k+1) + n).
GLWeight picard_weight(long k, unsigned d1, unsigned d2, unsigned n);

// Scalar weight of the determinant invariant of a Sym^2 tensor det^k form
// over GL(g): g*k + 2.
long symmetric_discriminant_weight(unsigned g, long k);

// Substitutes slot-j coefficient variables by the given component
// polynomials (all over one shared target variable space).  For an
// invariant the result has a single entry; for a covariant of x-degree b
// the entries are the x1^{b-t} x2^t coefficients, t = 0..b.
std::vector<MultiPoly> apply_covariant_formal(const MultiPoly& poly, const BinaryFormSpec& spec,
                                              const std::vector<std::vector<MultiPoly>>& components);
std::vector<MultiPoly> apply_covariant_formal(const InvariantSpec& inv,
                                              const std::vector<std::vector<MultiPoly>>& components);
std::vector<MultiPoly> apply_covariant_formal(const CovariantSpec& cov,
                                              const std::vector<std::vector<MultiPoly>>& components);

}  // namespace qmf
