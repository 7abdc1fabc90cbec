#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmf/multipoly.hpp"

namespace qmf {

enum class Convention : uint8_t {
    Binomial,  // F = sum a_i * binom(r,i) * x1^{r-i} x2^i
    Plain,     // F = sum a_i * x1^{r-i} x2^i
};

// Variable layout for a tuple of generic binary forms: slot j of degree r_j
// contributes coefficient variables (in index order), then x1, x2 last.
// Slot letters run a, b, c, ...
struct BinaryFormSpec {
    std::vector<unsigned> degrees;
    std::vector<Convention> conventions;

    BinaryFormSpec(std::vector<unsigned> degs, std::vector<Convention> convs);

    size_t slots() const { return degrees.size(); }
    size_t nvars() const;
    size_t var_index(size_t slot, unsigned i) const;
    size_t x1_index() const { return nvars() - 2; }
    size_t x2_index() const { return nvars() - 1; }
    std::vector<std::string> names() const;

    friend bool operator==(const BinaryFormSpec&, const BinaryFormSpec&) = default;
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

Rational det(const Matrix2& g);

// The generic form of the given slot in its convention, as a polynomial in
// the slot's coefficient variables and x1, x2.
MultiPoly form_poly(const BinaryFormSpec& spec, size_t slot);

// (F,G)_r = ((m-r)!(n-r)!/(m! n!)) * sum_j (-1)^j binom(r,j)
//           d^r F/dx1^{r-j} dx2^j * d^r G/dx1^j dx2^{r-j}.
// F, G must be homogeneous in (x1,x2) of degrees m, n; throws degree_mismatch.
MultiPoly transvectant(const BinaryFormSpec& spec, const MultiPoly& f, const MultiPoly& g,
                       unsigned r, unsigned m, unsigned n);

// Substitutes x -> g*x into each generic form, re-expands in the slot's
// convention, and substitutes the induced linear coefficient maps into p.
// Throws singular_matrix when det(g) = 0.
MultiPoly act(const BinaryFormSpec& spec, const Matrix2& g, const MultiPoly& p);

// Multihomogeneous isobaric polynomial in the coefficient variables of
// spec's forms (no x variables), with degree d_j per slot and order n:
// validated at construction (2n = sum d_j r_j).
struct InvariantSpec {
    MultiPoly poly;
    BinaryFormSpec spec;
    std::vector<unsigned> degrees;
    unsigned order = 0;
    std::string name;

    InvariantSpec(MultiPoly p, BinaryFormSpec s, std::vector<unsigned> degs, unsigned n,
                  std::string nm);
};

// Covariant of x-degree b; index lambda fixed by 2*lambda + b = sum a_j r_j.
struct CovariantSpec {
    MultiPoly poly;
    BinaryFormSpec spec;
    std::vector<unsigned> degrees;
    unsigned x_degree = 0;
    long index = 0;
    std::string name;

    CovariantSpec(MultiPoly p, BinaryFormSpec s, std::vector<unsigned> degs, unsigned b,
                  std::string nm);
};

// C(a; x1, x2) -> I(a; l1, l2) via x1 -> l2, x2 -> -l1, appending a PLAIN
// degree-1 slot for (l1, l2).
InvariantSpec covariant_to_invariant(const CovariantSpec& c);
// Inverse: requires the last slot to be a degree-1 form; substitutes
// l1 -> -x2, l2 -> x1.  Throws slot_shape_error otherwise.
CovariantSpec invariant_to_covariant(const InvariantSpec& inv);

// I * J over a common spec: degrees and orders add.
InvariantSpec product_invariant(const InvariantSpec& a, const InvariantSpec& b);

struct InvarianceReport {
    bool passed = true;
    unsigned trials = 0;
    std::string counterexample;  // rendered matrix on failure
};

// Checks act(g, I.poly) == det(g)^n * I.poly for seeded random rational g
// with entries of numerator/denominator up to 10 and det != 0.
InvarianceReport verify_invariance(const InvariantSpec& inv, unsigned trials, uint64_t seed);

// Catalog (names addressable from the CLI).
InvariantSpec catalog_i3();            // cubic, BINOMIAL, d=4, n=6
InvariantSpec catalog_disc2();         // quadratic, PLAIN, d=2, n=2
InvariantSpec catalog_j12();           // V4+V2, PLAIN, d=(1,2), n=4
InvariantSpec catalog_cubic_linear();  // V3+V1, BINOMIAL/PLAIN, d=(1,3), n=3
InvariantSpec catalog_tri321();        // V3+V2+V1, BINOMIAL x3, d=(1,1,1), n=3
InvariantSpec catalog_picard_bi();     // V1+V2, PLAIN/BINOMIAL, d=(2,1), n=2

std::vector<std::string> catalog_names();
std::optional<InvariantSpec> catalog_by_name(const std::string& name);

}  // namespace qmf
