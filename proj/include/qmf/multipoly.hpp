#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

using ExpVec = std::vector<uint32_t>;

// Graded lexicographic, higher degree first; map iteration = display order.
struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse exact multivariate polynomial over Q with a fixed variable count.
// Canonical: no stored zero coefficients; exponent vectors are total.
class MultiPoly {
  public:
    explicit MultiPoly(size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(size_t nvars, Rational c);
    static MultiPoly variable(size_t nvars, size_t index);
    static MultiPoly monomial(size_t nvars, ExpVec exps, Rational c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational, GrlexDesc>& terms() const { return terms_; }

    void add_term(const ExpVec& exps, const Rational& c);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(size_t var) const;

    // Simultaneous substitution var_i -> images[i]; images share one target
    // variable space.
    MultiPoly compose(const std::vector<MultiPoly>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    long degree_in(size_t var) const;  // -1 for the zero polynomial
    long total_degree() const;
    // Total degree over the index set when every monomial agrees; nullopt otherwise.
    std::optional<long> homogeneous_degree(const std::vector<size_t>& vars) const;
    // Weighted exponent sum (isobarity check); nullopt when monomials disagree.
    std::optional<long> uniform_weight(const std::vector<long>& var_weights) const;

    // gcd of coefficients, sign matching the leading (display-order) term.
    Rational content() const;

    // "a0^2*a3^2 - 6*a0*a1*a2*a3 + ..." with '*' and '^' explicit.
    std::string str(const std::vector<std::string>& names) const;
    static MultiPoly parse(const std::string& text, const std::vector<std::string>& names);

  private:
    size_t nvars_;
    std::map<ExpVec, Rational, GrlexDesc> terms_;
};

}  // namespace qmf
