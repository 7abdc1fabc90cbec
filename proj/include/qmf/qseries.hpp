#pragma once

#include <vector>

#include "qmf/coeffk.hpp"

namespace qmf {

class QSeries;

// A series known to be i^i_exp * pi^pi_exp * body with body purely rational.
// Canonical: i_exp in {0,1}, signs absorbed into the body, first nonzero
// body coefficient real.
struct UnitScaledSeries {
    int i_exp = 0;
    unsigned pi_exp = 0;
    std::vector<Rational> body;

    QSeries recombine() const;
    std::string unit_str() const;  // "1", "pi^6", "i*pi^3"
};

// Truncated q-expansion over K: coefficients c_0..c_prec, known modulo
// q^{prec+1}.  Arithmetic truncates to the smaller operand precision.
class QSeries {
  public:
    explicit QSeries(unsigned prec = 0) : c_(prec + 1) {}
    explicit QSeries(std::vector<CoeffK> coeffs);
    static QSeries constant(CoeffK value, unsigned prec);
    static QSeries from_rational(const std::vector<Rational>& coeffs);

    unsigned prec() const { return static_cast<unsigned>(c_.size()) - 1; }
    const CoeffK& coeff(unsigned n) const { return c_.at(n); }
    void set_coeff(unsigned n, CoeffK v) { c_.at(n) = std::move(v); }
    const std::vector<CoeffK>& coeffs() const { return c_; }

    bool is_zero() const;
    QSeries truncated(unsigned new_prec) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    QSeries scaled(const CoeffK& c) const;
    QSeries pow(unsigned e) const;

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // D = q d/dq: c_n -> n*c_n.
    QSeries ddq() const;
    // d/dtau = 2*pi*i * D, exact in K.
    QSeries dtau() const;
    QSeries dtau_iter(unsigned n) const;

    // Requires every coefficient rational; throws mixed_units otherwise.
    std::vector<Rational> rational_coeffs() const;

    // Factor out the common unit i^s * pi^t; throws mixed_units when the
    // coefficients are not rational multiples of a single such monomial,
    // std::invalid_argument on the zero series.
    UnitScaledSeries extract_unit() const;

    // "1 + 240q + 2160q^2 + O(q^3)"; non-rational coefficients are
    // parenthesized: "(-64*pi^6)q^2".
    std::string str() const;

  private:
    std::vector<CoeffK> c_;
};

}  // namespace qmf
