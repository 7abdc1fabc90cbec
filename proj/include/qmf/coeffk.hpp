#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qmf/gaussian.hpp"

namespace qmf {

// Element of the coefficient ring K = Q(i)[pi]: a finite sum of terms
// c * pi^t with c a Gaussian rational.  No zero terms are stored; pi is
// treated as transcendental, so equality is term-map equality.
class CoeffK {
  public:
    CoeffK() = default;
    CoeffK(Rational c) { set_term(0, GaussianRational(std::move(c))); }    // NOLINT
    CoeffK(long c) : CoeffK(Rational(c)) {}                                // NOLINT
    CoeffK(GaussianRational c) { set_term(0, std::move(c)); }              // NOLINT

    static CoeffK monomial(GaussianRational c, unsigned pi_exp);
    // (2*pi*i)^p as an exact element of K.
    static CoeffK two_pi_i_pow(unsigned p);

    bool is_zero() const { return terms_.empty(); }
    // True when the value lies in Q (pi-degree 0, no imaginary part).
    bool is_rational() const;
    Rational as_rational() const;  // throws division_not_exact-style domain_error if not rational

    const std::map<unsigned, GaussianRational>& terms() const { return terms_; }
    // The unique term when the value is c*pi^t; nullopt for 0 or multi-term sums.
    std::optional<std::pair<unsigned, GaussianRational>> single_term() const;

    friend CoeffK operator+(const CoeffK& a, const CoeffK& b);
    friend CoeffK operator-(const CoeffK& a, const CoeffK& b);
    friend CoeffK operator*(const CoeffK& a, const CoeffK& b);
    CoeffK operator-() const;

    CoeffK& operator+=(const CoeffK& b) { return *this = *this + b; }
    CoeffK& operator-=(const CoeffK& b) { return *this = *this - b; }
    CoeffK& operator*=(const CoeffK& b) { return *this = *this * b; }

    friend bool operator==(const CoeffK& a, const CoeffK& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CoeffK& a, const CoeffK& b) { return !(a == b); }

    CoeffK pow(unsigned e) const;

    // Exact quotient by c*pi^t: requires c != 0 and every stored term to have
    // pi-exponent >= t.  Throws division_not_exact otherwise.
    CoeffK div_monomial(const GaussianRational& c, unsigned t) const;

    // "0", "-64*pi^6", "3/2", "(5+2*i)*pi^3", "2*i*pi^3 + 5*pi^3" stays collected
    // by construction so each pi power appears once.
    std::string str() const;
    static CoeffK parse(std::string_view text);

  private:
    void set_term(unsigned e, GaussianRational c) {
        if (!c.is_zero()) terms_[e] = std::move(c);
    }
    std::map<unsigned, GaussianRational> terms_;
};

}  // namespace qmf
