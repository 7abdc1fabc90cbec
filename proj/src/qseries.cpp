#include "qmf/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmf/errors.hpp"

namespace qmf {

QSeries::QSeries(std::vector<CoeffK> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("QSeries: empty coefficient vector");
}

QSeries QSeries::constant(CoeffK value, unsigned prec) {
    QSeries out(prec);
    out.c_[0] = std::move(value);
    return out;
}

QSeries QSeries::from_rational(const std::vector<Rational>& coeffs) {
    std::vector<CoeffK> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(r);
    return QSeries(std::move(c));
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const CoeffK& x) { return x.is_zero(); });
}

QSeries QSeries::truncated(unsigned new_prec) const {
    if (new_prec >= prec()) return *this;
    return QSeries(std::vector<CoeffK>(c_.begin(), c_.begin() + new_prec + 1));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    unsigned p = std::min(a.prec(), b.prec());
    QSeries out(p);
    for (unsigned n = 0; n <= p; ++n) out.c_[n] = a.c_[n] + b.c_[n];
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    unsigned p = std::min(a.prec(), b.prec());
    QSeries out(p);
    for (unsigned n = 0; n <= p; ++n) out.c_[n] = a.c_[n] - b.c_[n];
    return out;
}

QSeries QSeries::operator-() const {
    QSeries out(prec());
    for (unsigned n = 0; n <= prec(); ++n) out.c_[n] = -c_[n];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    unsigned p = std::min(a.prec(), b.prec());
    QSeries out(p);
    for (unsigned i = 0; i <= p; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (unsigned j = 0; j + i <= p; ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

QSeries QSeries::scaled(const CoeffK& c) const {
    QSeries out(prec());
    for (unsigned n = 0; n <= prec(); ++n) out.c_[n] = c_[n] * c;
    return out;
}

QSeries QSeries::pow(unsigned e) const {
    QSeries out = constant(CoeffK(Rational(1)), prec());
    QSeries base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

QSeries QSeries::ddq() const {
    QSeries out(prec());
    for (unsigned n = 1; n <= prec(); ++n) out.c_[n] = c_[n] * CoeffK(Rational(static_cast<long>(n)));
    return out;
}

QSeries QSeries::dtau() const { return ddq().scaled(CoeffK::two_pi_i_pow(1)); }

QSeries QSeries::dtau_iter(unsigned n) const {
    QSeries out = *this;
    for (unsigned t = 0; t < n; ++t) out = out.dtau();
    return out;
}

std::vector<Rational> QSeries::rational_coeffs() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& x : c_) {
        if (!x.is_rational())
            throw mixed_units("QSeries: coefficient " + x.str() + " is not rational");
        out.push_back(x.as_rational());
    }
    return out;
}

UnitScaledSeries QSeries::extract_unit() const {
    if (is_zero()) throw std::invalid_argument("QSeries: cannot extract unit of zero series");
    // The common monomial: every nonzero coefficient must be q * i^s * pi^t
    // for one fixed (s mod 2, t) with q rational.
    int common_pi = -1;
    int i_exp = -1;  // 0: all real, 1: all imaginary
    for (const auto& x : c_) {
        if (x.is_zero()) continue;
        auto term = x.single_term();
        if (!term) throw mixed_units("QSeries: coefficient mixes pi powers: " + x.str());
        auto [e, g] = *term;
        if (common_pi < 0) common_pi = static_cast<int>(e);
        if (static_cast<int>(e) != common_pi)
            throw mixed_units("QSeries: coefficients mix pi^" + std::to_string(common_pi) +
                              " and pi^" + std::to_string(e));
        int this_i = g.is_real() ? 0 : (g.is_imaginary() ? 1 : -1);
        if (this_i < 0) throw mixed_units("QSeries: coefficient not purely real or imaginary: " + x.str());
        if (i_exp < 0) i_exp = this_i;
        if (this_i != i_exp) throw mixed_units("QSeries: coefficients mix real and imaginary parts");
    }
    UnitScaledSeries out;
    out.i_exp = i_exp;
    out.pi_exp = static_cast<unsigned>(common_pi);
    out.body.resize(c_.size());
    for (size_t n = 0; n < c_.size(); ++n) {
        if (c_[n].is_zero()) continue;
        auto g = c_[n].single_term()->second;
        out.body[n] = i_exp == 0 ? g.re() : g.im();
    }
    return out;
}

QSeries UnitScaledSeries::recombine() const {
    GaussianRational unit = GaussianRational::i().pow(static_cast<unsigned>(i_exp));
    QSeries out(static_cast<unsigned>(body.size()) - 1);
    for (size_t n = 0; n < body.size(); ++n) {
        if (body[n].is_zero()) continue;
        out.set_coeff(static_cast<unsigned>(n),
                      CoeffK::monomial(unit * GaussianRational(body[n]), pi_exp));
    }
    return out;
}

std::string UnitScaledSeries::unit_str() const {
    std::string s;
    if (i_exp == 1) s = "i";
    if (pi_exp > 0) {
        if (!s.empty()) s += "*";
        s += pi_exp == 1 ? "pi" : "pi^" + std::to_string(pi_exp);
    }
    return s.empty() ? "1" : s;
}

std::string QSeries::str() const {
    std::string out;
    for (unsigned n = 0; n <= prec(); ++n) {
        if (c_[n].is_zero()) continue;
        std::string cs;
        bool negative = false;
        if (c_[n].is_rational()) {
            Rational r = c_[n].as_rational();
            negative = r.sign() < 0;
            Rational mag = abs(r);
            cs = (n > 0 && mag.is_one()) ? "" : mag.str();
        } else {
            cs = "(" + c_[n].str() + ")";
        }
        std::string qs = n == 0 ? "" : (n == 1 ? "q" : "q^" + std::to_string(n));
        std::string term = cs + qs;
        if (term.empty()) term = "1";
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    if (out.empty()) out = "0";
    out += " + O(q^" + std::to_string(prec() + 1) + ")";
    return out;
}

}  // namespace qmf
