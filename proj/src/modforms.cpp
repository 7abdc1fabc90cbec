#include "qmf/modforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qmf/errors.hpp"

namespace qmf {

Rational bernoulli(unsigned k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("bernoulli: k must be even and >= 2");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};  // B_0
    std::lock_guard<std::mutex> lock(mu);
    // sum_{j=0}^{m} binom(m+1, j) B_j = 0  for m >= 1
    for (unsigned m = static_cast<unsigned>(cache.size()); m <= k; ++m) {
        Rational s(0);
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(static_cast<long>(m) + 1, j)) * cache[j];
        cache.push_back(-s / Rational(static_cast<long>(m) + 1));
    }
    return cache[k];
}

Integer sigma(unsigned k, unsigned long n) {
    if (n < 1) throw std::invalid_argument("sigma: n must be >= 1");
    Integer out(0);
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Integer p(static_cast<long>(d));
        Integer q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), k);
        out += q;
    }
    return out;
}

EllipticForm eisenstein(unsigned k, unsigned prec) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein: k must be even and >= 2");
    Rational c = Rational(-2 * static_cast<long>(k)) / bernoulli(k);
    QSeries s(prec);
    s.set_coeff(0, CoeffK(Rational(1)));
    for (unsigned n = 1; n <= prec; ++n)
        s.set_coeff(n, CoeffK(c * Rational(sigma(k - 1, n))));
    return EllipticForm{"e" + std::to_string(k), static_cast<int>(k), k == 2, "trivial", s};
}

EllipticForm delta_form(unsigned prec) {
    QSeries e4 = eisenstein(4, prec).series;
    QSeries e6 = eisenstein(6, prec).series;
    QSeries d = (e4.pow(3) - e6.pow(2)).scaled(CoeffK(Rational(1, 1728)));
    return EllipticForm{"delta", 12, false, "trivial", d};
}

std::optional<EllipticForm> form_by_name(const std::string& name, unsigned prec) {
    if (name == "delta" || name == "Delta") return delta_form(prec);
    if (name.size() >= 2 && name[0] == 'e') {
        try {
            unsigned long k = std::stoul(name.substr(1));
            if (k >= 2 && k % 2 == 0 && std::to_string(k) == name.substr(1))
                return eisenstein(static_cast<unsigned>(k), prec);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

std::string BasisMonomial::str() const {
    std::string out;
    auto app = [&out](const char* g, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += g;
        if (e > 1) out += "^" + std::to_string(e);
    };
    app("e2", a2);
    app("e4", a4);
    app("e6", a6);
    return out.empty() ? "1" : out;
}

std::vector<std::pair<BasisMonomial, QSeries>> basis(unsigned w, bool quasimodular, unsigned prec) {
    if (w % 2 != 0) throw std::invalid_argument("basis: weight must be even");
    QSeries e2 = eisenstein(2, prec).series;
    QSeries e4 = eisenstein(4, prec).series;
    QSeries e6 = eisenstein(6, prec).series;
    std::vector<std::pair<BasisMonomial, QSeries>> out;
    // enumerate a2 descending, then a4 descending: stable, readable ordering
    for (unsigned a2 = quasimodular ? w / 2 : 0;; --a2) {
        unsigned rest2 = w - 2 * a2;
        for (unsigned a4 = rest2 / 4;; --a4) {
            unsigned rest4 = rest2 - 4 * a4;
            if (rest4 % 6 == 0) {
                BasisMonomial m{a2, a4, rest4 / 6};
                out.emplace_back(m, e2.pow(m.a2) * e4.pow(m.a4) * e6.pow(m.a6));
            }
            if (a4 == 0) break;
        }
        if (a2 == 0) break;
    }
    return out;
}

unsigned modular_dimension(unsigned w) {
    if (w % 2 != 0) return 0;
    return w % 12 == 2 ? w / 12 : w / 12 + 1;
}

MembershipCertificate membership(const QSeries& s, int w, bool quasimodular) {
    return membership_rational(s.rational_coeffs(), w, quasimodular);
}

MembershipCertificate membership_rational(const std::vector<Rational>& coeffs, int w,
                                          bool quasimodular) {
    if (w < 0 || w % 2 != 0) {
        // these spaces are zero; only the zero series belongs
        for (const auto& c : coeffs)
            if (!c.is_zero())
                throw not_in_space("membership: no forms of weight " + std::to_string(w));
        return MembershipCertificate{w, quasimodular, {}, static_cast<unsigned>(coeffs.size())};
    }
    unsigned prec = static_cast<unsigned>(coeffs.size()) - 1;
    auto bas = basis(static_cast<unsigned>(w), quasimodular, prec);
    size_t d = bas.size();
    if (prec < d + 10)
        throw insufficient_precision("membership: need precision >= " + std::to_string(d + 10) +
                                     " for weight " + std::to_string(w) + ", have " +
                                     std::to_string(prec));
    if (d == 0) {
        // the zero space: only the zero series belongs
        for (const auto& c : coeffs)
            if (!c.is_zero())
                throw not_in_space("membership: space of weight " + std::to_string(w) + " is zero");
        return MembershipCertificate{w, quasimodular, {}, prec + 1};
    }
    // Row-reduce the full-height augmented system [A | s].
    size_t rows = coeffs.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(d + 1));
    for (size_t n = 0; n < rows; ++n) {
        for (size_t j = 0; j < d; ++j)
            m[n][j] = bas[j].second.coeff(static_cast<unsigned>(n)).as_rational();
        m[n][d] = coeffs[n];
    }
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < d && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = m[rank][col].inverse();
        for (size_t j = col; j <= d; ++j) m[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t j = col; j <= d; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (!m[r][d].is_zero())
            throw not_in_space("membership: series is not in the weight-" + std::to_string(w) +
                               (quasimodular ? " quasimodular" : " modular") + " space");
    if (rank < d)
        throw insufficient_precision("membership: basis not independent through precision " +
                                     std::to_string(prec));
    MembershipCertificate cert;
    cert.weight = w;
    cert.quasimodular = quasimodular;
    cert.surplus_verified = static_cast<unsigned>(rows - d);
    for (size_t r = 0; r < rank; ++r)
        if (!m[r][d].is_zero()) cert.coords.emplace_back(bas[pivot_col[r]].first, m[r][d]);
    return cert;
}

namespace {

using GenPoly = std::map<std::tuple<unsigned, unsigned, unsigned>, Rational>;

GenPoly to_poly(const MembershipCertificate& cert) {
    GenPoly p;
    for (const auto& [m, c] : cert.coords) p[{m.a2, m.a4, m.a6}] = c;
    return p;
}

void add_term(GenPoly& p, std::tuple<unsigned, unsigned, unsigned> key, const Rational& c) {
    auto it = p.find(key);
    if (it == p.end()) {
        if (!c.is_zero()) p.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// Divide by (e4^3 - e6^2)/1728, exactly; nullopt when not divisible.
std::optional<GenPoly> divide_by_delta(const GenPoly& p) {
    GenPoly rem = p, quot;
    while (!rem.empty()) {
        // leading term in e6-degree
        auto lead = rem.begin();
        for (auto it = rem.begin(); it != rem.end(); ++it)
            if (std::get<2>(it->first) > std::get<2>(lead->first)) lead = it;
        auto [a2, a4, a6] = lead->first;
        if (a6 < 2) return std::nullopt;  // e6-degree too small to cancel -e6^2/1728
        Rational q = lead->second * Rational(-1728);
        add_term(quot, {a2, a4, a6 - 2}, q);
        // rem -= q * (e4^3 - e6^2)/1728 * e2^a2 e4^a4 e6^{a6-2}
        add_term(rem, {a2, a4 + 3, a6 - 2}, -q * Rational(1, 1728));
        add_term(rem, {a2, a4, a6}, q * Rational(1, 1728));
    }
    return quot;
}

std::string monomial_str(unsigned a2, unsigned a4, unsigned a6) {
    std::string out;
    auto app = [&out](const char* g, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += g;
        if (e > 1) out += "^" + std::to_string(e);
    };
    app("e2", a2);
    app("e4", a4);
    app("e6", a6);
    return out;
}

// Display order: descending lexicographic in (a2, a4, a6).
std::vector<std::pair<std::tuple<unsigned, unsigned, unsigned>, Rational>> display_terms(
    const GenPoly& p) {
    std::vector<std::pair<std::tuple<unsigned, unsigned, unsigned>, Rational>> terms(p.begin(),
                                                                                     p.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return terms;
}

std::string poly_str(const GenPoly& p) {
    std::string out;
    for (const auto& [key, c] : display_terms(p)) {
        auto [a2, a4, a6] = key;
        std::string mono = monomial_str(a2, a4, a6);
        Rational mag = abs(c);
        std::string cs = (mag.is_one() && !mono.empty()) ? "" : mag.str();
        std::string term = cs + (cs.empty() || mono.empty() ? "" : "*") + mono;
        if (term.empty()) term = "1";
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

namespace {

std::string render_factored(GenPoly p, const std::vector<std::string>& unit_pieces) {
    unsigned delta_power = 0;
    while (true) {
        auto q = divide_by_delta(p);
        if (!q) break;
        p = *q;
        ++delta_power;
    }
    auto terms = display_terms(p);
    Rational content(0);
    for (const auto& [key, c] : terms) content = gcd(content, c);
    if (terms.front().second.sign() < 0) content = -content;
    for (auto& [key, c] : p) c /= content;

    std::vector<std::string> pieces;
    bool trivial_poly = p.size() == 1 && p.begin()->first == std::make_tuple(0u, 0u, 0u);
    bool unitless = unit_pieces.empty() && delta_power == 0;
    if (!content.is_one() || (trivial_poly && unitless)) pieces.push_back(content.str());
    for (const auto& u : unit_pieces) pieces.push_back(u);
    std::string mono_or_poly;
    if (!trivial_poly) {
        if (p.size() == 1) {
            auto [a2, a4, a6] = p.begin()->first;
            mono_or_poly = monomial_str(a2, a4, a6);
        } else {
            mono_or_poly = "(" + poly_str(p) + ")";
        }
    }
    // single monomials read better before the Delta power; sums after it
    bool poly_first = p.size() == 1 && !mono_or_poly.empty();
    if (poly_first) pieces.push_back(mono_or_poly);
    if (delta_power > 0)
        pieces.push_back(delta_power == 1 ? "Delta" : "Delta^" + std::to_string(delta_power));
    if (!poly_first && !mono_or_poly.empty()) pieces.push_back(mono_or_poly);

    std::string out;
    for (const auto& piece : pieces) {
        if (!out.empty()) out += " * ";
        out += piece;
    }
    return out;
}

}  // namespace

std::string identification_string(const MembershipCertificate& cert, bool factor_delta) {
    GenPoly p = to_poly(cert);
    if (p.empty()) return "0";
    if (!factor_delta) return poly_str(p);
    return render_factored(std::move(p), {});
}

std::string identification_string_with_unit(const MembershipCertificate& cert, int i_exp,
                                            unsigned pi_exp) {
    GenPoly p = to_poly(cert);
    if (p.empty()) return "0";
    std::vector<std::string> unit;
    if (i_exp % 2 != 0) unit.emplace_back("i");
    if (pi_exp > 0) unit.push_back(pi_exp == 1 ? "pi" : "pi^" + std::to_string(pi_exp));
    return render_factored(std::move(p), unit);
}

}  // namespace qmf
