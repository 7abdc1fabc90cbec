#include "qmf/coeffk.hpp"

#include <cctype>
#include <cstdlib>

#include "qmf/errors.hpp"

namespace qmf {

CoeffK CoeffK::monomial(GaussianRational c, unsigned pi_exp) {
    CoeffK out;
    out.set_term(pi_exp, std::move(c));
    return out;
}

CoeffK CoeffK::two_pi_i_pow(unsigned p) {
    return monomial(GaussianRational(Rational(2), Rational(0)).pow(p) *
                        GaussianRational::i().pow(p),
                    p);
}

bool CoeffK::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_real();
}

Rational CoeffK::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("CoeffK: value is not rational: " + str());
    return terms_.begin()->second.re();
}

std::optional<std::pair<unsigned, GaussianRational>> CoeffK::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

CoeffK operator+(const CoeffK& a, const CoeffK& b) {
    CoeffK out = a;
    for (const auto& [e, c] : b.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

CoeffK CoeffK::operator-() const {
    CoeffK out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

CoeffK operator-(const CoeffK& a, const CoeffK& b) { return a + (-b); }

CoeffK operator*(const CoeffK& a, const CoeffK& b) {
    CoeffK out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            GaussianRational c = ca * cb;
            if (c.is_zero()) continue;
            auto it = out.terms_.find(ea + eb);
            if (it == out.terms_.end()) {
                out.terms_.emplace(ea + eb, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

CoeffK CoeffK::pow(unsigned e) const {
    CoeffK out(Rational(1)), base(*this);
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

CoeffK CoeffK::div_monomial(const GaussianRational& c, unsigned t) const {
    if (c.is_zero()) throw std::domain_error("CoeffK: division by zero monomial");
    CoeffK out;
    for (const auto& [e, v] : terms_) {
        if (e < t)
            throw division_not_exact("CoeffK: term pi^" + std::to_string(e) +
                                     " not divisible by pi^" + std::to_string(t));
        out.set_term(e - t, v / c);
    }
    return out;
}

namespace {

std::string term_str(unsigned e, const GaussianRational& c) {
    std::string cs = c.str();
    bool composite = !c.is_real() && !c.re().is_zero();  // a+b*i needs parens
    if (e == 0) return cs;
    std::string pi = e == 1 ? "pi" : "pi^" + std::to_string(e);
    if (c == GaussianRational(1)) return pi;
    if (c == GaussianRational(-1)) return "-" + pi;
    if (composite) return "(" + cs + ")*" + pi;
    return cs + "*" + pi;
}

}  // namespace

std::string CoeffK::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string t = term_str(e, c);
        if (out.empty()) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

// "", "i", "-i", "3/2", "-2*i", "a+b*i", "a-b*i" (optionally parenthesized)
GaussianRational parse_gaussian(std::string_view f) {
    f = trimmed(f);
    if (!f.empty() && f.front() == '(' && f.back() == ')') f = trimmed(f.substr(1, f.size() - 2));
    if (f.empty()) return GaussianRational(Rational(1));
    if (f == "i") return GaussianRational::i();
    if (f == "-i") return -GaussianRational::i();
    if (f.back() != 'i') return GaussianRational(Rational::parse(std::string(f)));
    // imaginary tail: strip "i" and an optional '*'
    std::string_view body = f.substr(0, f.size() - 1);
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    // split off a real part at the last top-level sign (not the leading one)
    size_t split = std::string_view::npos;
    for (size_t j = 1; j < body.size(); ++j)
        if ((body[j] == '+' || body[j] == '-') && body[j - 1] != '/' && body[j - 1] != '*')
            split = j;
    Rational re(0);
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
        re = Rational::parse(std::string(trimmed(body.substr(0, split))));
        im_text = body.substr(split);
    }
    im_text = trimmed(im_text);
    Rational im(1);
    if (im_text.empty() || im_text == "+")
        im = Rational(1);
    else if (im_text == "-")
        im = Rational(-1);
    else
        im = Rational::parse(std::string(im_text));
    return GaussianRational(re, im);
}

// One term: [gaussian] ["*" ] ["pi" ["^t"]].
std::pair<unsigned, GaussianRational> parse_term(std::string_view s) {
    s = trimmed(s);
    if (s.empty()) throw std::invalid_argument("CoeffK: empty term");
    unsigned pi_exp = 0;
    size_t pi_pos = s.rfind("pi");
    if (pi_pos != std::string_view::npos) {
        std::string_view tail = s.substr(pi_pos + 2);
        bool tail_ok = tail.empty();
        if (!tail.empty() && tail.front() == '^') {
            tail_ok = tail.size() > 1;
            for (size_t j = 1; j < tail.size(); ++j)
                tail_ok = tail_ok && std::isdigit(static_cast<unsigned char>(tail[j]));
        }
        if (tail_ok) {
            pi_exp = tail.empty()
                         ? 1
                         : static_cast<unsigned>(std::strtoul(std::string(tail.substr(1)).c_str(),
                                                              nullptr, 10));
            std::string_view head = trimmed(s.substr(0, pi_pos));
            if (!head.empty() && head.back() == '*') head.remove_suffix(1);
            if (head.empty()) return {pi_exp, GaussianRational(Rational(1))};
            if (head == "-") return {pi_exp, GaussianRational(Rational(-1))};
            return {pi_exp, parse_gaussian(head)};
        }
    }
    return {0, parse_gaussian(s)};
}

}  // namespace

CoeffK CoeffK::parse(std::string_view text) {
    CoeffK out;
    std::string s(text);
    if (s == "0") return out;
    // split on top-level " + " / " - " (outside parens)
    size_t pos = 0;
    int sign = 1;
    int depth = 0;
    size_t start = 0;
    auto flush = [&](size_t end) {
        std::string_view piece(s.data() + start, end - start);
        auto [e, c] = parse_term(piece);
        out += monomial(sign < 0 ? -c : c, e);
    };
    for (pos = 0; pos < s.size(); ++pos) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        if (depth == 0 && pos + 2 < s.size() && s[pos] == ' ' &&
            (s[pos + 1] == '+' || s[pos + 1] == '-') && s[pos + 2] == ' ') {
            flush(pos);
            sign = s[pos + 1] == '-' ? -1 : 1;
            start = pos + 3;
            pos += 2;
        }
    }
    flush(s.size());
    return out;
}

}  // namespace qmf
