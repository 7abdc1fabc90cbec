#include "qmf/multipoly.hpp"

#include <cctype>
#include <stdexcept>

namespace qmf {

MultiPoly MultiPoly::constant(size_t nvars, Rational c) {
    MultiPoly out(nvars);
    out.add_term(ExpVec(nvars, 0), c);
    return out;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t index) {
    if (index >= nvars) throw std::out_of_range("MultiPoly: variable index out of range");
    ExpVec e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(size_t nvars, ExpVec exps, Rational c) {
    if (exps.size() != nvars) throw std::invalid_argument("MultiPoly: exponent vector size mismatch");
    MultiPoly out(nvars);
    out.add_term(exps, c);
    return out;
}

void MultiPoly::add_term(const ExpVec& exps, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(a.nvars_);
            for (size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(nvars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

MultiPoly MultiPoly::derivative(size_t var) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        --d[var];
        out.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("MultiPoly: wrong number of images");
    size_t target = nvars_ == 0 ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw std::invalid_argument("MultiPoly: image space mismatch");
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly prod = MultiPoly::constant(target, c);
        for (size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) prod = prod * images[i].pow(e[i]);
        out = out + prod;
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("MultiPoly: wrong point dimension");
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= point[i].pow(e[i]);
        out += t;
    }
    return out;
}

long MultiPoly::degree_in(size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
    return d;
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::optional<long> MultiPoly::homogeneous_degree(const std::vector<size_t>& vars) const {
    std::optional<long> deg;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (size_t v : vars) t += e[v];
        if (!deg) deg = t;
        if (*deg != t) return std::nullopt;
    }
    return deg;
}

std::optional<long> MultiPoly::uniform_weight(const std::vector<long>& var_weights) const {
    if (var_weights.size() != nvars_)
        throw std::invalid_argument("MultiPoly: weight vector size mismatch");
    std::optional<long> w;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (size_t i = 0; i < nvars_; ++i) t += var_weights[i] * static_cast<long>(e[i]);
        if (!w) w = t;
        if (*w != t) return std::nullopt;
    }
    return w;
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) g = gcd(g, c);
    if (!terms_.empty() && terms_.begin()->second.sign() < 0) g = -g;
    return g;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw std::invalid_argument("MultiPoly: name list size mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational mag = abs(c);
        std::string cs = (mag.is_one() && !mono.empty()) ? "" : mag.str();
        std::string term = cs + (cs.empty() || mono.empty() ? "" : "*") + mono;
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& names;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Rational parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) throw std::invalid_argument("MultiPoly: expected number at " + std::to_string(pos));
        return Rational::parse(s.substr(start, pos - start));
    }

    std::optional<size_t> parse_name() {
        skip_ws();
        size_t best_len = 0;
        size_t best = 0;
        for (size_t i = 0; i < names.size(); ++i) {
            const std::string& n = names[i];
            if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
                best_len = n.size();
                best = i;
            }
        }
        if (best_len == 0) return std::nullopt;
        pos += best_len;
        return best;
    }

    // factor := number | name ['^' int]
    void parse_factor(ExpVec& exps, Rational& coeff) {
        skip_ws();
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            coeff *= parse_number();
            return;
        }
        auto v = parse_name();
        if (!v) throw std::invalid_argument("MultiPoly: unknown variable at position " + std::to_string(pos));
        unsigned e = 1;
        if (eat('^')) {
            Rational r = parse_number();
            if (!r.is_integer() || r.sign() < 0)
                throw std::invalid_argument("MultiPoly: bad exponent");
            e = static_cast<unsigned>(r.num().get_ui());
        }
        exps[*v] += e;
    }

    MultiPoly parse_poly() {
        MultiPoly out(names.size());
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                throw std::invalid_argument("MultiPoly: expected '+' or '-' at position " +
                                            std::to_string(pos));
            }
            first = false;
            ExpVec exps(names.size(), 0);
            Rational coeff(sign);
            parse_factor(exps, coeff);
            while (eat('*')) parse_factor(exps, coeff);
            out.add_term(exps, coeff);
        }
        return out;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, const std::vector<std::string>& names) {
    if (text == "0") return MultiPoly(names.size());
    Parser p{text, names};
    return p.parse_poly();
}

}  // namespace qmf
