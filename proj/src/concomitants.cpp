#include "qmf/concomitants.hpp"

#include <map>
#include <stdexcept>

#include "qmf/errors.hpp"

namespace qmf {

std::string GLWeight::str() const {
    std::string out = "(";
    for (size_t i = 0; i < weight.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(weight[i]);
    }
    out += ")";
    if (character != "trivial") out += " character " + character;
    return out;
}

namespace {

// sum of d_i * (k_i + j_i/2) as an exact rational
Rational half_weight_sum(const std::vector<Siegel2Slot>& slots) {
    Rational sum(0);
    for (const auto& s : slots)
        sum += Rational(static_cast<long>(s.degree)) * (Rational(s.k) + Rational(s.j, 2));
    return sum;
}

long require_integral(const Rational& r, const char* what) {
    if (!r.is_integer()) throw non_integral_weight(std::string(what) + ": weight " + r.str() +
                                                   " is not integral");
    return r.num().get_si();
}

std::string character_product(const std::vector<Siegel2Slot>& slots) {
    std::map<std::string, unsigned> powers;
    for (const auto& s : slots) {
        if (s.character == "trivial" || s.degree == 0) continue;
        powers[s.character] += s.degree;
    }
    std::string out;
    for (const auto& [chi, e] : powers) {
        if (!out.empty()) out += "*";
        out += chi;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "trivial" : out;
}

}  // namespace

GLWeight siegel2_invariant_weight(const std::vector<Siegel2Slot>& slots) {
    long k = require_integral(half_weight_sum(slots), "siegel2_invariant_weight");
    return GLWeight{2, {0, k}, character_product(slots)};
}

GLWeight siegel2_covariant_weight(long j, long k, unsigned a, unsigned b) {
    Rational w = Rational(static_cast<long>(a)) * (Rational(k) + Rational(j, 2)) -
                 Rational(static_cast<long>(b), 2);
    long kk = require_integral(w, "siegel2_covariant_weight");
    return GLWeight{2, {static_cast<long>(b), kk}, "trivial"};
}

GLWeight siegel2_multicovariant_weight(const std::vector<Siegel2Slot>& slots, unsigned b) {
    Rational w = half_weight_sum(slots) - Rational(static_cast<long>(b), 2);
    long kk = require_integral(w, "siegel2_multicovariant_weight");
    return GLWeight{2, {static_cast<long>(b), kk}, character_product(slots)};
}

long embedding_exponent(long j, long k, unsigned a, unsigned b) {
    long two_l = static_cast<long>(a) * j + 2 * static_cast<long>(a) * k - static_cast<long>(b);
    if (two_l % 2 != 0)
        throw non_integral_weight("embedding_exponent: a*j + 2*a*k - b is odd");
    if (two_l < 0)
        throw non_integral_weight("embedding_exponent: a*j + 2*a*k - b is negative");
    return two_l / 2;
}

EllipticWeightInfo elliptic_character_weight(long k, unsigned d, unsigned n) {
    EllipticWeightInfo out;
    out.stated = k * static_cast<long>(d) + static_cast<long>(n);
    out.validated = k * static_cast<long>(d) + 2L * static_cast<long>(n);
    if (d == 0)
        out.character = "trivial";
    else if (d == 1)
        out.character = "chi";
    else
        out.character = "chi^" + std::to_string(d);
    return out;
}

GLWeight picard_weight(long k, unsigned d1, unsigned d2, unsigned n) {
    long w = static_cast<long>(d1) * k + static_cast<long>(d2) * (k + 1) + static_cast<long>(n);
    // the source statement carries no character bookkeeping; left empty on purpose
    return GLWeight{2, {0, w}, "trivial"};
}

long symmetric_discriminant_weight(unsigned g, long k) {
    if (g < 1) throw std::invalid_argument("symmetric_discriminant_weight: g must be >= 1");
    return static_cast<long>(g) * k + 2;
}

std::vector<MultiPoly> apply_covariant_formal(const MultiPoly& poly, const BinaryFormSpec& spec,
                                              const std::vector<std::vector<MultiPoly>>& components) {
    if (components.size() != spec.slots())
        throw shape_mismatch("apply_covariant_formal: expected " + std::to_string(spec.slots()) +
                             " component vectors");
    size_t target_nv = 0;
    bool have = false;
    for (size_t j = 0; j < spec.slots(); ++j) {
        if (components[j].size() != spec.degrees[j] + 1)
            throw shape_mismatch("apply_covariant_formal: slot " + std::to_string(j) + " needs " +
                                 std::to_string(spec.degrees[j] + 1) + " components");
        for (const auto& c : components[j]) {
            if (!have) {
                target_nv = c.nvars();
                have = true;
            } else if (c.nvars() != target_nv) {
                throw shape_mismatch("apply_covariant_formal: component variable spaces differ");
            }
        }
    }
    // Work in the target space extended by fresh x1, x2 so covariants can be
    // expanded; the x-coefficients are then read off.
    size_t ext_nv = target_nv + 2;
    auto widen = [&](const MultiPoly& p) {
        MultiPoly out(ext_nv);
        for (const auto& [e, c] : p.terms()) {
            ExpVec w(ext_nv, 0);
            for (size_t i = 0; i < p.nvars(); ++i) w[i] = e[i];
            out.add_term(w, c);
        }
        return out;
    };
    std::vector<MultiPoly> images;
    for (size_t j = 0; j < spec.slots(); ++j)
        for (unsigned i = 0; i <= spec.degrees[j]; ++i) images.push_back(widen(components[j][i]));
    images.push_back(MultiPoly::variable(ext_nv, target_nv));      // x1
    images.push_back(MultiPoly::variable(ext_nv, target_nv + 1));  // x2
    MultiPoly value = poly.compose(images);

    long b = std::max(value.degree_in(target_nv), value.degree_in(target_nv + 1));
    auto xdeg = value.homogeneous_degree({target_nv, target_nv + 1});
    unsigned xb = value.is_zero() ? 0 : static_cast<unsigned>(xdeg.value_or(b));
    std::vector<MultiPoly> out(xb + 1, MultiPoly(target_nv));
    for (const auto& [e, c] : value.terms()) {
        unsigned t = e[target_nv + 1];  // x2 exponent
        ExpVec shrunk(target_nv);
        for (size_t i = 0; i < target_nv; ++i) shrunk[i] = e[i];
        out[t].add_term(shrunk, c);
    }
    return out;
}

std::vector<MultiPoly> apply_covariant_formal(const InvariantSpec& inv,
                                              const std::vector<std::vector<MultiPoly>>& components) {
    return apply_covariant_formal(inv.poly, inv.spec, components);
}

std::vector<MultiPoly> apply_covariant_formal(const CovariantSpec& cov,
                                              const std::vector<std::vector<MultiPoly>>& components) {
    auto out = apply_covariant_formal(cov.poly, cov.spec, components);
    out.resize(cov.x_degree + 1, MultiPoly(out.empty() ? 0 : out.front().nvars()));
    return out;
}

}  // namespace qmf
