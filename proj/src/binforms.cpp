#include "qmf/binforms.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "qmf/errors.hpp"

namespace qmf {

BinaryFormSpec::BinaryFormSpec(std::vector<unsigned> degs, std::vector<Convention> convs)
    : degrees(std::move(degs)), conventions(std::move(convs)) {
    if (degrees.size() != conventions.size())
        throw std::invalid_argument("BinaryFormSpec: degree/convention count mismatch");
    if (degrees.empty()) throw std::invalid_argument("BinaryFormSpec: no slots");
    if (degrees.size() > 26) throw std::invalid_argument("BinaryFormSpec: too many slots");
}

size_t BinaryFormSpec::nvars() const {
    size_t n = 2;
    for (unsigned r : degrees) n += r + 1;
    return n;
}

size_t BinaryFormSpec::var_index(size_t slot, unsigned i) const {
    if (slot >= degrees.size() || i > degrees[slot])
        throw std::out_of_range("BinaryFormSpec: bad coefficient variable");
    size_t idx = 0;
    for (size_t j = 0; j < slot; ++j) idx += degrees[j] + 1;
    return idx + i;
}

std::vector<std::string> BinaryFormSpec::names() const {
    std::vector<std::string> out;
    for (size_t j = 0; j < degrees.size(); ++j) {
        char letter = static_cast<char>('a' + j);
        for (unsigned i = 0; i <= degrees[j]; ++i)
            out.push_back(std::string(1, letter) + std::to_string(i));
    }
    out.emplace_back("x1");
    out.emplace_back("x2");
    return out;
}

Rational det(const Matrix2& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

namespace {

Rational slot_weight(const BinaryFormSpec& spec, size_t slot, unsigned i) {
    return spec.conventions[slot] == Convention::Binomial
               ? Rational(binomial(static_cast<long>(spec.degrees[slot]), i))
               : Rational(1);
}

}  // namespace

MultiPoly form_poly(const BinaryFormSpec& spec, size_t slot) {
    if (slot >= spec.slots()) throw std::out_of_range("form_poly: bad slot");
    size_t nv = spec.nvars();
    unsigned r = spec.degrees[slot];
    MultiPoly out(nv);
    for (unsigned i = 0; i <= r; ++i) {
        ExpVec e(nv, 0);
        e[spec.var_index(slot, i)] = 1;
        e[spec.x1_index()] = r - i;
        e[spec.x2_index()] = i;
        out.add_term(e, slot_weight(spec, slot, i));
    }
    return out;
}

MultiPoly transvectant(const BinaryFormSpec& spec, const MultiPoly& f, const MultiPoly& g,
                       unsigned r, unsigned m, unsigned n) {
    std::vector<size_t> xvars{spec.x1_index(), spec.x2_index()};
    auto fd = f.homogeneous_degree(xvars);
    auto gd = g.homogeneous_degree(xvars);
    if (!fd || (!f.is_zero() && *fd != static_cast<long>(m)))
        throw degree_mismatch("transvectant: F is not homogeneous of x-degree " + std::to_string(m));
    if (!gd || (!g.is_zero() && *gd != static_cast<long>(n)))
        throw degree_mismatch("transvectant: G is not homogeneous of x-degree " + std::to_string(n));
    if (r > std::min(m, n)) throw degree_mismatch("transvectant: r exceeds min(m, n)");

    size_t x1 = spec.x1_index(), x2 = spec.x2_index();
    auto dnm = [&](const MultiPoly& p, unsigned d1, unsigned d2) {
        MultiPoly out = p;
        for (unsigned t = 0; t < d1; ++t) out = out.derivative(x1);
        for (unsigned t = 0; t < d2; ++t) out = out.derivative(x2);
        return out;
    };
    MultiPoly sum(spec.nvars());
    for (unsigned j = 0; j <= r; ++j) {
        Rational c = Rational(binomial(static_cast<long>(r), j));
        if (j % 2 == 1) c = -c;
        sum = sum + (dnm(f, r - j, j) * dnm(g, j, r - j)).scaled(c);
    }
    Rational pref = Rational(Integer(factorial(m - r) * factorial(n - r))) /
                    Rational(Integer(factorial(m) * factorial(n)));
    return sum.scaled(pref);
}

MultiPoly act(const BinaryFormSpec& spec, const Matrix2& g, const MultiPoly& p) {
    if (det(g).is_zero()) throw singular_matrix("act: matrix is singular");
    size_t nv = spec.nvars();
    // images[v] = linear expression replacing variable v
    std::vector<MultiPoly> images;
    images.reserve(nv);
    for (size_t v = 0; v < nv; ++v) images.push_back(MultiPoly::variable(nv, v));

    for (size_t slot = 0; slot < spec.slots(); ++slot) {
        unsigned r = spec.degrees[slot];
        // (g11 x1 + g12 x2)^{r-i} (g21 x1 + g22 x2)^i expanded: contribution of
        // a_i to the new coefficient of x1^{r-m} x2^m.
        // new_a_m = sum_i a_i * w_i * [x1^{r-m} x2^m](...) / w_m
        std::vector<std::vector<Rational>> mat(r + 1, std::vector<Rational>(r + 1, Rational(0)));
        for (unsigned i = 0; i <= r; ++i) {
            // expand (g11 x1 + g12 x2)^{r-i} * (g21 x1 + g22 x2)^i
            std::vector<Rational> row(r + 1, Rational(0));  // index = x2-degree
            for (unsigned s = 0; s <= r - i; ++s)
                for (unsigned t = 0; t <= i; ++t) {
                    Rational c = Rational(binomial(static_cast<long>(r - i), s)) *
                                 g[0][0].pow(r - i - s) * g[0][1].pow(s) *
                                 Rational(binomial(static_cast<long>(i), t)) * g[1][0].pow(i - t) *
                                 g[1][1].pow(t);
                    row[s + t] += c;
                }
            for (unsigned m = 0; m <= r; ++m)
                mat[m][i] = row[m] * slot_weight(spec, slot, i) / slot_weight(spec, slot, m);
        }
        for (unsigned m = 0; m <= r; ++m) {
            MultiPoly lin(nv);
            for (unsigned i = 0; i <= r; ++i) {
                if (mat[m][i].is_zero()) continue;
                ExpVec e(nv, 0);
                e[spec.var_index(slot, i)] = 1;
                lin.add_term(e, mat[m][i]);
            }
            images[spec.var_index(slot, m)] = lin;
        }
    }
    return p.compose(images);
}

namespace {

void validate_invariant_shape(const MultiPoly& poly, const BinaryFormSpec& spec,
                              const std::vector<unsigned>& degrees, unsigned order,
                              const std::string& name) {
    if (degrees.size() != spec.slots())
        throw std::invalid_argument(name + ": degree list does not match slot count");
    if (poly.nvars() != spec.nvars())
        throw std::invalid_argument(name + ": polynomial variable count mismatch");
    long dr = 0;
    for (size_t j = 0; j < spec.slots(); ++j)
        dr += static_cast<long>(degrees[j]) * static_cast<long>(spec.degrees[j]);
    if (2L * static_cast<long>(order) != dr)
        throw std::invalid_argument(name + ": 2n != sum d_j r_j");
    if (poly.is_zero()) return;
    if (poly.degree_in(spec.x1_index()) > 0 || poly.degree_in(spec.x2_index()) > 0)
        throw std::invalid_argument(name + ": invariant contains x variables");
    // multihomogeneous of degree d_j per slot
    for (size_t j = 0; j < spec.slots(); ++j) {
        std::vector<size_t> vars;
        for (unsigned i = 0; i <= spec.degrees[j]; ++i) vars.push_back(spec.var_index(j, i));
        auto deg = poly.homogeneous_degree(vars);
        if (!deg || *deg != static_cast<long>(degrees[j]))
            throw std::invalid_argument(name + ": not multihomogeneous of the stated degrees");
    }
    // isobaric: weighted exponent sum (weight of a^{(j)}_i is i) equal to order
    std::vector<long> weights(spec.nvars(), 0);
    for (size_t j = 0; j < spec.slots(); ++j)
        for (unsigned i = 0; i <= spec.degrees[j]; ++i)
            weights[spec.var_index(j, i)] = static_cast<long>(i);
    auto w = poly.uniform_weight(weights);
    if (!w || *w != static_cast<long>(order))
        throw std::invalid_argument(name + ": not isobaric of the stated order");
}

}  // namespace

InvariantSpec::InvariantSpec(MultiPoly p, BinaryFormSpec s, std::vector<unsigned> degs, unsigned n,
                             std::string nm)
    : poly(std::move(p)), spec(std::move(s)), degrees(std::move(degs)), order(n),
      name(std::move(nm)) {
    validate_invariant_shape(poly, spec, degrees, order, name.empty() ? "invariant" : name);
}

CovariantSpec::CovariantSpec(MultiPoly p, BinaryFormSpec s, std::vector<unsigned> degs, unsigned b,
                             std::string nm)
    : poly(std::move(p)), spec(std::move(s)), degrees(std::move(degs)), x_degree(b),
      name(std::move(nm)) {
    long ar = 0;
    for (size_t j = 0; j < spec.slots(); ++j)
        ar += static_cast<long>(degrees[j]) * static_cast<long>(spec.degrees[j]);
    long two_lambda = ar - static_cast<long>(b);
    if (two_lambda < 0 || two_lambda % 2 != 0)
        throw std::invalid_argument("covariant: 2*lambda + b = sum a_j r_j not solvable");
    index = two_lambda / 2;
    if (!poly.is_zero()) {
        auto xd = poly.homogeneous_degree({spec.x1_index(), spec.x2_index()});
        if (!xd || *xd != static_cast<long>(b))
            throw std::invalid_argument("covariant: not homogeneous of the stated x-degree");
        // full validation through the associated invariant
        covariant_to_invariant(*this);
    }
}

InvariantSpec covariant_to_invariant(const CovariantSpec& c) {
    std::vector<unsigned> degs = c.spec.degrees;
    std::vector<Convention> convs = c.spec.conventions;
    degs.push_back(1);
    convs.push_back(Convention::Plain);
    BinaryFormSpec target(degs, convs);
    size_t nv_t = target.nvars();
    size_t slots = c.spec.slots();
    // old variable v -> image in the target space; x1 -> l2, x2 -> -l1
    std::vector<MultiPoly> images;
    for (size_t j = 0; j < slots; ++j)
        for (unsigned i = 0; i <= c.spec.degrees[j]; ++i)
            images.push_back(MultiPoly::variable(nv_t, target.var_index(j, i)));
    images.push_back(MultiPoly::variable(nv_t, target.var_index(slots, 1)));            // x1 -> l2
    images.push_back(MultiPoly::variable(nv_t, target.var_index(slots, 0)).scaled(-1)); // x2 -> -l1
    std::vector<unsigned> inv_degs = c.degrees;
    inv_degs.push_back(c.x_degree);
    unsigned n = static_cast<unsigned>(c.index + c.x_degree);
    return InvariantSpec(c.poly.compose(images), target, inv_degs, n,
                         c.name.empty() ? "" : c.name + "_inv");
}

CovariantSpec invariant_to_covariant(const InvariantSpec& inv) {
    size_t slots = inv.spec.slots();
    if (slots < 2 || inv.spec.degrees.back() != 1)
        throw slot_shape_error("invariant_to_covariant: last slot must be a linear form");
    std::vector<unsigned> degs(inv.spec.degrees.begin(), inv.spec.degrees.end() - 1);
    std::vector<Convention> convs(inv.spec.conventions.begin(), inv.spec.conventions.end() - 1);
    BinaryFormSpec target(degs, convs);
    size_t nv_t = target.nvars();
    std::vector<MultiPoly> images;
    for (size_t j = 0; j + 1 < slots; ++j)
        for (unsigned i = 0; i <= inv.spec.degrees[j]; ++i)
            images.push_back(MultiPoly::variable(nv_t, target.var_index(j, i)));
    images.push_back(MultiPoly::variable(nv_t, target.x2_index()).scaled(-1));  // l1 -> -x2
    images.push_back(MultiPoly::variable(nv_t, target.x1_index()));             // l2 -> x1
    images.push_back(MultiPoly::variable(nv_t, target.x1_index()));             // x1 (absent)
    images.push_back(MultiPoly::variable(nv_t, target.x2_index()));             // x2 (absent)
    std::vector<unsigned> cov_degs(inv.degrees.begin(), inv.degrees.end() - 1);
    unsigned b = inv.degrees.back();
    return CovariantSpec(inv.poly.compose(images), target, cov_degs, b,
                         inv.name.empty() ? "" : inv.name + "_cov");
}

InvariantSpec product_invariant(const InvariantSpec& a, const InvariantSpec& b) {
    if (!(a.spec == b.spec))
        throw std::invalid_argument("product_invariant: slot specs differ");
    std::vector<unsigned> degs(a.degrees.size());
    for (size_t j = 0; j < degs.size(); ++j) degs[j] = a.degrees[j] + b.degrees[j];
    return InvariantSpec(a.poly * b.poly, a.spec, degs, a.order + b.order,
                         a.name + "*" + b.name);
}

InvarianceReport verify_invariance(const InvariantSpec& inv, unsigned trials, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    InvarianceReport report;
    report.trials = trials;
    for (unsigned t = 0; t < trials; ++t) {
        Matrix2 g;
        do {
            for (auto& row : g)
                for (auto& x : row) x = Rational(num(rng), den(rng));
        } while (det(g).is_zero());
        MultiPoly lhs = act(inv.spec, g, inv.poly);
        MultiPoly rhs = inv.poly.scaled(det(g).pow(inv.order));
        if (lhs != rhs) {
            report.passed = false;
            report.counterexample = "g = [[" + g[0][0].str() + ", " + g[0][1].str() + "], [" +
                                    g[1][0].str() + ", " + g[1][1].str() + "]]";
            return report;
        }
    }
    return report;
}

namespace {

MultiPoly parse_over(const BinaryFormSpec& spec, const std::string& text) {
    return MultiPoly::parse(text, spec.names());
}

}  // namespace

InvariantSpec catalog_i3() {
    BinaryFormSpec spec({3}, {Convention::Binomial});
    MultiPoly p = parse_over(spec,
                             "a0^2*a3^2 - 6*a0*a1*a2*a3 + 4*a0*a2^3 + 4*a1^3*a3 - 3*a1^2*a2^2");
    return InvariantSpec(std::move(p), spec, {4}, 6, "I3");
}

InvariantSpec catalog_disc2() {
    BinaryFormSpec spec({2}, {Convention::Plain});
    return InvariantSpec(parse_over(spec, "a1^2 - 4*a0*a2"), spec, {2}, 2, "disc2");
}

InvariantSpec catalog_j12() {
    BinaryFormSpec spec({4, 2}, {Convention::Plain, Convention::Plain});
    MultiPoly p = parse_over(spec,
                             "6*a0*b2^2 - 3*a1*b1*b2 + 2*a2*b0*b2 + a2*b1^2 - 3*a3*b0*b1 + 6*a4*b0^2");
    return InvariantSpec(std::move(p), spec, {1, 2}, 4, "J12");
}

InvariantSpec catalog_cubic_linear() {
    BinaryFormSpec spec({3, 1}, {Convention::Binomial, Convention::Plain});
    MultiPoly p = parse_over(spec, "a0*b1^3 - 3*a1*b0*b1^2 + 3*a2*b0^2*b1 - a3*b0^3");
    return InvariantSpec(std::move(p), spec, {1, 3}, 3, "cubic_linear");
}

InvariantSpec catalog_tri321() {
    // Binomial on every slot: the unique convention (up to the degree-1 slot,
    // where both conventions coincide) under which this polynomial is
    // GL(2)-equivariant.
    BinaryFormSpec spec({3, 2, 1},
                        {Convention::Binomial, Convention::Binomial, Convention::Binomial});
    MultiPoly p = parse_over(spec,
                             "a0*b2*c1 - 2*a1*b1*c1 - a1*b2*c0 + a2*b0*c1 + 2*a2*b1*c0 - a3*b0*c0");
    return InvariantSpec(std::move(p), spec, {1, 1, 1}, 3, "tri321");
}

InvariantSpec catalog_picard_bi() {
    BinaryFormSpec spec({1, 2}, {Convention::Plain, Convention::Binomial});
    MultiPoly p = parse_over(spec, "a0^2*b2 - 2*a0*a1*b1 + a1^2*b0");
    return InvariantSpec(std::move(p), spec, {2, 1}, 2, "picard_bi");
}

std::vector<std::string> catalog_names() {
    return {"I3", "disc2", "J12", "cubic_linear", "tri321", "picard_bi"};
}

std::optional<InvariantSpec> catalog_by_name(const std::string& name) {
    if (name == "I3") return catalog_i3();
    if (name == "disc2") return catalog_disc2();
    if (name == "J12") return catalog_j12();
    if (name == "cubic_linear") return catalog_cubic_linear();
    if (name == "tri321") return catalog_tri321();
    if (name == "picard_bi") return catalog_picard_bi();
    return std::nullopt;
}

}  // namespace qmf
