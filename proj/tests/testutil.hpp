#pragma once

#include <random>

#include "qmf/binforms.hpp"
#include "qmf/coeffk.hpp"
#include "qmf/qseries.hpp"

namespace qmf::testutil {

inline Rational random_rational(std::mt19937_64& rng, int max_num = 20, int max_den = 10) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline GaussianRational random_gaussian(std::mt19937_64& rng) {
    return GaussianRational(random_rational(rng), random_rational(rng));
}

inline CoeffK random_coeffk(std::mt19937_64& rng, unsigned max_pi = 3) {
    std::uniform_int_distribution<unsigned> nterms(0, 2);
    std::uniform_int_distribution<unsigned> piexp(0, max_pi);
    CoeffK out;
    unsigned n = nterms(rng);
    for (unsigned t = 0; t <= n; ++t) out += CoeffK::monomial(random_gaussian(rng), piexp(rng));
    return out;
}

inline QSeries random_series(std::mt19937_64& rng, unsigned prec, bool rational_only = false) {
    QSeries out(prec);
    for (unsigned n = 0; n <= prec; ++n)
        out.set_coeff(n, rational_only ? CoeffK(random_rational(rng)) : random_coeffk(rng));
    return out;
}

inline Matrix2 random_invertible(std::mt19937_64& rng) {
    Matrix2 g;
    do {
        for (auto& row : g)
            for (auto& x : row) x = random_rational(rng, 5, 4);
    } while (det(g).is_zero());
    return g;
}

inline Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) {
    Matrix2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

}  // namespace qmf::testutil
