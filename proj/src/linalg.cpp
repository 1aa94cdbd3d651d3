#include "flatlab/linalg.hpp"

#include <gmpxx.h>

namespace flatlab {

namespace {

size_t rank_bareiss_rational(const DenseMatrix& m) {
    const size_t R = m.rows(), C = m.cols();
    // Clear denominators row by row; rank is unaffected.
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (size_t i = 0; i < R; ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < C; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).value().get_den().get_mpz_t());
        for (size_t j = 0; j < C; ++j) {
            const mpq_class& q = m.at(i, j).value();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }

    mpz_class prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < C && rank < R; ++col) {
        size_t piv = rank;
        while (piv < R && sgn(a[piv][col]) == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[rank]);
        // Bareiss step: exact divisions by the previous pivot.
        for (size_t i = rank + 1; i < R; ++i) {
            for (size_t j = col + 1; j < C; ++j) {
                mpz_class t = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

size_t rank_gauss(DenseMatrix& m) {
    const size_t R = m.rows(), C = m.cols();
    size_t rank = 0;
    for (size_t col = 0; col < C && rank < R; ++col) {
        size_t piv = rank;
        while (piv < R && m.at(piv, col).is_zero()) ++piv;
        if (piv == R) continue;
        if (piv != rank)
            for (size_t j = col; j < C; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Scalar inv = m.at(rank, col).inverse();
        for (size_t i = rank + 1; i < R; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (size_t j = col; j < C; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace

size_t matrix_rank(DenseMatrix m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_rational()) return rank_bareiss_rational(m);
    return rank_gauss(m);
}

} // namespace flatlab
