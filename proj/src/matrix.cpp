#include "realcong/matrix.hpp"

#include <algorithm>

namespace realcong {

namespace {

void strip_content(std::vector<Integer>& row) {
    Integer g(0);
    for (const Integer& v : row) {
        if (sgn(v) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (Integer& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank_rational(const RatMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational v = m(i, j) * Rational(l);
            a[i][j] = v.get_num();
        }
        strip_content(a[i]);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            std::size_t bits = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
            if (best == rows || bits < best_bits) {
                best = i;
                best_bits = bits;
                if (bits == 1) break;
            }
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        const std::vector<Integer>& pr = a[r];
        const Integer& piv = pr[c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            const Integer f = a[i][c];
            std::vector<Integer>& ri = a[i];
            for (std::size_t j = c + 1; j < cols; ++j) {
                // ri[j] = ri[j]*piv - f*pr[j]
                Integer t = ri[j] * piv;
                t -= f * pr[j];
                ri[j] = t;
            }
            ri[c] = 0;
            strip_content(ri);
        }
        ++r;
    }
    return r;
}

RatMat to_rational(const Mat<Rational>& m) { return m; }

GaussMat to_gaussian(const RatMat& m) {
    GaussMat g(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gaussian(m(i, j));
    return g;
}

CMat to_cmat(const RatMat& m) {
    CMat c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = std::complex<double>(m(i, j).get_d(), 0.0);
    return c;
}

CMat to_cmat(const GaussMat& m) {
    CMat c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = std::complex<double>(m(i, j).re.get_d(), m(i, j).im.get_d());
    return c;
}

bool is_real(const GaussMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j).im) != 0) return false;
    return true;
}

RatMat real_part(const GaussMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
    return r;
}

RatMat imag_part(const GaussMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).im;
    return r;
}

}  // namespace realcong
