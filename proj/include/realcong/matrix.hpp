#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "realcong/rational.hpp"

namespace realcong {

// Field hooks the generic linear algebra needs.  The double-complex backend
// is only used by the float fallback paths; its is_zero carries a tolerance.
template <class T>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational conj(const Rational& x) { return x; }
    static std::size_t weight(const Rational& x) { return rat_weight(x); }
};

template <>
struct FieldOps<Gaussian> {
    static Gaussian zero() { return Gaussian(); }
    static Gaussian one() { return Gaussian(rat(1)); }
    static bool is_zero(const Gaussian& x) { return x.is_zero(); }
    static Gaussian conj(const Gaussian& x) { return x.conj(); }
    static std::size_t weight(const Gaussian& x) { return rat_weight(x.re) + rat_weight(x.im); }
};

template <>
struct FieldOps<std::complex<double>> {
    static constexpr double tol = 1e-9;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x) { return std::abs(x) < tol; }
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
    static std::size_t weight(const std::complex<double>& x) {
        double a = std::abs(x);
        return a == 0.0 ? 0 : static_cast<std::size_t>(1e6 / (1.0 + a));
    }
};

template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, FieldOps<T>::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldOps<T>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Mat conj_transpose() const {
        Mat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = FieldOps<T>::conj((*this)(i, j));
        return m;
    }

    Mat operator-() const {
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = T(FieldOps<T>::zero() - a_[i]);
        return m;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        x.check_same_shape(y);
        Mat m(x.rows_, x.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = T(x.a_[i] + y.a_[i]);
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        x.check_same_shape(y);
        Mat m(x.rows_, x.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = T(x.a_[i] - y.a_[i]);
        return m;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat m(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (FieldOps<T>::is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    if (FieldOps<T>::is_zero(y(k, j))) continue;
                    m(i, j) = T(m(i, j) + T(xik * y(k, j)));
                }
            }
        return m;
    }
    friend Mat operator*(const T& s, const Mat& x) {
        Mat m(x.rows_, x.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = T(s * x.a_[i]);
        return m;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!(x.a_[i] == y.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    bool is_zero() const {
        for (const T& v : a_)
            if (!FieldOps<T>::is_zero(v)) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Mat block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

  private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using RatMat = Mat<Rational>;
using GaussMat = Mat<Gaussian>;
using CMat = Mat<std::complex<double>>;

template <class T>
Mat<T> direct_sum(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (FieldOps<T>::is_zero(a(i, j))) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    m(i * b.rows() + p, j * b.cols() + q) = T(a(i, j) * b(p, q));
        }
    return m;
}

// Row echelon reduction over the field; pivots are chosen among the nonzero
// candidates of the current column with the smallest weight, which keeps
// entry growth low on the structured matrices this library produces.
template <class T>
struct Echelon {
    Mat<T> mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

template <class T>
Echelon<T> row_echelon(Mat<T> m) {
    Echelon<T> res;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_w = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (FieldOps<T>::is_zero(m(i, c))) continue;
            std::size_t w = FieldOps<T>::weight(m(i, c));
            if (best == rows || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
        const T piv = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (FieldOps<T>::is_zero(m(i, c))) continue;
            T f = T(m(i, c) / piv);
            m(i, c) = FieldOps<T>::zero();
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (FieldOps<T>::is_zero(m(r, j))) continue;
                m(i, j) = T(m(i, j) - T(f * m(r, j)));
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

template <class T>
std::size_t rank_of(const Mat<T>& m) {
    return row_echelon(m).rank;
}

// Exact rank of a rational matrix by fraction-free (integer) elimination:
// rows are scaled to integers, elimination uses cross-multiplication only,
// and each row is divided by its content to keep entries small.
std::size_t rank_rational(const RatMat& m);

inline std::size_t rank_of(const RatMat& m) { return rank_rational(m); }

template <class T>
T determinant(const Mat<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    Echelon<T> e = row_echelon(m);
    if (e.rank < m.rows()) return FieldOps<T>::zero();
    // Row swaps flip the sign; track by re-running pivot selection is not
    // needed because row_echelon does not report swaps, so compute directly.
    Mat<T> a = m;
    T det = FieldOps<T>::one();
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        std::size_t best_w = 0;
        for (std::size_t i = c; i < n; ++i) {
            if (FieldOps<T>::is_zero(a(i, c))) continue;
            std::size_t w = FieldOps<T>::weight(a(i, c));
            if (best == n || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == n) return FieldOps<T>::zero();
        if (best != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(best, j));
            det = T(FieldOps<T>::zero() - det);
        }
        const T piv = a(c, c);
        det = T(det * piv);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (FieldOps<T>::is_zero(a(i, c))) continue;
            T f = T(a(i, c) / piv);
            for (std::size_t j = c; j < n; ++j) a(i, j) = T(a(i, j) - T(f * a(c, j)));
        }
    }
    return det;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat<T> a(n, 2 * n);
    a.set_block(0, 0, m);
    a.set_block(0, n, Mat<T>::identity(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        std::size_t best_w = 0;
        for (std::size_t i = c; i < n; ++i) {
            if (FieldOps<T>::is_zero(a(i, c))) continue;
            std::size_t w = FieldOps<T>::weight(a(i, c));
            if (best == n || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == n) return std::nullopt;
        if (best != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(c, j), a(best, j));
        const T piv = a(c, c);
        for (std::size_t j = c; j < 2 * n; ++j) a(c, j) = T(a(c, j) / piv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || FieldOps<T>::is_zero(a(i, c))) continue;
            T f = a(i, c);
            for (std::size_t j = c; j < 2 * n; ++j)
                a(i, j) = T(a(i, j) - T(f * a(c, j)));
        }
    }
    return a.block(0, n, n, n);
}

// Columns form a basis of the right null space.
template <class T>
Mat<T> kernel_basis(const Mat<T>& m) {
    Echelon<T> e = row_echelon(m);
    const std::size_t cols = m.cols();
    // Back-substitute to reduced form on the pivot rows.
    Mat<T>& u = e.mat;
    for (std::size_t pr = e.rank; pr-- > 0;) {
        const std::size_t pc = e.pivot_cols[pr];
        const T piv = u(pr, pc);
        for (std::size_t j = pc; j < cols; ++j) u(pr, j) = T(u(pr, j) / piv);
        for (std::size_t i = 0; i < pr; ++i) {
            if (FieldOps<T>::is_zero(u(i, pc))) continue;
            T f = u(i, pc);
            for (std::size_t j = pc; j < cols; ++j)
                u(i, j) = T(u(i, j) - T(f * u(pr, j)));
        }
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;
    Mat<T> basis(cols, cols - e.rank);
    std::size_t b = 0;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        basis(fc, b) = FieldOps<T>::one();
        for (std::size_t pr = 0; pr < e.rank; ++pr)
            basis(e.pivot_cols[pr], b) = T(FieldOps<T>::zero() - u(pr, fc));
        ++b;
    }
    return basis;
}

RatMat to_rational(const Mat<Rational>& m);
GaussMat to_gaussian(const RatMat& m);
CMat to_cmat(const RatMat& m);
CMat to_cmat(const GaussMat& m);
bool is_real(const GaussMat& m);
RatMat real_part(const GaussMat& m);
RatMat imag_part(const GaussMat& m);

}  // namespace realcong
