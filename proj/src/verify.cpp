#include "realcong/verify.hpp"

namespace realcong {

namespace {

template <class T>
Poly<T> char_poly(const Mat<T>& m) {
    // det(x I - M) by interpolation at x = 0..n.
    const std::size_t n = m.rows();
    std::vector<T> xs, ys;
    T pt = FieldOps<T>::zero();
    for (std::size_t i = 0; i <= n; ++i) {
        Mat<T> p = Mat<T>::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                p(r, c) = T(T(pt * p(r, c)) - m(r, c));
        xs.push_back(pt);
        ys.push_back(determinant(p));
        pt = T(pt + FieldOps<T>::one());
    }
    // Lagrange
    Poly<T> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly<T> li = Poly<T>::constant(FieldOps<T>::one());
        T denom = FieldOps<T>::one();
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * Poly<T>::x_minus(xs[j]);
            denom = T(denom * T(xs[i] - xs[j]));
        }
        li = li * Poly<T>::constant(T(ys[i] / denom));
        acc = acc - (Poly<T>() - li);
    }
    return acc;
}

template <class T>
Mat<T> eval_poly_at_matrix(const Poly<T>& f, const Mat<T>& m) {
    const std::size_t n = m.rows();
    Mat<T> acc(n, n);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) = T(acc(d, d) + f[i]);
    }
    return acc;
}

template <class T>
std::vector<std::size_t> rank_sequence(const Mat<T>& fm) {
    std::vector<std::size_t> seq;
    Mat<T> p = fm;
    std::size_t prev = fm.rows();
    for (;;) {
        std::size_t r = rank_of(p);
        seq.push_back(r);
        if (r == 0 || r == prev) break;
        prev = r;
        p = p * fm;
    }
    return seq;
}

template <class T, class FactorFn>
bool check_similarity_impl(const Mat<T>& a, const Mat<T>& b, FactorFn&& factors_of) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("check_similarity: need square matrices of equal size");
    Poly<T> pa = char_poly(a).monic();
    Poly<T> pb = char_poly(b).monic();
    if (!(pa - pb).is_zero()) return false;
    Poly<T> rad = squarefree_radical(pa);
    for (const Poly<T>& f : factors_of(rad)) {
        Mat<T> fa = eval_poly_at_matrix(f, a);
        Mat<T> fb = eval_poly_at_matrix(f, b);
        if (rank_sequence(fa) != rank_sequence(fb)) return false;
    }
    return true;
}

}  // namespace

bool check_similarity(const RatMat& a, const RatMat& b) {
    return check_similarity_impl(a, b, [](const Poly<Rational>& rad) {
        std::vector<Poly<Rational>> fs;
        RationalFactorization fac = factor_squarefree_rational(rad);
        for (const Rational& r : fac.roots) fs.push_back(Poly<Rational>::x_minus(r));
        for (const auto& [u, v] : fac.quadratics)
            fs.push_back(Poly<Rational>(std::vector<Rational>{v, u, rat(1)}));
        return fs;
    });
}

bool check_similarity(const GaussMat& a, const GaussMat& b) {
    return check_similarity_impl(a, b, [](const Poly<Gaussian>& rad) {
        std::vector<Poly<Gaussian>> fs;
        for (const Gaussian& r : roots_squarefree_gaussian(rad))
            fs.push_back(Poly<Gaussian>::x_minus(r));
        return fs;
    });
}

namespace {

// dim of the intersection of two column spaces given bases U, V:
// dim U + dim V - rank [U V].
template <class T>
std::size_t intersection_dim(const Mat<T>& u, const Mat<T>& v) {
    if (u.cols() == 0 || v.cols() == 0) return 0;
    Mat<T> both(u.rows(), u.cols() + v.cols());
    both.set_block(0, 0, u);
    both.set_block(0, u.cols(), v);
    return u.cols() + v.cols() - rank_of(both);
}

// Column-space basis: the columns at pivot positions of the transpose trick;
// simpler: reduce M^T and take nonzero rows back as columns.
template <class T>
Mat<T> column_space_basis(const Mat<T>& m) {
    Echelon<T> e = row_echelon(m.transpose());
    Mat<T> basis(m.rows(), e.rank);
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t c = 0; c < m.rows(); ++c) basis(c, r) = e.mat(r, c);
    return basis;
}

}  // namespace

template <class T>
ZBlockReport z_block_nullity(const Mat<T>& a, const Mat<T>& b, std::size_t k) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("z_block_nullity: need square matrices of equal size");
    if (k < 2) throw std::invalid_argument("z_block_nullity: k must be >= 2");
    auto binv = inverse(b);
    if (!binv) throw std::invalid_argument("z_block_nullity: B must be invertible");
    ZBlockReport rep;
    Mat<T> z = z_stack(a, b, k);
    rep.z_nullity = z.cols() - rank_of(z);
    rep.a_nullity = a.cols() - rank_of(a);
    Mat<T> ker_a = kernel_basis(a);
    Mat<T> col_ba = column_space_basis(*binv * a);
    rep.intersection_trivial = intersection_dim(ker_a, col_ba) == 0;
    if ((rep.z_nullity == rep.a_nullity) != rep.intersection_trivial)
        throw std::logic_error("z_block_nullity: equivalence violated (internal error)");
    return rep;
}

template ZBlockReport z_block_nullity<Rational>(const RatMat&, const RatMat&, std::size_t);
template ZBlockReport z_block_nullity<Gaussian>(const GaussMat&, const GaussMat&, std::size_t);

std::vector<Inertia> congruence_invariant_profile(const RatMat& a, std::size_t m_max) {
    if (!a.is_square()) throw std::invalid_argument("profile: matrix not square");
    std::vector<Inertia> out;
    out.push_back(inertia_of_symmetric(sym_part(a)));
    if (m_max == 0) return out;
    auto ainv_t = inverse(a.transpose());
    if (ainv_t) {
        RatMat cosq = *ainv_t * a;
        RatMat acc = a;
        for (std::size_t m = 1; m <= m_max; ++m) {
            acc = acc * cosq;
            out.push_back(inertia_of_symmetric(sym_part(acc)));
        }
        return out;
    }
    // Singular input: shifted transforms N_t = A (t A^T + A)^{-1} A^T at
    // deterministic non-root shifts.
    std::size_t produced = 0;
    for (long t = 2; produced < m_max && t < 2 + static_cast<long>(m_max) + 64; ++t) {
        RatMat shifted = rat(t) * a.transpose() + a;
        auto inv = inverse(shifted);
        if (!inv) continue;
        RatMat nt = a * *inv * a.transpose();
        out.push_back(inertia_of_symmetric(sym_part(nt)));
        ++produced;
    }
    return out;
}

}  // namespace realcong
