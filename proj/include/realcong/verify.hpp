#pragma once

#include <vector>

#include "realcong/matcore.hpp"
#include "realcong/poly.hpp"

namespace realcong {

// Structural similarity test: equal characteristic polynomials and equal rank
// sequences of f(M)^j for every irreducible factor f.  Exact; throws
// UnsupportedExact outside the rational/quadratic (resp. Gaussian) scope.
bool check_similarity(const RatMat& a, const RatMat& b);
bool check_similarity(const GaussMat& a, const GaussMat& b);

// Anti-triangular stack Z_k(A,B) with A on the anti-diagonal and B below it.
template <class T>
Mat<T> z_stack(const Mat<T>& a, const Mat<T>& b, std::size_t k) {
    const std::size_t n = a.rows();
    Mat<T> m(n * k, n * k);
    for (std::size_t i = 1; i <= k; ++i) {
        m.set_block((i - 1) * n, (k - i) * n, a);
        if (i >= 2) m.set_block((i - 1) * n, (k + 1 - i) * n, b);
    }
    return m;
}

struct ZBlockReport {
    std::size_t z_nullity = 0;
    std::size_t a_nullity = 0;
    bool intersection_trivial = false;  // N(A) cap C(B^{-1}A) = {0}
};

// Computes dim N(Z_k(A,B)) and the intersection criterion, and asserts the
// equivalence between "nullity preserved" and "trivial intersection".
template <class T>
ZBlockReport z_block_nullity(const Mat<T>& a, const Mat<T>& b, std::size_t k);

// Congruence-invariant inertia profile.  Nonsingular input: inertia of
// sym(A (A^{-T} A)^m) for m = 0..m_max.  Singular input: inertia of sym(A)
// followed by inertias of sym(A (t A^T + A)^{-1} A^T) at deterministic
// non-eigenvalue shifts t (a congruence-covariant substitute for deflating
// the nilpotent part, which contributes a candidate-independent offset).
std::vector<Inertia> congruence_invariant_profile(const RatMat& a, std::size_t m_max);

}  // namespace realcong
