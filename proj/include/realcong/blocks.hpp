#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realcong/matrix.hpp"
#include "realcong/quad.hpp"

namespace realcong {

// --- Elementary block matrices ---------------------------------------------

// k x k Jordan block, mu on the diagonal, 1 on the superdiagonal.
template <class T>
Mat<T> jordan(std::size_t k, const T& mu) {
    if (k == 0) throw std::invalid_argument("jordan: k must be >= 1");
    Mat<T> m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = mu;
        if (i + 1 < k) m(i, i + 1) = FieldOps<T>::one();
    }
    return m;
}

// Anti-triangular block: entries on the anti-diagonal and just below it,
// with equal signs within each row, alternating upward from +1 in the last
// row (so the top-right corner is (-1)^{k+1}).
RatMat gamma(std::size_t k);

// Tridiagonal companion of gamma: 1 at (1,1), 1 on the superdiagonal,
// alternating -1, 1, ... on the subdiagonal.
RatMat gamma_tilde(std::size_t k);

// [[0, I_k], [J_k(mu), 0]], size 2k.
template <class T>
Mat<T> h_block(std::size_t k, const T& mu) {
    if (k == 0) throw std::invalid_argument("h_block: k must be >= 1");
    Mat<T> m(2 * k, 2 * k);
    m.set_block(0, k, Mat<T>::identity(k));
    m.set_block(k, 0, jordan(k, mu));
    return m;
}

// [[a, b], [-b, a]] and its Jordan-like chain with I_2 superdiagonal blocks.
RatMat c_rot(const Rational& a, const Rational& b);
RatMat c_jordan(std::size_t k, const Rational& a, const Rational& b);  // size 2k

// [[0, I_2k], [C_2k(a,b), 0]], size 4k.
RatMat h_hat(std::size_t k, const Rational& a, const Rational& b);

// Tridiagonal: zero diagonal, 1 superdiagonal, mu subdiagonal (T_1 = [0]).
template <class T>
Mat<T> t_block(std::size_t k, const T& mu) {
    if (k == 0) throw std::invalid_argument("t_block: k must be >= 1");
    Mat<T> m(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        m(i, i + 1) = FieldOps<T>::one();
        m(i + 1, i) = mu;
    }
    return m;
}

// Block tridiagonal: I_2 above, C(a,b) below, size 2k (T_hat_2 = 0).
RatMat t_hat(std::size_t k, const Rational& a, const Rational& b);

// k x (k+1) singular blocks; F has ones at (i,i), G at (i,i+1); F_0 = G_0 is 0x1.
RatMat f_block(std::size_t k);
RatMat g_block(std::size_t k);

// --- Lee-Weinberg auxiliary and canonical blocks ---------------------------

RatMat lw_L(std::size_t k);       // (k+1) x k lower bidiagonal of ones
RatMat lw_Lplus(std::size_t k);   // k x (k+1) with 1, -1 bidiagonal
RatMat lw_Delta(std::size_t k);   // anti-identity
RatMat lw_Lambda(std::size_t k);  // ones at (i, k+2-i), i = 2..k
RatMat lw_SDelta(std::size_t k);  // skew anti-diagonal split (even/odd forms)

RatMat lw_m3(std::size_t k);  // (2k+1) x (2k+1); [0] when k = 0
RatMat lw_inf4(std::size_t k, int eps);
RatMat lw_inf5(std::size_t k);
RatMat lw_o3(std::size_t k, int eps);
RatMat lw_o4(std::size_t k);
RatMat lw_alpha3(std::size_t k, const Rational& alpha);
RatMat lw_beta4(std::size_t k, int eps, const Rational& b, bool allow_degenerate = false);
RatMat lw_beta5(std::size_t k, const Rational& a, const Rational& b,
                bool allow_degenerate = false);

// --- Canonical block data model ---------------------------------------------

enum class Family {
    HSType0,
    HSTypeI,
    HSTypeII,
    FHSTriI,
    FHSTriII,
    R1i,
    R1ii,
    R1iii,
    R1iv,
    R2TriI,
    R2TriII,
    R2TriIII,
    LWm3,
    LWinf4,
    LWinf5,
    LWo3,
    LWo4,
    LWalpha3,
    LWbeta4,
    LWbeta5,
};

const char* family_name(Family f);

// N parameter of the Gamma (x) N families: +1, -1 or a rotation C(a,b).
struct NParam {
    int sign = +1;  // used when !rotation
    bool rotation = false;
    QuadScalar a, b;

    static NParam plus1() { return NParam{}; }
    static NParam minus1() { return NParam{-1, false, {}, {}}; }
    static NParam rot(QuadScalar a, QuadScalar b) {
        return NParam{0, true, std::move(a), std::move(b)};
    }
    friend bool operator==(const NParam& x, const NParam& y) {
        if (x.rotation != y.rotation) return false;
        return x.rotation ? (x.a == y.a && x.b == y.b) : x.sign == y.sign;
    }
};

struct CanonicalBlock {
    Family family;
    std::size_t k = 1;
    std::optional<Gaussian> mu;    // HS / FHS families
    std::optional<QuadScalar> a;   // R1iii, R1iv, R2TriI, R2TriII, LWbeta5
    std::optional<QuadScalar> b;   // R1iv, R2TriII, LWbeta4, LWbeta5
    std::optional<Rational> alpha; // LWalpha3
    int eps = +1;                  // LWinf4, LWo3, LWbeta4
    std::optional<NParam> N;       // R1ii, R2TriIII

    std::size_t size() const;
    // Throws std::invalid_argument when a parameter region constraint fails;
    // degenerate LW parameter combinations pass when allow_degenerate.
    void validate(bool allow_degenerate = false) const;
    std::string to_spec() const;

    friend bool operator==(const CanonicalBlock&, const CanonicalBlock&) = default;
};

// Deterministic order: family, k, then parameters.
int compare(const CanonicalBlock& x, const CanonicalBlock& y);

// The block's matrix over the rationals; throws when a parameter is not
// rational (quadratic-extension parameters have no exact rational matrix) or
// when mu is not real.
RatMat realize_rational(const CanonicalBlock& blk, bool allow_degenerate = false);

// Works for every valid block, embedding rationals into Gaussian rationals.
GaussMat realize_gaussian(const CanonicalBlock& blk, bool allow_degenerate = false);

// Direct sum in canonical order.
RatMat realize_form_matrix(std::vector<CanonicalBlock> blocks);

// Mini-language: FAMILY(k=INT[,mu=..][,a=..][,b=..][,alpha=..][,eps=+1|-1]
// [,N=+1|-1|C(..,..)]), forms joined with '+'.
CanonicalBlock parse_block_spec(const std::string& s);
std::vector<CanonicalBlock> parse_form_spec(const std::string& s);

}  // namespace realcong
