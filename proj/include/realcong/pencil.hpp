#pragma once

#include <string>
#include <vector>

#include "realcong/blocks.hpp"
#include "realcong/matrix.hpp"
#include "realcong/poly.hpp"
#include "realcong/quad.hpp"

namespace realcong {

// Real Kronecker structure of a real pair (A, B), i.e. of the pencil
// lambda A + B.  Jordan entries are stored by their block parameter mu of
// (I_k, J_k(mu)) (the pencil root is -mu); complex entries (a, b, k) stand
// for (I_2k, C_2k(a, b)) with b > 0.
struct RealKcf {
    std::vector<std::size_t> right_minimal;  // sizes eps >= 0
    std::vector<std::size_t> left_minimal;
    std::vector<std::size_t> infinite;
    std::vector<std::pair<QuadScalar, std::size_t>> real_jordan;
    std::vector<std::tuple<QuadScalar, QuadScalar, std::size_t>> complex_jordan;

    void normalize();
    std::string to_json() const;
    friend bool operator==(const RealKcf&, const RealKcf&) = default;
};

bool kcf_equal(const RealKcf& x, const RealKcf& y);

// Kronecker structure over C of a Gaussian-rational pair.
struct ComplexKcf {
    std::vector<std::size_t> right_minimal;
    std::vector<std::size_t> left_minimal;
    std::vector<std::size_t> infinite;
    std::vector<std::pair<Gaussian, std::size_t>> jordan;  // (mu, k) of (I_k, J_k(mu))

    void normalize();
    friend bool operator==(const ComplexKcf&, const ComplexKcf&) = default;
};

bool kcf_equal(const ComplexKcf& x, const ComplexKcf& y);

// Exact extraction.  Throws UnsupportedExact when the regular part has an
// irreducible factor outside the supported scope.
RealKcf real_kcf(const RatMat& a, const RatMat& b);
ComplexKcf complex_kcf(const GaussMat& a, const GaussMat& b);

// The tables mapping a canonical block B to real-KCF(B^T, B) resp.
// KCF(B^*, B).  expected_real_kcf accepts the real families (R1*, R2*) and
// real LW images; expected_complex_kcf the HS/FHS families.
RealKcf expected_real_kcf(const CanonicalBlock& blk);
ComplexKcf expected_complex_kcf(const CanonicalBlock& blk);

// Turn a complex strict equivalence R (A, B) = (C, D) S between real pairs
// into a real one; returns (R~, S~) and reports the shift tau that worked.
struct RealifyResult {
    RatMat r;
    RatMat s;
    long tau = 0;
    long candidates_tried = 0;
};
RealifyResult realify_equivalence(const GaussMat& r, const GaussMat& s, const RatMat& a,
                                  const RatMat& b, const RatMat& c, const RatMat& d);

// Float fallback: same structure with rank decisions at a relative tolerance;
// emits a human-readable rank report.  Eigenvalues are clustered numerically.
struct FloatKcf {
    std::vector<std::size_t> right_minimal;
    std::vector<std::size_t> left_minimal;
    std::vector<std::size_t> infinite;
    std::vector<std::tuple<double, double, std::size_t>> jordan;  // (re, im, k)
    std::vector<std::string> rank_report;
    double tolerance = 1e-9;
};
FloatKcf real_kcf_float(const CMat& a, const CMat& b, double tol = 1e-9);

}  // namespace realcong
