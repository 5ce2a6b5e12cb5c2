#pragma once

#include <string>
#include <variant>

#include "realcong/matrix.hpp"

namespace realcong {

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Signature of a symmetric rational matrix by exact symmetric elimination
// (LDL^T with symmetric pivoting, 2x2 hyperbolic pivots when the remaining
// diagonal is zero).  Throws on non-symmetric input.
Inertia inertia_of_symmetric(const RatMat& m);

inline RatMat sym_part(const RatMat& m) {
    RatMat s(m.rows(), m.cols());
    Rational half = rat(1, 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = (m(i, j) + m(j, i)) * half;
    return s;
}

enum class Backend { Rational, Gaussian, FloatC };

// Runtime-tagged matrix used at the I/O boundary (CLI, JSON, bindings).
struct ExactMatrix {
    std::variant<RatMat, GaussMat, CMat> m;

    Backend backend() const { return static_cast<Backend>(m.index()); }
    std::size_t rows() const;
    std::size_t cols() const;

    const RatMat& rational() const;
    const GaussMat& gaussian() const;
    const CMat& floating() const;

    // {"rows":..., "cols":..., "backend":..., "data":[[...],...]} with exact
    // scalar strings ("p/q", "p/q+r/si") for the exact backends and [re,im]
    // number pairs for the float backend.
    std::string to_json() const;
    static ExactMatrix from_json_text(const std::string& text);
};

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
std::size_t rank(const ExactMatrix& m);
Inertia inertia_of_symmetric(const ExactMatrix& m);

}  // namespace realcong
