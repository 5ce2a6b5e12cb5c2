#pragma once

#include <optional>
#include <vector>

#include "realcong/matrix.hpp"

namespace realcong {

// Raised when the exact path cannot continue (an irreducible factor of degree
// at least 3, or a factor that failed exact reconstruction); callers may fall
// back to the float path.
struct UnsupportedExact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly x_minus(const T& v) {
        return Poly(std::vector<T>{T(FieldOps<T>::zero() - v), FieldOps<T>::one()});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<T>& coeffs() const { return c_; }

    T eval(const T& x) const {
        T acc = FieldOps<T>::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = T(T(acc * x) + c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T k = FieldOps<T>::zero();
            for (std::size_t t = 0; t < i; ++t) k = T(k + FieldOps<T>::one());
            d[i - 1] = T(c_[i] * k);
        }
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly p = *this;
        T lead = c_.back();
        for (T& v : p.c_) v = T(v / lead);
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, FieldOps<T>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = T(c[i + j] + T(a.c_[i] * b.c_[j]));
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), FieldOps<T>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = T(c[i] - b.c_[i]);
        return Poly(std::move(c));
    }

    // Quotient and remainder; exact field division.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<T> rem = a.c_;
        std::vector<T> quo(rem.size() > b.c_.size() ? rem.size() - b.c_.size() + 1 : 0,
                           FieldOps<T>::zero());
        const T& lead = b.c_.back();
        while (rem.size() >= b.c_.size() && !rem.empty()) {
            T f = T(rem.back() / lead);
            std::size_t shift = rem.size() - b.c_.size();
            if (FieldOps<T>::is_zero(f)) {
                rem.pop_back();
                continue;
            }
            quo[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rem[shift + i] = T(rem[shift + i] - T(f * b.c_[i]));
            rem.pop_back();
        }
        q = Poly(std::move(quo));
        r = Poly(std::move(rem));
    }

    // Exact quotient if the division leaves no remainder.
    std::optional<Poly> divide_exactly(const Poly& d) const {
        Poly q, r;
        divmod(*this, d, q, r);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

  private:
    void trim() {
        while (!c_.empty() && FieldOps<T>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> q, r;
        Poly<T>::divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

// Product of the distinct irreducible factors.
template <class T>
Poly<T> squarefree_radical(const Poly<T>& p) {
    if (p.degree() <= 0) return p.monic();
    Poly<T> g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    auto q = p.divide_exactly(g);
    return q->monic();
}

// Irreducible factors over Q discovered numerically and verified exactly.
// Linear factors are reported by their root; quadratics as monic x^2+u x+v.
struct RationalFactorization {
    std::vector<Rational> roots;
    std::vector<std::pair<Rational, Rational>> quadratics;  // (u, v)
};

// Input must be squarefree.  Throws UnsupportedExact when some factor cannot
// be reconstructed as a rational linear or quadratic.
RationalFactorization factor_squarefree_rational(const Poly<Rational>& p);

// Roots over Q(i) of a squarefree Gaussian-rational polynomial; throws
// UnsupportedExact when a root is not a Gaussian rational.
std::vector<Gaussian> roots_squarefree_gaussian(const Poly<Gaussian>& p);

// Numeric roots of an arbitrary complex-coefficient polynomial (float path).
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace realcong
