#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace realcong {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Rational& x) { return sgn(x); }
inline Rational abs_val(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

// Compact form: "3", "1/2", "-3/5".
std::string rat_to_string(const Rational& x);
std::optional<Rational> parse_rational(std::string_view s);

// Rough size measure used for pivot selection.
std::size_t rat_weight(const Rational& x);

// Gaussian rational p/q + (r/s) i.
struct Gaussian {
    Rational re{0};
    Rational im{0};

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r) : re(rat(r)) {}

    static Gaussian i() { return Gaussian(rat(0), rat(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    Gaussian conj() const { return Gaussian(re, Rational(-im)); }
    Rational norm2() const { return Rational(re * re + im * im); }

    Gaussian operator-() const { return Gaussian(Rational(-re), Rational(-im)); }
    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = nre;
        im = nim;
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        Rational n = o.norm2();
        if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
        Rational nre = (re * o.re + im * o.im) / n;
        Rational nim = (im * o.re - re * o.im) / n;
        re = nre;
        im = nim;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

// Canonical form "p/q+r/si" (e.g. "1/2-3/4i", "0+1i"); sign of the imaginary
// part is always explicit.
std::string gaussian_to_string(const Gaussian& x);
std::optional<Gaussian> parse_gaussian(std::string_view s);

// Three-way order for deterministic sorting (not a field order).
int compare(const Rational& a, const Rational& b);
int compare(const Gaussian& a, const Gaussian& b);

}  // namespace realcong
