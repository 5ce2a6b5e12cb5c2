#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "realcong/rational.hpp"

namespace realcong {

// Element p + q*sqrt(d) of a real quadratic extension of Q.  d is a positive
// squarefree integer; d == 1 marks plain rationals (then q == 0).  Values with
// d > 1 never collapse to rationals because sqrt(d) is irrational.
class QuadScalar {
  public:
    QuadScalar() : p_(0), q_(0), d_(1) {}
    QuadScalar(Rational r) : p_(std::move(r)), q_(0), d_(1) {}
    QuadScalar(long n) : p_(rat(n)), q_(0), d_(1) {}
    QuadScalar(Rational p, Rational q, Integer d);

    // sqrt of a nonnegative rational; exact rational result when the radicand
    // is a perfect square.
    static QuadScalar sqrt_of(const Rational& x);

    const Rational& rat_part() const { return p_; }
    const Rational& rad_coeff() const { return q_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return sgn(q_) == 0; }
    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    Rational as_rational() const;

    int sign() const;
    QuadScalar abs() const { return sign() < 0 ? QuadScalar(-*this) : *this; }
    // Galois conjugate p - q*sqrt(d).
    QuadScalar conjugate() const { return QuadScalar(p_, Rational(-q_), d_, nocheck{}); }
    QuadScalar inverse() const;
    // p^2 + q^2 d + 2pq sqrt(d); always stays in the same field.
    QuadScalar squared() const { return *this * *this; }

    QuadScalar operator-() const { return QuadScalar(Rational(-p_), Rational(-q_), d_, nocheck{}); }
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o) { return *this += -o; }
    // Defined when the operands share one field, one side is rational, or both
    // are pure radicals; anything else would leave the quadratic form.
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o) { return *this *= o.inverse(); }

    friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
    friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
    friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
    friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }
    friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
    }
    friend bool operator!=(const QuadScalar& a, const QuadScalar& b) { return !(a == b); }

    friend bool operator<(const QuadScalar& a, const QuadScalar& b);

    double to_double() const;

    // "1/2", "0+1/2sqrt(5)", "-1/5+2/5sqrt(5)".
    std::string to_string() const;
    static std::optional<QuadScalar> parse(std::string_view s);

  private:
    struct nocheck {};
    QuadScalar(Rational p, Rational q, Integer d, nocheck) :
        p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}
    void canonicalize();

    Rational p_, q_;
    Integer d_;
};

// Deterministic total order for canonical sorting: by radicand, then the
// rational part, then the radical coefficient.  Coincides with the value
// order on rationals; across different radicands it is only an order, not a
// value comparison.
int compare(const QuadScalar& a, const QuadScalar& b);

}  // namespace realcong
