#include "realcong/quad.hpp"

#include <cctype>
#include <cmath>

namespace realcong {

namespace {

// Split n = s^2 * f with f squarefree (best effort: trial division up to a
// fixed bound; any residual is treated as squarefree, which is consistent as
// long as values are built through this same routine).
void squarefree_split(const Integer& n, Integer& square, Integer& free_part) {
    square = 1;
    free_part = 1;
    Integer m = n;
    for (long p = 2; p <= 1000000L; ++p) {
        Integer pp(p);
        if (Integer(pp * pp) > m) break;
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t());
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= pp;
        if (e % 2) free_part *= pp;
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            square *= r;
        } else {
            free_part *= m;
        }
    }
}

}  // namespace

QuadScalar::QuadScalar(Rational p, Rational q, Integer d) :
    p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (sgn(d_) <= 0) throw std::invalid_argument("radicand must be positive");
    canonicalize();
}

void QuadScalar::canonicalize() {
    if (sgn(q_) == 0) {
        d_ = 1;
        return;
    }
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        return;
    }
    Integer square, free_part;
    squarefree_split(d_, square, free_part);
    if (square != 1) q_ *= Rational(square);
    d_ = free_part;
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
    }
}

QuadScalar QuadScalar::sqrt_of(const Rational& x) {
    if (sgn(x) < 0) throw std::domain_error("sqrt of negative rational");
    if (sgn(x) == 0) return QuadScalar(rat(0));
    // sqrt(n/m) = sqrt(n*m)/m
    Integer nm = x.get_num() * x.get_den();
    return QuadScalar(rat(0), Rational(1, x.get_den()), nm);
}

Rational QuadScalar::as_rational() const {
    if (!is_rational()) throw std::domain_error("quadratic scalar is not rational");
    return p_;
}

int QuadScalar::sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // p and q*sqrt(d) have opposite signs; compare p^2 with q^2 d.  Equality
    // cannot occur: d > 1 squarefree makes sqrt(d) irrational.
    Rational lhs = p_ * p_;
    Rational rhs = q_ * q_ * Rational(d_);
    return compare(lhs, rhs) > 0 ? sp : sq;
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return QuadScalar(Rational(1 / p_));
    // 1/(p + q sqrt d) = (p - q sqrt d) / (p^2 - q^2 d)
    Rational n = p_ * p_ - q_ * q_ * Rational(d_);
    return QuadScalar(Rational(p_ / n), Rational(-q_ / n), d_, nocheck{});
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
    if (is_rational()) {
        Rational p = p_;
        *this = o;
        p_ += p;
        return *this;
    }
    if (o.is_rational()) {
        p_ += o.p_;
        return *this;
    }
    if (d_ != o.d_) throw std::domain_error("sum leaves the quadratic field");
    p_ += o.p_;
    q_ += o.q_;
    if (sgn(q_) == 0) d_ = 1;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    if (o.is_rational()) {
        p_ *= o.p_;
        q_ *= o.p_;
        if (sgn(q_) == 0) d_ = 1;
        return *this;
    }
    if (is_rational()) {
        Rational p = p_;
        *this = o;
        p_ *= p;
        q_ *= p;
        if (sgn(q_) == 0) d_ = 1;
        return *this;
    }
    if (d_ == o.d_) {
        Rational np = p_ * o.p_ + q_ * o.q_ * Rational(d_);
        Rational nq = p_ * o.q_ + q_ * o.p_;
        p_ = np;
        q_ = nq;
        if (sgn(q_) == 0) d_ = 1;
        return *this;
    }
    if (sgn(p_) == 0 && sgn(o.p_) == 0) {
        // (q1 sqrt d1)(q2 sqrt d2) = q1 q2 sqrt(d1 d2)
        *this = QuadScalar(rat(0), Rational(q_ * o.q_), Integer(d_ * o.d_));
        return *this;
    }
    throw std::domain_error("product leaves the quadratic field");
}

double QuadScalar::to_double() const {
    double v = p_.get_d();
    if (sgn(q_) != 0) v += q_.get_d() * std::sqrt(d_.get_d());
    return v;
}

std::string QuadScalar::to_string() const {
    if (is_rational()) return rat_to_string(p_);
    std::string s = rat_to_string(p_);
    s += sgn(q_) < 0 ? "-" : "+";
    s += rat_to_string(abs_val(q_));
    s += "sqrt(";
    s += d_.get_str();
    s += ")";
    return s;
}

std::optional<QuadScalar> QuadScalar::parse(std::string_view s) {
    std::size_t mark = s.find("sqrt(");
    if (mark == std::string_view::npos) {
        auto r = parse_rational(s);
        if (!r) return std::nullopt;
        return QuadScalar(*r);
    }
    if (s.empty() || s.back() != ')') return std::nullopt;
    std::string_view dpart = s.substr(mark + 5, s.size() - mark - 6);
    std::string_view head = s.substr(0, mark);
    // head is "<p><sign><|q|>", with the sign not leading and not after '/'.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return std::nullopt;
    auto p = parse_rational(head.substr(0, split));
    auto qmag = parse_rational(head.substr(split + 1));
    if (!p || !qmag) return std::nullopt;
    for (char ch : dpart)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    if (dpart.empty()) return std::nullopt;
    Integer d(std::string(dpart), 10);
    if (d <= 0) return std::nullopt;
    Rational q = head[split] == '-' ? Rational(-*qmag) : *qmag;
    return QuadScalar(*p, q, d);
}

int compare(const QuadScalar& a, const QuadScalar& b) {
    int c = mpz_cmp(a.radicand().get_mpz_t(), b.radicand().get_mpz_t());
    if (c != 0) return c;
    c = compare(a.rat_part(), b.rat_part());
    if (c != 0) return c;
    return compare(a.rad_coeff(), b.rad_coeff());
}

bool operator<(const QuadScalar& a, const QuadScalar& b) { return compare(a, b) < 0; }

}  // namespace realcong
