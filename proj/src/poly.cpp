#include "realcong/poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace realcong {

std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs) {
    // Trim trailing (leading-coefficient side) zeros.
    std::vector<std::complex<double>> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const std::size_t n = c.size() - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        comp(0, i) = -c[n - 1 - i] / c[n];
        if (i + 1 < n) comp(i + 1, i) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<std::complex<double>> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = es.eigenvalues()(static_cast<long>(i));
    return roots;
}

namespace {

// Continued-fraction rational reconstruction of a double, verified only by
// the caller's exact division; returns candidates with growing denominators.
std::optional<Rational> reconstruct_rational(double x, double tol, long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    double v = x;
    Integer p0(0), q0(1), p1(1), q1(0);
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 1e18 || fl < -1e18) return std::nullopt;
        Integer a(static_cast<long>(fl));
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational cand(p1, q1);
        cand.canonicalize();
        double approx = cand.get_d();
        if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) return cand;
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

std::vector<std::complex<double>> to_doubles(const Poly<Rational>& p) {
    std::vector<std::complex<double>> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = {p[i].get_d(), 0.0};
    return c;
}

bool try_divide_linear(Poly<Rational>& rem, const Rational& root,
                       RationalFactorization& out) {
    auto q = rem.divide_exactly(Poly<Rational>::x_minus(root));
    if (!q) return false;
    out.roots.push_back(root);
    rem = *q;
    return true;
}

bool try_divide_quadratic(Poly<Rational>& rem, const Rational& u, const Rational& v,
                          RationalFactorization& out) {
    Poly<Rational> f(std::vector<Rational>{v, u, rat(1)});
    auto q = rem.divide_exactly(f);
    if (!q) return false;
    // Keep only irreducible quadratics: a rational-root quadratic would have
    // been consumed by the linear pass; still, guard on the discriminant.
    out.quadratics.emplace_back(u, v);
    rem = *q;
    return true;
}

}  // namespace

RationalFactorization factor_squarefree_rational(const Poly<Rational>& p) {
    RationalFactorization out;
    if (p.degree() <= 0) return out;
    Poly<Rational> rem = p.monic();

    std::vector<std::complex<double>> roots = numeric_roots(to_doubles(rem));
    constexpr double kImagTol = 1e-7;
    const long dens[] = {1000, 1000000, 100000000};

    // Pass 1: real roots as rationals.
    std::vector<std::complex<double>> leftovers;
    for (const auto& z : roots) {
        if (std::abs(z.imag()) > kImagTol * std::max(1.0, std::abs(z))) {
            leftovers.push_back(z);
            continue;
        }
        bool done = false;
        for (long d : dens) {
            auto cand = reconstruct_rational(z.real(), 1e-6, d);
            if (cand && rem.degree() >= 1 && try_divide_linear(rem, *cand, out)) {
                done = true;
                break;
            }
        }
        if (!done) leftovers.push_back(z);
    }

    // Pass 2: conjugate pairs as monic rational quadratics x^2 + u x + v.
    std::vector<std::complex<double>> unresolved;
    std::vector<bool> used(leftovers.size(), false);
    for (std::size_t i = 0; i < leftovers.size(); ++i) {
        if (used[i] || leftovers[i].imag() <= 0) continue;
        // find the conjugate partner
        std::size_t best = leftovers.size();
        double best_d = 1e99;
        for (std::size_t j = 0; j < leftovers.size(); ++j) {
            if (used[j] || j == i || leftovers[j].imag() >= 0) continue;
            double d = std::abs(leftovers[j] - std::conj(leftovers[i]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == leftovers.size()) continue;
        double u = -2.0 * leftovers[i].real();
        double v = std::norm(leftovers[i]);
        for (long d : dens) {
            auto cu = reconstruct_rational(u, 1e-6, d);
            auto cv = reconstruct_rational(v, 1e-6, d);
            if (cu && cv && rem.degree() >= 2 && try_divide_quadratic(rem, *cu, *cv, out)) {
                used[i] = used[best] = true;
                break;
            }
        }
    }

    // Pass 3: pairs of leftover real roots forming irreducible real quadratics.
    std::vector<std::size_t> reals;
    for (std::size_t i = 0; i < leftovers.size(); ++i)
        if (!used[i] && std::abs(leftovers[i].imag()) <= kImagTol * std::max(1.0, std::abs(leftovers[i])))
            reals.push_back(i);
    for (std::size_t a = 0; a < reals.size(); ++a) {
        if (used[reals[a]]) continue;
        for (std::size_t b = a + 1; b < reals.size(); ++b) {
            if (used[reals[b]]) continue;
            double x1 = leftovers[reals[a]].real(), x2 = leftovers[reals[b]].real();
            double u = -(x1 + x2), v = x1 * x2;
            bool ok = false;
            for (long d : dens) {
                auto cu = reconstruct_rational(u, 1e-6, d);
                auto cv = reconstruct_rational(v, 1e-6, d);
                if (cu && cv && rem.degree() >= 2 && try_divide_quadratic(rem, *cu, *cv, out)) {
                    ok = true;
                    break;
                }
            }
            if (ok) {
                used[reals[a]] = used[reals[b]] = true;
                break;
            }
        }
    }

    if (rem.degree() != 0)
        throw UnsupportedExact(
            "polynomial has an irreducible factor beyond the supported rational/quadratic "
            "scope; use the float fallback");
    return out;
}

std::vector<Gaussian> roots_squarefree_gaussian(const Poly<Gaussian>& p) {
    std::vector<Gaussian> out;
    if (p.degree() <= 0) return out;
    Poly<Gaussian> rem = p.monic();
    std::vector<std::complex<double>> c(rem.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = {rem[i].re.get_d(), rem[i].im.get_d()};
    std::vector<std::complex<double>> roots = numeric_roots(c);
    const long dens[] = {1000, 1000000, 100000000};
    for (const auto& z : roots) {
        bool done = false;
        for (long d : dens) {
            auto cre = reconstruct_rational(z.real(), 1e-6, d);
            auto cim = reconstruct_rational(z.imag(), 1e-6, d);
            if (!cre || !cim) continue;
            Gaussian g(*cre, *cim);
            auto q = rem.divide_exactly(Poly<Gaussian>::x_minus(g));
            if (q) {
                out.push_back(g);
                rem = *q;
                done = true;
                break;
            }
        }
        if (!done && rem.degree() > 0) {
            // Root may already be divided out (clustered numerics); tolerate
            // and continue, the final degree check decides.
        }
    }
    if (rem.degree() != 0)
        throw UnsupportedExact(
            "polynomial has a root outside the Gaussian rationals; use the float fallback");
    return out;
}

}  // namespace realcong
