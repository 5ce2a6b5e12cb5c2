#include "realcong/pencil.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace realcong {

namespace {

using json = nlohmann::ordered_json;

// ---- generic building blocks -------------------------------------------------

// Kernel dimension of the degree-d polynomial-solution system for the pencil
// lambda A + B: unknowns x_0..x_d, equations per coefficient 0..d+1.
template <class T>
std::size_t poly_kernel_dim(const Mat<T>& A, const Mat<T>& B, std::size_t d) {
    const std::size_t m = A.rows(), n = A.cols();
    Mat<T> t((d + 2) * m, (d + 1) * n);
    for (std::size_t s = 0; s <= d; ++s) {
        t.set_block(s * m, s * n, B);
        t.set_block((s + 1) * m, s * n, A);
    }
    return (d + 1) * n - rank_of(t);
}

// Kernel dimension of the "P x = f^{j+1} y" system with deg x < deg(f^{j+1}).
template <class T>
std::size_t fadic_kernel_dim(const Mat<T>& A, const Mat<T>& B, const Poly<T>& fpow) {
    const std::size_t m = A.rows(), n = A.cols();
    const std::size_t degx = static_cast<std::size_t>(fpow.degree());
    Mat<T> t((degx + 1) * m, degx * n + m);
    for (std::size_t s = 0; s < degx; ++s) {
        t.set_block(s * m, s * n, B);
        t.set_block((s + 1) * m, s * n, A);
    }
    for (std::size_t c = 0; c <= degx; ++c) {
        T v = T(FieldOps<T>::zero() - fpow[c]);
        for (std::size_t i = 0; i < m; ++i) t(c * m + i, degx * n + i) = v;
    }
    return (degx * n + m) - rank_of(t);
}

template <class T>
std::vector<std::size_t> minimal_indices(const Mat<T>& A, const Mat<T>& B, std::size_t count) {
    std::vector<std::size_t> out;
    if (count == 0) return out;
    std::size_t prev_nu = 0, prev_c = 0;
    for (std::size_t d = 0;; ++d) {
        std::size_t nu = poly_kernel_dim(A, B, d);
        std::size_t c = nu - prev_nu;  // #{eps <= d}
        for (std::size_t i = prev_c; i < c; ++i) out.push_back(d);
        if (c >= count) break;
        prev_nu = nu;
        prev_c = c;
        if (d > A.cols() + 2) throw std::logic_error("minimal index extraction did not terminate");
    }
    return out;
}

// Jordan sizes of the factor f: m_j = #(blocks of size >= j+1).
template <class T>
std::vector<std::size_t> fadic_sizes(const Mat<T>& A, const Mat<T>& B, const Poly<T>& f,
                                     std::size_t n_minus_r) {
    const std::size_t e = static_cast<std::size_t>(f.degree());
    std::vector<std::size_t> mj;
    Poly<T> fpow = f;
    std::size_t prev_delta = 0;
    for (std::size_t j = 0;; ++j) {
        std::size_t dim = fadic_kernel_dim(A, B, fpow);
        std::size_t singular = e * (j + 1) * n_minus_r;
        if (dim < singular) throw std::logic_error("f-adic kernel smaller than singular floor");
        std::size_t delta = dim - singular;
        if ((delta - prev_delta) % e != 0)
            throw std::logic_error("f-adic kernel increment not divisible by deg f");
        std::size_t m = (delta - prev_delta) / e;
        if (m == 0) break;
        mj.push_back(m);
        prev_delta = delta;
        fpow = fpow * f;
        if (j > A.rows() + 2) throw std::logic_error("f-adic extraction did not terminate");
    }
    std::vector<std::size_t> sizes;
    for (std::size_t j = 0; j < mj.size(); ++j) {
        std::size_t here = mj[j] - (j + 1 < mj.size() ? mj[j + 1] : 0);
        for (std::size_t i = 0; i < here; ++i) sizes.push_back(j + 1);
    }
    return sizes;
}

template <class T>
std::size_t normal_rank(const Mat<T>& A, const Mat<T>& B, T* clean_point = nullptr) {
    const std::size_t bound = std::min(A.rows(), A.cols());
    std::size_t best = 0;
    T pt = FieldOps<T>::zero();
    T best_pt = pt;
    for (std::size_t i = 0; i <= bound; ++i) {
        Mat<T> p = A;
        // p = pt*A + B
        for (std::size_t r = 0; r < p.rows(); ++r)
            for (std::size_t c = 0; c < p.cols(); ++c) p(r, c) = T(T(pt * A(r, c)) + B(r, c));
        std::size_t rk = rank_of(p);
        if (rk > best) {
            best = rk;
            best_pt = pt;
        }
        pt = T(pt + FieldOps<T>::one());
        if (best == bound) break;
    }
    if (clean_point) *clean_point = best_pt;
    return best;
}

template <class T>
Poly<T> interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
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

// Determinant polynomial of a square pencil by exact interpolation.
template <class T>
Poly<T> pencil_det_poly(const Mat<T>& A, const Mat<T>& B) {
    const std::size_t n = A.rows();
    std::vector<T> xs, ys;
    T pt = FieldOps<T>::zero();
    for (std::size_t i = 0; i <= n; ++i) {
        Mat<T> p = A;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p(r, c) = T(T(pt * A(r, c)) + B(r, c));
        xs.push_back(pt);
        ys.push_back(determinant(p));
        pt = T(pt + FieldOps<T>::one());
    }
    return interpolate(xs, ys);
}

// A square polynomial carrier of the finite spectrum: det of the pencil when
// square with full normal rank, otherwise det of a random exact compression
// U (lambda A + B) V validated at a clean point.  Its roots form a superset
// of the finite eigenvalues; spurious roots are filtered by the f-adic pass.
template <class T>
Poly<T> spectrum_poly(const Mat<T>& A, const Mat<T>& B, std::size_t r, const T& clean_point) {
    const std::size_t m = A.rows(), n = A.cols();
    if (r == 0) return Poly<T>::constant(FieldOps<T>::one());
    if (r == m && r == n) return pencil_det_poly(A, B);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat<T> u(r, m), v(n, r);
        auto fill = [&](Mat<T>& x) {
            for (std::size_t i = 0; i < x.rows(); ++i)
                for (std::size_t j = 0; j < x.cols(); ++j) {
                    int val = dist(rng);
                    T t = FieldOps<T>::zero();
                    bool neg = val < 0;
                    for (int s = 0; s < std::abs(val); ++s) t = T(t + FieldOps<T>::one());
                    x(i, j) = neg ? T(FieldOps<T>::zero() - t) : t;
                }
        };
        fill(u);
        fill(v);
        Mat<T> ca = u * A * v, cb = u * B * v;
        // validate at the clean point
        Mat<T> p = ca;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) p(i, j) = T(T(clean_point * ca(i, j)) + cb(i, j));
        if (FieldOps<T>::is_zero(determinant(p))) continue;
        return pencil_det_poly(ca, cb);
    }
    throw std::logic_error("could not build a nonsingular compression of the pencil");
}

struct StructureCommon {
    std::vector<std::size_t> right, left, infinite;
    std::size_t normal_rank = 0;
    std::size_t n_minus_r = 0;
};

template <class T>
StructureCommon singular_and_infinite(const Mat<T>& A, const Mat<T>& B, T* clean_point) {
    StructureCommon sc;
    sc.normal_rank = normal_rank(A, B, clean_point);
    sc.n_minus_r = A.cols() - sc.normal_rank;
    sc.right = minimal_indices(A, B, A.cols() - sc.normal_rank);
    sc.left = minimal_indices(A.transpose(), B.transpose(), A.rows() - sc.normal_rank);
    // Infinite part: the root-0 structure of the reversed pencil lambda B + A.
    Poly<T> lam(std::vector<T>{FieldOps<T>::zero(), FieldOps<T>::one()});
    sc.infinite = fadic_sizes(B, A, lam, sc.n_minus_r);
    return sc;
}

void check_bookkeeping(std::size_t m, std::size_t n, const StructureCommon& sc,
                       std::size_t regular_total) {
    std::size_t rows = regular_total, cols = regular_total;
    for (std::size_t e : sc.right) {
        rows += e;
        cols += e + 1;
    }
    for (std::size_t e : sc.left) {
        rows += e + 1;
        cols += e;
    }
    for (std::size_t e : sc.infinite) {
        rows += e;
        cols += e;
    }
    if (rows != m || cols != n)
        throw std::logic_error("pencil structure bookkeeping mismatch: some eigenvalue escaped "
                               "the exact factorization");
}

}  // namespace

// ---- RealKcf -----------------------------------------------------------------

void RealKcf::normalize() {
    std::sort(right_minimal.begin(), right_minimal.end());
    std::sort(left_minimal.begin(), left_minimal.end());
    std::sort(infinite.begin(), infinite.end());
    std::sort(real_jordan.begin(), real_jordan.end(), [](const auto& x, const auto& y) {
        int c = compare(x.first, y.first);
        return c != 0 ? c < 0 : x.second < y.second;
    });
    std::sort(complex_jordan.begin(), complex_jordan.end(), [](const auto& x, const auto& y) {
        int c = compare(std::get<0>(x), std::get<0>(y));
        if (c != 0) return c < 0;
        c = compare(std::get<1>(x), std::get<1>(y));
        if (c != 0) return c < 0;
        return std::get<2>(x) < std::get<2>(y);
    });
}

bool kcf_equal(const RealKcf& x, const RealKcf& y) {
    RealKcf a = x, b = y;
    a.normalize();
    b.normalize();
    return a == b;
}

bool kcf_equal(const ComplexKcf& x, const ComplexKcf& y) {
    ComplexKcf a = x, b = y;
    a.normalize();
    b.normalize();
    return a == b;
}

void ComplexKcf::normalize() {
    std::sort(right_minimal.begin(), right_minimal.end());
    std::sort(left_minimal.begin(), left_minimal.end());
    std::sort(infinite.begin(), infinite.end());
    std::sort(jordan.begin(), jordan.end(), [](const auto& x, const auto& y) {
        int c = compare(x.first, y.first);
        return c != 0 ? c < 0 : x.second < y.second;
    });
}

namespace {

json quad_to_json(const QuadScalar& s) {
    if (s.is_rational()) return json(rat_to_string(s.as_rational()));
    // minimal polynomial x^2 + c1 x + c0 and the conjugate-selection tag
    const Rational p = s.rat_part();
    Rational c1 = -2 * p;
    Rational c0 = p * p - s.rad_coeff() * s.rad_coeff() * Rational(s.radicand());
    json j;
    j["minpoly"] = json::array({rat_to_string(c0), rat_to_string(c1), "1"});
    j["which"] = sgn(s.rad_coeff()) > 0 ? "+" : "-";
    return j;
}

}  // namespace

std::string RealKcf::to_json() const {
    RealKcf k = *this;
    k.normalize();
    json j;
    j["right"] = k.right_minimal;
    j["left"] = k.left_minimal;
    j["inf"] = k.infinite;
    json re = json::array();
    for (const auto& [mu, sz] : k.real_jordan) re.push_back(json::array({quad_to_json(mu), sz}));
    j["real"] = std::move(re);
    json co = json::array();
    for (const auto& [a, b, sz] : k.complex_jordan)
        co.push_back(json::array({quad_to_json(a), quad_to_json(b), sz}));
    j["complex"] = std::move(co);
    return j.dump();
}

RealKcf real_kcf(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("real_kcf: pair shape mismatch");
    RealKcf out;
    Rational clean(0);
    StructureCommon sc = singular_and_infinite(a, b, &clean);
    out.right_minimal = sc.right;
    out.left_minimal = sc.left;
    out.infinite = sc.infinite;

    std::size_t regular_total = 0;
    for (std::size_t e : sc.infinite) regular_total += e;

    if (sc.normal_rank > 0) {
        Poly<Rational> p = spectrum_poly(a, b, sc.normal_rank, clean);
        Poly<Rational> rad = squarefree_radical(p);
        RationalFactorization fac = factor_squarefree_rational(rad);
        for (const Rational& root : fac.roots) {
            Poly<Rational> f = Poly<Rational>::x_minus(root);
            std::vector<std::size_t> sizes = fadic_sizes(a, b, f, sc.n_minus_r);
            for (std::size_t k : sizes) {
                out.real_jordan.emplace_back(QuadScalar(Rational(-root)), k);
                regular_total += k;
            }
        }
        for (const auto& [u, v] : fac.quadratics) {
            Poly<Rational> f(std::vector<Rational>{v, u, rat(1)});
            std::vector<std::size_t> sizes = fadic_sizes(a, b, f, sc.n_minus_r);
            if (sizes.empty()) continue;
            Rational disc = u * u - 4 * v;
            if (sgn(disc) < 0) {
                // conjugate pencil roots -u/2 +- i sqrt(-disc)/2; the block
                // parameters are a = u/2, b = sqrt(-disc)/2 > 0.
                QuadScalar aa(Rational(u / 2));
                QuadScalar bb = QuadScalar(rat(1, 2)) * QuadScalar::sqrt_of(Rational(-disc));
                for (std::size_t k : sizes) {
                    out.complex_jordan.emplace_back(aa, bb, k);
                    regular_total += 2 * k;
                }
            } else {
                // two real quadratic-extension eigenvalues mu = (u -+ sqrt(disc))/2
                QuadScalar h(Rational(u / 2));
                QuadScalar rt = QuadScalar(rat(1, 2)) * QuadScalar::sqrt_of(disc);
                for (std::size_t k : sizes) {
                    out.real_jordan.emplace_back(h + rt, k);
                    out.real_jordan.emplace_back(h - rt, k);
                    regular_total += 2 * k;
                }
            }
        }
    }
    check_bookkeeping(a.rows(), a.cols(), sc, regular_total);
    out.normalize();
    return out;
}

ComplexKcf complex_kcf(const GaussMat& a, const GaussMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("complex_kcf: pair shape mismatch");
    ComplexKcf out;
    Gaussian clean;
    StructureCommon sc = singular_and_infinite(a, b, &clean);
    out.right_minimal = sc.right;
    out.left_minimal = sc.left;
    out.infinite = sc.infinite;

    std::size_t regular_total = 0;
    for (std::size_t e : sc.infinite) regular_total += e;

    if (sc.normal_rank > 0) {
        Poly<Gaussian> p = spectrum_poly(a, b, sc.normal_rank, clean);
        Poly<Gaussian> rad = squarefree_radical(p);
        for (const Gaussian& root : roots_squarefree_gaussian(rad)) {
            Poly<Gaussian> f = Poly<Gaussian>::x_minus(root);
            std::vector<std::size_t> sizes = fadic_sizes(a, b, f, sc.n_minus_r);
            for (std::size_t k : sizes) {
                out.jordan.emplace_back(-root, k);
                regular_total += k;
            }
        }
    }
    check_bookkeeping(a.rows(), a.cols(), sc, regular_total);
    out.normalize();
    return out;
}

// ---- expected tables ----------------------------------------------------------

namespace {

void jordan_zero_pair(std::size_t k, RealKcf& out) {
    if (k % 2 == 1) {
        const std::size_t l = (k - 1) / 2;
        out.right_minimal.push_back(l);
        out.left_minimal.push_back(l);
    } else {
        const std::size_t l = k / 2;
        out.infinite.push_back(l);
        out.real_jordan.emplace_back(QuadScalar(rat(0)), l);
    }
}

void gamma_n_rows(std::size_t k, const NParam& n, RealKcf& out) {
    if (!n.rotation) {
        out.real_jordan.emplace_back(QuadScalar(rat(k % 2 == 1 ? 1 : -1)), k);
        return;
    }
    if (n.a.is_zero()) {
        // a = 0, b = 1: doubled real Jordan at (-1)^k
        QuadScalar mu(rat(k % 2 == 0 ? 1 : -1));
        out.real_jordan.emplace_back(mu, k);
        out.real_jordan.emplace_back(mu, k);
        return;
    }
    QuadScalar c = n.a.squared() - n.b.squared();
    if (k % 2 == 0) c = -c;  // (-1)^{k+1} factor
    QuadScalar d = (QuadScalar(rat(2)) * n.a * n.b).abs();
    out.complex_jordan.emplace_back(c, d, k);
}

QuadScalar quad_inv(const QuadScalar& x) { return x.inverse(); }

}  // namespace

RealKcf expected_real_kcf(const CanonicalBlock& blk) {
    blk.validate();
    RealKcf out;
    switch (blk.family) {
        case Family::R1i:
            jordan_zero_pair(blk.k, out);
            break;
        case Family::R1ii:
            gamma_n_rows(blk.k, *blk.N, out);
            break;
        case Family::R1iii: {
            out.real_jordan.emplace_back(*blk.a, blk.k);
            out.real_jordan.emplace_back(quad_inv(*blk.a), blk.k);
            break;
        }
        case Family::R1iv: {
            QuadScalar nrm = blk.a->squared() + blk.b->squared();
            out.complex_jordan.emplace_back(*blk.a, *blk.b, blk.k);
            out.complex_jordan.emplace_back(*blk.a / nrm, *blk.b / nrm, blk.k);
            break;
        }
        case Family::R2TriI: {
            if (blk.a->is_zero()) {
                jordan_zero_pair(blk.k, out);
            } else {
                const std::size_t l = blk.k / 2;
                out.real_jordan.emplace_back(*blk.a, l);
                out.real_jordan.emplace_back(quad_inv(*blk.a), l);
            }
            break;
        }
        case Family::R2TriII: {
            QuadScalar nrm = blk.a->squared() + blk.b->squared();
            out.complex_jordan.emplace_back(*blk.a, *blk.b, blk.k);
            out.complex_jordan.emplace_back(*blk.a / nrm, *blk.b / nrm, blk.k);
            break;
        }
        case Family::R2TriIII:
            gamma_n_rows(blk.k, *blk.N, out);
            break;
        default:
            throw std::invalid_argument("expected_real_kcf: block family has no real table row");
    }
    out.normalize();
    return out;
}

ComplexKcf expected_complex_kcf(const CanonicalBlock& blk) {
    blk.validate();
    ComplexKcf out;
    auto zero_rows = [&](std::size_t k) {
        if (k % 2 == 1) {
            out.right_minimal.push_back((k - 1) / 2);
            out.left_minimal.push_back((k - 1) / 2);
        } else {
            out.infinite.push_back(k / 2);
            out.jordan.emplace_back(Gaussian(rat(0)), k / 2);
        }
    };
    switch (blk.family) {
        case Family::HSType0:
            zero_rows(blk.k);
            break;
        case Family::HSTypeI: {
            Gaussian m2 = *blk.mu * *blk.mu;
            if (blk.k % 2 == 0) m2 = -m2;
            out.jordan.emplace_back(m2, blk.k);
            break;
        }
        case Family::HSTypeII: {
            out.jordan.emplace_back(*blk.mu, blk.k);
            out.jordan.emplace_back(Gaussian(rat(1)) / blk.mu->conj(), blk.k);
            break;
        }
        case Family::FHSTriI: {
            if (blk.mu->is_zero()) {
                zero_rows(blk.k);
            } else {
                const std::size_t l = blk.k / 2;
                out.jordan.emplace_back(*blk.mu, l);
                out.jordan.emplace_back(Gaussian(rat(1)) / blk.mu->conj(), l);
            }
            break;
        }
        case Family::FHSTriII: {
            Gaussian m2 = *blk.mu * *blk.mu;
            if (blk.k % 2 == 0) m2 = -m2;
            out.jordan.emplace_back(m2, blk.k);
            break;
        }
        default:
            throw std::invalid_argument("expected_complex_kcf: block family has no complex table row");
    }
    out.normalize();
    return out;
}

// ---- realification -------------------------------------------------------------

RealifyResult realify_equivalence(const GaussMat& r, const GaussMat& s, const RatMat& a,
                                  const RatMat& b, const RatMat& c, const RatMat& d) {
    const std::size_t m = a.rows(), n = a.cols();
    if (r.rows() != m || r.cols() != m || s.rows() != n || s.cols() != n)
        throw std::invalid_argument("realify: R must be m x m and S must be n x n");
    GaussMat ga = to_gaussian(a), gb = to_gaussian(b), gc = to_gaussian(c), gd = to_gaussian(d);
    if (!(r * ga == gc * s) || !(r * gb == gd * s))
        throw std::invalid_argument("realify: premise R(A,B) = (C,D)S fails");
    RatMat rr = real_part(r), ri = imag_part(r);
    RatMat sr = real_part(s), si = imag_part(s);
    RealifyResult res;
    const long limit = static_cast<long>(m + n) + 1;
    for (long tau = 0; tau < limit + 1; ++tau) {
        Rational t = rat(tau);
        RatMat rt = rr + t * ri;
        RatMat st = sr + t * si;
        if (sgn(determinant(rt)) == 0 || sgn(determinant(st)) == 0) continue;
        res.r = rt;
        res.s = st;
        res.tau = tau;
        res.candidates_tried = tau + 1;
        if (!(rt * a == c * st) || !(rt * b == d * st))
            throw std::logic_error("realify: realified pair fails the equivalence");
        return res;
    }
    throw std::logic_error("realify: no tau found within the degree bound");
}

// ---- float fallback ------------------------------------------------------------

namespace {

std::size_t rank_with_tol(const CMat& m, double tol, std::vector<std::string>* report) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<long>(i), static_cast<long>(j)) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
    const auto& sv = svd.singularValues();
    double mx = sv.size() ? sv(0) : 0.0;
    std::size_t r = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * std::max(1.0, mx)) ++r;
    if (report) {
        std::ostringstream os;
        os << m.rows() << "x" << m.cols() << " rank " << r << " (sigma_max " << mx;
        if (r < static_cast<std::size_t>(sv.size())) os << ", first dropped " << sv(static_cast<long>(r));
        os << ", tol " << tol << ")";
        report->push_back(os.str());
    }
    return r;
}

}  // namespace

FloatKcf real_kcf_float(const CMat& a, const CMat& b, double tol) {
    FloatKcf out;
    out.tolerance = tol;
    const std::size_t m = a.rows(), n = a.cols();
    auto rank_at = [&](std::complex<double> pt) {
        CMat p(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = pt * a(i, j) + b(i, j);
        return rank_with_tol(p, tol, &out.rank_report);
    };
    std::size_t r = 0;
    for (std::size_t i = 0; i <= std::min(m, n); ++i)
        r = std::max(r, rank_at({0.37 + static_cast<double>(i), 0.11}));
    const std::size_t right_cnt = n - r, left_cnt = m - r;

    auto min_indices = [&](const CMat& A, const CMat& B, std::size_t count) {
        std::vector<std::size_t> out_idx;
        if (count == 0) return out_idx;
        std::size_t prev_nu = 0, prev_c = 0;
        for (std::size_t d = 0;; ++d) {
            CMat t((d + 2) * A.rows(), (d + 1) * A.cols());
            for (std::size_t s = 0; s <= d; ++s) {
                t.set_block(s * A.rows(), s * A.cols(), B);
                t.set_block((s + 1) * A.rows(), s * A.cols(), A);
            }
            std::size_t nu = (d + 1) * A.cols() - rank_with_tol(t, tol, &out.rank_report);
            std::size_t c = nu - prev_nu;
            for (std::size_t i = prev_c; i < c; ++i) out_idx.push_back(d);
            if (c >= count) break;
            prev_nu = nu;
            prev_c = c;
            if (d > A.cols() + 2) break;
        }
        return out_idx;
    };
    out.right_minimal = min_indices(a, b, right_cnt);
    out.left_minimal = min_indices(a.conj_transpose(), b.conj_transpose(), left_cnt);

    // Jordan sizes at a numeric point via rank drops of the f-adic systems.
    auto sizes_at = [&](const CMat& A, const CMat& B, std::complex<double> root,
                        std::size_t n_minus_r) {
        std::vector<std::size_t> sizes;
        std::vector<std::size_t> mj;
        std::size_t prev_delta = 0;
        std::vector<std::complex<double>> fpow = {-root, 1.0};
        for (std::size_t j = 0;; ++j) {
            const std::size_t degx = fpow.size() - 1;
            CMat t((degx + 1) * A.rows(), degx * A.cols() + A.rows());
            for (std::size_t s = 0; s < degx; ++s) {
                t.set_block(s * A.rows(), s * A.cols(), B);
                t.set_block((s + 1) * A.rows(), s * A.cols(), A);
            }
            for (std::size_t cidx = 0; cidx <= degx; ++cidx)
                for (std::size_t i = 0; i < A.rows(); ++i)
                    t(cidx * A.rows() + i, degx * A.cols() + i) = -fpow[cidx];
            std::size_t dim = degx * A.cols() + A.rows() - rank_with_tol(t, tol, &out.rank_report);
            std::size_t singular = (j + 1) * n_minus_r;
            std::size_t delta = dim > singular ? dim - singular : 0;
            std::size_t mm = delta - prev_delta;
            if (mm == 0) break;
            mj.push_back(mm);
            prev_delta = delta;
            // fpow *= (x - root)
            std::vector<std::complex<double>> nf(fpow.size() + 1, 0.0);
            for (std::size_t i = 0; i < fpow.size(); ++i) {
                nf[i] += fpow[i] * (-root);
                nf[i + 1] += fpow[i];
            }
            fpow = nf;
            if (j > A.rows() + 2) break;
        }
        for (std::size_t j = 0; j < mj.size(); ++j) {
            std::size_t here = mj[j] - (j + 1 < mj.size() ? mj[j + 1] : 0);
            for (std::size_t i = 0; i < here; ++i) sizes.push_back(j + 1);
        }
        return sizes;
    };

    out.infinite = sizes_at(b, a, {0.0, 0.0}, n - r);

    if (r == m && r == n) {
        // det polynomial by numeric interpolation at n+1 points
        std::vector<std::complex<double>> xs(n + 1), ys(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            std::complex<double> pt(static_cast<double>(i), 0.0);
            Eigen::MatrixXcd e(m, n);
            for (std::size_t rr = 0; rr < m; ++rr)
                for (std::size_t cc = 0; cc < n; ++cc)
                    e(static_cast<long>(rr), static_cast<long>(cc)) = pt * a(rr, cc) + b(rr, cc);
            xs[i] = pt;
            ys[i] = e.determinant();
        }
        // Newton form coefficients -> monomial basis
        std::vector<std::complex<double>> divided = ys;
        for (std::size_t lvl = 1; lvl <= n; ++lvl)
            for (std::size_t i = n; i >= lvl; --i)
                divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - lvl]);
        std::vector<std::complex<double>> coeffs{divided[n]};
        for (std::size_t i = n; i-- > 0;) {
            std::vector<std::complex<double>> nc(coeffs.size() + 1, 0.0);
            for (std::size_t t = 0; t < coeffs.size(); ++t) {
                nc[t + 1] += coeffs[t];
                nc[t] -= coeffs[t] * xs[i];
            }
            nc[0] += divided[i];
            coeffs = nc;
        }
        std::vector<std::complex<double>> roots = numeric_roots(coeffs);
        std::vector<std::complex<double>> reps;
        for (const auto& z : roots) {
            bool found = false;
            for (const auto& w : reps)
                if (std::abs(z - w) < 1e-5 * std::max(1.0, std::abs(z))) found = true;
            if (!found) reps.push_back(z);
        }
        for (const auto& z : reps) {
            std::vector<std::size_t> sizes = sizes_at(a, b, z, 0);
            for (std::size_t k : sizes) out.jordan.emplace_back(-z.real(), -z.imag(), k);
        }
    }
    return out;
}

}  // namespace realcong
