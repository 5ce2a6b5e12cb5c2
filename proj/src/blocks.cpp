#include "realcong/blocks.hpp"

#include <algorithm>
#include <sstream>

namespace realcong {

RatMat gamma(std::size_t k) {
    if (k == 0) throw std::invalid_argument("gamma: k must be >= 1");
    RatMat m(k, k);
    for (std::size_t r = 1; r <= k; ++r) {
        Rational s = rat((k - r) % 2 == 0 ? 1 : -1);
        m(r - 1, k - r) = s;             // anti-diagonal
        if (k - r + 2 <= k) m(r - 1, k - r + 1) = s;  // just right of it
    }
    return m;
}

RatMat gamma_tilde(std::size_t k) {
    if (k == 0) throw std::invalid_argument("gamma_tilde: k must be >= 1");
    RatMat m(k, k);
    m(0, 0) = rat(1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        m(i, i + 1) = rat(1);
        m(i + 1, i) = rat(i % 2 == 0 ? -1 : 1);
    }
    return m;
}

RatMat c_rot(const Rational& a, const Rational& b) {
    RatMat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = -b;
    m(1, 1) = a;
    return m;
}

RatMat c_jordan(std::size_t k, const Rational& a, const Rational& b) {
    if (k == 0) throw std::invalid_argument("c_jordan: k must be >= 1");
    RatMat m(2 * k, 2 * k);
    RatMat c = c_rot(a, b);
    for (std::size_t i = 0; i < k; ++i) {
        m.set_block(2 * i, 2 * i, c);
        if (i + 1 < k) m.set_block(2 * i, 2 * (i + 1), RatMat::identity(2));
    }
    return m;
}

RatMat h_hat(std::size_t k, const Rational& a, const Rational& b) {
    if (k == 0) throw std::invalid_argument("h_hat: k must be >= 1");
    RatMat m(4 * k, 4 * k);
    m.set_block(0, 2 * k, RatMat::identity(2 * k));
    m.set_block(2 * k, 0, c_jordan(k, a, b));
    return m;
}

RatMat t_hat(std::size_t k, const Rational& a, const Rational& b) {
    if (k == 0) throw std::invalid_argument("t_hat: k must be >= 1");
    RatMat m(2 * k, 2 * k);
    RatMat c = c_rot(a, b);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        m.set_block(2 * i, 2 * (i + 1), RatMat::identity(2));
        m.set_block(2 * (i + 1), 2 * i, c);
    }
    return m;
}

RatMat f_block(std::size_t k) {
    RatMat m(k, k + 1);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = rat(1);
    return m;
}

RatMat g_block(std::size_t k) {
    RatMat m(k, k + 1);
    for (std::size_t i = 0; i < k; ++i) m(i, i + 1) = rat(1);
    return m;
}

RatMat lw_L(std::size_t k) {
    RatMat m(k + 1, k);
    for (std::size_t j = 0; j < k; ++j) {
        m(j, j) = rat(1);
        m(j + 1, j) = rat(1);
    }
    return m;
}

RatMat lw_Lplus(std::size_t k) {
    RatMat m(k, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = rat(1);
        m(i, i + 1) = rat(-1);
    }
    return m;
}

RatMat lw_Delta(std::size_t k) {
    if (k == 0) throw std::invalid_argument("Delta: k must be >= 1");
    RatMat m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, k - 1 - i) = rat(1);
    return m;
}

RatMat lw_Lambda(std::size_t k) {
    if (k == 0) throw std::invalid_argument("Lambda: k must be >= 1");
    RatMat m(k, k);
    // ones at (i, k+2-i) in 1-based indexing, i = 2..k
    for (std::size_t i = 2; i <= k; ++i) m(i - 1, k + 1 - i) = rat(1);
    return m;
}

RatMat lw_SDelta(std::size_t k) {
    if (k == 0) throw std::invalid_argument("SDelta: k must be >= 1");
    RatMat m(k, k);
    if (k % 2 == 0) {
        const std::size_t h = k / 2;
        m.set_block(0, h, lw_Delta(h));
        m.set_block(h, 0, -lw_Delta(h));
    } else if (k > 1) {
        const std::size_t h = (k - 1) / 2;
        m.set_block(1, 1 + h, lw_Delta(h));
        m.set_block(1 + h, 1, -lw_Delta(h));
    }
    return m;
}

RatMat lw_m3(std::size_t k) {
    RatMat m(2 * k + 1, 2 * k + 1);
    m.set_block(0, k + 1, lw_L(k));
    m.set_block(k + 1, 0, lw_Lplus(k));
    return m;
}

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Rational eps_rat(int eps) {
    require(eps == 1 || eps == -1, "eps must be +1 or -1");
    return rat(eps);
}

// Anti-block-diagonal pattern shared by beta4' and the beta5' half-blocks:
// A at block (i, k+1-i) for i = 1..k, B at block (i, k+2-i) for i = 2..k.
RatMat z_pattern(std::size_t k, const RatMat& A, const RatMat& B) {
    const std::size_t n = A.rows();
    RatMat m(n * k, n * k);
    for (std::size_t i = 1; i <= k; ++i) {
        m.set_block((i - 1) * n, (k - i) * n, A);
        if (i >= 2) m.set_block((i - 1) * n, (k + 1 - i) * n, B);
    }
    return m;
}

}  // namespace

RatMat lw_inf4(std::size_t k, int eps) {
    require(k >= 1 && k % 2 == 0, "inf4: k must be even and >= 2");
    return eps_rat(eps) * (lw_SDelta(k) + lw_Lambda(k));
}

RatMat lw_inf5(std::size_t k) {
    require(k % 2 == 1, "inf5: k must be odd");
    RatMat m(2 * k, 2 * k);
    m.set_block(0, k, lw_Delta(k) + lw_Lambda(k));
    m.set_block(k, 0, -lw_Delta(k) + lw_Lambda(k));
    return m;
}

RatMat lw_o3(std::size_t k, int eps) {
    require(k % 2 == 1, "o3: k must be odd");
    return eps_rat(eps) * (lw_Delta(k) + lw_SDelta(k));
}

RatMat lw_o4(std::size_t k) {
    require(k >= 1 && k % 2 == 0, "o4: k must be even and >= 2");
    RatMat m(2 * k, 2 * k);
    m.set_block(0, k, lw_Delta(k) + lw_Lambda(k));
    m.set_block(k, 0, lw_Delta(k) - lw_Lambda(k));
    return m;
}

RatMat lw_alpha3(std::size_t k, const Rational& alpha) {
    require(k >= 1, "alpha3: k must be >= 1");
    require(sgn(alpha) > 0, "alpha3: alpha must be positive");
    RatMat m(2 * k, 2 * k);
    m.set_block(0, k, (alpha + 1) * lw_Delta(k) + lw_Lambda(k));
    m.set_block(k, 0, (-alpha + 1) * lw_Delta(k) - lw_Lambda(k));
    return m;
}

RatMat lw_beta4(std::size_t k, int eps, const Rational& b, bool allow_degenerate) {
    require(k >= 1, "beta4: k must be >= 1");
    if (!allow_degenerate) require(sgn(b) != 0, "beta4: b must be nonzero");
    Rational ab = abs_val(b);
    RatMat R(2, 2);
    R(0, 0) = rat(1);
    R(0, 1) = ab;
    R(1, 0) = -ab;
    R(1, 1) = rat(1);
    RatMat S(2, 2);
    S(0, 1) = rat(1);
    S(1, 0) = rat(-1);
    return eps_rat(eps) * z_pattern(k, R, S);
}

RatMat lw_beta5(std::size_t k, const Rational& a, const Rational& b, bool allow_degenerate) {
    require(k >= 1, "beta5: k must be >= 1");
    if (!allow_degenerate) require(sgn(a) != 0 && sgn(b) != 0, "beta5: need a != 0 and b != 0");
    RatMat T(2, 2), Rp(2, 2), Sp(2, 2);
    T(0, 0) = b;
    T(0, 1) = a - 1;
    T(1, 0) = a - 1;
    T(1, 1) = -b;
    Rp(0, 0) = b;
    Rp(0, 1) = a + 1;
    Rp(1, 0) = a + 1;
    Rp(1, 1) = -b;
    Sp(0, 1) = rat(1);
    Sp(1, 0) = rat(1);
    RatMat m(4 * k, 4 * k);
    m.set_block(0, 2 * k, z_pattern(k, Rp, Sp));
    m.set_block(2 * k, 0, z_pattern(k, -T, -Sp));
    return m;
}

// --- CanonicalBlock ----------------------------------------------------------

const char* family_name(Family f) {
    switch (f) {
        case Family::HSType0: return "HSType0";
        case Family::HSTypeI: return "HSTypeI";
        case Family::HSTypeII: return "HSTypeII";
        case Family::FHSTriI: return "FHSTriI";
        case Family::FHSTriII: return "FHSTriII";
        case Family::R1i: return "R1i";
        case Family::R1ii: return "R1ii";
        case Family::R1iii: return "R1iii";
        case Family::R1iv: return "R1iv";
        case Family::R2TriI: return "R2TriI";
        case Family::R2TriII: return "R2TriII";
        case Family::R2TriIII: return "R2TriIII";
        case Family::LWm3: return "LWm3";
        case Family::LWinf4: return "LWinf4";
        case Family::LWinf5: return "LWinf5";
        case Family::LWo3: return "LWo3";
        case Family::LWo4: return "LWo4";
        case Family::LWalpha3: return "LWalpha3";
        case Family::LWbeta4: return "LWbeta4";
        case Family::LWbeta5: return "LWbeta5";
    }
    return "?";
}

std::size_t CanonicalBlock::size() const {
    switch (family) {
        case Family::HSType0:
        case Family::FHSTriI:
        case Family::FHSTriII:
        case Family::R1i:
        case Family::R2TriI: return k;
        case Family::HSTypeI: return k;
        case Family::HSTypeII: return 2 * k;
        case Family::R1ii: return (N && N->rotation) ? 2 * k : k;
        case Family::R1iii: return 2 * k;
        case Family::R1iv: return 4 * k;
        case Family::R2TriII: return 4 * k;
        case Family::R2TriIII: return (N && N->rotation) ? 2 * k : k;
        case Family::LWm3: return 2 * k + 1;
        case Family::LWinf4:
        case Family::LWo3: return k;
        case Family::LWinf5:
        case Family::LWo4:
        case Family::LWalpha3:
        case Family::LWbeta4: return 2 * k;
        case Family::LWbeta5: return 4 * k;
    }
    return 0;
}

namespace {

Rational g_norm2(const Gaussian& g) { return g.norm2(); }

}  // namespace

void CanonicalBlock::validate(bool allow_degenerate) const {
    switch (family) {
        case Family::HSType0:
        case Family::R1i:
            require(k >= 1, "k must be >= 1");
            return;
        case Family::HSTypeI:
            require(k >= 1 && mu.has_value(), "HSTypeI needs k >= 1 and mu");
            require(g_norm2(*mu) == 1, "HSTypeI: |mu| must be 1");
            return;
        case Family::HSTypeII:
            require(k >= 1 && mu.has_value(), "HSTypeII needs k >= 1 and mu");
            require(compare(g_norm2(*mu), rat(1)) > 0, "HSTypeII: |mu| must exceed 1");
            return;
        case Family::FHSTriI:
            require(k >= 1 && mu.has_value(), "FHSTriI needs k >= 1 and mu");
            require(g_norm2(*mu) != 1, "FHSTriI: |mu| must differ from 1");
            if (k % 2 == 1) require(mu->is_zero(), "FHSTriI: mu must be 0 for odd k");
            return;
        case Family::FHSTriII:
            require(k >= 1 && mu.has_value(), "FHSTriII needs k >= 1 and mu");
            require(g_norm2(*mu) == 1, "FHSTriII: |mu| must be 1");
            return;
        case Family::R1ii:
        case Family::R2TriIII: {
            require(k >= 1 && N.has_value(), "Gamma(x)N block needs k >= 1 and N");
            if (N->rotation) {
                QuadScalar nrm = N->a.squared() + N->b.squared();
                require(nrm == QuadScalar(rat(1)), "rotation N: a^2 + b^2 must be 1");
                require(N->b.sign() > 0, "rotation N: b must be positive");
            } else {
                require(N->sign == 1 || N->sign == -1, "N sign must be +1 or -1");
            }
            return;
        }
        case Family::R1iii: {
            require(k >= 1 && a.has_value(), "R1iii needs k >= 1 and a");
            QuadScalar abs_a = a->abs();
            require(abs_a.sign() > 0 && (abs_a - QuadScalar(rat(1))).sign() < 0,
                    "R1iii: need 0 < |a| < 1");
            return;
        }
        case Family::R1iv: {
            require(k >= 1 && a.has_value() && b.has_value(), "R1iv needs k >= 1, a, b");
            QuadScalar nrm = a->squared() + b->squared();
            require((nrm - QuadScalar(rat(1))).sign() < 0, "R1iv: need a^2 + b^2 < 1");
            require(b->sign() > 0, "R1iv: need b > 0");
            return;
        }
        case Family::R2TriI: {
            require(k >= 1 && a.has_value(), "R2TriI needs k >= 1 and a");
            require((a->abs() - QuadScalar(rat(1))).sign() != 0, "R2TriI: a must differ from +-1");
            if (k % 2 == 1) require(a->is_zero(), "R2TriI: a must be 0 for odd k");
            return;
        }
        case Family::R2TriII: {
            require(k >= 1 && a.has_value() && b.has_value(), "R2TriII needs k >= 1, a, b");
            QuadScalar nrm = a->squared() + b->squared();
            require((nrm - QuadScalar(rat(1))).sign() != 0, "R2TriII: a^2 + b^2 must differ from 1");
            require(b->sign() > 0, "R2TriII: need b > 0");
            require((nrm - QuadScalar(rat(1))).sign() < 0,
                    "R2TriII: normalized to a^2 + b^2 < 1");
            return;
        }
        case Family::LWm3:
            return;  // any k >= 0
        case Family::LWinf4:
            require(k >= 1 && k % 2 == 0, "inf4: k must be even");
            require(eps == 1 || eps == -1, "eps must be +-1");
            return;
        case Family::LWinf5:
            require(k % 2 == 1, "inf5: k must be odd");
            return;
        case Family::LWo3:
            require(k % 2 == 1, "o3: k must be odd");
            require(eps == 1 || eps == -1, "eps must be +-1");
            return;
        case Family::LWo4:
            require(k >= 1 && k % 2 == 0, "o4: k must be even");
            return;
        case Family::LWalpha3:
            require(k >= 1 && alpha.has_value(), "alpha3 needs k >= 1 and alpha");
            require(sgn(*alpha) > 0, "alpha3: alpha must be positive");
            return;
        case Family::LWbeta4:
            require(k >= 1 && b.has_value() && b->is_rational(), "beta4 needs k >= 1 and rational b");
            require(eps == 1 || eps == -1, "eps must be +-1");
            if (!allow_degenerate) require(b->sign() != 0, "beta4: b must be nonzero");
            return;
        case Family::LWbeta5:
            require(k >= 1 && a.has_value() && b.has_value() && a->is_rational() &&
                        b->is_rational(),
                    "beta5 needs k >= 1 and rational a, b");
            if (!allow_degenerate)
                require(a->sign() != 0 && b->sign() != 0, "beta5: need a != 0 and b != 0");
            return;
    }
}

namespace {

std::string scalar_spec(const QuadScalar& s) { return s.to_string(); }

}  // namespace

std::string CanonicalBlock::to_spec() const {
    std::ostringstream os;
    os << family_name(family) << "(k=" << k;
    if (mu) os << ",mu=" << gaussian_to_string(*mu);
    if (a) os << ",a=" << scalar_spec(*a);
    if (b) os << ",b=" << scalar_spec(*b);
    if (alpha) os << ",alpha=" << rat_to_string(*alpha);
    if (family == Family::LWinf4 || family == Family::LWo3 || family == Family::LWbeta4)
        os << ",eps=" << (eps > 0 ? "+1" : "-1");
    if (N) {
        if (N->rotation)
            os << ",N=C(" << scalar_spec(N->a) << "," << scalar_spec(N->b) << ")";
        else
            os << ",N=" << (N->sign > 0 ? "+1" : "-1");
    }
    os << ")";
    return os.str();
}

int compare(const CanonicalBlock& x, const CanonicalBlock& y) {
    if (x.family != y.family) return static_cast<int>(x.family) < static_cast<int>(y.family) ? -1 : 1;
    if (x.k != y.k) return x.k < y.k ? -1 : 1;
    auto cmp_opt = [](const auto& a, const auto& b, auto cmpfun) -> int {
        if (a.has_value() != b.has_value()) return a.has_value() ? 1 : -1;
        if (!a) return 0;
        return cmpfun(*a, *b);
    };
    int c = cmp_opt(x.mu, y.mu, [](const Gaussian& a, const Gaussian& b) { return compare(a, b); });
    if (c) return c;
    c = cmp_opt(x.a, y.a, [](const QuadScalar& a, const QuadScalar& b) { return compare(a, b); });
    if (c) return c;
    c = cmp_opt(x.b, y.b, [](const QuadScalar& a, const QuadScalar& b) { return compare(a, b); });
    if (c) return c;
    c = cmp_opt(x.alpha, y.alpha,
                [](const Rational& a, const Rational& b) { return compare(a, b); });
    if (c) return c;
    if (x.eps != y.eps) return x.eps > y.eps ? -1 : 1;  // +1 before -1
    auto nkey = [](const NParam& n) -> int { return n.rotation ? 2 : (n.sign > 0 ? 0 : 1); };
    c = cmp_opt(x.N, y.N, [&](const NParam& a, const NParam& b) -> int {
        if (nkey(a) != nkey(b)) return nkey(a) < nkey(b) ? -1 : 1;
        if (!a.rotation) return 0;
        int cc = compare(a.a, b.a);
        return cc ? cc : compare(a.b, b.b);
    });
    return c;
}

namespace {

Rational quad_as_rat(const QuadScalar& s, const char* what) {
    if (!s.is_rational())
        throw std::invalid_argument(std::string(what) +
                                    ": parameter lies in a quadratic extension, no exact "
                                    "rational matrix exists");
    return s.as_rational();
}

RatMat n_matrix(const NParam& n) {
    if (!n.rotation) {
        RatMat m(1, 1);
        m(0, 0) = rat(n.sign);
        return m;
    }
    return c_rot(quad_as_rat(n.a, "N"), quad_as_rat(n.b, "N"));
}

}  // namespace

RatMat realize_rational(const CanonicalBlock& blk, bool allow_degenerate) {
    blk.validate(allow_degenerate);
    switch (blk.family) {
        case Family::HSType0: return jordan(blk.k, rat(0));
        case Family::HSTypeI: {
            if (!blk.mu->is_real()) throw std::invalid_argument("HSTypeI: complex mu");
            return blk.mu->re * gamma(blk.k);
        }
        case Family::HSTypeII: {
            if (!blk.mu->is_real()) throw std::invalid_argument("HSTypeII: complex mu");
            return h_block(blk.k, blk.mu->re);
        }
        case Family::FHSTriI: {
            if (!blk.mu->is_real()) throw std::invalid_argument("FHSTriI: complex mu");
            return t_block(blk.k, blk.mu->re);
        }
        case Family::FHSTriII: {
            if (!blk.mu->is_real()) throw std::invalid_argument("FHSTriII: complex mu");
            return blk.mu->re * gamma_tilde(blk.k);
        }
        case Family::R1i: return jordan(blk.k, rat(0));
        case Family::R1ii: return kron(gamma(blk.k), n_matrix(*blk.N));
        case Family::R1iii: return h_block(blk.k, quad_as_rat(*blk.a, "R1iii"));
        case Family::R1iv:
            return h_hat(blk.k, quad_as_rat(*blk.a, "R1iv"), quad_as_rat(*blk.b, "R1iv"));
        case Family::R2TriI: return t_block(blk.k, quad_as_rat(*blk.a, "R2TriI"));
        case Family::R2TriII:
            return t_hat(2 * blk.k, quad_as_rat(*blk.a, "R2TriII"),
                         quad_as_rat(*blk.b, "R2TriII"));
        case Family::R2TriIII: return kron(gamma_tilde(blk.k), n_matrix(*blk.N));
        case Family::LWm3: return lw_m3(blk.k);
        case Family::LWinf4: return lw_inf4(blk.k, blk.eps);
        case Family::LWinf5: return lw_inf5(blk.k);
        case Family::LWo3: return lw_o3(blk.k, blk.eps);
        case Family::LWo4: return lw_o4(blk.k);
        case Family::LWalpha3: return lw_alpha3(blk.k, *blk.alpha);
        case Family::LWbeta4:
            return lw_beta4(blk.k, blk.eps, quad_as_rat(*blk.b, "beta4"), allow_degenerate);
        case Family::LWbeta5:
            return lw_beta5(blk.k, quad_as_rat(*blk.a, "beta5"), quad_as_rat(*blk.b, "beta5"),
                            allow_degenerate);
    }
    throw std::logic_error("unreachable");
}

GaussMat realize_gaussian(const CanonicalBlock& blk, bool allow_degenerate) {
    blk.validate(allow_degenerate);
    switch (blk.family) {
        case Family::HSTypeI: {
            GaussMat g = to_gaussian(gamma(blk.k));
            return *blk.mu * g;
        }
        case Family::HSTypeII: return h_block(blk.k, *blk.mu);
        case Family::FHSTriI: return t_block(blk.k, *blk.mu);
        case Family::FHSTriII: {
            GaussMat g = to_gaussian(gamma_tilde(blk.k));
            return *blk.mu * g;
        }
        default: return to_gaussian(realize_rational(blk, allow_degenerate));
    }
}

RatMat realize_form_matrix(std::vector<CanonicalBlock> blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const CanonicalBlock& x, const CanonicalBlock& y) { return compare(x, y) < 0; });
    RatMat m(0, 0);
    for (const CanonicalBlock& blk : blocks) m = direct_sum(m, realize_rational(blk));
    return m;
}

// --- Block-spec mini-language -------------------------------------------------

namespace {

Family family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"HSType0", Family::HSType0},   {"HSTypeI", Family::HSTypeI},
        {"HSTypeII", Family::HSTypeII}, {"FHSTriI", Family::FHSTriI},
        {"FHSTriII", Family::FHSTriII}, {"R1i", Family::R1i},
        {"R1ii", Family::R1ii},         {"R1iii", Family::R1iii},
        {"R1iv", Family::R1iv},         {"R2TriI", Family::R2TriI},
        {"R2TriII", Family::R2TriII},   {"R2TriIII", Family::R2TriIII},
        {"LWm3", Family::LWm3},         {"LWinf4", Family::LWinf4},
        {"LWinf5", Family::LWinf5},     {"LWo3", Family::LWo3},
        {"LWo4", Family::LWo4},         {"LWalpha3", Family::LWalpha3},
        {"LWbeta4", Family::LWbeta4},   {"LWbeta5", Family::LWbeta5},
    };
    for (const auto& [n, f] : table)
        if (name == n) return f;
    throw std::invalid_argument("unknown block family '" + name + "'");
}

// Split "a=...,b=..." on commas at parenthesis depth zero.
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

QuadScalar parse_quad_or_throw(const std::string& v, const std::string& key) {
    auto q = QuadScalar::parse(v);
    if (!q) throw std::invalid_argument("bad scalar for " + key + ": '" + v + "'");
    return *q;
}

}  // namespace

CanonicalBlock parse_block_spec(const std::string& s) {
    std::size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw std::invalid_argument("block spec must look like FAMILY(k=...): '" + s + "'");
    CanonicalBlock blk;
    blk.family = family_from_name(s.substr(0, open));
    bool have_k = false;
    for (const std::string& arg : split_args(s.substr(open + 1, s.size() - open - 2))) {
        std::size_t eq = arg.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("block spec argument must be key=value: '" + arg + "'");
        std::string key = arg.substr(0, eq);
        std::string val = arg.substr(eq + 1);
        if (key == "k") {
            blk.k = std::stoul(val);
            have_k = true;
        } else if (key == "mu") {
            auto g = parse_gaussian(val);
            if (!g) {
                auto r = parse_rational(val);
                if (!r) throw std::invalid_argument("bad mu: '" + val + "'");
                g = Gaussian(*r);
            }
            blk.mu = *g;
        } else if (key == "a") {
            blk.a = parse_quad_or_throw(val, key);
        } else if (key == "b") {
            blk.b = parse_quad_or_throw(val, key);
        } else if (key == "alpha") {
            auto r = parse_rational(val);
            if (!r) throw std::invalid_argument("bad alpha: '" + val + "'");
            blk.alpha = *r;
        } else if (key == "eps") {
            if (val == "+1" || val == "1")
                blk.eps = 1;
            else if (val == "-1")
                blk.eps = -1;
            else
                throw std::invalid_argument("bad eps: '" + val + "'");
        } else if (key == "N") {
            if (val == "+1" || val == "1") {
                blk.N = NParam::plus1();
            } else if (val == "-1") {
                blk.N = NParam::minus1();
            } else if (val.size() > 3 && val.substr(0, 2) == "C(" && val.back() == ')') {
                auto parts = split_args(val.substr(2, val.size() - 3));
                if (parts.size() != 2) throw std::invalid_argument("bad N: '" + val + "'");
                blk.N = NParam::rot(parse_quad_or_throw(parts[0], "N.a"),
                                    parse_quad_or_throw(parts[1], "N.b"));
            } else {
                throw std::invalid_argument("bad N: '" + val + "'");
            }
        } else {
            throw std::invalid_argument("unknown block spec key '" + key + "'");
        }
    }
    if (!have_k) throw std::invalid_argument("block spec is missing k: '" + s + "'");
    blk.validate(true);
    return blk;
}

std::vector<CanonicalBlock> parse_form_spec(const std::string& s) {
    std::vector<CanonicalBlock> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            out.push_back(parse_block_spec(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(parse_block_spec(cur));
    if (out.empty()) throw std::invalid_argument("empty form spec");
    return out;
}

}  // namespace realcong
