#include "realcong/witnesses.hpp"

namespace realcong {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::CongruenceT: return "congruence-T";
        case Relation::CongruenceStar: return "congruence-star";
        case Relation::StrictEquivalence: return "strict-equivalence";
    }
    return "?";
}

bool check_witness(const Witness& w) {
    const Gaussian s(w.scale);
    if (w.relation == Relation::StrictEquivalence) {
        if (!w.right) throw std::invalid_argument("strict equivalence witness needs (R, S)");
        GaussMat lhs_a = w.transform * w.source_a * *w.right;
        if (!(s * lhs_a == w.target_a)) return false;
        if (w.source_b.has_value() != w.target_b.has_value())
            throw std::invalid_argument("pencil witness needs both second members");
        if (w.source_b) {
            GaussMat lhs_b = w.transform * *w.source_b * *w.right;
            if (!(s * lhs_b == *w.target_b)) return false;
        }
        return true;
    }
    GaussMat tr = w.relation == Relation::CongruenceStar ? w.transform.conj_transpose()
                                                         : w.transform.transpose();
    GaussMat lhs = w.transform * w.source_a * tr;
    return s * lhs == w.target_a;
}

namespace {

// sqrt(2) * W = [[-i, -i], [1, -1]]
GaussMat sqrt2_w() {
    GaussMat w(2, 2);
    w(0, 0) = -Gaussian::i();
    w(0, 1) = -Gaussian::i();
    w(1, 0) = Gaussian(rat(1));
    w(1, 1) = Gaussian(rat(-1));
    return w;
}

void require_nonreal(const Gaussian& mu, const char* who) {
    if (sgn(mu.im) == 0)
        throw std::invalid_argument(std::string(who) + ": mu must have nonzero imaginary part");
}

GaussMat diag_pair(const GaussMat& a, const GaussMat& b) { return direct_sum(a, b); }

}  // namespace

Witness w_matrix(const Gaussian& mu) {
    require_nonreal(mu, "w_matrix");
    Witness w;
    w.name = "W";
    w.relation = Relation::CongruenceStar;
    w.transform = sqrt2_w();
    w.scale = rat(1, 2);
    GaussMat d(2, 2);
    d(0, 0) = mu;
    d(1, 1) = mu.conj();
    w.source_a = d;
    w.target_a = to_gaussian(c_rot(mu.re, mu.im));
    return w;
}

RatMat interleave_perm(std::size_t k) {
    RatMat p(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        p(2 * i, i) = rat(1);          // row i of I_2k lands in position 2i
        p(2 * i + 1, k + i) = rat(1);  // row k+i lands in position 2i+1
    }
    return p;
}

Witness u_matrix(std::size_t k, const Gaussian& mu) {
    require_nonreal(mu, "u_matrix");
    Witness w;
    w.name = "U";
    w.relation = Relation::CongruenceStar;
    w.transform = kron(to_gaussian(RatMat::identity(k)), sqrt2_w()) * to_gaussian(interleave_perm(k));
    w.scale = rat(1, 2);
    w.source_a = diag_pair(jordan(k, mu), jordan(k, mu.conj()));
    w.target_a = to_gaussian(c_jordan(k, mu.re, mu.im));
    return w;
}

Witness v_matrix(std::size_t k, const Gaussian& mu) {
    require_nonreal(mu, "v_matrix");
    Witness w;
    w.name = "V";
    w.relation = Relation::CongruenceStar;
    w.transform = kron(to_gaussian(RatMat::identity(k)), sqrt2_w()) * to_gaussian(interleave_perm(k));
    w.scale = rat(1, 2);
    w.source_a = diag_pair(t_block(k, mu), t_block(k, mu.conj()));
    w.target_a = to_gaussian(t_hat(k, mu.re, mu.im));
    return w;
}

Witness similarity_to_congruence(const GaussMat& s, const GaussMat& a, const GaussMat& b,
                                 bool star) {
    if (!s.is_square() || !a.is_square() || a.rows() != s.rows())
        throw std::invalid_argument("similarity_to_congruence: shape mismatch");
    auto sinv = inverse(s);
    if (!sinv) throw std::invalid_argument("similarity_to_congruence: S is singular");
    if (!(s * a * *sinv == b))
        throw std::invalid_argument("similarity_to_congruence: S A S^{-1} != B");
    const std::size_t n = a.rows();
    GaussMat sminus = star ? sinv->conj_transpose() : sinv->transpose();
    Witness w;
    w.name = "similarity-lift";
    w.relation = star ? Relation::CongruenceStar : Relation::CongruenceT;
    w.transform = direct_sum(sminus, s);
    GaussMat src(2 * n, 2 * n), tgt(2 * n, 2 * n);
    src.set_block(0, n, to_gaussian(RatMat::identity(n)));
    src.set_block(n, 0, a);
    tgt.set_block(0, n, to_gaussian(RatMat::identity(n)));
    tgt.set_block(n, 0, b);
    w.source_a = src;
    w.target_a = tgt;
    return w;
}

Witness h_inverse_flip(std::size_t k, const Gaussian& mu) {
    if (mu.is_zero()) throw std::invalid_argument("h_inverse_flip: mu must be nonzero");
    GaussMat j = jordan(k, mu);
    auto jinv = inverse(j);
    Witness w;
    w.name = "h-flip";
    w.relation = Relation::CongruenceStar;
    GaussMat t(2 * k, 2 * k);
    t.set_block(0, k, *jinv);
    t.set_block(k, 0, to_gaussian(RatMat::identity(k)));
    w.transform = t;
    w.source_a = h_block(k, mu);
    GaussMat tgt(2 * k, 2 * k);
    tgt.set_block(0, k, to_gaussian(RatMat::identity(k)));
    tgt.set_block(k, 0, jinv->conj_transpose());
    w.target_a = tgt;
    return w;
}

RatMat kron_commute_perm(std::size_t n, std::size_t p) {
    if (n == 0 || p == 0) throw std::invalid_argument("kron_commute_perm: sizes must be >= 1");
    RatMat m(n * p, n * p);
    // Row (i-1)p + s of A (x) B corresponds to row (s-1)n + i of B (x) A.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < p; ++s) m(i * p + s, s * n + i) = rat(1);
    return m;
}

SignedWitness pks_witness(std::size_t k) {
    if (k == 0) throw std::invalid_argument("pks_witness: k must be >= 1");
    // Column permutation built from the index maps sigma (P[i, sigma(i)] = 1):
    //   sigma(i) = k - 2i + 2   for i <= ceil(k/2),
    //   sigma(i) = 2i - k - 1   otherwise.
    RatMat p(k, k);
    const std::size_t half = (k + 1) / 2;
    for (std::size_t i = 1; i <= k; ++i) {
        std::size_t si = i <= half ? k - 2 * i + 2 : 2 * i - k - 1;
        p(i - 1, si - 1) = rat(1);
    }
    RatMat s = RatMat::identity(k);
    for (std::size_t i = 1; i <= k; ++i)
        if (i % 4 == 3) s(i - 1, i - 1) = rat(-1);
    const int sign = (k % 4 == 1 || k % 4 == 2) ? 1 : -1;

    Witness w;
    w.name = "PkSk";
    w.relation = Relation::CongruenceT;
    w.transform = to_gaussian((p * s).transpose());  // witness acts as S A S^T
    w.source_a = to_gaussian(gamma(k));
    w.target_a = to_gaussian(rat(sign) * gamma_tilde(k));
    return w;
}

namespace {

RatMat alt_diag(std::size_t n, int first) {
    RatMat m(n, n);
    int v = first;
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rat(v);
        v = -v;
    }
    return m;
}

}  // namespace

Witness lw_witness(LwWitnessKind kind, std::size_t k, int eps, const Rational& alpha) {
    Witness w;
    w.relation = Relation::CongruenceT;
    switch (kind) {
        case LwWitnessKind::Inf4: {
            // S = diag((-1)^{k/2}, (-1)^{k/2+1}, ...) (+) I_{k/2}
            w.name = "inf4";
            RatMat s = direct_sum(alt_diag(k / 2, (k / 2) % 2 == 0 ? 1 : -1),
                                  RatMat::identity(k / 2));
            w.transform = to_gaussian(s);
            w.source_a = to_gaussian(lw_inf4(k, eps));
            int scalar = eps * ((k / 2 + 1) % 2 == 0 ? 1 : -1);
            w.target_a = to_gaussian(rat(scalar) * gamma(k));
            return w;
        }
        case LwWitnessKind::Inf5: {
            // diag(1,-1,...,1) (+) I_k, then the commutation shuffle.
            w.name = "inf5";
            RatMat s = direct_sum(alt_diag(k, 1), RatMat::identity(k));
            RatMat shuffle = kron_commute_perm(k, 2);
            w.transform = to_gaussian(shuffle * s);
            w.source_a = to_gaussian(lw_inf5(k));
            w.target_a = to_gaussian(kron(gamma(k), c_rot(rat(0), rat(1))));
            return w;
        }
        case LwWitnessKind::O3: {
            w.name = "o3";
            const std::size_t h = (k - 1) / 2;
            RatMat s = direct_sum(alt_diag(h, h % 2 == 0 ? 1 : -1), RatMat::identity(k - h));
            w.transform = to_gaussian(s);
            w.source_a = to_gaussian(lw_o3(k, eps));
            int scalar = eps * (h % 2 == 0 ? 1 : -1);
            w.target_a = to_gaussian(rat(scalar) * gamma(k));
            return w;
        }
        case LwWitnessKind::O4: {
            w.name = "o4";
            RatMat s = direct_sum(alt_diag(k, -1), RatMat::identity(k));
            RatMat shuffle = kron_commute_perm(k, 2);
            w.transform = to_gaussian(shuffle * s);
            w.source_a = to_gaussian(lw_o4(k));
            w.target_a = to_gaussian(kron(gamma(k), c_rot(rat(0), rat(1))));
            return w;
        }
        case LwWitnessKind::Alpha3Flip: {
            // [[0,I],[I,0]] diag(S_k, S~_k) flips the sign of alpha.
            w.name = "alpha3-flip";
            RatMat sk = alt_diag(k, 1);
            RatMat skt(k, k);
            for (std::size_t i = 0; i < k; ++i) skt(i, i) = sk(k - 1 - i, k - 1 - i);
            RatMat swap(2 * k, 2 * k);
            swap.set_block(0, k, RatMat::identity(k));
            swap.set_block(k, 0, RatMat::identity(k));
            w.transform = to_gaussian(swap * direct_sum(sk, skt));
            w.source_a = to_gaussian(lw_alpha3(k, alpha));
            RatMat tgt(2 * k, 2 * k);
            tgt.set_block(0, k, (-alpha + 1) * lw_Delta(k) + lw_Lambda(k));
            tgt.set_block(k, 0, (alpha + 1) * lw_Delta(k) - lw_Lambda(k));
            w.target_a = to_gaussian(tgt);
            return w;
        }
    }
    throw std::invalid_argument("lw_witness: unsupported family (m3 is certified at the pencil "
                                "level; beta4/beta5 carry no explicit witness)");
}

Witness step_form1_step1(std::size_t k, const Gaussian& mu) {
    require_nonreal(mu, "step_form1_step1");
    if (mu.norm2() != 1)
        throw std::invalid_argument("step_form1_step1: |mu| must be 1");
    Witness w;
    w.name = "form1-step1";
    w.relation = Relation::CongruenceStar;
    GaussMat g = to_gaussian(gamma(k));
    w.source_a = diag_pair(mu * g, mu.conj() * g);
    w.target_a = to_gaussian(kron(gamma(k), c_rot(mu.re, mu.im)));
    // source = Pi (I (x) W)^* target (I (x) W) Pi^T, so the forward transform
    // is (I (x) W) Pi^T with Pi the commutation shuffle for D (x) Gamma.
    RatMat pi = kron_commute_perm(2, k);
    w.transform = kron(to_gaussian(RatMat::identity(k)), sqrt2_w()) * to_gaussian(pi.transpose());
    w.scale = rat(1, 2);
    return w;
}

Witness step_form1_step2(std::size_t k, const Gaussian& mu) {
    require_nonreal(mu, "step_form1_step2");
    Witness w;
    w.name = "form1-step2";
    w.relation = Relation::CongruenceStar;
    w.source_a = diag_pair(h_block(k, mu), h_block(k, mu.conj()));
    w.target_a = to_gaussian(h_hat(k, mu.re, mu.im));
    // (diag(U, U) P) source (diag(U, U) P)^* = target, with P exchanging the
    // middle two block rows of four.
    GaussMat u = kron(to_gaussian(RatMat::identity(k)), sqrt2_w()) * to_gaussian(interleave_perm(k));
    RatMat perm(4 * k, 4 * k);
    RatMat ik = RatMat::identity(k);
    perm.set_block(0, 0, ik);
    perm.set_block(k, 2 * k, ik);
    perm.set_block(2 * k, k, ik);
    perm.set_block(3 * k, 3 * k, ik);
    w.transform = direct_sum(u, u) * to_gaussian(perm);
    w.scale = rat(1, 2);
    return w;
}

Witness bflip_c(const Rational& a, const Rational& b) {
    Witness w;
    w.name = "bflip-C";
    w.relation = Relation::CongruenceT;
    w.transform = to_gaussian(lw_Delta(2));
    w.source_a = to_gaussian(c_rot(a, b));
    w.target_a = to_gaussian(c_rot(a, -b));
    return w;
}

Witness bflip_hhat(std::size_t k, const Rational& a, const Rational& b) {
    Witness w;
    w.name = "bflip-Hhat";
    w.relation = Relation::CongruenceT;
    w.transform = to_gaussian(kron(RatMat::identity(2 * k), lw_Delta(2)));
    w.source_a = to_gaussian(h_hat(k, a, b));
    w.target_a = to_gaussian(h_hat(k, a, -b));
    return w;
}

Witness bflip_that(std::size_t k, const Rational& a, const Rational& b) {
    Witness w;
    w.name = "bflip-That";
    w.relation = Relation::CongruenceT;
    w.transform = to_gaussian(kron(RatMat::identity(k), lw_Delta(2)));
    w.source_a = to_gaussian(t_hat(k, a, b));
    w.target_a = to_gaussian(t_hat(k, a, -b));
    return w;
}

}  // namespace realcong
