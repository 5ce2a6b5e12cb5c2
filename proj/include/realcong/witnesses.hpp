#pragma once

#include <optional>
#include <string>

#include "realcong/blocks.hpp"
#include "realcong/matrix.hpp"

namespace realcong {

enum class Relation { CongruenceT, CongruenceStar, StrictEquivalence };

const char* relation_name(Relation r);

// A transformation together with the relation it certifies.  All matrices are
// stored over the Gaussian rationals; witnesses containing a 1/sqrt(2) factor
// are stored sqrt(2)-scaled with scale = 1/2, so that the checked identity
// scale * (T A T^x) == B stays inside the exact field.
struct Witness {
    std::string name;
    Relation relation = Relation::CongruenceT;
    GaussMat transform;                  // S, or R for strict equivalence
    std::optional<GaussMat> right;       // S of (R, S) for strict equivalence
    GaussMat source_a;
    GaussMat target_a;
    std::optional<GaussMat> source_b;    // second pair members (pencil witnesses)
    std::optional<GaussMat> target_b;
    Rational scale = rat(1);
};

// Exact check of the defining identity:
//   congruence-T:     scale * (T A T^T)  == B
//   congruence-star:  scale * (T A T^*)  == B
//   strict equiv.:    scale * (R A S) == C  and  scale * (R B S) == D
bool check_witness(const Witness& w);

// W with sqrt(2) W = [[-i,-i],[1,-1]]: diag(mu, conj mu) -> C(a,b), b != 0.
Witness w_matrix(const Gaussian& mu);

// Permutation interleaving rows (1..k | k+1..2k) -> (1, k+1, 2, k+2, ...).
RatMat interleave_perm(std::size_t k);

// diag(J_k(mu), J_k(conj mu)) -> C_2k(a,b)   (unitary, sqrt(2)-scaled)
Witness u_matrix(std::size_t k, const Gaussian& mu);
// diag(T_k(mu), T_k(conj mu)) -> T_hat_2k(a,b)
Witness v_matrix(std::size_t k, const Gaussian& mu);

// M = diag(S^{-x}, S) certifies [[0,I],[A,0]] -> [[0,I],[B,0]] when
// S A S^{-1} = B; star selects * versus T.
Witness similarity_to_congruence(const GaussMat& s, const GaussMat& a, const GaussMat& b,
                                 bool star);

// [[0, J_k(mu)^{-1}], [I, 0]] maps H_2k(mu) to [[0, I], [J_k(mu)^{-*}, 0]],
// trading |mu| > 1 for 1/|mu| < 1.
Witness h_inverse_flip(std::size_t k, const Gaussian& mu);

// Perfect-shuffle permutation P(n,p) with A (x) B = P (B (x) A) P^T.
RatMat kron_commute_perm(std::size_t n, std::size_t p);

// Gamma_k -> sign * Gamma~_k through the signed permutation P_k S_k;
// sign is +1 iff k = 1, 2 (mod 4).
struct SignedWitness {
    Witness witness;
    int sign;
};
SignedWitness pks_witness(std::size_t k);

enum class LwWitnessKind { Inf4, Inf5, O3, O4, Alpha3Flip };

// The explicit congruences taking the Lee-Weinberg blocks to their
// Gamma-form images (and the alpha -> -alpha flip).
Witness lw_witness(LwWitnessKind kind, std::size_t k, int eps = +1,
                   const Rational& alpha = rat(1));

// Proof-step witnesses for the first real form and the b-sign flips.
Witness step_form1_step1(std::size_t k, const Gaussian& mu);  // diag(mu G, conj mu G) -> G (x) C(a,b)
Witness step_form1_step2(std::size_t k, const Gaussian& mu);  // diag(H(mu), H(conj mu)) -> H_hat(a,b)
Witness bflip_c(const Rational& a, const Rational& b);
Witness bflip_hhat(std::size_t k, const Rational& a, const Rational& b);
Witness bflip_that(std::size_t k, const Rational& a, const Rational& b);

}  // namespace realcong
