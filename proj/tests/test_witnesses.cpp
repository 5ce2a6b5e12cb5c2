#include <doctest.h>

#include <random>

#include "realcong/witnesses.hpp"
#include "test_util.hpp"

using namespace realcong;
using testutil::gm;
using testutil::rm;

TEST_CASE("check_witness basics") {
    Witness id;
    id.relation = Relation::CongruenceT;
    id.transform = to_gaussian(RatMat::identity(2));
    id.source_a = to_gaussian(gamma(2));
    id.target_a = to_gaussian(gamma(2));
    CHECK(check_witness(id));

    Witness inf4;
    inf4.relation = Relation::CongruenceT;
    inf4.transform = gm({{"-1", "0"}, {"0", "1"}});
    inf4.source_a = to_gaussian(lw_inf4(2, 1));
    inf4.target_a = to_gaussian(gamma(2));
    CHECK(check_witness(inf4));

    Witness wrong = id;
    wrong.target_a = to_gaussian(-gamma(2));
    CHECK(!check_witness(wrong));
}

TEST_CASE("W matrix certifies diag(mu, conj mu) -> C(a,b)") {
    Witness w = w_matrix(Gaussian(rat(0), rat(1)));
    CHECK(w.target_a == gm({{"0", "1"}, {"-1", "0"}}));
    CHECK(check_witness(w));
    Witness w2 = w_matrix(Gaussian(rat(3, 5), rat(4, 5)));
    CHECK(w2.target_a == to_gaussian(c_rot(rat(3, 5), rat(4, 5))));
    CHECK(check_witness(w2));
    CHECK_THROWS(w_matrix(Gaussian(rat(1))));
}

TEST_CASE("U and V witnesses") {
    Witness v1 = v_matrix(1, Gaussian(rat(0), rat(1)));
    CHECK(v1.source_a.is_zero());
    CHECK(v1.target_a.is_zero());
    CHECK(check_witness(v1));
    Witness u1 = u_matrix(1, Gaussian(rat(0), rat(1)));
    CHECK(u1.target_a == gm({{"0", "1"}, {"-1", "0"}}));
    CHECK(check_witness(u1));
    Witness u2 = u_matrix(2, Gaussian(rat(1, 2), rat(1, 2)));
    CHECK(u2.source_a.rows() == 4);
    CHECK(check_witness(u2));
    CHECK_THROWS(u_matrix(2, Gaussian(rat(2))));
}

TEST_CASE("similarity to congruence lift") {
    GaussMat i2 = to_gaussian(RatMat::identity(2));
    GaussMat a = to_gaussian(jordan(2, rat(0)));
    Witness w = similarity_to_congruence(i2, a, a, false);
    CHECK(w.transform == to_gaussian(RatMat::identity(4)));
    CHECK(check_witness(w));

    GaussMat s = gm({{"1", "0"}, {"0", "2"}});
    GaussMat b = s * a * *inverse(s);
    CHECK(b == gm({{"0", "1/2"}, {"0", "0"}}));
    Witness w2 = similarity_to_congruence(s, a, b, true);
    CHECK(check_witness(w2));

    CHECK_THROWS(similarity_to_congruence(s, a, a, false));  // premise fails
}

TEST_CASE("h-flip witness trades mu for its inverse") {
    Witness w = h_inverse_flip(1, Gaussian(rat(2)));
    CHECK(w.target_a == gm({{"0", "1"}, {"1/2", "0"}}));
    CHECK(check_witness(w));
    for (std::size_t k = 1; k <= 3; ++k)
        CHECK(check_witness(h_inverse_flip(k, Gaussian(rat(1), rat(1)))));
}

TEST_CASE("commutation permutation") {
    CHECK(kron_commute_perm(1, 4) == RatMat::identity(4));
    RatMat a = rm({{"1", "2"}, {"3", "4"}});
    RatMat b = rm({{"0", "1"}, {"1", "0"}});
    RatMat p = kron_commute_perm(2, 2);
    CHECK(kron(a, b) == p * kron(b, a) * p.transpose());
    std::mt19937 rng(testutil::test_seed() + 3);
    RatMat p23 = kron_commute_perm(2, 3);
    for (int t = 0; t < 20; ++t) {
        RatMat x(2, 2), y(3, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) x(i, j) = rat(static_cast<long>(rng() % 9) - 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) y(i, j) = rat(static_cast<long>(rng() % 9) - 4);
        CHECK(kron(x, y) == p23 * kron(y, x) * p23.transpose());
    }
}

TEST_CASE("PkSk witness and sign rule") {
    SignedWitness s1 = pks_witness(1);
    CHECK(s1.sign == 1);
    CHECK(s1.witness.transform == to_gaussian(RatMat::identity(1)));
    CHECK(check_witness(s1.witness));

    SignedWitness s2 = pks_witness(2);
    CHECK(s2.sign == 1);
    CHECK(s2.witness.transform == gm({{"0", "1"}, {"1", "0"}}));
    CHECK(check_witness(s2.witness));
    // the certified identity: (P2 S2)^T Gamma_2 (P2 S2) = Gamma~_2
    CHECK(s2.witness.target_a == to_gaussian(gamma_tilde(2)));

    SignedWitness s3 = pks_witness(3);
    CHECK(s3.sign == -1);
    CHECK(s3.witness.target_a == to_gaussian(-gamma_tilde(3)));
    CHECK(check_witness(s3.witness));

    for (std::size_t k = 1; k <= 12; ++k) {
        SignedWitness sk = pks_witness(k);
        CHECK(check_witness(sk.witness));
        CHECK(sk.sign == ((k % 4 == 1 || k % 4 == 2) ? 1 : -1));
    }
}

TEST_CASE("Lee-Weinberg witnesses") {
    Witness i4 = lw_witness(LwWitnessKind::Inf4, 2, 1);
    CHECK(i4.transform == gm({{"-1", "0"}, {"0", "1"}}));
    CHECK(i4.target_a == to_gaussian(gamma(2)));
    CHECK(check_witness(i4));

    Witness o4 = lw_witness(LwWitnessKind::O4, 2);
    CHECK(o4.target_a == to_gaussian(kron(gamma(2), c_rot(rat(0), rat(1)))));
    CHECK(check_witness(o4));

    Witness fl = lw_witness(LwWitnessKind::Alpha3Flip, 1, 1, rat(2));
    CHECK(fl.source_a == gm({{"0", "3"}, {"-1", "0"}}));
    CHECK(fl.target_a == gm({{"0", "-1"}, {"3", "0"}}));
    CHECK(check_witness(fl));
}

TEST_CASE("proof step witnesses") {
    Witness s1 = step_form1_step1(1, Gaussian(rat(0), rat(1)));
    CHECK(s1.source_a == gm({{"0+1i", "0"}, {"0", "0-1i"}}));
    CHECK(s1.target_a == to_gaussian(kron(gamma(1), c_rot(rat(0), rat(1)))));
    CHECK(check_witness(s1));

    Witness s2 = step_form1_step2(1, Gaussian(rat(1, 2), rat(1, 2)));
    CHECK(s2.target_a == to_gaussian(h_hat(1, rat(1, 2), rat(1, 2))));
    CHECK(check_witness(s2));

    Witness bc = bflip_c(rat(0), rat(1));
    CHECK(bc.target_a == to_gaussian(c_rot(rat(0), rat(-1))));
    CHECK(check_witness(bc));
    CHECK(check_witness(bflip_hhat(2, rat(1, 3), rat(2, 5))));
    CHECK(check_witness(bflip_that(3, rat(1, 3), rat(2, 5))));
}
