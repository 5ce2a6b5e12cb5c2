#include <doctest.h>

#include "realcong/blocks.hpp"
#include "realcong/verify.hpp"
#include "test_util.hpp"

using namespace realcong;
using testutil::rm;

TEST_CASE("jordan blocks") {
    CHECK(jordan(1, rat(5)) == rm({{"5"}}));
    CHECK(jordan(2, rat(0)) == rm({{"0", "1"}, {"0", "0"}}));
    CHECK(jordan(3, rat(1, 2)) ==
          rm({{"1/2", "1", "0"}, {"0", "1/2", "1"}, {"0", "0", "1/2"}}));
    CHECK_THROWS(jordan(0, rat(1)));
}

TEST_CASE("gamma and gamma tilde") {
    CHECK(gamma(1) == rm({{"1"}}));
    CHECK(gamma(2) == rm({{"0", "-1"}, {"1", "1"}}));
    CHECK(gamma(3) == rm({{"0", "0", "1"}, {"0", "-1", "-1"}, {"1", "1", "0"}}));
    CHECK(gamma(4)(0, 3) == rat(-1));  // top-right corner (-1)^{k+1}
    CHECK(gamma(5)(0, 4) == rat(1));
    CHECK(gamma_tilde(1) == rm({{"1"}}));
    CHECK(gamma_tilde(4) == rm({{"1", "1", "0", "0"},
                                {"-1", "0", "1", "0"},
                                {"0", "1", "0", "1"},
                                {"0", "0", "-1", "0"}}));
}

TEST_CASE("H blocks") {
    CHECK(h_block(1, rat(3)) == rm({{"0", "1"}, {"3", "0"}}));
    RatMat h = h_block(2, rat(1, 2));
    CHECK(h.block(0, 2, 2, 2) == RatMat::identity(2));
    CHECK(h.block(2, 0, 2, 2) == jordan(2, rat(1, 2)));
    CHECK(h.block(0, 0, 2, 2).is_zero());
    CHECK(h_block(1, rat(0)) == jordan(2, rat(0)));
}

TEST_CASE("rotation blocks") {
    CHECK(c_rot(rat(0), rat(1)) == rm({{"0", "1"}, {"-1", "0"}}));
    RatMat cj = c_jordan(2, rat(3, 5), rat(4, 5));
    CHECK(cj.block(0, 0, 2, 2) == c_rot(rat(3, 5), rat(4, 5)));
    CHECK(cj.block(0, 2, 2, 2) == RatMat::identity(2));
    CHECK(cj.block(2, 0, 2, 2).is_zero());
    CHECK(cj.block(2, 2, 2, 2) == c_rot(rat(3, 5), rat(4, 5)));
    CHECK(h_hat(1, rat(0), rat(1, 2)) == rm({{"0", "0", "1", "0"},
                                             {"0", "0", "0", "1"},
                                             {"0", "1/2", "0", "0"},
                                             {"-1/2", "0", "0", "0"}}));
}

TEST_CASE("tridiagonal blocks") {
    CHECK(t_block(1, rat(7)) == rm({{"0"}}));
    CHECK(t_block(3, rat(2)) == rm({{"0", "1", "0"}, {"2", "0", "1"}, {"0", "2", "0"}}));
    CHECK(t_hat(1, rat(1, 3), rat(2)).is_zero());
    RatMat th = t_hat(2, rat(1, 3), rat(2));
    CHECK(th.block(0, 2, 2, 2) == RatMat::identity(2));
    CHECK(th.block(2, 0, 2, 2) == c_rot(rat(1, 3), rat(2)));
}

TEST_CASE("singular pencil blocks") {
    CHECK(f_block(0).rows() == 0);
    CHECK(f_block(0).cols() == 1);
    CHECK(f_block(2) == rm({{"1", "0", "0"}, {"0", "1", "0"}}));
    CHECK(g_block(1) == rm({{"0", "1"}}));
}

TEST_CASE("Lee-Weinberg auxiliary matrices") {
    CHECK(lw_Delta(2) == rm({{"0", "1"}, {"1", "0"}}));
    CHECK(lw_Lambda(2) == rm({{"0", "0"}, {"0", "1"}}));
    CHECK(lw_Lambda(1).is_zero());
    CHECK(lw_SDelta(3) == rm({{"0", "0", "0"}, {"0", "0", "1"}, {"0", "-1", "0"}}));
    CHECK(lw_L(2) == rm({{"1", "0"}, {"1", "1"}, {"0", "1"}}));
    CHECK(lw_Lplus(2) == rm({{"1", "-1", "0"}, {"0", "1", "-1"}}));
}

TEST_CASE("Lee-Weinberg blocks") {
    CHECK(lw_m3(0) == rm({{"0"}}));
    CHECK(lw_m3(1) == rm({{"0", "0", "1"}, {"0", "0", "1"}, {"1", "-1", "0"}}));
    CHECK(lw_inf4(2, 1) == rm({{"0", "1"}, {"-1", "1"}}));
    CHECK(lw_alpha3(1, rat(2)) == rm({{"0", "3"}, {"-1", "0"}}));
    CHECK_THROWS(lw_inf4(3, 1));
    CHECK_THROWS(lw_alpha3(1, rat(-1)));
    CHECK_THROWS(lw_beta4(2, 1, rat(0)));
    CHECK(lw_beta4(2, 1, rat(0), true).rows() == 4);
}

TEST_CASE("beta block structure facts") {
    // X and Y of beta5 = [[0, X], [Y, 0]] are symmetric and nonsingular.
    for (std::size_t k = 1; k <= 3; ++k) {
        RatMat b5 = lw_beta5(k, rat(1, 2), rat(2));
        const std::size_t h = 2 * k;
        RatMat x = b5.block(0, h, h, h), y = b5.block(h, 0, h, h);
        CHECK(x == x.transpose());
        CHECK(y == y.transpose());
        CHECK(rank_of(x) == h);
        CHECK(rank_of(y) == h);
        CHECK(b5.block(0, 0, h, h).is_zero());
        CHECK(b5.block(h, h, h, h).is_zero());
    }
    // anti-block-diagonal families have zero diagonal blocks
    for (std::size_t k : {std::size_t(1), std::size_t(3)}) {
        RatMat m = lw_inf5(k);
        CHECK(m.block(0, 0, k, k).is_zero());
        CHECK(m.block(k, k, k, k).is_zero());
    }
    for (std::size_t k : {std::size_t(2), std::size_t(4)}) {
        RatMat m = lw_o4(k);
        CHECK(m.block(0, 0, k, k).is_zero());
        CHECK(m.block(k, k, k, k).is_zero());
    }
    RatMat a3 = lw_alpha3(2, rat(3));
    CHECK(a3.block(0, 0, 2, 2).is_zero());
    CHECK(a3.block(2, 2, 2, 2).is_zero());
    RatMat m3 = lw_m3(2);
    CHECK(m3.block(0, 0, 3, 3).is_zero());
    CHECK(m3.block(3, 3, 2, 2).is_zero());
}

TEST_CASE("gamma cosquare structure") {
    for (std::size_t k = 1; k <= 10; ++k) {
        RatMat g = gamma(k);
        RatMat cos = *inverse(g.transpose()) * g;
        Rational lambda = rat(k % 2 == 1 ? 1 : -1);
        RatMat shifted = cos - lambda * RatMat::identity(k);
        CHECK(rank_of(shifted) == k - 1);  // geometric multiplicity 1
        // (cos - lambda I)^k = 0 gives the characteristic polynomial claim
        RatMat power = RatMat::identity(k);
        for (std::size_t i = 0; i < k; ++i) power = power * shifted;
        CHECK(power.is_zero());
    }
}

TEST_CASE("H cosquare Jordan structure via rank sequences") {
    for (std::size_t k = 1; k <= 5; ++k)
        for (const Rational& mu : {rat(2), rat(1, 2), rat(-3)}) {
            RatMat h = h_block(k, mu);
            RatMat cos = *inverse(h.transpose()) * h;
            CHECK(check_similarity(cos, direct_sum(jordan(k, mu), jordan(k, Rational(1 / mu)))));
        }
}

TEST_CASE("realize canonical blocks") {
    CanonicalBlock b;
    b.family = Family::R1ii;
    b.k = 2;
    b.N = NParam::plus1();
    CHECK(realize_rational(b) == gamma(2));
    b.k = 1;
    b.N = NParam::rot(QuadScalar(rat(3, 5)), QuadScalar(rat(4, 5)));
    CHECK(realize_rational(b) == rm({{"3/5", "4/5"}, {"-4/5", "3/5"}}));
    CanonicalBlock j;
    j.family = Family::R1i;
    j.k = 2;
    CHECK(realize_rational(j) == jordan(2, rat(0)));
}

TEST_CASE("block spec language round trips") {
    for (const char* s :
         {"R1i(k=2)", "R1ii(k=3,N=C(3/5,4/5))", "R1ii(k=2,N=-1)", "R1iii(k=1,a=1/2)",
          "R1iv(k=1,a=0,b=1/2)", "LWalpha3(k=2,alpha=2)", "LWbeta4(k=2,b=1,eps=-1)",
          "HSTypeI(k=2,mu=3/5+4/5i)", "FHSTriI(k=4,mu=2)", "R2TriIII(k=4,N=+1)",
          "LWm3(k=0)"}) {
        CanonicalBlock b = parse_block_spec(s);
        CHECK(parse_block_spec(b.to_spec()) == b);
    }
    auto form = parse_form_spec("R1i(k=2)+R1iii(k=1,a=1/2)");
    CHECK(form.size() == 2);
    CHECK_THROWS(parse_block_spec("R1iii(k=1,a=2)"));   // outside |a| < 1
    CHECK_THROWS(parse_block_spec("Nope(k=1)"));
    CHECK_THROWS(parse_block_spec("R1ii(N=+1)"));       // missing k
}

TEST_CASE("quadratic scalars") {
    QuadScalar s = QuadScalar::sqrt_of(rat(9, 4));
    CHECK(s.is_rational());
    CHECK(s.as_rational() == rat(3, 2));
    QuadScalar r = QuadScalar::sqrt_of(rat(1, 2));
    CHECK(!r.is_rational());
    CHECK(r.squared() == QuadScalar(rat(1, 2)));
    CHECK((r * r.inverse()) == QuadScalar(rat(1)));
    CHECK(r.sign() > 0);
    CHECK((-r).sign() < 0);
    auto parsed = QuadScalar::parse(r.to_string());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == r);
}
