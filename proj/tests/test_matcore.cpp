#include <doctest.h>

#include <random>

#include "realcong/blocks.hpp"
#include "realcong/matcore.hpp"
#include "test_util.hpp"

using namespace realcong;
using testutil::rm;

TEST_CASE("direct sum basics") {
    CHECK(direct_sum(rm({{"1"}}), rm({{"2"}})) == rm({{"1", "0"}, {"0", "2"}}));
    RatMat empty(0, 0);
    CHECK(direct_sum(empty, rm({{"5"}})) == rm({{"5"}}));
    CHECK(direct_sum(gamma(1), gamma(1)) == RatMat::identity(2));
}

TEST_CASE("kronecker product basics") {
    RatMat swap = rm({{"0", "1"}, {"1", "0"}});
    RatMat want(4, 4);
    want.set_block(0, 2, RatMat::identity(2));
    want.set_block(2, 0, RatMat::identity(2));
    CHECK(kron(swap, RatMat::identity(2)) == want);
    CHECK(kron(gamma(2), rm({{"-1"}})) == rm({{"0", "1"}, {"-1", "-1"}}));
    RatMat x = rm({{"1", "2"}, {"3", "5/7"}});
    CHECK(kron(RatMat::identity(1), x) == x);
}

TEST_CASE("inertia of symmetric matrices") {
    Inertia i1 = inertia_of_symmetric(rm({{"1", "0"}, {"0", "-1"}}));
    CHECK(i1 == Inertia{1, 1, 0});
    CHECK(inertia_of_symmetric(sym_part(gamma(2))) == Inertia{1, 0, 1});
    CHECK(inertia_of_symmetric(sym_part(-gamma(2))) == Inertia{0, 1, 1});
    CHECK_THROWS_AS(inertia_of_symmetric(rm({{"0", "1"}, {"0", "0"}})), std::invalid_argument);
}

TEST_CASE("rank basics") {
    CHECK(rank_of(RatMat::identity(3)) == 3);
    CHECK(rank_of(jordan(2, rat(0))) == 1);
    CHECK(rank_of(lw_L(3).transpose()) == 3);
}

TEST_CASE("Sylvester invariance of inertia under congruence") {
    std::mt19937 rng(testutil::test_seed());
    for (std::size_t n = 1; n <= 8; ++n) {
        // one symmetric test matrix per size, many random congruences
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                m(i, j) = rat(static_cast<long>(rng() % 7) - 3);
                m(j, i) = m(i, j);
            }
        Inertia base = inertia_of_symmetric(m);
        int trials = 0;
        while (trials < 100) {
            RatMat s(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    s(i, j) = rat(static_cast<long>(rng() % 5) - 2);
            if (sgn(determinant(s)) == 0) continue;
            ++trials;
            CHECK(inertia_of_symmetric(s * m * s.transpose()) == base);
        }
    }
}

TEST_CASE("kron dimensions and mixed product") {
    std::mt19937 rng(testutil::test_seed() + 1);
    auto rnd = [&](std::size_t r, std::size_t c) {
        RatMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rat(static_cast<long>(rng() % 5) - 2);
        return m;
    };
    for (int t = 0; t < 10; ++t) {
        RatMat a = rnd(2, 3), b = rnd(3, 2), c = rnd(3, 2), d = rnd(2, 3);
        CHECK(kron(a, b).rows() == a.rows() * b.rows());
        CHECK(kron(a, b).cols() == a.cols() * b.cols());
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("rank invariance under permutation and invertible factors") {
    std::mt19937 rng(testutil::test_seed() + 2);
    for (int t = 0; t < 10; ++t) {
        RatMat m(4, 5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = rat(static_cast<long>(rng() % 3) - 1);
        std::size_t r = rank_of(m);
        RatMat p(4, 4);
        std::vector<std::size_t> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < 4; ++i) p(i, perm[i]) = rat(1);
        CHECK(rank_of(p * m) == r);
        RatMat s;
        do {
            s = RatMat(5, 5);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j) s(i, j) = rat(static_cast<long>(rng() % 5) - 2);
        } while (sgn(determinant(s)) == 0);
        CHECK(rank_of(m * s) == r);
    }
}

TEST_CASE("kernel basis spans the kernel") {
    RatMat m = rm({{"1", "2", "3"}, {"2", "4", "6"}});
    RatMat k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
}
