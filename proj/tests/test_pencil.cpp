#include <doctest.h>

#include <random>

#include "realcong/pencil.hpp"
#include "test_util.hpp"

using namespace realcong;
using testutil::rm;

namespace {

CanonicalBlock mk(Family f, std::size_t k) {
    CanonicalBlock b;
    b.family = f;
    b.k = k;
    return b;
}

RatMat rand_int(std::mt19937& rng, std::size_t r, std::size_t c, int span = 2) {
    RatMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rat(static_cast<long>(rng() % (2 * span + 1)) - span);
    return m;
}

RatMat rand_invertible(std::mt19937& rng, std::size_t n) {
    for (;;) {
        RatMat m = rand_int(rng, n, n);
        if (sgn(determinant(m)) != 0) return m;
    }
}

}  // namespace

TEST_CASE("real_kcf of canonical pairs") {
    RealKcf k1 = real_kcf(RatMat::identity(2), jordan(2, rat(5)));
    RealKcf want1;
    want1.real_jordan.emplace_back(QuadScalar(rat(5)), 2);
    CHECK(kcf_equal(k1, want1));

    RealKcf k2 = real_kcf(rm({{"0"}}), rm({{"0"}}));
    RealKcf want2;
    want2.right_minimal = {0};
    want2.left_minimal = {0};
    CHECK(kcf_equal(k2, want2));

    RatMat m3 = lw_m3(1);
    RealKcf k3 = real_kcf(m3.transpose(), m3);
    RealKcf want3;
    want3.right_minimal = {1};
    want3.left_minimal = {1};
    CHECK(kcf_equal(k3, want3));
}

TEST_CASE("expected table rows") {
    CanonicalBlock g2 = mk(Family::R1ii, 2);
    g2.N = NParam::plus1();
    RealKcf w1 = expected_real_kcf(g2);
    RealKcf want1;
    want1.real_jordan.emplace_back(QuadScalar(rat(-1)), 2);
    CHECK(kcf_equal(w1, want1));

    CanonicalBlock h = mk(Family::R1iii, 1);
    h.a = QuadScalar(rat(1, 2));
    RealKcf w2 = expected_real_kcf(h);
    RealKcf want2;
    want2.real_jordan.emplace_back(QuadScalar(rat(1, 2)), 1);
    want2.real_jordan.emplace_back(QuadScalar(rat(2)), 1);
    CHECK(kcf_equal(w2, want2));

    RealKcf w3 = expected_real_kcf(mk(Family::R1i, 3));
    RealKcf want3;
    want3.right_minimal = {1};
    want3.left_minimal = {1};
    CHECK(kcf_equal(w3, want3));
}

TEST_CASE("kcf_equal") {
    RealKcf x;
    x.real_jordan.emplace_back(QuadScalar(rat(2)), 1);
    CHECK(kcf_equal(x, x));
    RealKcf y;
    y.real_jordan.emplace_back(QuadScalar(rat(1, 2)), 1);
    CHECK(!kcf_equal(x, y));

    CanonicalBlock hh = mk(Family::R1iv, 1);
    hh.a = QuadScalar(rat(0));
    hh.b = QuadScalar(rat(1, 2));
    RatMat m = h_hat(1, rat(0), rat(1, 2));
    CHECK(kcf_equal(expected_real_kcf(hh), real_kcf(m.transpose(), m)));
}

TEST_CASE("real_kcf handles quadratic real eigenvalues") {
    // companion of x^2 - 2: eigenvalues +-sqrt(2)
    RatMat c = rm({{"0", "2"}, {"1", "0"}});
    RealKcf k = real_kcf(RatMat::identity(2), c);
    REQUIRE(k.real_jordan.size() == 2);
    // stored parameters are the negated pencil roots, i.e. -+sqrt(2)
    CHECK(k.real_jordan[0].first == -k.real_jordan[1].first);
    CHECK(!k.real_jordan[0].first.is_rational());
}

TEST_CASE("real_kcf is invariant under strict real equivalences") {
    std::mt19937 rng(testutil::test_seed() + 11);
    std::vector<std::pair<RatMat, RatMat>> pairs;
    pairs.emplace_back(RatMat::identity(3), jordan(3, rat(2)));
    {
        RatMat a = direct_sum(RatMat::identity(2), jordan(2, rat(0)));
        RatMat b = direct_sum(jordan(2, rat(1, 2)), RatMat::identity(2));
        pairs.emplace_back(a, b);
    }
    {
        RatMat m = kron(gamma(2), c_rot(rat(3, 5), rat(4, 5)));
        pairs.emplace_back(m.transpose(), m);
    }
    {
        RatMat m3 = lw_m3(1);
        pairs.emplace_back(m3.transpose(), m3);
    }
    for (const auto& [a, b] : pairs) {
        RealKcf base = real_kcf(a, b);
        for (int t = 0; t < 12; ++t) {
            RatMat r = rand_invertible(rng, a.rows());
            RatMat s = rand_invertible(rng, a.cols());
            CHECK(kcf_equal(real_kcf(r * a * s, r * b * s), base));
        }
    }
}

TEST_CASE("index sum bookkeeping for the m3 family") {
    for (std::size_t k = 0; k <= 3; ++k) {
        RatMat m = lw_m3(k);
        RealKcf kk = real_kcf(m.transpose(), m);
        CHECK(kk.right_minimal == std::vector<std::size_t>{k});
        CHECK(kk.left_minimal == std::vector<std::size_t>{k});
        CHECK(kk.infinite.empty());
        CHECK(kk.real_jordan.empty());
        CHECK(kk.complex_jordan.empty());
    }
}

TEST_CASE("complex kcf of HS pairs") {
    GaussMat g = Gaussian(rat(0), rat(1)) * to_gaussian(gamma(3));
    ComplexKcf k = complex_kcf(g.conj_transpose(), g);
    ComplexKcf want;
    want.jordan.emplace_back(Gaussian(rat(1)), 3);  // (-1)^{k+1} mu^2 = (i)^2 * 1 = -1...
    // mu = i, k = 3: (-1)^{k+1} mu^2 = +1 * (-1) = -1
    want.jordan.clear();
    want.jordan.emplace_back(Gaussian(rat(-1)), 3);
    CHECK(kcf_equal(k, want));
}

TEST_CASE("realify equivalences") {
    RatMat a = rm({{"1", "2"}, {"0", "1"}});
    RatMat b = rm({{"0", "1"}, {"1", "1"}});
    GaussMat id = to_gaussian(RatMat::identity(2));
    RealifyResult r1 = realify_equivalence(id, id, a, b, a, b);
    CHECK(r1.r == RatMat::identity(2));
    CHECK(r1.s == RatMat::identity(2));

    GaussMat iI = Gaussian(rat(0), rat(1)) * id;
    RealifyResult r2 = realify_equivalence(iI, iI, RatMat::identity(2), RatMat::identity(2),
                                           RatMat::identity(2), RatMat::identity(2));
    CHECK(r2.tau == 1);  // real+imag combination needs tau = 1

    std::mt19937 rng(testutil::test_seed() + 13);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng() % 2;
        RatMat A = rand_int(rng, n, n), B = rand_int(rng, n, n);
        RatMat u = rand_invertible(rng, n), v = rand_invertible(rng, n);
        RatMat C = u * A * v, D = u * B * v;
        Gaussian c(rat(static_cast<long>(rng() % 3)), rat(1 + static_cast<long>(rng() % 2)));
        GaussMat R = c * to_gaussian(u);
        GaussMat S = c * *inverse(to_gaussian(v));
        RealifyResult res = realify_equivalence(R, S, A, B, C, D);
        CHECK(res.r * A == C * res.s);
        CHECK(res.r * B == D * res.s);
        CHECK(res.candidates_tried <= static_cast<long>(2 * n + 1));
    }
}

TEST_CASE("exact path reports unsupported cubic factors") {
    // companion of x^3 - 2: irreducible cubic
    RatMat c(3, 3);
    c(0, 2) = rat(2);
    c(1, 0) = rat(1);
    c(2, 1) = rat(1);
    CHECK_THROWS_AS(real_kcf(RatMat::identity(3), c), UnsupportedExact);
    FloatKcf f = real_kcf_float(to_cmat(RatMat::identity(3)), to_cmat(c));
    CHECK(f.jordan.size() == 3);
    CHECK(!f.rank_report.empty());
}

TEST_CASE("float fallback on an exact pair") {
    FloatKcf f = real_kcf_float(to_cmat(RatMat::identity(2)), to_cmat(jordan(2, rat(5))));
    REQUIRE(f.jordan.size() == 1);
    CHECK(std::get<2>(f.jordan[0]) == 2);
    CHECK(std::get<0>(f.jordan[0]) == doctest::Approx(5.0));
}
